#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cwb/hwv.hpp"

using namespace cwb;

namespace {
GroundConfig config_a() { return {2, {3, 3}, {frac(0, 1), frac(1, 2)}}; }
GroundConfig config_c() { return {3, {2, 2, 2}, {frac(0, 1), frac(1, 3), frac(2, 3)}}; }

Cell cell(int f, const char* mu, const char* nu) { return {f, parse_multipartition(mu), parse_multipartition(nu)}; }

std::vector<Scalar> delta_c_plus(const GroundConfig& cfg, std::vector<int> shift) {
  std::vector<Scalar> w;
  for (int a = 1; a <= cfg.n(); ++a) w.push_back(cfg.c(cfg.block_of(a)) + shift[a - 1]);
  return w;
}
}  // namespace

TEST_CASE("labels and weights") {
  GroundConfig a = config_a();
  CHECK(hwv_labels(cell(0, "[[1],[]]", "[[],[]]"), a, 1, 0) == std::vector<int>{1});
  CHECK(hwv_labels(cell(0, "[[],[1]]", "[[],[]]"), a, 1, 0) == std::vector<int>{4});
  CHECK(hwv_labels(cell(0, "[[],[]]", "[[1],[]]"), a, 0, 1) == std::vector<int>{3});
  CHECK(hwv_labels(cell(1, "[[],[]]", "[[],[]]"), a, 1, 1) == std::vector<int>{1, 1});
  CHECK(hwv_labels(cell(0, "[[1],[1]]", "[[],[]]"), a, 2, 0) == std::vector<int>{4, 1});
  CHECK(hwv_labels(cell(0, "[[1,1],[]]", "[[],[]]"), a, 2, 0) == std::vector<int>{2, 1});
  CHECK(hwv_weight(cell(0, "[[1],[]]", "[[],[1]]"), a) == delta_c_plus(a, {1, 0, 0, 0, 0, -1}));
  CHECK(matching_cell(cell(0, "[[2],[1]]", "[[1],[]]")) == cell(0, "[[1],[1,1]]", "[[1],[]]"));
}

TEST_CASE("small examples") {
  GroundConfig a = config_a();
  AlgebraParameters p = derive_parameters(a, 6);
  TensorModule m10(a, 1, 0);
  auto f1 = build_hwv_family(m10, cell(0, "[[1],[]]", "[[],[]]"), p);
  REQUIRE(f1.raw.size() == 1);
  CHECK(f1.raw[0] == m10.seed({1}));

  // (x_1 - u_1) on m (x) v_4 is highest; (x_1 - u_2) is not
  auto v = m10.seed({4});
  Cell c4 = cell(0, "[[],[1]]", "[[],[]]");
  for (int j = 0; j < 2; ++j) {
    PBWVector w = m10.act_letter(x(1), v);
    add_scaled(w, v, -p.u[j]);
    CHECK(verify_hwv(m10, w, hwv_weight(c4, a)).ok() == (j == 0));
  }
  auto f4 = build_hwv_family(m10, c4, p);
  CHECK(verify_hwv(m10, f4.raw[0], f4.weight).ok());

  // f = 1: (m (x) v_1 (x) v*_1) e_1 = sum_l m (x) v_l (x) v*_l
  TensorModule m11(a, 1, 1);
  auto fe = build_hwv_family(m11, cell(1, "[[],[]]", "[[],[]]"), p);
  REQUIRE(fe.raw.size() == 2);
  PBWVector trace;
  for (int l = 1; l <= 6; ++l) trace[encode_key({}, {l, l})] = 1;
  CHECK(fe.raw[0] == trace);
}

TEST_CASE("verify_hwv") {
  GroundConfig a = config_a();
  TensorModule m0(a, 0, 0);
  CHECK(verify_hwv(m0, m0.seed({}), delta_c_plus(a, {0, 0, 0, 0, 0, 0})).ok());
  TensorModule m1(a, 1, 0);
  auto rep = verify_hwv(m1, m1.seed({2}), delta_c_plus(a, {0, 1, 0, 0, 0, 0}));
  CHECK(rep.weight_ok);
  CHECK_FALSE(rep.highest);
  CHECK(rep.failing_root == 1);
}

TEST_CASE("brute-force highest weight spaces") {
  GroundConfig a = config_a();
  TensorModule m1(a, 1, 0);
  CHECK(brute_force_hwv_space(m1, delta_c_plus(a, {1, 0, 0, 0, 0, 0})).size() == 1);
  CHECK(brute_force_hwv_space(m1, delta_c_plus(a, {2, 0, 0, 0, 0, 0})).empty());
  TensorModule m11(a, 1, 1);
  CHECK(brute_force_hwv_space(m11, delta_c_plus(a, {0, 0, 0, 0, 0, 0})).size() == 2);
  // weight space of delta_c + e_4 at r = 1: m v_4 and e_{4,a} m v_a
  CHECK(weight_space_keys(m1, delta_c_plus(a, {0, 0, 0, 1, 0, 0})).size() == 4);
}

TEST_CASE("classification on A") {
  GroundConfig a = config_a();
  for (auto [r, t] : std::vector<std::pair<int, int>>{{2, 0}, {0, 2}, {1, 1}, {2, 1}}) {
    CAPTURE(r);
    CAPTURE(t);
    auto c = classify_hwv(a, r, t);
    CHECK(c.ok());
    for (const auto& w : c.weights) CHECK(w.brute == w.expected);
    CHECK(c.families == enumerate_cells(2, r, t).size());
  }
}

TEST_CASE("word images fail exactly on mixed cells") {
  GroundConfig a = config_a();
  CHECK(classify_hwv(a, 2, 0).raw_ok());
  CHECK(classify_hwv(a, 0, 2).raw_ok());
  auto c11 = classify_hwv(a, 1, 1);
  CHECK(c11.families - c11.raw_families_ok == 1);
  auto c21 = classify_hwv(a, 2, 1);
  CHECK(c21.families - c21.raw_families_ok == 3);
}

TEST_CASE("lifted vectors keep the m-component") {
  GroundConfig a = config_a();
  AlgebraParameters p = derive_parameters(a, 8);
  TensorModule mod(a, 2, 1);
  for (const auto& c : enumerate_cells(2, 2, 1)) {
    auto fam = build_hwv_family(mod, c, p);
    for (std::size_t i = 0; i < fam.raw.size(); ++i) {
      CHECK_FALSE(m_component(fam.raw[i]).empty());
      CHECK(m_component(fam.raw[i]) == m_component(fam.vectors[i]));
    }
  }
}

TEST_CASE("Hom spaces match cell modules") {
  GroundConfig a = config_a();
  for (auto [r, t] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 0}}) {
    TensorModule mod(a, r, t);
    CellDatum d = build_cell_datum(a, r, t);
    for (const auto& c : enumerate_cells(2, r, t)) {
      auto rep = hom_cell_iso_check(mod, d, c);
      CHECK_MESSAGE(rep.ok(), c.label());
      CHECK(rep.generators == StructureAlgebra::generators(r, t).size());
    }
  }
}

TEST_CASE("config too small") {
  GroundConfig c = config_c();
  TensorModule mod(c, 2, 1);
  AlgebraParameters p = derive_parameters(c, 8);
  Cell x = cell(0, "[[2],[],[]]", "[[1],[],[]]");
  CHECK_THROWS_AS(build_hwv(mod, x, hwv_indices(x, 3, 2, 1).front(), p), Error);
}
