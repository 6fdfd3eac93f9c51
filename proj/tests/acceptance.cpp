// Acceptance run: one PASS/FAIL line per criterion.
#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cwb/celltheory.hpp"
#include "cwb/glrep.hpp"
#include "cwb/hwv.hpp"
#include "cwb/models.hpp"

using namespace cwb;

namespace {

GroundConfig config_a() { return {2, {3, 3}, {frac(0, 1), frac(1, 2)}}; }
GroundConfig config_b() { return {1, {4}, {frac(0, 1)}}; }
GroundConfig config_c() { return {3, {2, 2, 2}, {frac(0, 1), frac(1, 3), frac(2, 3)}}; }

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

AlgebraParameters module_parameters(const GroundConfig& cfg) {
  AlgebraParameters p = derive_parameters(cfg, 2 * cfg.k + 2);
  p.omegabar = omega_table(cfg, 2 * cfg.k + 2, true);
  return p;
}

std::size_t expected_dim(int k, int r, int t) {
  std::size_t d = static_cast<std::size_t>(factorial(r + t));
  for (int i = 0; i < r + t; ++i) d *= static_cast<std::size_t>(k);
  return d;
}

void criterion_rank(Outcome& o) {
  struct Case {
    GroundConfig cfg;
    const char* name;
    int r, t;
  };
  std::vector<Case> cases = {{config_a(), "A", 1, 0}, {config_a(), "A", 0, 1}, {config_a(), "A", 1, 1},
                             {config_a(), "A", 2, 1}, {config_a(), "A", 1, 2}, {config_a(), "A", 2, 2},
                             {config_b(), "B", 2, 2}};
  for (const auto& c : cases) {
    auto t0 = Clock::now();
    VermaOracle v(c.cfg, c.r, c.t, {.require_faithful = false, .verify = true});
    double s = seconds_since(t0);
    std::size_t want = expected_dim(c.cfg.k, c.r, c.t);
    o.detail << " " << c.name << "(" << c.r << "," << c.t << ")=" << v.rank();
    o.require(v.rank() == want, std::string(c.name) + "(" + std::to_string(c.r) + "," + std::to_string(c.t) +
                                    ") rank " + std::to_string(v.rank()) + " != " + std::to_string(want));
    o.require(s <= 60, "over 60 s");
  }
}

void criterion_relations(Outcome& o) {
  for (auto [cfg, name, r, t] : {std::tuple{config_a(), "A", 2, 2}, std::tuple{config_c(), "C", 1, 1}}) {
    VermaOracle v(cfg, r, t, {.require_faithful = false, .verify = true});
    AlgebraParameters p = module_parameters(cfg);
    std::size_t n = 0;
    for (const auto& rel : relation_suite(r, t, p)) {
      ++n;
      o.require(v.annihilates(rel.element), std::string(name) + " " + rel.name);
    }
    o.detail << " " << name << ":" << n << " instances";
  }
}

void criterion_parameters(Outcome& o) {
  for (auto [cfg, name] : {std::pair{config_a(), "A"}, std::pair{config_c(), "C"}}) {
    AlgebraParameters p = derive_parameters(cfg, 6);
    for (int a = 0; a <= 6; ++a) o.require(omega_extract(cfg, a, false) == p.omega[a], std::string(name) + " omega_" + std::to_string(a));
    o.require(p.omega[0] == Scalar(cfg.n()), std::string(name) + " omega_0 != n");
    o.require(admissible(p), std::string(name) + " admissibility");
  }
  o.detail << " omega_0..omega_6 on A, C";
}

void criterion_annihilation(Outcome& o) {
  for (auto [cfg, name] : {std::pair{config_a(), "A"}, std::pair{config_c(), "C"}}) {
    VermaOracle v(cfg, 1, 1);
    for (const auto& rel : cyclotomic_relations(cfg.k, 1, 1, module_parameters(cfg)))
      o.require(v.annihilates(rel.element), std::string(name) + " " + rel.name);
  }
  o.detail << " f(x_1), g(xbar_1), e_1 f - (-1)^k e_1 g on A, C at (1,1)";
}

void criterion_certificate(Outcome& o) {
  RegularMonomial mono{{1, 0, 1}, WalledDiagram::identity(3, 3), {0, 1, 1}};
  for (auto g : std::vector<Generator>{{Generator::E, 1}, {Generator::S, 1}, {Generator::SBar, 2}})
    mono.D = compose(mono.D, WalledDiagram::generator(g, 3, 3)).first;
  LabeledCertificate c = labeled_certificate(mono, 2);
  o.require(c.bottom_string() == "(q_1+1, q_1+2, q_1+3; q_1+2, 6, 5)", "bottom " + c.bottom_string());
  o.require(c.top_string() == "(1, q_1+3, 4; q_1+4, q_1+5, q_1+6)", "top " + c.top_string());
  o.require(c.lowering_string() == "e_{q_1+1,1}e_{q_1+4,4}e_{q_1+5,5}e_{q_1+6,6}", "Y " + c.lowering_string());
  o.detail << " " << c.bottom_string() << " " << c.top_string() << " " << c.lowering_string();
}

void criterion_graded(Outcome& o) {
  GroundConfig a = config_a();
  TensorModel g21(ModelKind::Graded, a, 2, 1);
  for (const auto& rel : graded_relation_suite(2, 2, 1, a.n()))
    o.require(g21.matrix(rel.element).is_zero(), "graded " + rel.name);
  FlipReport f = flip_commute_check(a, 2, 1);
  o.require(f.ok(), "flip");
  std::size_t rk = monomial_rank(g21);
  o.require(rk == 48, "graded rank " + std::to_string(rk));
  o.detail << " flip checked on " << f.checked << " (literal mismatches " << f.literal_mismatches
           << ", sign-twisted " << f.twisted_mismatches << "); graded rank " << rk;
}

void criterion_w_algebra(Outcome& o) {
  GroundConfig a = config_a();
  AlgebraParameters p = derive_parameters(a, 6);
  for (auto [r, t] : {std::pair{1, 1}, std::pair{2, 1}}) {
    TensorModel vd(ModelKind::Shifted, a, r, t);
    o.require(minimal_polynomial(vd, false) == p.f, "min poly x_1");
    o.require(minimal_polynomial(vd, true) == p.g, "min poly xbar_1");
    CrossModelReport c = cross_model_check(a, r, t);
    o.require(c.ok(), "cross model (" + std::to_string(r) + "," + std::to_string(t) + ")");
  }
  o.detail << " f, g minimal; cross-model ranks and omegas agree at (1,1), (2,1)";
}

void criterion_cellular(Outcome& o) {
  GroundConfig a = config_a();
  for (auto [r, t] : {std::pair{1, 1}, std::pair{2, 1}}) {
    CellDatum d = build_cell_datum(a, r, t);
    o.require(d.change_of_basis * d.inverse == Matrix::identity(d.dim()), "change of basis");
    std::size_t sq = 0;
    for (const auto& ix : d.indices) sq += ix.size() * ix.size();
    o.require(sq == d.dim() && d.dim() == expected_dim(2, r, t), "sum of squares");
    CellularityReport w = weak_cellularity_check(d);
    o.require(w.ok(), "weak cellularity");
    o.detail << " (" << r << "," << t << "): " << sq << " = dim, sigma exact on " << w.exact << "/" << w.pairs_checked;
  }
  for (auto [r, t] : {std::pair{2, 0}, std::pair{0, 2}}) {
    CellularityReport w = weak_cellularity_check(build_cell_datum(a, r, t));
    o.require(w.genuine(), "Hecke stratum");
  }
  o.detail << "; Hecke strata cellular on the nose";
}

void criterion_hwv(Outcome& o) {
  std::size_t raw_bad = 0;
  for (auto [r, t] : {std::pair{2, 0}, std::pair{0, 2}, std::pair{1, 1}, std::pair{2, 1}}) {
    HwvClassification c = classify_hwv(config_a(), r, t);
    o.require(c.ok(), "counting or lifted families at (" + std::to_string(r) + "," + std::to_string(t) + ")");
    raw_bad += c.families - c.raw_families_ok;
    for (const auto& f : c.raw_failures) o.detail << " {" << f << "}";
  }
  o.detail << " counting theorem holds; lifted families pass";
  o.require(raw_bad == 0, std::to_string(raw_bad) + " families of word images are not highest weight vectors");
}

void criterion_hom(Outcome& o) {
  GroundConfig a = config_a();
  for (auto [r, t] : {std::pair{1, 1}, std::pair{2, 1}}) {
    TensorModule mod(a, r, t);
    CellDatum d = build_cell_datum(a, r, t);
    std::size_t n = 0;
    for (const auto& c : enumerate_cells(2, r, t)) {
      ++n;
      o.require(hom_cell_iso_check(mod, d, c).ok(), c.label());
    }
    o.detail << " (" << r << "," << t << "): " << n << " cells";
  }
}

void criterion_decomposition(Outcome& o) {
  for (auto [cfg, name] : {std::pair{config_a(), "A"}, std::pair{config_c(), "C"}, std::pair{config_b(), "B"}})
    for (auto [r, t] : {std::pair{1, 1}, std::pair{2, 1}}) {
      auto t0 = Clock::now();
      DecompositionResult d = decomposition_matrix(cfg, r, t);
      double s = seconds_since(t0);
      std::string tag = std::string(name) + "(" + std::to_string(r) + "," + std::to_string(t) + ")";
      o.require(d.is_identity() && d.all_grams_full(), tag + " not identity");
      o.require(s <= 300, tag + " over 5 min");
      o.detail << " " << tag << " " << d.rows.size() << " cells";
    }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_red, only;
  app.add_option("--expect-red", expect_red, "criteria known to be red; exit 0 iff exactly these fail")->delimiter(',');
  app.add_option("--only", only, "run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"basis/rank identity", criterion_rank},
      {"relation suite", criterion_relations},
      {"parameter consistency", criterion_parameters},
      {"cyclotomic annihilation", criterion_annihilation},
      {"labeled-diagram certificate", criterion_certificate},
      {"graded model", criterion_graded},
      {"W-algebra model", criterion_w_algebra},
      {"cellular structure", criterion_cellular},
      {"highest weight vectors", criterion_hwv},
      {"Hom spaces vs cell modules", criterion_hom},
      {"decomposition matrices", criterion_decomposition},
  };
  std::set<int> red;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i + 1);
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Outcome o;
    auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    if (!o.pass) red.insert(id);
    std::printf("%s %2d %-28s %6.1fs%s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), seconds_since(t0),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  if (!app.count("--expect-red")) return red.empty() ? 0 : 1;
  std::set<int> want(expect_red.begin(), expect_red.end());
  if (!only.empty())
    std::erase_if(want, [&](int id) { return std::find(only.begin(), only.end(), id) == only.end(); });
  return red == want ? 0 : 1;
}
