#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cwb/exactlin.hpp"

using namespace cwb;

namespace {
Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int zero_bias) {
  std::uniform_int_distribution<int> val(-4, 4), zero(0, zero_bias);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (zero(rng) == 0) m(i, j) = frac(val(rng), 1 + (val(rng) + 4) % 3);
  return m;
}
}  // namespace

TEST_CASE("scalar text form") {
  CHECK(parse_scalar("3/6") == frac(1, 2));
  CHECK(parse_scalar("-7") == -7);
  CHECK_THROWS_AS(parse_scalar("4/-2"), Error);
  CHECK(to_string(frac(-3, 6)) == "-1/2");
  CHECK(to_string(Scalar(0)) == "0");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
}

TEST_CASE("rref examples") {
  CHECK(rref_rank(Matrix::identity(2)).rank == 2);
  CHECK(rref_rank(Matrix(3, 3)).rank == 0);
  auto r = rref_rank(Matrix::from_rows({{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});
  CHECK(r.rref == Matrix::from_rows({{1, 2}, {0, 0}}));
}

TEST_CASE("solve_in_span examples") {
  auto s = solve_in_span({{1, 0}, {0, 1}}, {1, 3});
  REQUIRE(s.status == SolveStatus::Ok);
  CHECK(s.coeffs == std::vector<Scalar>{1, 3});
  CHECK(solve_in_span({{1, 0}}, {0, 1}).status == SolveStatus::NotInSpan);
  s = solve_in_span({{1, 1}, {1, -1}}, {2, 0});
  REQUIRE(s.status == SolveStatus::Ok);
  CHECK(s.coeffs == std::vector<Scalar>{1, 1});
  CHECK(solve_in_span({{1, 1}, {2, 2}}, {3, 3}).status == SolveStatus::Ambiguous);
}

TEST_CASE("rank agrees with transpose and between the two eliminations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix m = random_matrix(rng, 1 + trial % 6, 1 + (trial * 7) % 5, trial % 3);
    auto r = rref_rank(m).rank;
    CHECK(r == rref_rank(m.transpose()).rank);
    CHECK(r == rank(m));
    for (const auto& v : kernel(m)) {
      auto mv = m * v;
      CHECK(std::all_of(mv.begin(), mv.end(), [](const Scalar& x) { return x == 0; }));
    }
    CHECK(kernel(m).size() + r == m.cols());
  }
}

TEST_CASE("solve_in_span reproduces the target exactly") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, 6, 3, 1);
    std::vector<std::vector<Scalar>> basis{m.col(0), m.col(1), m.col(2)};
    std::vector<Scalar> c{frac(trial, 3), -2, frac(1, 5)};
    auto target = m * c;
    auto s = solve_in_span(basis, target);
    if (rref_rank(m).rank == 3) {
      REQUIRE(s.status == SolveStatus::Ok);
      CHECK(m * s.coeffs == target);
    } else {
      CHECK(s.status == SolveStatus::Ambiguous);
    }
  }
}

TEST_CASE("inverse") {
  Matrix m = Matrix::from_rows({{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(2));
  CHECK(!inverse(Matrix::from_rows({{1, 2}, {2, 4}})));
}

TEST_CASE("sparse echelon solves square systems") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 5;
    Matrix m = random_matrix(rng, 12, n, 2);
    SparseEchelon ech(n);
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      SparseVec v;
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, j) != 0) v.emplace_back(j, m(i, j));
      if (ech.insert(v)) used.push_back(i);
    }
    CHECK(ech.rank() == rref_rank(m).rank);
    if (!ech.full()) continue;
    std::vector<Scalar> c{1, frac(-2, 3), 0, 5, frac(1, 7)};
    auto y_all = m * c;
    std::vector<Scalar> y;
    for (auto i : used) y.push_back(y_all[i]);
    CHECK(ech.solve(y) == c);
  }
}
