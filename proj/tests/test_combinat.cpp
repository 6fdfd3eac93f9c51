#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cwb/combinat.hpp"
#include "cwb/error.hpp"

using namespace cwb;

namespace {
// Brute-force count of standard fillings of a single partition.
long long brute_std(const Partition& p) {
  int n = size_of(p);
  std::vector<int> fill(n);
  std::iota(fill.begin(), fill.end(), 1);
  long long count = 0;
  do {
    bool ok = true;
    int at = 0;
    std::vector<std::vector<int>> rows;
    for (int len : p) {
      rows.emplace_back(fill.begin() + at, fill.begin() + at + len);
      at += len;
    }
    for (std::size_t i = 0; i < rows.size() && ok; ++i)
      for (std::size_t j = 0; j < rows[i].size() && ok; ++j) {
        if (j && rows[i][j - 1] > rows[i][j]) ok = false;
        if (i && rows[i - 1][j] > rows[i][j]) ok = false;
      }
    if (ok) ++count;
  } while (std::next_permutation(fill.begin(), fill.end()));
  return count;
}
}  // namespace

TEST_CASE("multipartition enumeration") {
  auto p = enumerate_multipartitions(1, 2);
  REQUIRE(p.size() == 2);
  CHECK(p[0].to_string() == "[[2]]");
  CHECK(p[1].to_string() == "[[1,1]]");
  CHECK(enumerate_multipartitions(2, 0).size() == 1);
  CHECK(enumerate_multipartitions(2, 2).size() == 5);
  CHECK(enumerate_multipartitions(3, 3).size() == 22);
  for (int k = 1; k <= 3; ++k)
    for (int r = 0; r <= 4; ++r) {
      auto all = enumerate_multipartitions(k, r);
      std::set<Multipartition> uniq(all.begin(), all.end());
      CHECK(uniq.size() == all.size());
      // a dominating element never appears after one it dominates
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(dominates(all[j], all[i]));
    }
}

TEST_CASE("multipartition text round trip and conjugation") {
  auto m = parse_multipartition("[[3,2],[3,1]]");
  CHECK(m.size() == 9);
  CHECK(m.to_string() == "[[3,2],[3,1]]");
  CHECK(m.conjugate().to_string() == "[[2,1,1],[2,2,1]]");
  CHECK(m.conjugate().conjugate() == m);
  CHECK(m.bracket() == std::vector<int>{0, 5, 9});
}

TEST_CASE("standard tableaux") {
  CHECK(standard_tableaux(parse_multipartition("[[2],[1]]")).size() == 3);
  CHECK(standard_tableaux(parse_multipartition("[[1,1]]")).size() == 1);
  auto l = parse_multipartition("[[3,2],[3,1]]");
  auto all = standard_tableaux(l);
  CHECK(all.front() == initial_tableau(l));
  CHECK(initial_tableau(l).to_string() == "(1 2 3/4 5,6 7 8/9)");
  for (const auto& t : all) CHECK(t.is_standard());
  for (int k = 1; k <= 3; ++k)
    for (int r = 0; r <= 5; ++r)
      for (const auto& m : enumerate_multipartitions(k, r)) {
        long long prod = 1;
        for (const auto& p : m.comps) prod *= brute_std(p);
        // distribute r letters among components, then standard fillings in each
        long long multinom = factorial(r);
        for (const auto& p : m.comps) multinom /= factorial(size_of(p));
        CHECK(static_cast<long long>(standard_tableaux(m).size()) == prod * multinom);
      }
}

TEST_CASE("d(s) and the place-permutation action") {
  auto l = parse_multipartition("[[3,2],[3,1]]");
  auto w = Permutation::from_word(9, {1, 2});
  CHECK(initial_tableau(l).act(w).to_string() == "(3 1 2/4 5,6 7 8/9)");
  for (const auto& s : standard_tableaux(parse_multipartition("[[2,1],[1]]"))) {
    CHECK(initial_tableau(s.shape).act(d_of(s)) == s);
  }
  CHECK(d_of(initial_tableau(l)).is_identity());
  auto l2 = parse_multipartition("[[2],[1]]");
  CHECK(initial_tableau(l2).act(w_lambda(l2)) == final_tableau(l2));
}

TEST_CASE("reduced words") {
  std::mt19937 rng(5);
  for (int m = 1; m <= 6; ++m)
    for (const auto& p : all_permutations(m)) {
      auto w = p.reduced_word();
      CHECK(w.size() == p.length());
      CHECK(Permutation::from_word(m, w) == p);
    }
}

TEST_CASE("right action is an action") {
  std::mt19937 rng(9);
  auto l = parse_multipartition("[[2,1],[2]]");
  auto perms = all_permutations(5);
  auto s = standard_tableaux(l)[2];
  for (int i = 0; i < 50; ++i) {
    const auto& u = perms[rng() % perms.size()];
    const auto& v = perms[rng() % perms.size()];
    CHECK(s.act(u).act(v) == s.act(u * v));
  }
}

TEST_CASE("w_bracket") {
  Multipartition m{{{4}, {2, 2}, {1}}};
  CHECK(m.bracket() == std::vector<int>{0, 4, 8, 9});
  CHECK(w_bracket(m).images() == std::vector<int>{5, 6, 7, 8, 1, 2, 3, 4, 0});
  CHECK(w_bracket(parse_multipartition("[[2,1]]")).is_identity());
  CHECK(w_bracket(parse_multipartition("[[1],[1]]")) == Permutation::transposition(2, 0, 1));
  for (int k = 1; k <= 3; ++k)
    for (int r = 0; r <= 6; ++r)
      for (const auto& l : enumerate_multipartitions(k, r)) {
        Permutation wb = w_bracket(l), prod(r);
        for (int i = 1; i <= k; ++i) {
          CHECK(wb.inverse() * w_component(l, i) * wb == w_component_shifted(l, i));
          prod = prod * w_component(l, i);
        }
        CHECK(prod * wb == w_lambda(l));
      }
}

TEST_CASE("coset representatives and cell indices") {
  CHECK(coset_reps(0, 2, 2).size() == 1);
  CHECK(coset_reps(1, 2, 3).size() == 6);
  CHECK(coset_reps(2, 3, 2).size() == 6);
  CHECK(coset_reps(2, 2, 2) == std::vector<CosetRep>{{{1, 2}, {1, 2}}, {{1, 2}, {2, 2}}});
  Multipartition one{{{1}}};
  CHECK(enumerate_cell_indices(0, one, one, 1, 1, 1).size() == 1);
  CHECK_THROWS_AS(enumerate_cell_indices(1, one, one, 1, 1, 1), Error);
  for (int k = 1; k <= 3; ++k)
    for (int r = 0; r <= 3; ++r)
      for (int t = 0; t + r <= 4; ++t) {
        long long total = 0;
        for (const auto& c : enumerate_cells(k, r, t)) {
          auto idx = enumerate_cell_indices(c.f, c.mu, c.nu, k, r, t);
          total += static_cast<long long>(idx.size()) * static_cast<long long>(idx.size());
          for (const auto& i : idx)
            for (int p = 0; p < r; ++p)
              if (i.kappa[p]) CHECK(std::find(i.d.i.begin(), i.d.i.end(), p + 1) != i.d.i.end());
        }
        long long kp = 1;
        for (int i = 0; i < r + t; ++i) kp *= k;
        CHECK(total == kp * factorial(r + t));
      }
}
