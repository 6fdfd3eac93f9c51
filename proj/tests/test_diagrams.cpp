#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cwb/diagrams.hpp"
#include "cwb/error.hpp"

using namespace cwb;

namespace {
WalledDiagram gen(Generator::Kind k, int i, int r, int t) { return WalledDiagram::generator({k, i}, r, t); }

std::pair<WalledDiagram, int> word_diagram(const std::vector<Generator>& w, int r, int t) {
  auto d = WalledDiagram::identity(r, t);
  int circles = 0;
  for (auto g : w) {
    auto [e, c] = compose(d, WalledDiagram::generator(g, r, t));
    d = e, circles += c;
  }
  return {d, circles};
}
}  // namespace

TEST_CASE("composition examples") {
  auto e = gen(Generator::E, 1, 1, 1);
  auto id = WalledDiagram::identity(1, 1);
  CHECK(compose(id, e) == std::pair{e, 0});
  CHECK(compose(e, e) == std::pair{e, 1});
  auto e2 = gen(Generator::E, 1, 2, 1), s1 = gen(Generator::S, 1, 2, 1);
  CHECK(compose(compose(e2, s1).first, e2) == std::pair{e2, 0});
  auto e3 = gen(Generator::E, 1, 1, 2), sb = gen(Generator::SBar, 1, 1, 2);
  CHECK(compose(compose(e3, sb).first, e3) == std::pair{e3, 0});
}

TEST_CASE("generators and errors") {
  CHECK(gen(Generator::E, 1, 1, 1).to_string() == "[t1,t-1bar],[b1,b-1bar]");
  CHECK(gen(Generator::S, 1, 2, 0).to_string() == "[t2,b1],[t1,b2]");
  CHECK(gen(Generator::SBar, 1, 0, 2).to_string() == "[t-1bar,b-2bar],[t-2bar,b-1bar]");
  CHECK_THROWS_AS(gen(Generator::S, 2, 2, 0), Error);
  CHECK_THROWS_AS(gen(Generator::E, 1, 1, 0), Error);
  auto d = gen(Generator::E, 1, 2, 2);
  CHECK(WalledDiagram::parse(d.to_string(), 2, 2) == d);
}

TEST_CASE("bar_flip") {
  CHECK(bar_flip(Permutation(3), 2, 1) == WalledDiagram::identity(2, 1));
  CHECK(bar_flip(Permutation::transposition(2, 0, 1), 1, 1) == gen(Generator::E, 1, 1, 1));
  // positions r..1: strands 1,2 of r=2 sit at positions 1,0
  CHECK(bar_flip(Permutation::transposition(3, 0, 1), 2, 1) == gen(Generator::S, 1, 2, 1));
  for (int r = 0; r <= 3; ++r)
    for (int t = 0; t + r <= 4; ++t) {
      auto all = all_walled_diagrams(r, t);
      std::set<WalledDiagram> uniq(all.begin(), all.end());
      CHECK(static_cast<long long>(uniq.size()) == factorial(r + t));
      for (const auto& w : all_permutations(r + t)) CHECK(bar_flip_inverse(bar_flip(w, r, t)) == w);
    }
}

TEST_CASE("composition is associative with circle counts") {
  std::mt19937 rng(1);
  auto all = all_walled_diagrams(2, 2);
  for (int i = 0; i < 300; ++i) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    auto [ab, n1] = compose(a, b);
    auto [abc, n2] = compose(ab, c);
    auto [bc, n3] = compose(b, c);
    auto [abc2, n4] = compose(a, bc);
    CHECK(abc == abc2);
    CHECK(n1 + n2 == n3 + n4);
  }
}

TEST_CASE("factorization reproduces every diagram") {
  for (int r = 0; r <= 3; ++r)
    for (int t = 0; t + r <= 5; ++t)
      for (const auto& d : all_walled_diagrams(r, t)) {
        auto [e, c] = word_diagram(factorize(d), r, t);
        CHECK(e == d);
        CHECK(c == 0);
      }
  auto w = factorize(gen(Generator::E, 1, 1, 1));
  REQUIRE(w.size() == 1);
  CHECK(w[0].name() == "e1");
}

TEST_CASE("weights of labeled diagrams") {
  auto e = gen(Generator::E, 1, 1, 1);
  auto id = WalledDiagram::identity(1, 1);
  CHECK(wt({id, {2, 2}, {2, 2}, {}}) == 1);
  CHECK(wt({id, {1, 2}, {2, 2}, {}}) == 0);
  CHECK(wt({e, {3, 3}, {5, 5}, {}}) == 1);
}

TEST_CASE("action on tensor labels") {
  auto e = gen(Generator::E, 1, 1, 1);
  CHECK(e.act_on_labels({1, 2}, 3).empty());
  CHECK(e.act_on_labels({2, 2}, 3).size() == 3);
  auto s = gen(Generator::S, 1, 2, 0);
  CHECK(s.act_on_labels({1, 2}, 3) == std::vector<std::vector<int>>{{2, 1}});
}
