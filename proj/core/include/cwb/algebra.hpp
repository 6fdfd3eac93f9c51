#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cwb/combinat.hpp"
#include "cwb/diagrams.hpp"
#include "cwb/exactlin.hpp"

namespace cwb {

// Block sizes q, shifts d; n = sum q.
struct GroundConfig {
  int k = 1;
  std::vector<int> q;
  std::vector<Scalar> d;

  int n() const;
  int p(int i) const;       // q_1 + ... + q_i, p(0) = 0
  Scalar c(int i) const;    // d_i + p_i - q_1, 1-based
  int block_of(int a) const;  // 1-based block of basis index a in 1..n
  int min_block() const;
  // Throws CONFIG_PARSE on malformed data, GENERICITY_VIOLATION if some d_i - d_j is a nonzero integer.
  void validate() const;
  std::string canonical() const;  // stable text used for cache digests
};

// Coefficients low degree first.
using Poly = std::vector<Scalar>;
Poly poly_from_roots(const std::vector<Scalar>& roots);
std::string poly_to_string(const Poly& p, const std::string& var = "x");

struct AlgebraParameters {
  std::vector<Scalar> u, ubar;
  Poly f, g;
  std::vector<Scalar> a_coeffs;  // f = x^k + a_1 x^{k-1} + ... + a_k
  std::vector<Scalar> omega;     // omega_0..omega_A
  std::vector<Scalar> omegabar;  // filled from a representation (see omega_extract)
};

AlgebraParameters derive_parameters(const GroundConfig& cfg, int horizon);
// Closed form for the barred parameters; the algebra takes them from the module.
std::vector<Scalar> omegabar_series(const GroundConfig& cfg, int horizon);
// omega_l = -(a_1 omega_{l-1} + ... + a_k omega_{l-k}) for k <= l < omega.size()
bool admissible(const AlgebraParameters& p);

struct Letter {
  enum Kind : std::uint8_t { S, SBar, E, X, XBar } kind;
  std::uint8_t index;  // X/XBar: Jucys-Murphy index i of x_i / xbar_i
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
  std::string name() const;
};
using Word = std::vector<Letter>;
std::string word_to_string(const Word& w);

inline Letter s(int i) { return {Letter::S, static_cast<std::uint8_t>(i)}; }
inline Letter sbar(int i) { return {Letter::SBar, static_cast<std::uint8_t>(i)}; }
inline Letter e1() { return {Letter::E, 1}; }
inline Letter x(int i) { return {Letter::X, static_cast<std::uint8_t>(i)}; }
inline Letter xbar(int i) { return {Letter::XBar, static_cast<std::uint8_t>(i)}; }

class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement unit();
  static AlgebraElement word(Word w, Scalar c = 1);
  static AlgebraElement letter(Letter l) { return word({l}); }
  static AlgebraElement scalar(const Scalar& c) { return word({}, c); }

  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& w, const Scalar& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);  // concatenation
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
  bool operator==(const AlgebraElement&) const = default;
  std::string to_string() const;

 private:
  std::map<Word, Scalar> terms_;
};

AlgebraElement sigma(const AlgebraElement& a);
AlgebraElement power(const AlgebraElement& a, int e);
// p(y) for a polynomial p with coefficients low first
AlgebraElement poly_at(const Poly& p, const AlgebraElement& y);
// Rewrite x_i, xbar_i (i >= 2) via x_{i+1} = s_i x_i s_i - s_i and its barred analogue.
AlgebraElement expand_jm(const AlgebraElement& a);
AlgebraElement from_generators(const std::vector<Generator>& w);
AlgebraElement from_permutation(const Permutation& p, bool barred);

struct RegularMonomial {
  std::vector<int> alpha;
  WalledDiagram D;
  std::vector<int> beta;
  int degree() const;
  std::string to_string() const;  // "x^[a1,..,ar] D x̄^[b1,..,bt]"
  bool operator==(const RegularMonomial&) const = default;
};

// Ordered by alpha (lexicographic), then diagram, then beta.
std::vector<RegularMonomial> regular_monomials(int k, int r, int t);
// x_1^{a_1}...x_r^{a_r} (word of D) xbar_1^{b_1}...xbar_t^{b_t}, JM letters kept.
AlgebraElement monomial_element(const RegularMonomial& m);
AlgebraElement expand_regular_monomial(const RegularMonomial& m);

AlgebraElement efrak(int i, int j, int r, int t);
AlgebraElement e_power(int f, int r, int t);

// pi_a(u) = (x_1 - u)...(x_a - u), or its barred version
AlgebraElement pi_factor(int a, const Scalar& u, bool barred);
// y_lambda = pi~_[lambda] y_{lambda-bar} on the unbarred (params u) or barred side (params ubar reversed)
AlgebraElement y_lambda(const Multipartition& l, const AlgebraParameters& p, bool barred);
AlgebraElement y_pair(const StdTableau& s, const StdTableau& t, const AlgebraParameters& p, bool barred);
AlgebraElement x_power(const std::vector<int>& kappa);
// The coset representative as a word.
AlgebraElement coset_element(const CosetRep& c, int r, int t);
AlgebraElement coset_inverse_element(const CosetRep& c, int r, int t);
AlgebraElement cellular_element(const CellIndex& row, const CellIndex& col, const AlgebraParameters& p, int r,
                                int t);

struct Relation {
  int number;  // 1..26 as listed among the defining relations
  std::string name;
  AlgebraElement element;  // must act as zero
};

// Defining relations applicable at (r,t); (12) and (25) instantiated for
// exponents 0..omega.size()-1 (resp. omegabar).
std::vector<Relation> relation_suite(int r, int t, const AlgebraParameters& p);
// f(x_1), g(xbar_1), e_1 f(x_1) - (-1)^k e_1 g(xbar_1)
std::vector<Relation> cyclotomic_relations(int k, int r, int t, const AlgebraParameters& p);

class RepresentationOracle {
 public:
  virtual ~RepresentationOracle() = default;
  virtual int level() const = 0;
  virtual int r() const = 0;
  virtual int t() const = 0;
  virtual const std::vector<RegularMonomial>& basis() const = 0;
  // Coordinates in the regular monomial basis; throws FAITHFULNESS_VIOLATION
  // when the element's image is not in the span of the basis images.
  virtual std::vector<Scalar> coordinates(const AlgebraElement& a) const = 0;
  // True when the element acts as zero.
  virtual bool annihilates(const AlgebraElement& a) const = 0;
};

std::vector<Scalar> multiply(const AlgebraElement& a, const AlgebraElement& b, const RepresentationOracle& o);

}  // namespace cwb
