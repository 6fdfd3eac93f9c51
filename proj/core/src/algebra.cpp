#include "cwb/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "cwb/error.hpp"

namespace cwb {

int GroundConfig::n() const { return p(k); }

int GroundConfig::p(int i) const {
  int s = 0;
  for (int j = 0; j < i; ++j) s += q[j];
  return s;
}

Scalar GroundConfig::c(int i) const { return d[i - 1] + p(i) - q[0]; }

int GroundConfig::block_of(int a) const {
  for (int i = 1; i <= k; ++i)
    if (a <= p(i)) return i;
  throw Error(ErrorCode::IndexOutOfRange, "basis index beyond n");
}

int GroundConfig::min_block() const { return *std::min_element(q.begin(), q.end()); }

void GroundConfig::validate() const {
  if (k < 1 || static_cast<int>(q.size()) != k || static_cast<int>(d.size()) != k)
    throw Error(ErrorCode::ConfigParse, "k must equal the lengths of q and d");
  for (int b : q)
    if (b < 1) throw Error(ErrorCode::ConfigParse, "block sizes must be positive");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Scalar diff = d[i] - d[j];
      if (diff != 0 && diff.get_den() == 1)
        throw Error(ErrorCode::GenericityViolation,
                    "d_" + std::to_string(i + 1) + " - d_" + std::to_string(j + 1) + " is a nonzero integer");
    }
}

std::string GroundConfig::canonical() const {
  std::ostringstream os;
  os << "k=" << k << ";q=";
  for (int i = 0; i < k; ++i) os << (i ? "," : "") << q[i];
  os << ";d=";
  for (int i = 0; i < k; ++i) os << (i ? "," : "") << d[i].get_str();
  return os.str();
}

Poly poly_from_roots(const std::vector<Scalar>& roots) {
  Poly p{1};
  for (const auto& u : roots) {
    Poly next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= u * p[i];
    }
    p = std::move(next);
  }
  return p;
}

std::string poly_to_string(const Poly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    Scalar c = p[i];
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Scalar a = abs(c);
    if (a != 1 || i == 0) os << a.get_str() << (i ? "*" : "");
    if (i) os << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {
// Power series of prod_i (1 + (n - num_i) z) / (1 + den_i z) up to z^{horizon+1}.
std::vector<Scalar> ratio_series(int n, const std::vector<Scalar>& num, const std::vector<Scalar>& den, int horizon) {
  std::size_t len = static_cast<std::size_t>(horizon) + 2;
  std::vector<Scalar> series(len);
  series[0] = 1;
  for (std::size_t i = 0; i < num.size(); ++i) {
    Scalar A = n - num[i], B = den[i];
    std::vector<Scalar> fac(len), geo(len);
    Scalar pw = 1;
    for (std::size_t m = 0; m < len; ++m, pw *= -B) geo[m] = pw;
    for (std::size_t m = 0; m < len; ++m) fac[m] = geo[m] + (m ? A * geo[m - 1] : Scalar(0));
    std::vector<Scalar> prod(len);
    for (std::size_t a = 0; a < len; ++a)
      for (std::size_t b = 0; a + b < len; ++b) prod[a + b] += series[a] * fac[b];
    series = std::move(prod);
  }
  return series;
}
}  // namespace

std::vector<Scalar> omegabar_series(const GroundConfig& cfg, int horizon) {
  auto p = derive_parameters(cfg, 0);
  // 1 + sum_a (-1)^a omegabar_a z^{a+1} = prod_i (1 + (n - u_i) z) / (1 + ubar_i z)
  auto series = ratio_series(cfg.n(), p.u, p.ubar, horizon);
  std::vector<Scalar> out;
  for (int a = 0; a <= horizon; ++a) out.push_back(a % 2 ? Scalar(-series[a + 1]) : series[a + 1]);
  return out;
}

AlgebraParameters derive_parameters(const GroundConfig& cfg, int horizon) {
  cfg.validate();
  AlgebraParameters p;
  int n = cfg.n();
  for (int i = 1; i <= cfg.k; ++i) {
    p.u.push_back(-cfg.c(i) + cfg.p(i - 1));
    p.ubar.push_back(cfg.c(i) + n - cfg.p(i));
  }
  p.f = poly_from_roots(p.u);
  p.g = poly_from_roots(p.ubar);
  for (int j = 1; j <= cfg.k; ++j) p.a_coeffs.push_back(p.f[cfg.k - j]);
  // 1 + sum_a (-1)^a omega_a z^{a+1} = prod_i (1 + (n - ubar_i) z) / (1 + u_i z)
  auto series = ratio_series(n, p.ubar, p.u, horizon);
  for (int a = 0; a <= horizon; ++a) p.omega.push_back(a % 2 ? Scalar(-series[a + 1]) : series[a + 1]);
  return p;
}

bool admissible(const AlgebraParameters& p) {
  int k = static_cast<int>(p.a_coeffs.size());
  for (int l = k; l < static_cast<int>(p.omega.size()); ++l) {
    Scalar s;
    for (int j = 1; j <= k; ++j) s += p.a_coeffs[j - 1] * p.omega[l - j];
    if (p.omega[l] != -s) return false;
  }
  return true;
}

std::string Letter::name() const {
  switch (kind) {
    case S: return "s" + std::to_string(index);
    case SBar: return "sbar" + std::to_string(index);
    case E: return "e1";
    case X: return "x" + std::to_string(index);
    case XBar: return "xbar" + std::to_string(index);
  }
  return "?";
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + w[i].name();
  return s;
}

AlgebraElement AlgebraElement::unit() { return word({}); }

AlgebraElement AlgebraElement::word(Word w, Scalar c) {
  AlgebraElement a;
  a.add(w, c);
  return a;
}

void AlgebraElement::add(const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [w, x] : a.terms_) out.add(w, c * x);
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.get_str() << ")" << word_to_string(w);
    first = false;
  }
  return os.str();
}

AlgebraElement sigma(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [w, c] : a.terms()) out.add(Word(w.rbegin(), w.rend()), c);
  return out;
}

AlgebraElement power(const AlgebraElement& a, int e) {
  AlgebraElement out = AlgebraElement::unit();
  for (int i = 0; i < e; ++i) out = out * a;
  return out;
}

AlgebraElement poly_at(const Poly& p, const AlgebraElement& y) {
  AlgebraElement out, pw = AlgebraElement::unit();
  for (const auto& c : p) {
    out += c * pw;
    pw = pw * y;
  }
  return out;
}

namespace {
AlgebraElement jm_expanded(Letter l) {
  if ((l.kind != Letter::X && l.kind != Letter::XBar) || l.index <= 1) return AlgebraElement::letter(l);
  bool bar = l.kind == Letter::XBar;
  int i = l.index - 1;
  Letter sw = bar ? sbar(i) : s(i);
  AlgebraElement inner = jm_expanded({l.kind, static_cast<std::uint8_t>(i)});
  AlgebraElement sl = AlgebraElement::letter(sw);
  return sl * inner * sl - sl;
}
}  // namespace

AlgebraElement expand_jm(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [w, c] : a.terms()) {
    AlgebraElement prod = AlgebraElement::scalar(c);
    for (Letter l : w) prod = prod * jm_expanded(l);
    out += prod;
  }
  return out;
}

AlgebraElement from_generators(const std::vector<Generator>& w) {
  Word out;
  for (const auto& g : w) {
    switch (g.kind) {
      case Generator::S: out.push_back(s(g.index)); break;
      case Generator::SBar: out.push_back(sbar(g.index)); break;
      case Generator::E: out.push_back(e1()); break;
    }
  }
  return AlgebraElement::word(out);
}

AlgebraElement from_permutation(const Permutation& p, bool barred) {
  Word w;
  for (int g : p.reduced_word()) w.push_back(barred ? sbar(g) : s(g));
  return AlgebraElement::word(w);
}

int RegularMonomial::degree() const {
  int s = 0;
  for (int a : alpha) s += a;
  for (int b : beta) s += b;
  return s;
}

std::string RegularMonomial::to_string() const {
  std::ostringstream os;
  os << "x^[";
  for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
  os << "] " << (D.to_string().empty() ? "[]" : D.to_string()) << " x̄^[";
  for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i];
  os << "]";
  return os.str();
}

namespace {
std::vector<std::vector<int>> exponent_vectors(int k, int len) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < len; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int e = 0; e < k; ++e) {
        auto w = v;
        w.push_back(e);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}
}  // namespace

std::vector<RegularMonomial> regular_monomials(int k, int r, int t) {
  std::vector<RegularMonomial> out;
  auto alphas = exponent_vectors(k, r), betas = exponent_vectors(k, t);
  auto diagrams = all_walled_diagrams(r, t);
  for (const auto& a : alphas)
    for (const auto& D : diagrams)
      for (const auto& b : betas) out.push_back({a, D, b});
  return out;
}

AlgebraElement monomial_element(const RegularMonomial& m) {
  Word w;
  for (std::size_t i = 0; i < m.alpha.size(); ++i)
    for (int e = 0; e < m.alpha[i]; ++e) w.push_back(x(static_cast<int>(i) + 1));
  AlgebraElement left = AlgebraElement::word(w);
  Word wb;
  for (std::size_t j = 0; j < m.beta.size(); ++j)
    for (int e = 0; e < m.beta[j]; ++e) wb.push_back(xbar(static_cast<int>(j) + 1));
  return left * from_generators(factorize(m.D)) * AlgebraElement::word(wb);
}

AlgebraElement expand_regular_monomial(const RegularMonomial& m) { return expand_jm(monomial_element(m)); }

AlgebraElement efrak(int i, int j, int r, int t) {
  if (i < 1 || i > r || j < 1 || j > t) throw Error(ErrorCode::IndexOutOfRange, "efrak index");
  Word w;
  for (int g : s_range(j, 1)) w.push_back(sbar(g));
  for (int g : s_range(i, 1)) w.push_back(s(g));
  w.push_back(e1());
  for (int g : s_range(1, i)) w.push_back(s(g));
  for (int g : s_range(1, j)) w.push_back(sbar(g));
  return AlgebraElement::word(w);
}

AlgebraElement e_power(int f, int r, int t) {
  if (f < 0 || f > std::min(r, t)) throw Error(ErrorCode::IndexOutOfRange, "e_power exponent");
  AlgebraElement out = AlgebraElement::unit();
  for (int h = 0; h < f; ++h) out = out * efrak(r - h, t - h, r, t);
  return out;
}

AlgebraElement pi_factor(int a, const Scalar& u, bool barred) {
  AlgebraElement out = AlgebraElement::unit();
  for (int i = 1; i <= a; ++i)
    out = out * (AlgebraElement::letter(barred ? xbar(i) : x(i)) - u * AlgebraElement::unit());
  return out;
}

AlgebraElement y_lambda(const Multipartition& l, const AlgebraParameters& p, bool barred) {
  int k = l.level();
  auto a = l.bracket();
  AlgebraElement pi = AlgebraElement::unit();
  for (int i = 1; i <= k - 1; ++i) {
    // unbarred: u_{k-i}; barred: u_j replaced by ubar_{k-j+1}, giving ubar_{i+1}
    const Scalar& u = barred ? p.ubar[i] : p.u[k - i - 1];
    pi = pi * pi_factor(a[i], u, barred);
  }
  AlgebraElement y;
  for (const auto& w : young_subgroup(l.concatenated_rows())) y += Scalar(w.sign()) * from_permutation(w, barred);
  return pi * y;
}

AlgebraElement y_pair(const StdTableau& s, const StdTableau& t, const AlgebraParameters& p, bool barred) {
  if (s.shape != t.shape) throw Error(ErrorCode::ShapeMismatch, "tableaux of different shapes");
  return from_permutation(d_of(s).inverse(), barred) * y_lambda(s.shape, p, barred) *
         from_permutation(d_of(t), barred);
}

AlgebraElement x_power(const std::vector<int>& kappa) {
  Word w;
  for (std::size_t i = 0; i < kappa.size(); ++i)
    for (int e = 0; e < kappa[i]; ++e) w.push_back(x(static_cast<int>(i) + 1));
  return AlgebraElement::word(w);
}

AlgebraElement coset_element(const CosetRep& c, int r, int t) {
  int f = static_cast<int>(c.i.size());
  Word w;
  for (int m = 0; m < f; ++m) {
    for (int g : s_range(r - f + 1 + m, c.i[m])) w.push_back(s(g));
    for (int g : s_range(t - f + 1 + m, c.j[m])) w.push_back(sbar(g));
  }
  return AlgebraElement::word(w);
}

AlgebraElement coset_inverse_element(const CosetRep& c, int r, int t) { return sigma(coset_element(c, r, t)); }

AlgebraElement cellular_element(const CellIndex& row, const CellIndex& col, const AlgebraParameters& p, int r,
                                int t) {
  if (row.f != col.f || row.mu != col.mu || row.nu != col.nu)
    throw Error(ErrorCode::ShapeMismatch, "cellular indices from different cells");
  return x_power(row.kappa) * coset_inverse_element(row.d, r, t) * e_power(row.f, r, t) *
         y_pair(row.s_mu, col.s_mu, p, false) * y_pair(row.s_nu, col.s_nu, p, true) *
         coset_element(col.d, r, t) * x_power(col.kappa);
}

namespace {
AlgebraElement L(Letter l) { return AlgebraElement::letter(l); }
AlgebraElement W(Word w) { return AlgebraElement::word(std::move(w)); }
}  // namespace

std::vector<Relation> relation_suite(int r, int t, const AlgebraParameters& p) {
  std::vector<Relation> out;
  auto add = [&](int num, std::string name, AlgebraElement e) { out.push_back({num, std::move(name), std::move(e)}); };
  auto comm = [](const AlgebraElement& a, const AlgebraElement& b) { return a * b - b * a; };
  // Hecke-type relations on both sides of the wall
  for (int side = 0; side < 2; ++side) {
    bool bar = side == 1;
    int m = bar ? t : r;
    int base = bar ? 13 : 0;
    auto g = [&](int i) { return L(bar ? sbar(i) : s(i)); };
    for (int i = 1; i < m; ++i) add(base + 1, g(1).to_string() + " squared", g(i) * g(i) - AlgebraElement::unit());
    for (int i = 1; i < m; ++i)
      for (int j = i + 2; j < m; ++j) add(base + 2, "far commutation", comm(g(i), g(j)));
    for (int i = 1; i + 1 < m; ++i) add(base + 3, "braid", g(i) * g(i + 1) * g(i) - g(i + 1) * g(i) * g(i + 1));
  }
  for (int i = 1; i < r; ++i)
    for (int j = 1; j < t; ++j) add(7, "s_i sbar_j commute", comm(L(s(i)), L(sbar(j))));
  for (int i = 2; i < r; ++i) add(10, "s_i x_1 commute", comm(L(s(i)), L(x(1))));
  for (int i = 1; i < r; ++i) add(11, "s_i xbar_1 commute", comm(L(s(i)), L(xbar(1))));
  for (int j = 2; j < t; ++j) add(23, "sbar_j xbar_1 commute", comm(L(sbar(j)), L(xbar(1))));
  for (int j = 1; j < t; ++j) add(24, "sbar_j x_1 commute", comm(L(sbar(j)), L(x(1))));
  if (r >= 2) {
    auto y = L(s(1)) * L(x(1)) * L(s(1)) - L(s(1));
    add(13, "x_1 commutes with s_1 x_1 s_1 - s_1", comm(L(x(1)), y));
  }
  if (t >= 2) {
    auto y = L(sbar(1)) * L(xbar(1)) * L(sbar(1)) - L(sbar(1));
    add(26, "xbar_1 commutes with sbar_1 xbar_1 sbar_1 - sbar_1", comm(L(xbar(1)), y));
  }
  if (r < 1 || t < 1) return out;
  auto e = L(e1());
  for (int i = 2; i < r; ++i) add(4, "s_i e_1 commute", comm(L(s(i)), e));
  if (r >= 2) add(5, "e_1 s_1 e_1 = e_1", e * L(s(1)) * e - e);
  add(6, "e_1^2 = omega_0 e_1", e * e - p.omega.at(0) * e);
  add(8, "e_1 (x_1 + xbar_1) = 0", e * (L(x(1)) + L(xbar(1))));
  add(8, "(x_1 + xbar_1) e_1 = 0", (L(x(1)) + L(xbar(1))) * e);
  if (r >= 2) add(9, "e_1 s_1 x_1 s_1 = s_1 x_1 s_1 e_1", comm(e, W({s(1), x(1), s(1)})));
  for (std::size_t a = 0; a < p.omega.size(); ++a)
    add(12, "e_1 x_1^" + std::to_string(a) + " e_1 = omega_" + std::to_string(a) + " e_1",
        e * power(L(x(1)), static_cast<int>(a)) * e - p.omega[a] * e);
  for (int j = 2; j < t; ++j) add(17, "sbar_j e_1 commute", comm(L(sbar(j)), e));
  if (t >= 2) add(18, "e_1 sbar_1 e_1 = e_1", e * L(sbar(1)) * e - e);
  if (r >= 2 && t >= 2) {
    add(19, "e_1 s_1 sbar_1 e_1 s_1 = e_1 s_1 sbar_1 e_1 sbar_1",
        W({e1(), s(1), sbar(1), e1(), s(1)}) - W({e1(), s(1), sbar(1), e1(), sbar(1)}));
    add(20, "s_1 e_1 s_1 sbar_1 e_1 = sbar_1 e_1 s_1 sbar_1 e_1",
        W({s(1), e1(), s(1), sbar(1), e1()}) - W({sbar(1), e1(), s(1), sbar(1), e1()}));
  }
  add(21, "x_1 commutes with e_1 + xbar_1", comm(L(x(1)), e + L(xbar(1))));
  if (t >= 2) add(22, "e_1 sbar_1 xbar_1 sbar_1 = sbar_1 xbar_1 sbar_1 e_1", comm(e, W({sbar(1), xbar(1), sbar(1)})));
  for (std::size_t a = 0; a < p.omegabar.size(); ++a)
    add(25, "e_1 xbar_1^" + std::to_string(a) + " e_1 = omegabar_" + std::to_string(a) + " e_1",
        e * power(L(xbar(1)), static_cast<int>(a)) * e - p.omegabar[a] * e);
  return out;
}

std::vector<Relation> cyclotomic_relations(int k, int r, int t, const AlgebraParameters& p) {
  std::vector<Relation> out;
  if (r >= 1) out.push_back({0, "f(x_1) = 0", poly_at(p.f, L(x(1)))});
  if (t >= 1) out.push_back({0, "g(xbar_1) = 0", poly_at(p.g, L(xbar(1)))});
  if (r >= 1 && t >= 1) {
    Scalar sign = k % 2 ? -1 : 1;
    out.push_back({0, "e_1 f(x_1) = (-1)^k e_1 g(xbar_1)",
                   L(e1()) * poly_at(p.f, L(x(1))) - sign * (L(e1()) * poly_at(p.g, L(xbar(1))))});
  }
  return out;
}

std::vector<Scalar> multiply(const AlgebraElement& a, const AlgebraElement& b, const RepresentationOracle& o) {
  return o.coordinates(a * b);
}

}  // namespace cwb
