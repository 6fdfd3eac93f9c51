#include "cwb/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace cwb {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::GenericityViolation: return "GENERICITY_VIOLATION";
    case ErrorCode::FaithfulnessViolation: return "FAITHFULNESS_VIOLATION";
    case ErrorCode::ConfigTooSmall: return "CONFIG_TOO_SMALL";
    case ErrorCode::NonScalar: return "NONSCALAR";
    case ErrorCode::SingularChangeOfBasis: return "SINGULAR_CHANGE_OF_BASIS";
    case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
    case ErrorCode::NotInFamilySpan: return "NOT_IN_FAMILY_SPAN";
    case ErrorCode::MatrixMismatch: return "MATRIX_MISMATCH";
    case ErrorCode::ConfigParse: return "CONFIG_PARSE";
  }
  return "UNKNOWN";
}

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  auto valid_int = [](std::string_view p, bool allow_sign) {
    if (p.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && p[0] == '-') i = 1;
    if (i == p.size()) return false;
    for (; i < p.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(p[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error(ErrorCode::ConfigParse, "bad rational '" + std::string(text) + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorCode::ConfigParse, "zero denominator in '" + std::string(text) + "'");
  Scalar x(n, d);
  x.canonicalize();
  return x;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::ShapeMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "matrix product");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Scalar& x = a(i, l);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(l, j)) != 0) c(i, j) += x * b(l, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "matrix sum");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::ShapeMismatch, "matrix-vector product");
  std::vector<Scalar> w(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(v[j]) != 0) w[i] += a(i, j) * v[j];
  return w;
}

Scalar trace(const Matrix& a) {
  Scalar s;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) s += a(i, i);
  return s;
}

RrefResult rref_rank(const Matrix& m) {
  RrefResult res;
  res.rref = m;
  Matrix& a = res.rref;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) swap(a(p, j), a(lead, j));
    Scalar inv = 1 / a(lead, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead || sgn(a(i, c)) == 0) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (sgn(a(lead, j)) != 0) a(i, j) -= f * a(lead, j);
    }
    res.pivot_cols.push_back(c);
    ++lead;
  }
  res.rank = lead;
  return res;
}

std::size_t rank(const Matrix& m) {
  std::size_t R = m.rows(), C = m.cols();
  std::vector<mpz_class> a(R * C);
  for (std::size_t i = 0; i < R; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) a[i * C + j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * C + j]; };
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && at(p, c) == 0) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = 0; j < C; ++j) swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        at(i, j) = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::vector<std::vector<Scalar>> kernel(const Matrix& m) {
  auto rr = rref_rank(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = -rr.rref(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto rr = rref_rank(aug);
  if (rr.rank < n || (n > 0 && rr.pivot_cols[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.rref(i, n + j);
  return inv;
}

SolveResult solve_in_span(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& target) {
  SolveResult res;
  std::size_t h = target.size(), b = basis.size();
  for (const auto& v : basis)
    if (v.size() != h) throw Error(ErrorCode::ShapeMismatch, "basis columns of unequal height");
  Matrix aug(h, b + 1);
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t i = 0; i < h; ++i) aug(i, j) = basis[j][i];
  for (std::size_t i = 0; i < h; ++i) aug(i, b) = target[i];
  auto rr = rref_rank(aug);
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == b) return res;  // inconsistent
  if (rr.rank < b) {
    res.status = SolveStatus::Ambiguous;
    return res;
  }
  res.status = SolveStatus::Ok;
  res.coeffs.resize(b);
  for (std::size_t i = 0; i < rr.rank; ++i) res.coeffs[rr.pivot_cols[i]] = rr.rref(i, b);
  return res;
}

SparseVec axpy(const SparseVec& x, const Scalar& a, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      Scalar s = x[i].second + a * y[j].second;
      if (sgn(s) != 0) out.emplace_back(x[i].first, std::move(s));
      ++i, ++j;
    }
  }
  return out;
}

std::optional<std::size_t> SparseEchelon::insert(SparseVec v) {
  SparseVec mult;
  while (!v.empty()) {
    auto it = pivot_row_.find(v.front().first);
    if (it == pivot_row_.end()) break;
    const Row& r = rows_[it->second];
    Scalar f = v.front().second / r.v.front().second;
    v = axpy(v, -f, r.v);
    mult.emplace_back(it->second, std::move(f));
  }
  if (v.empty()) return std::nullopt;
  pivot_row_[v.front().first] = rows_.size();
  rows_.push_back({std::move(v), std::move(mult)});
  return rows_.size() - 1;
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
  while (!v.empty()) {
    auto it = pivot_row_.find(v.front().first);
    if (it == pivot_row_.end()) break;
    const Row& r = rows_[it->second];
    v = axpy(v, -(v.front().second / r.v.front().second), r.v);
  }
  return v;
}

std::vector<Scalar> SparseEchelon::solve(const std::vector<Scalar>& y) const {
  if (!full()) throw Error(ErrorCode::FaithfulnessViolation, "echelon system is not of full rank");
  std::vector<Scalar> z(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    z[i] = y[i];
    for (const auto& [j, f] : rows_[i].mult) z[i] -= f * z[j];
  }
  std::vector<Scalar> c(dim_);
  for (std::size_t col = dim_; col-- > 0;) {
    const Row& r = rows_[pivot_row_.at(col)];
    Scalar s = z[pivot_row_.at(col)];
    for (std::size_t k = 1; k < r.v.size(); ++k) s -= r.v[k].second * c[r.v[k].first];
    c[col] = s / r.v.front().second;
  }
  return c;
}

std::vector<std::vector<Scalar>> SparseEchelon::kernel_basis() const {
  std::vector<std::size_t> pivots;
  for (const auto& [col, row] : pivot_row_) pivots.push_back(col);
  std::sort(pivots.begin(), pivots.end(), std::greater<>());
  std::vector<std::vector<Scalar>> out;
  for (std::size_t f = 0; f < dim_; ++f) {
    if (pivot_row_.count(f)) continue;
    std::vector<Scalar> c(dim_);
    c[f] = 1;
    for (std::size_t col : pivots) {
      const Row& r = rows_[pivot_row_.at(col)];
      Scalar s = 0;
      for (std::size_t k = 1; k < r.v.size(); ++k) s -= r.v[k].second * c[r.v[k].first];
      c[col] = s / r.v.front().second;
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {
using u64 = std::uint64_t;
constexpr u64 P = ModularKernel::prime;
u64 mulmod(u64 a, u64 b) {
  unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  u64 lo = static_cast<u64>(x & P), hi = static_cast<u64>(x >> 61);
  u64 s = lo + hi;
  return s >= P ? s - P : s;
}
u64 addmod(u64 a, u64 b) { return a + b >= P ? a + b - P : a + b; }
u64 submod(u64 a, u64 b) { return a >= b ? a - b : a + P - b; }
u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}
u64 invmod(u64 a) { return powmod(a, P - 2); }
u64 residue(const mpz_class& z) {
  u64 m = mpz_fdiv_ui(z.get_mpz_t(), P);
  return m;
}
}  // namespace

ModularKernel::ModularKernel(std::size_t dim) : dim_(dim) {
  kernel_.assign(dim, std::vector<u64>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) kernel_[i][i] = 1;
}

ModularKernel::Row ModularKernel::reduce(const SparseVec& v) {
  Row out;
  out.reserve(v.size());
  for (const auto& [c, x] : v) {
    u64 val = residue(x.get_num());
    if (x.get_den() != 1) {
      u64 den = residue(x.get_den());
      if (den == 0) throw Error(ErrorCode::SingularChangeOfBasis, "denominator vanishes modulo the screening prime");
      val = mulmod(val, invmod(den));
    }
    if (val) out.emplace_back(c, val);
  }
  return out;
}

bool ModularKernel::absorb(const Row& row) {
  std::size_t m = kernel_.size();
  std::vector<u64> dots(m, 0);
  std::size_t hit = m;
  for (std::size_t i = 0; i < m; ++i) {
    u64 d = 0;
    for (const auto& [c, x] : row) d = addmod(d, mulmod(x, kernel_[i][c]));
    dots[i] = d;
    if (d && hit == m) hit = i;
  }
  if (hit == m) return false;
  u64 inv = invmod(dots[hit]);
  const auto& kh = kernel_[hit];
  for (std::size_t i = 0; i < m; ++i) {
    if (i == hit || !dots[i]) continue;
    u64 f = mulmod(dots[i], inv);
    auto& ki = kernel_[i];
    for (std::size_t c = 0; c < dim_; ++c)
      if (kh[c]) ki[c] = submod(ki[c], mulmod(f, kh[c]));
  }
  kernel_.erase(kernel_.begin() + static_cast<std::ptrdiff_t>(hit));
  return true;
}

}  // namespace cwb
