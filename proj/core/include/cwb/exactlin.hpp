#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cwb/error.hpp"

namespace cwb {

// Arbitrary precision rational, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

// a/b in lowest terms (mpq_class(a, b) alone does not canonicalize)
inline Scalar frac(long a, long b) {
  Scalar x(a, b);
  x.canonicalize();
  return x;
}

Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& x);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Scalar>& data() const { return a_; }

  std::vector<Scalar> row(std::size_t i) const;
  std::vector<Scalar> col(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);
std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v);
Scalar trace(const Matrix& a);

struct RrefResult {
  std::size_t rank = 0;
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan, leftmost pivot column, first nonzero row below the current one.
RrefResult rref_rank(const Matrix& m);

// Rank by fraction-free (Bareiss) elimination on a denominator-cleared integer copy.
std::size_t rank(const Matrix& m);

// Basis of the right kernel {x : m x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> kernel(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

enum class SolveStatus { Ok, NotInSpan, Ambiguous };

struct SolveResult {
  SolveStatus status = SolveStatus::NotInSpan;
  std::vector<Scalar> coeffs;
};

// Coefficients c with sum_i c_i basis[i] = target.
SolveResult solve_in_span(const std::vector<std::vector<Scalar>>& basis,
                          const std::vector<Scalar>& target);

// Sparse vector over Q indexed by column numbers, sorted, no zero entries.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

// Incremental row echelon form over sparse rows. Each stored row has its pivot
// at its first nonzero column. Rows are not back-reduced, which keeps fill-in low
// when the incoming vectors are nearly triangular.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t dim) : dim_(dim) {}

  // Reduces v against the stored rows; stores it if independent. Returns the
  // index of the new row, or nullopt if v was dependent. When track is set the
  // elimination multipliers are kept so that solve() can be used later.
  std::optional<std::size_t> insert(SparseVec v);

  // Reduce without storing; returns the residual.
  SparseVec reduce(SparseVec v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  bool full() const { return rows_.size() == dim_; }

  // Given y_i = <original row i, c> for every stored row i, recover c.
  // Requires full rank.
  std::vector<Scalar> solve(const std::vector<Scalar>& y) const;
  // Basis of {c : <row, c> = 0 for every stored row}, one vector per free column.
  std::vector<std::vector<Scalar>> kernel_basis() const;

 private:
  struct Row {
    SparseVec v;
    SparseVec mult;  // multipliers against earlier rows (row index, factor)
  };
  std::size_t dim_;
  std::vector<Row> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

// Kernel of a growing row set modulo the prime 2^61 - 1. A row that pairs
// nontrivially with the current kernel raises the rank; since independence
// mod p implies independence over Q, this screens rows cheaply before exact
// elimination.
class ModularKernel {
 public:
  using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;
  static constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;

  explicit ModularKernel(std::size_t dim);
  // Throws SINGULAR_CHANGE_OF_BASIS if a denominator vanishes mod p.
  static Row reduce(const SparseVec& v);
  // True when the row was independent of all earlier absorbed rows.
  bool absorb(const Row& row);
  std::size_t rank() const { return dim_ - kernel_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<std::uint64_t>> kernel_;
};

SparseVec axpy(const SparseVec& x, const Scalar& a, const SparseVec& y);  // x + a*y

}  // namespace cwb
