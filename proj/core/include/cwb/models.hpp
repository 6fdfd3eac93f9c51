#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cwb/algebra.hpp"
#include "cwb/exactlin.hpp"

namespace cwb {

// Tableau with q_i boxes in column i, columns bottom-aligned, filled with
// 1..n down the columns from left to right.
class ColumnTableau {
 public:
  explicit ColumnTableau(std::vector<int> q);

  int n() const { return n_; }
  int columns() const { return static_cast<int>(q_.size()); }
  int row(int i) const { return row_[i - 1]; }
  int col(int i) const { return col_[i - 1]; }
  // Neighbour in the same row and the previous (next) column, 0 if none.
  int left(int i) const { return left_[i - 1]; }
  int right(int i) const { return right_[i - 1]; }
  // Pairs (i, j) with row(i) = row(j) and col(i) = col(j) - 1.
  std::vector<std::pair<int, int>> nilpotent_pairs() const;
  Matrix nilpotent() const;  // e = sum over those pairs of e_{i,j}
  // Basis of the centralizer of e in gl_n, as n x n matrices.
  std::vector<Matrix> centralizer_basis() const;

 private:
  std::vector<int> q_;
  int n_ = 0;
  std::vector<int> row_, col_, left_, right_;
};

// Labels in position order r..1, 1bar..tbar, values 1..n.
using TensorIndex = std::vector<int>;
using ModelVector = std::map<TensorIndex, Scalar>;

enum class ModelKind {
  Graded,   // gr of the algebra on V^{r,t}; x_i, xbar_j act by -e on one slot
  Shifted,  // the W-algebra model V_d^{r,t} with the d-shifted x_1, xbar_1
};

// Finite model on V^{(x)r} (x) W^{(x)t}. e_1, s_i, sbar_j act as walled
// Brauer diagrams in both models.
class TensorModel {
 public:
  TensorModel(ModelKind kind, const GroundConfig& cfg, int r, int t);

  ModelKind kind() const { return kind_; }
  int r() const { return r_; }
  int t() const { return t_; }
  int n() const { return tab_.n(); }
  const ColumnTableau& tableau() const { return tab_; }
  const GroundConfig& config() const { return cfg_; }
  std::size_t dim() const { return dim_; }

  std::size_t index_of(const TensorIndex& i) const;
  TensorIndex index_at(std::size_t pos) const;
  // deg v_i = k - col(i) = -deg v*_i, summed over the slots
  int degree(const TensorIndex& i) const;

  ModelVector act_letter(const Letter& l, const ModelVector& v) const;
  ModelVector act_diagram(const WalledDiagram& d, const ModelVector& v) const;
  ModelVector act_word(const Word& w, ModelVector v) const;
  ModelVector act(const AlgebraElement& a, const ModelVector& v) const;
  // Right action matrix: row a holds the image of basis vector a.
  Matrix matrix(const AlgebraElement& a) const;
  // The same, flattened row-major into a sparse vector of length dim^2.
  SparseVec flat(const AlgebraElement& a) const;

 private:
  ModelVector x_first(const ModelVector& v) const;
  ModelVector xbar_first(const ModelVector& v) const;
  ModelVector swap(const ModelVector& v, int a, int b) const;

  ModelKind kind_;
  GroundConfig cfg_;
  ColumnTableau tab_;
  int r_, t_;
  std::size_t dim_;
};

void add_scaled(ModelVector& acc, const ModelVector& v, const Scalar& c);
ModelVector basis_vector(const TensorIndex& i);
std::string to_string(const ModelVector& v, int r);  // "-v_{1} - 1/2*v_{4}", barred labels starred

ModelVector graded_act(const Letter& g, const ModelVector& v, const GroundConfig& cfg, int r, int t);
ModelVector shifted_act(const Letter& g, const ModelVector& v, const GroundConfig& cfg, int r, int t);

// Monic minimal polynomial of a square matrix (coefficients low degree first).
Poly minimal_polynomial(const Matrix& op);
// Minimal polynomial of x_1 (barred = false) or xbar_1 on a model.
Poly minimal_polynomial(const TensorModel& model, bool barred);

// Scalar lambda with e_1 x^a e_1 = lambda e_1 on the model; throws NONSCALAR.
Scalar model_omega(const TensorModel& model, int a, bool barred);

// Rank of the span of the regular monomial operators on the model.
std::size_t monomial_rank(const TensorModel& model);
// Coordinates of a basis of the kernel of the monomial-to-operator map.
std::vector<std::vector<Scalar>> monomial_kernel(const TensorModel& model);

// Relations of the graded algebra: the defining relations with the
// omega-dependent ones and the x-commutation ones replaced by their graded forms.
std::vector<Relation> graded_relation_suite(int k, int r, int t, int n);

// Partial transpose on the barred tensor slots.
Matrix flip(const Matrix& op, int t, int n);

struct FlipReport {
  std::size_t checked = 0;
  std::size_t literal_mismatches = 0;  // flip(phi(x)) != phi'(flip~(x))
  std::size_t twisted_mismatches = 0;  // with the sign (-1)^{|beta|} on the right
  std::vector<std::string> mismatching;  // basis elements failing the twisted check
  bool ok() const { return checked > 0 && twisted_mismatches == 0; }
};

// Compares flip of the graded Hecke action on V^{(x)(r+t)} with the graded
// walled action on V^{r,t} over every basis element x^alpha xbar^beta w.
FlipReport flip_commute_check(const GroundConfig& cfg, int r, int t);

struct CrossModelReport {
  std::size_t expected_rank = 0;  // k^{r+t} (r+t)!
  std::size_t shifted_rank = 0;
  std::size_t graded_rank = 0;
  bool injective_regime = false;  // r + t <= q_k
  int omega_horizon = 0;
  std::vector<Scalar> omega_model, omega_module, omegabar_model, omegabar_module;
  std::size_t shifted_kernel = 0, module_kernel = 0;
  bool module_kernel_in_shifted = false;  // every element killing the module kills V_d
  bool kernels_equal = false;
  bool ranks_ok() const;
  bool omegas_ok() const;
  bool ok() const { return ranks_ok() && omegas_ok() && module_kernel_in_shifted; }
};

// Rank, omega and kernel agreement between V_d^{r,t} and the parabolic Verma
// tensor module (requires r, t >= 1 for the omega part).
CrossModelReport cross_model_check(const GroundConfig& cfg, int r, int t, int omega_horizon = 4);

// dim End_{U(g_e)}(V^{r,t}) from the commutant of the centralizer of e.
std::size_t commutant_dimension(const GroundConfig& cfg, int r, int t);

}  // namespace cwb
