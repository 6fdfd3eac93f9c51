#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cwb/algebra.hpp"
#include "cwb/combinat.hpp"
#include "cwb/exactlin.hpp"
#include "cwb/structure.hpp"

namespace cwb {

// (f, mu, nu) strictly above (l, alpha, beta): f > l, or f = l with mu and nu
// dominating alpha and beta and the cells different.
bool cell_above(const Cell& a, const Cell& b);

struct CellularElement {
  std::size_t cell, row, col;  // row and col index into CellDatum::indices[cell]
};

struct CellDatum {
  GroundConfig config;
  int r = 0, t = 0;
  AlgebraParameters params;
  std::vector<Cell> poset;
  std::vector<std::vector<CellIndex>> indices;  // delta(f, mu, nu) per cell
  std::vector<CellularElement> elements;        // the cellular basis order
  Matrix change_of_basis;                       // row b: monomial coordinates of element b
  Matrix inverse;                               // monomial to cellular coordinates
  std::shared_ptr<const StructureAlgebra> algebra;

  std::size_t dim() const { return elements.size(); }
  std::size_t element_index(std::size_t cell, std::size_t row, std::size_t col) const;
  AlgebraElement element(std::size_t b) const;  // C_{row,col} as a word sum
  Coords cellular(const Coords& monomial) const;
  Coords monomial(const Coords& cellular) const;
};

// Throws SINGULAR_CHANGE_OF_BASIS if the cellular elements are dependent.
CellDatum build_cell_datum(const GroundConfig& cfg, int r, int t, std::shared_ptr<const StructureAlgebra> algebra);
CellDatum build_cell_datum(const GroundConfig& cfg, int r, int t);

struct CellModule {
  std::size_t cell = 0;
  Cell label;
  std::vector<CellIndex> basis;
  std::map<Letter, Matrix> action;  // right action on row vectors, one matrix per generator
  std::size_t dim() const { return basis.size(); }
  Matrix act(const AlgebraElement& a) const;
  Matrix act_word(const Word& w) const;
  Matrix act_letter(const Letter& l) const;
};

// Right module on C_{S0,T} (S0 the first index of the cell) modulo the cells
// strictly above. Throws MATRIX_MISMATCH if a product leaves the S0 row of the
// cell or lands below it.
CellModule cell_module(const CellDatum& datum, std::size_t cell);

// <T,U> from C_{S0,T} C_{U,V0} = <T,U> C_{S0,V0} modulo higher cells.
Matrix gram_matrix(const CellDatum& datum, const CellModule& mod);

struct CellularityReport {
  std::size_t pairs_checked = 0;
  std::size_t exact = 0;  // sigma(C_ST) = C_TS on the nose
  std::vector<std::string> violations;  // sigma(C_ST) - C_TS not strictly above
  std::vector<std::string> filtration_violations;  // products falling below their cell
  bool ok() const { return violations.empty() && filtration_violations.empty(); }
  bool genuine() const { return ok() && exact == pairs_checked; }
};
CellularityReport weak_cellularity_check(const CellDatum& datum);

struct DecompositionResult {
  std::vector<Cell> rows;     // all cells
  std::vector<Cell> columns;  // cells with a simple head (nonzero Gram)
  std::vector<std::vector<long>> matrix;
  std::vector<std::size_t> cell_dims, simple_dims;
  std::vector<std::size_t> gram_ranks;
  std::size_t algebra_dim = 0, radical_dim = 0;
  bool wedderburn_ok = false;  // sum of (dim D)^2 = dim B - dim J
  bool rows_ok = false;        // dim C = sum_mu d dim D on every row
  bool is_identity() const;
  bool all_grams_full() const;
};

// d_{lambda,mu} = dim Hom(P(mu), C(lambda)) through the trace-form radical,
// block idempotents of the semisimple quotient lifted to the algebra, and the
// ranks of their images on each cell module.
DecompositionResult decomposition_matrix(const CellDatum& datum, std::size_t max_dim = 500);
DecompositionResult decomposition_matrix(const GroundConfig& cfg, int r, int t, std::size_t max_dim = 500);

// Dimension of Hom between two right modules given by generator matrices.
std::size_t hom_dimension(const std::map<Letter, Matrix>& a, const std::map<Letter, Matrix>& b);

}  // namespace cwb
