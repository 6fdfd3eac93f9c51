#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cwb/algebra.hpp"
#include "cwb/celltheory.hpp"
#include "cwb/combinat.hpp"
#include "cwb/glrep.hpp"

namespace cwb {

// lambda-hat_{mu,nu} = delta_c + (mu^(i)_1..mu^(i)_r, 0.., -nu^(i)_t..-nu^(i)_1) blockwise.
std::vector<Scalar> hwv_weight(const Cell& cell, const GroundConfig& cfg);
// (1^f, i_mu) followed by (i_{nu^o}, 1^f), in vertex position order.
std::vector<int> hwv_labels(const Cell& cell, const GroundConfig& cfg, int r, int t);
// Index set delta(f, mu', (nu^o)') of the family for the cell (f, mu, nu).
std::vector<CellIndex> hwv_indices(const Cell& cell, int k, int r, int t);
// The cell (f, mu', (nu^o)') of the cell module matching the family.
Cell matching_cell(const Cell& cell);

// v = (m (x) v_i (x) v*_j) e^f w_mu w_{nu^o} y_{mu'} y_{(nu^o)'} d(t) d x^kappa.
AlgebraElement hwv_word(const Cell& cell, const CellIndex& idx, const AlgebraParameters& p, int r, int t);
// Throws CONFIG_TOO_SMALL unless r + t <= min q.
PBWVector build_hwv(TensorModule& mod, const Cell& cell, const CellIndex& idx, const AlgebraParameters& p);

// Terms of v whose PBW part is the highest weight vector m itself.
PBWVector m_component(const PBWVector& v);
// The unique vector of the highest weight space with the same m-component as v.
// Throws NOT_IN_FAMILY_SPAN if there is none.
PBWVector lift_hwv(const PBWVector& v, const std::vector<PBWVector>& hw_space);

struct HwvFamily {
  Cell cell;
  std::vector<Scalar> weight;
  std::vector<CellIndex> indices;
  std::vector<PBWVector> raw;      // the word images m (x) v_i (x) v*_j h
  std::vector<PBWVector> vectors;  // lifts of the raw m-components; equal to raw when raw is highest
  std::size_t raw_highest = 0;     // raw vectors killed by every e_{i,i+1}
};
HwvFamily build_hwv_family(TensorModule& mod, const Cell& cell, const AlgebraParameters& p);

// e_{i,j} acting diagonally on M_c and every tensor slot.
PBWVector act_gl_total(TensorModule& mod, int i, int j, const PBWVector& v);

struct HwvReport {
  bool highest = false;
  bool weight_ok = false;
  int failing_root = 0;  // i with e_{i,i+1} v != 0, 0 if none
  bool ok() const { return highest && weight_ok; }
};
HwvReport verify_hwv(TensorModule& mod, const PBWVector& v, const std::vector<Scalar>& expected_weight);

// Every basis vector of M_c^{r,t} of the given weight.
std::vector<std::string> weight_space_keys(TensorModule& mod, const std::vector<Scalar>& weight);
// Basis of the vectors of that weight killed by every e_{i,i+1}.
std::vector<PBWVector> brute_force_hwv_space(TensorModule& mod, const std::vector<Scalar>& weight);

// delta_c + weights of V^{(x)r} (x) W^{(x)t} that are dominant for the Levi
// subalgebra: the only possible highest weights.
std::vector<std::vector<Scalar>> candidate_weights(const GroundConfig& cfg, int r, int t);

// Rank of a set of vectors; the family is independent when it equals the size.
std::size_t family_rank(const std::vector<PBWVector>& vs);
// True when every vector of a lies in the span of b.
bool spans_into(const std::vector<PBWVector>& a, const std::vector<PBWVector>& b);

struct WeightCount {
  std::vector<Scalar> weight;
  std::optional<Cell> cell;  // the cell with this lambda-hat, if any
  std::size_t brute = 0, expected = 0;
};

struct HwvClassification {
  int r = 0, t = 0;
  std::vector<WeightCount> weights;
  std::size_t families = 0, families_ok = 0;  // lifted family: verify_hwv, independence and span
  std::size_t raw_families_ok = 0;            // the word images themselves are highest weight vectors
  std::vector<std::string> raw_failures;
  std::vector<std::string> failures;
  bool ok() const;
  bool raw_ok() const { return ok() && raw_families_ok == families; }
};
// Counting theorem and family checks over every candidate weight.
HwvClassification classify_hwv(const GroundConfig& cfg, int r, int t);

struct HomCellReport {
  Cell cell;
  std::size_t dim = 0;
  std::size_t generators = 0;
  std::vector<std::string> mismatches;  // generator names whose matrices differ
  bool ok() const { return mismatches.empty(); }
};
// Right action of the generators on the family in its own basis, compared with
// the cell module C(f, mu', (nu^o)') of the datum. Throws NOT_IN_FAMILY_SPAN.
HomCellReport hom_cell_iso_check(TensorModule& mod, const CellDatum& datum, const Cell& cell);

}  // namespace cwb
