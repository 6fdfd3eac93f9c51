#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cwb/algebra.hpp"
#include "cwb/exactlin.hpp"
#include "cwb/models.hpp"

namespace cwb {

using Coords = std::vector<Scalar>;

// The algebra given by structure constants: for each generator g in
// {s_i, sbar_j, e_1, x_1, xbar_1}, row m of right(g) holds the regular-monomial
// coordinates of b_m g. x_i, xbar_j with i, j >= 2 follow the Jucys-Murphy recursion.
class StructureAlgebra {
 public:
  StructureAlgebra(int k, int r, int t, std::map<Letter, std::vector<SparseVec>> right);

  int level() const { return k_; }
  int r() const { return r_; }
  int t() const { return t_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RegularMonomial>& basis() const { return basis_; }
  const std::map<Letter, std::vector<SparseVec>>& right() const { return right_; }
  static std::vector<Letter> generators(int r, int t);

  Coords unit() const;
  Coords act_letter(const Letter& l, const Coords& a) const;
  Coords act_word(const Word& w, Coords a) const;
  Coords act(const AlgebraElement& w, const Coords& a) const;  // a w
  Coords coordinates(const AlgebraElement& w) const { return act(w, unit()); }
  Coords multiply(const Coords& a, const Coords& b) const;
  // Coordinates of b_m as a word image, cached.
  const AlgebraElement& monomial(std::size_t m) const { return monomials_[m]; }
  // Tr of right multiplication by each basis element.
  std::vector<Scalar> regular_traces() const;
  // sigma as a matrix on coordinates: row m = coordinates of sigma(b_m).
  std::vector<Coords> sigma_matrix() const;

 private:
  int k_, r_, t_;
  std::vector<RegularMonomial> basis_;
  std::vector<AlgebraElement> monomials_;
  std::map<Letter, std::vector<SparseVec>> right_;
  std::size_t unit_index_ = 0;
};

// RepresentationOracle view of a structure algebra (faithful by construction).
class StructureOracle : public RepresentationOracle {
 public:
  explicit StructureOracle(std::shared_ptr<const StructureAlgebra> a) : a_(std::move(a)) {}
  int level() const override { return a_->level(); }
  int r() const override { return a_->r(); }
  int t() const override { return a_->t(); }
  const std::vector<RegularMonomial>& basis() const override { return a_->basis(); }
  std::vector<Scalar> coordinates(const AlgebraElement& a) const override { return a_->coordinates(a); }
  bool annihilates(const AlgebraElement& a) const override;
  const StructureAlgebra& algebra() const { return *a_; }

 private:
  std::shared_ptr<const StructureAlgebra> a_;
};

// Seed oracle on the W-algebra model V_d^{r,t}: an element acts on a set of
// basis vectors chosen until the regular monomial images are independent.
class ModelOracle : public RepresentationOracle {
 public:
  ModelOracle(const GroundConfig& cfg, int r, int t);
  int level() const override { return model_.config().k; }
  int r() const override { return model_.r(); }
  int t() const override { return model_.t(); }
  const std::vector<RegularMonomial>& basis() const override { return basis_; }
  std::vector<Scalar> coordinates(const AlgebraElement& a) const override;
  bool annihilates(const AlgebraElement& a) const override;
  bool faithful() const { return echelon_.full(); }
  std::size_t rank() const { return echelon_.rank(); }
  std::size_t seeds_used() const { return seeds_.size(); }
  std::size_t seeds_tried() const { return tried_; }
  const std::vector<TensorIndex>& seeds() const { return seeds_; }
  const TensorModel& model() const { return model_; }
  // Coordinates of b_m g for every basis element, from the stored seed images.
  std::vector<SparseVec> right_matrix(const Letter& g) const;

 private:
  Coords solve(const std::vector<ModelVector>& imgs) const;

  TensorModel model_;
  std::vector<RegularMonomial> basis_;
  std::vector<TensorIndex> seeds_;
  std::vector<std::vector<ModelVector>> images_;  // per seed, per monomial
  std::vector<std::pair<std::size_t, TensorIndex>> row_keys_;
  SparseEchelon echelon_;
  std::size_t tried_ = 0;
};

StructureAlgebra structure_from_oracle(const RepresentationOracle& o);

struct ExtrapolationReport {
  std::vector<int> shifts;  // the s values sampled (q_i + s)
  int degree = -1;          // max polynomial degree in s over all constants
  int confirmations = 0;    // extra samples predicted exactly by the fit
  bool relations_hold = false;     // defining and cyclotomic relations vanish at s = 0
  bool module_consistent = false;  // the s = 0 model factors through the algebra
};

// Structure constants for (cfg, r, t) outside the faithful regime: sample the
// faithful models with every block size raised by s, interpolate each constant
// as a polynomial in s and evaluate at s = 0. Certified by extra samples, the
// relation suite and the non-faithful s = 0 model.
StructureAlgebra extrapolated_structure(const GroundConfig& cfg, int r, int t, ExtrapolationReport* report = nullptr,
                                        int confirmations = 2, int max_samples = 16);

// Faithful oracle when r + t <= min q, extrapolation otherwise.
std::shared_ptr<const StructureAlgebra> structure_algebra(const GroundConfig& cfg, int r, int t,
                                                          ExtrapolationReport* report = nullptr);

}  // namespace cwb
