#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cwb/algebra.hpp"
#include "cwb/exactlin.hpp"

namespace cwb {

// Ordered PBW monomials in the lowering matrix units e_{i,j}, (i,j) in B_q
// (block(i) > block(j)), applied to the highest weight vector m. A monomial is
// stored as its pair ids in ascending lexicographic order starting from the
// factor next to m, so the leftmost factor is the largest; repeated ids encode
// exponents.
class PBWEngine {
 public:
  using Mono = std::string;
  using Terms = std::vector<std::pair<Mono, Scalar>>;

  explicit PBWEngine(const GroundConfig& cfg);

  const GroundConfig& config() const { return cfg_; }
  int n() const { return n_; }
  int pairs() const { return static_cast<int>(pairs_.size()); }
  int pair_id(int i, int j) const { return id_[(i - 1) * n_ + (j - 1)]; }  // -1 outside B_q
  std::pair<int, int> pair_at(int id) const { return pairs_[id]; }
  const Scalar& highest_weight(int a) const { return hw_[a - 1]; }

  // e_{i,j} * (mono m), expressed in the ordered basis. Cached.
  const Terms& apply(int i, int j, const Mono& m);

  std::string mono_to_string(const Mono& m) const;  // "e_{4,1}e_{5,1}m"
  std::vector<Scalar> weight(const Mono& m) const;
  std::size_t cache_size() const { return cache_.size(); }

 private:
  void add_into(std::map<Mono, Scalar>& acc, const Terms& t, const Scalar& c);
  GroundConfig cfg_;
  int n_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> id_;
  std::vector<Scalar> hw_;
  std::unordered_map<std::string, Terms> cache_;
};

// Vectors in M_c (x) V^{(x)r} (x) W^{(x)t}. Keys encode one basis vector as
// [degree byte][pair ids][r+t tensor labels], so that the map order is
// (degree, PBW lex, tensor lex). Labels are stored in vertex position order
// r..1, 1bar..tbar with values 1..n.
using PBWVector = std::map<std::string, Scalar>;

struct TensorKey {
  PBWEngine::Mono mono;
  std::vector<int> labels;
};
std::string encode_key(const PBWEngine::Mono& mono, const std::vector<int>& labels);
TensorKey decode_key(const std::string& key);

class TensorModule {
 public:
  TensorModule(const GroundConfig& cfg, int r, int t);

  int r() const { return r_; }
  int t() const { return t_; }
  int n() const { return engine_.n(); }
  PBWEngine& engine() { return engine_; }

  PBWVector seed(const std::vector<int>& labels) const;  // m (x) v_labels
  // slot 0 acts on M_c; slot p >= 1 acts on tensor position p-1.
  PBWVector act_gl(int i, int j, int slot, const PBWVector& v);
  PBWVector act_letter(const Letter& l, const PBWVector& v);
  PBWVector act_diagram(const WalledDiagram& d, const PBWVector& v) const;
  PBWVector act_word(const Word& w, PBWVector v);
  PBWVector act(const AlgebraElement& a, const PBWVector& v);

  // nullopt when the terms have different weights
  std::optional<std::vector<Scalar>> weight_of(const PBWVector& v) const;
  std::string key_to_string(const std::string& key) const;
  std::string to_string(const PBWVector& v) const;

 private:
  PBWVector swap_positions(const PBWVector& v, int a, int b) const;
  PBWVector jm(int strand, bool barred, const PBWVector& v);
  int r_, t_;
  PBWEngine engine_;
};

void add_scaled(PBWVector& acc, const PBWVector& v, const Scalar& c);

// All label sequences in I(n, r+t) in lexicographic order.
std::vector<std::vector<int>> all_seeds(int n, int width);

struct OracleOptions {
  bool require_faithful = true;  // throw CONFIG_TOO_SMALL unless r+t <= min q
  bool verify = true;            // re-check coordinates on every stored row
};

// The seed embedding: an element acts on all degree-zero vectors m (x) v_i.
// Rank over the regular monomials is found by streaming seeds into a sparse
// echelon form until it is full (or all seeds are exhausted).
class VermaOracle : public RepresentationOracle {
 public:
  VermaOracle(const GroundConfig& cfg, int r, int t, OracleOptions opts = {});

  int level() const override { return cfg_.k; }
  int r() const override { return r_; }
  int t() const override { return t_; }
  const std::vector<RegularMonomial>& basis() const override { return basis_; }
  std::vector<Scalar> coordinates(const AlgebraElement& a) const override;
  bool annihilates(const AlgebraElement& a) const override;

  std::size_t rank() const { return echelon_.rank(); }
  bool faithful() const { return echelon_.full(); }
  std::size_t seeds_used() const { return used_seeds_.size(); }
  // Coordinates (in basis order) of a basis of the elements acting as zero.
  const std::vector<std::vector<Scalar>>& kernel() const { return kernel_; }
  const GroundConfig& config() const { return cfg_; }

  // Images of a on every seed, in all_seeds order.
  std::vector<PBWVector> seed_embedding(const AlgebraElement& a) const;

 private:
  std::vector<PBWVector> monomial_images(const std::vector<int>& seed) const;

  GroundConfig cfg_;
  int r_, t_;
  OracleOptions opts_;
  std::vector<RegularMonomial> basis_;
  std::vector<std::size_t> column_of_;  // monomial index -> echelon column
  std::vector<std::size_t> monomial_at_;
  mutable std::unique_ptr<TensorModule> module_;
  SparseEchelon echelon_;
  std::vector<std::vector<int>> used_seeds_;
  // stored rows: (seed number in used_seeds_, key) for each echelon row
  std::vector<std::pair<std::size_t, std::string>> row_keys_;
  // for verification: every key of every used seed with its row over columns
  std::vector<std::map<std::string, SparseVec>> seed_rows_;
  std::vector<std::vector<Scalar>> kernel_;
};

// The scalar lambda with e_1 x^a e_1 = lambda e_1 (x = x_1 or xbar_1), read off
// from the action on M_c (x) V (x) W. Throws NONSCALAR if not proportional.
Scalar omega_extract(const GroundConfig& cfg, int a, bool barred);
std::vector<Scalar> omega_table(const GroundConfig& cfg, int horizon, bool barred);

// Integer labels that are affine in the block sizes: constant + sum coef_i q_i.
struct AffineLabel {
  long constant = 0;
  std::vector<long> coef;  // over q_1..q_k
  long value(const std::vector<int>& q) const;
  std::string to_string() const;  // "q_1+3", "4"
  bool operator==(const AffineLabel&) const = default;
};

struct LabeledCertificate {
  int r = 0;
  std::vector<AffineLabel> bottom, top;  // positions r..1, 1bar..tbar
  // lowering operator as a product of matrix units, leftmost first
  std::vector<std::pair<AffineLabel, AffineLabel>> lowering;
  std::string bottom_string() const;
  std::string top_string() const;
  std::string lowering_string() const;  // "1" when empty
};

LabeledCertificate labeled_certificate(const RegularMonomial& mono, int k);
// Numeric labels; throws CONFIG_TOO_SMALL unless r+t <= min q.
LabeledCertificate labeled_certificate(const RegularMonomial& mono, const GroundConfig& cfg);
// Coefficient of (lowering m) (x) v_top in (m (x) v_bottom) sigma(mono).
Scalar certificate_coefficient(const RegularMonomial& mono, const GroundConfig& cfg);

}  // namespace cwb
