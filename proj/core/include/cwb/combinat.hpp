#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cwb {

using Partition = std::vector<int>;

int size_of(const Partition& p);
Partition conjugate(const Partition& p);

struct Multipartition {
  std::vector<Partition> comps;

  int level() const { return static_cast<int>(comps.size()); }
  int size() const;
  // [a_0,...,a_k] with a_i = |comp 1| + ... + |comp i|.
  std::vector<int> bracket() const;
  // comps reversed: (comp k, ..., comp 1).
  Multipartition reversed() const;
  // (comp k', ..., comp 1'), the conjugate k-partition.
  Multipartition conjugate() const;
  // all rows of all components concatenated, as a composition of r
  std::vector<int> concatenated_rows() const;
  std::string to_string() const;  // nested integer arrays, e.g. [[3,2],[3,1]]
  bool operator==(const Multipartition&) const = default;
  auto operator<=>(const Multipartition&) const = default;
};

Multipartition parse_multipartition(const std::string& text);

// Dominance on k-partitions of equal size.
bool dominates(const Multipartition& a, const Multipartition& b);

// All k-partitions of r. Order: component sizes lexicographically decreasing,
// then each component in reverse lexicographic order; this refines dominance,
// so a dominating multipartition always appears no later than a dominated one.
std::vector<Multipartition> enumerate_multipartitions(int k, int r);

// One-line permutation of letters 0..m-1 acting on the right: letter i goes to img[i].
// Letter i stands for strand i+1; generator s_j (1-based) swaps letters j-1 and j.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t m);
  explicit Permutation(std::vector<int> img);
  static Permutation transposition(std::size_t m, int a, int b);
  static Permutation from_word(std::size_t m, const std::vector<int>& word);

  std::size_t degree() const { return img_.size(); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;
  std::size_t length() const;  // number of inversions

  // Reduced word w = s_{a_1} ... s_{a_l} (1-based generator indices, leftmost first).
  std::vector<int> reduced_word() const;

  // i (u*v) = (i u) v
  friend Permutation operator*(const Permutation& u, const Permutation& v);
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

std::vector<Permutation> all_permutations(std::size_t m);

// Young subgroup for the composition c: permutations of letters preserving the
// consecutive blocks of sizes c[0], c[1], ...
std::vector<Permutation> young_subgroup(const std::vector<int>& c);

struct StdTableau {
  Multipartition shape;
  std::vector<std::vector<std::vector<int>>> rows;  // component -> row -> entries (1-based)

  int size() const { return shape.size(); }
  bool is_standard() const;
  // Right place-permutation action: every entry e becomes e w.
  StdTableau act(const Permutation& w) const;
  std::string to_string() const;
  bool operator==(const StdTableau&) const = default;
  auto operator<=>(const StdTableau&) const = default;
};

StdTableau initial_tableau(const Multipartition& l);  // rows filled in order through the components
StdTableau final_tableau(const Multipartition& l);    // columns filled, last component first
std::vector<StdTableau> standard_tableaux(const Multipartition& l);  // initial tableau first

Permutation d_of(const StdTableau& s);          // initial_tableau(shape) d = s
Permutation w_lambda(const Multipartition& l);  // d of the final tableau
Permutation w_bracket(const Multipartition& l);
// w_(i): w of component i alone, placed on its letters a_{i-1}+1..a_i.
Permutation w_component(const Multipartition& l, int i);
// component i's w placed on the letters r-a_i+1..r-a_{i-1}
Permutation w_component_shifted(const Multipartition& l, int i);

// Generator words for s_{i,j} with 1-based strand labels; empty if i == j.
std::vector<int> s_range(int i, int j);

// A right coset representative s_{r-f+1,i_{r-f+1}} sbar_{t-f+1,j_{t-f+1}} ... s_{r,i_r} sbar_{t,j_t}.
struct CosetRep {
  std::vector<int> i;  // i_{r-f+1}, ..., i_r (strictly increasing)
  std::vector<int> j;  // j_{t-f+1}, ..., j_t
  bool operator==(const CosetRep&) const = default;
  auto operator<=>(const CosetRep&) const = default;
};

// Unbarred and barred permutations realised by a coset representative.
std::pair<Permutation, Permutation> coset_permutations(const CosetRep& c, int r, int t);
// Bottom arcs (unbarred position, barred position) of e^f c, 1-based.
std::vector<std::pair<int, int>> coset_arcs(const CosetRep& c, int r, int t);
std::vector<CosetRep> coset_reps(int f, int r, int t);

struct CellIndex {
  int f = 0;
  Multipartition mu, nu;
  StdTableau s_mu, s_nu;
  CosetRep d;
  std::vector<int> kappa;  // length r; nonzero only at the unbarred arc ends i_h
  bool operator==(const CellIndex&) const = default;
  auto operator<=>(const CellIndex&) const = default;
};

struct Cell {
  int f = 0;
  Multipartition mu, nu;
  std::string label() const;  // "(f,[mu],[nu])"
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

std::vector<Cell> enumerate_cells(int k, int r, int t);
std::vector<CellIndex> enumerate_cell_indices(int f, const Multipartition& mu, const Multipartition& nu,
                                              int k, int r, int t);

long long factorial(int n);
long long binomial(int n, int m);

}  // namespace cwb
