#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cwb/combinat.hpp"

namespace cwb {

// One of e_1, s_i (unbarred crossing of strands i, i+1), sbar_j (barred crossing).
struct Generator {
  enum Kind { S, SBar, E } kind;
  int index;
  std::string name() const;  // "s2", "sbar1", "e1"
  bool operator==(const Generator&) const = default;
};

// Vertices of one row sit at positions 0..r+t-1 in the order r,...,1,1bar,...,tbar.
// Vertex id = position for the top row and r+t+position for the bottom row.
class WalledDiagram {
 public:
  WalledDiagram() = default;
  static WalledDiagram identity(int r, int t);
  static WalledDiagram generator(Generator g, int r, int t);
  // Validates the walled matching conditions.
  static WalledDiagram from_partner(int r, int t, std::vector<int> partner);
  static WalledDiagram parse(const std::string& edges, int r, int t);

  int r() const { return r_; }
  int t() const { return t_; }
  int width() const { return r_ + t_; }
  int partner(int v) const { return partner_[v]; }
  const std::vector<int>& partners() const { return partner_; }

  int position(bool barred, int i) const { return barred ? r_ + i - 1 : r_ - i; }
  bool barred_at(int pos) const { return pos >= r_; }
  int strand_at(int pos) const { return pos >= r_ ? pos - r_ + 1 : r_ - pos; }
  int top(int pos) const { return pos; }
  int bottom(int pos) const { return width() + pos; }
  bool is_top(int v) const { return v < width(); }

  // number of horizontal arcs on the top row
  int arcs() const;
  std::vector<std::pair<int, int>> edges() const;  // each edge once, smaller id first
  std::string vertex_name(int v) const;            // "t3", "b-1bar"
  std::string to_string() const;                   // "[t1,b1],[t-1bar,b-1bar]"

  bool operator==(const WalledDiagram&) const = default;
  auto operator<=>(const WalledDiagram&) const = default;

  // Bottom labelings reached from the top labeling `in` (entries 1..n) under the
  // right action on tensors; each comes with coefficient 1.
  std::vector<std::vector<int>> act_on_labels(const std::vector<int>& in, int n) const;

 private:
  int r_ = 0, t_ = 0;
  std::vector<int> partner_;
};

// d1 above d2; circles removed and counted.
std::pair<WalledDiagram, int> compose(const WalledDiagram& d1, const WalledDiagram& d2);

// Permutation of the r+t positions (letter = position) to its flipped diagram.
WalledDiagram bar_flip(const Permutation& w, int r, int t);
Permutation bar_flip_inverse(const WalledDiagram& d);

// All (r+t)! walled diagrams, ordered by their flipped permutations.
std::vector<WalledDiagram> all_walled_diagrams(int r, int t);

// A word in e_1, s_i, sbar_j whose diagram product equals d with no circles.
std::vector<Generator> factorize(const WalledDiagram& d);

struct LabeledDiagram {
  WalledDiagram diagram;
  std::vector<int> top_labels, bottom_labels;  // position order
  std::vector<int> beads;                      // per vertex id
};

int wt(const LabeledDiagram& x);

}  // namespace cwb
