#include "cwb/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "cwb/error.hpp"

namespace cwb {

std::string Generator::name() const {
  switch (kind) {
    case S: return "s" + std::to_string(index);
    case SBar: return "sbar" + std::to_string(index);
    case E: return "e" + std::to_string(index);
  }
  return "?";
}

WalledDiagram WalledDiagram::identity(int r, int t) {
  WalledDiagram d;
  d.r_ = r, d.t_ = t;
  int m = r + t;
  d.partner_.resize(2 * m);
  for (int p = 0; p < m; ++p) d.partner_[p] = m + p, d.partner_[m + p] = p;
  return d;
}

WalledDiagram WalledDiagram::generator(Generator g, int r, int t) {
  WalledDiagram d = identity(r, t);
  int m = r + t;
  auto link = [&](int a, int b) { d.partner_[a] = b, d.partner_[b] = a; };
  switch (g.kind) {
    case Generator::S: {
      if (g.index < 1 || g.index >= r) throw Error(ErrorCode::IndexOutOfRange, g.name());
      int a = d.position(false, g.index), b = d.position(false, g.index + 1);
      link(a, m + b), link(b, m + a);
      break;
    }
    case Generator::SBar: {
      if (g.index < 1 || g.index >= t) throw Error(ErrorCode::IndexOutOfRange, g.name());
      int a = d.position(true, g.index), b = d.position(true, g.index + 1);
      link(a, m + b), link(b, m + a);
      break;
    }
    case Generator::E: {
      if (g.index != 1 || r < 1 || t < 1) throw Error(ErrorCode::IndexOutOfRange, g.name());
      int a = d.position(false, 1), b = d.position(true, 1);
      link(a, b), link(m + a, m + b);
      break;
    }
  }
  return d;
}

WalledDiagram WalledDiagram::from_partner(int r, int t, std::vector<int> partner) {
  WalledDiagram d;
  d.r_ = r, d.t_ = t;
  int m = r + t;
  if (static_cast<int>(partner.size()) != 2 * m) throw Error(ErrorCode::ShapeMismatch, "partner size");
  for (int v = 0; v < 2 * m; ++v) {
    int u = partner[v];
    if (u < 0 || u >= 2 * m || u == v || partner[u] != v) throw Error(ErrorCode::ShapeMismatch, "not a matching");
    bool same_row = (v < m) == (u < m);
    bool bv = (v % m) >= r, bu = (u % m) >= r;
    if (same_row ? bv == bu : bv != bu) throw Error(ErrorCode::ShapeMismatch, "edge violates the wall");
  }
  d.partner_ = std::move(partner);
  return d;
}

int WalledDiagram::arcs() const {
  int c = 0;
  for (int p = 0; p < r_; ++p)
    if (is_top(partner_[p])) ++c;
  return c;
}

std::vector<std::pair<int, int>> WalledDiagram::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < static_cast<int>(partner_.size()); ++v)
    if (v < partner_[v]) e.emplace_back(v, partner_[v]);
  return e;
}

std::string WalledDiagram::vertex_name(int v) const {
  int m = width();
  int pos = v % m;
  std::string s = v < m ? "t" : "b";
  if (barred_at(pos)) return s + "-" + std::to_string(strand_at(pos)) + "bar";
  return s + std::to_string(strand_at(pos));
}

std::string WalledDiagram::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto [a, b] : edges()) {
    os << (first ? "" : ",") << '[' << vertex_name(a) << ',' << vertex_name(b) << ']';
    first = false;
  }
  return os.str();
}

WalledDiagram WalledDiagram::parse(const std::string& text, int r, int t) {
  WalledDiagram d;
  d.r_ = r, d.t_ = t;
  int m = r + t;
  std::vector<int> partner(2 * m, -1);
  auto vertex = [&](std::string name) {
    if (name.size() < 2 || (name[0] != 't' && name[0] != 'b'))
      throw Error(ErrorCode::ConfigParse, "bad vertex '" + name + "'");
    bool top = name[0] == 't';
    name = name.substr(1);
    bool barred = false;
    if (name.size() > 3 && name.substr(name.size() - 3) == "bar") {
      barred = true;
      name = name.substr(0, name.size() - 3);
      if (!name.empty() && name[0] == '-') name = name.substr(1);
    }
    int i = 0;
    try {
      i = std::stoi(name);
    } catch (...) {
      throw Error(ErrorCode::ConfigParse, "bad vertex index");
    }
    if (i < 1 || i > (barred ? t : r)) throw Error(ErrorCode::IndexOutOfRange, "vertex index");
    int pos = d.position(barred, i);
    return top ? pos : m + pos;
  };
  std::size_t at = 0;
  while ((at = text.find('[', at)) != std::string::npos) {
    auto close = text.find(']', at);
    auto comma = text.find(',', at);
    if (close == std::string::npos || comma == std::string::npos || comma > close)
      throw Error(ErrorCode::ConfigParse, "bad edge syntax");
    int a = vertex(text.substr(at + 1, comma - at - 1)), b = vertex(text.substr(comma + 1, close - comma - 1));
    if (partner[a] != -1 || partner[b] != -1) throw Error(ErrorCode::ConfigParse, "vertex used twice");
    partner[a] = b, partner[b] = a;
    at = close + 1;
  }
  for (int p : partner)
    if (p == -1) throw Error(ErrorCode::ConfigParse, "incomplete matching");
  return from_partner(r, t, std::move(partner));
}

std::vector<std::vector<int>> WalledDiagram::act_on_labels(const std::vector<int>& in, int n) const {
  int m = width();
  std::vector<int> out(m, 0);
  std::vector<int> free_arcs;  // bottom positions heading a bottom arc
  for (int p = 0; p < m; ++p) {
    int u = partner_[p];
    if (u >= m) {
      out[u - m] = in[p];
    } else if (p < u && in[p] != in[u]) {
      return {};
    }
  }
  for (int p = 0; p < m; ++p) {
    int u = partner_[m + p];
    if (u >= m && p < u - m) free_arcs.push_back(p);
  }
  std::vector<std::vector<int>> res;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free_arcs.size()) {
      res.push_back(out);
      return;
    }
    int p = free_arcs[i], q = partner_[m + p] - m;
    for (int l = 1; l <= n; ++l) {
      out[p] = out[q] = l;
      rec(i + 1);
    }
  };
  rec(0);
  return res;
}

std::pair<WalledDiagram, int> compose(const WalledDiagram& d1, const WalledDiagram& d2) {
  if (d1.r() != d2.r() || d1.t() != d2.t()) throw Error(ErrorCode::ShapeMismatch, "compose");
  int m = d1.width();
  std::vector<int> out(2 * m, -1);
  std::vector<bool> mid(m, false);
  // Walk from an outer vertex; side 1 = upper diagram, side 2 = lower diagram.
  auto walk = [&](int v, int side) {
    while (true) {
      if (side == 1) {
        int u = d1.partner(v);
        if (u < m) return u;  // top of the result
        mid[u - m] = true;
        side = 2, v = u - m;
      } else {
        int u = d2.partner(v);
        if (u >= m) return u;  // bottom of the result
        mid[u] = true;
        side = 1, v = m + u;
      }
    }
  };
  for (int p = 0; p < m; ++p) {
    if (out[p] == -1) {
      int e = walk(p, 1);
      out[p] = e, out[e] = p;
    }
    if (out[m + p] == -1) {
      int e = walk(m + p, 2);
      out[m + p] = e, out[e] = m + p;
    }
  }
  int circles = 0;
  for (int p = 0; p < m; ++p) {
    if (mid[p]) continue;
    ++circles;
    int cur = p;
    do {
      mid[cur] = true;
      int q = d2.partner(cur);          // top of lower diagram
      mid[q] = true;
      cur = d1.partner(m + q) - m;      // back through the upper diagram
    } while (cur != p);
  }
  return {WalledDiagram::from_partner(d1.r(), d1.t(), std::move(out)), circles};
}

WalledDiagram bar_flip(const Permutation& w, int r, int t) {
  int m = r + t;
  if (static_cast<int>(w.degree()) != m) throw Error(ErrorCode::ShapeMismatch, "bar_flip degree");
  auto place_top = [&](int a) { return a >= r ? m + a : a; };
  auto place_bottom = [&](int b) { return b >= r ? b : m + b; };
  std::vector<int> partner(2 * m);
  for (int a = 0; a < m; ++a) {
    int x = place_top(a), y = place_bottom(w(a));
    partner[x] = y, partner[y] = x;
  }
  return WalledDiagram::from_partner(r, t, std::move(partner));
}

Permutation bar_flip_inverse(const WalledDiagram& d) {
  int m = d.width(), r = d.r();
  // Undo the flip: barred vertices swap rows; then every edge joins top to bottom.
  auto unflip = [&](int v) {
    int pos = v % m;
    if (pos < r) return v;
    return v < m ? m + pos : pos;
  };
  std::vector<int> img(m);
  for (int v = 0; v < 2 * m; ++v) {
    int a = unflip(v), b = unflip(d.partner(v));
    if (a < m) img[a] = b - m;
  }
  return Permutation(std::move(img));
}

std::vector<WalledDiagram> all_walled_diagrams(int r, int t) {
  std::vector<WalledDiagram> out;
  for (const auto& w : all_permutations(r + t)) out.push_back(bar_flip(w, r, t));
  return out;
}

namespace {
void append_perm(std::vector<Generator>& word, const Permutation& p, Generator::Kind kind) {
  for (int g : p.reduced_word()) word.push_back({kind, g});
}
}  // namespace

std::vector<Generator> factorize(const WalledDiagram& d) {
  int r = d.r(), t = d.t(), m = r + t;
  // Arcs listed by unbarred strand; the h-th arc is moved to strands (h, hbar).
  std::vector<std::pair<int, int>> top_arcs, bot_arcs;
  std::vector<int> top_through_l, top_through_r;
  for (int i = 1; i <= r; ++i) {
    int u = d.partner(d.position(false, i));
    if (u < m) top_arcs.emplace_back(i, d.strand_at(u));
  }
  for (int i = 1; i <= r; ++i) {
    int u = d.partner(m + d.position(false, i));
    if (u >= m) bot_arcs.emplace_back(i, d.strand_at(u - m));
  }
  int f = static_cast<int>(top_arcs.size());
  std::vector<int> uL(r, -1), uR(t, -1), vL(r, -1), vR(t, -1);
  for (int h = 0; h < f; ++h) {
    uL[top_arcs[h].first - 1] = h, uR[top_arcs[h].second - 1] = h;
    vL[h] = bot_arcs[h].first - 1, vR[h] = bot_arcs[h].second - 1;
  }
  int nextL = f, nextR = f;
  for (int i = 1; i <= r; ++i) {
    int u = d.partner(d.position(false, i));
    if (u >= m) {
      uL[i - 1] = nextL;
      vL[nextL++] = d.strand_at(u - m) - 1;
    }
  }
  for (int j = 1; j <= t; ++j) {
    int u = d.partner(d.position(true, j));
    if (u >= m) {
      uR[j - 1] = nextR;
      vR[nextR++] = d.strand_at(u - m) - 1;
    }
  }
  std::vector<Generator> word;
  append_perm(word, Permutation(uL), Generator::S);
  append_perm(word, Permutation(uR), Generator::SBar);
  for (int h = 1; h <= f; ++h) {
    for (int g : s_range(h, 1)) word.push_back({Generator::S, g});
    for (int g : s_range(h, 1)) word.push_back({Generator::SBar, g});
    word.push_back({Generator::E, 1});
    for (int g : s_range(1, h)) word.push_back({Generator::S, g});
    for (int g : s_range(1, h)) word.push_back({Generator::SBar, g});
  }
  append_perm(word, Permutation(vL), Generator::S);
  append_perm(word, Permutation(vR), Generator::SBar);
  return word;
}

int wt(const LabeledDiagram& x) {
  int m = x.diagram.width();
  auto label = [&](int v) { return v < m ? x.top_labels[v] : x.bottom_labels[v - m]; };
  for (auto [a, b] : x.diagram.edges())
    if (label(a) != label(b)) return 0;
  return 1;
}

}  // namespace cwb
