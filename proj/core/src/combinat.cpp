#include "cwb/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "cwb/error.hpp"

namespace cwb {

int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition c;
  for (int j = 0; !p.empty() && j < p[0]; ++j) {
    int len = 0;
    while (len < static_cast<int>(p.size()) && p[len] > j) ++len;
    c.push_back(len);
  }
  return c;
}

int Multipartition::size() const {
  int s = 0;
  for (const auto& p : comps) s += size_of(p);
  return s;
}

std::vector<int> Multipartition::bracket() const {
  std::vector<int> a{0};
  for (const auto& p : comps) a.push_back(a.back() + size_of(p));
  return a;
}

Multipartition Multipartition::reversed() const {
  Multipartition m{comps};
  std::reverse(m.comps.begin(), m.comps.end());
  return m;
}

Multipartition Multipartition::conjugate() const {
  Multipartition m;
  for (auto it = comps.rbegin(); it != comps.rend(); ++it) m.comps.push_back(cwb::conjugate(*it));
  return m;
}

std::vector<int> Multipartition::concatenated_rows() const {
  std::vector<int> c;
  for (const auto& p : comps) c.insert(c.end(), p.begin(), p.end());
  return c;
}

std::string Multipartition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < comps[i].size(); ++j) os << (j ? "," : "") << comps[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

Multipartition parse_multipartition(const std::string& text) {
  Multipartition m;
  int depth = 0;
  std::string num;
  auto flush = [&] {
    if (!num.empty()) {
      m.comps.back().push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char ch : text) {
    if (ch == '[') {
      if (++depth == 2) m.comps.emplace_back();
      if (depth > 2) throw Error(ErrorCode::ConfigParse, "multipartition nested too deeply");
    } else if (ch == ']') {
      flush();
      --depth;
    } else if (ch == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (depth != 2) throw Error(ErrorCode::ConfigParse, "stray digit in multipartition");
      num += ch;
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::ConfigParse, "unexpected character in multipartition");
    }
  }
  if (depth != 0) throw Error(ErrorCode::ConfigParse, "unbalanced brackets");
  for (const auto& p : m.comps)
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] <= 0 || (i && p[i] > p[i - 1])) throw Error(ErrorCode::ConfigParse, "not a partition");
  return m;
}

bool dominates(const Multipartition& a, const Multipartition& b) {
  int base_a = 0, base_b = 0;
  for (int i = 0; i < std::max(a.level(), b.level()); ++i) {
    const Partition empty;
    const Partition& pa = i < a.level() ? a.comps[i] : empty;
    const Partition& pb = i < b.level() ? b.comps[i] : empty;
    int sa = base_a, sb = base_b;
    if (sa < sb) return false;
    for (std::size_t j = 0; j < std::max(pa.size(), pb.size()); ++j) {
      sa += j < pa.size() ? pa[j] : 0;
      sb += j < pb.size() ? pb[j] : 0;
      if (sa < sb) return false;
    }
    base_a = sa, base_b = sb;
  }
  return true;
}

namespace {

void partitions_rec(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

void compositions_rec(int k, int r, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k - 1) {
    cur.push_back(r);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int s = r; s >= 0; --s) {
    cur.push_back(s);
    compositions_rec(k, r - s, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Multipartition> enumerate_multipartitions(int k, int r) {
  std::vector<Multipartition> out;
  if (k < 1 || r < 0) return out;
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions_rec(k, r, cur, comps);
  for (const auto& sizes : comps) {
    std::vector<std::vector<Partition>> choices;
    for (int s : sizes) choices.push_back(partitions(s));
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      Multipartition m;
      for (int i = 0; i < k; ++i) m.comps.push_back(choices[i][idx[i]]);
      out.push_back(std::move(m));
      int pos = k - 1;
      while (pos >= 0 && ++idx[pos] == choices[pos].size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return out;
}

Permutation::Permutation(std::size_t m) : img_(m) { std::iota(img_.begin(), img_.end(), 0); }

Permutation::Permutation(std::vector<int> img) : img_(std::move(img)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
      throw Error(ErrorCode::ShapeMismatch, "not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::transposition(std::size_t m, int a, int b) {
  Permutation p(m);
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

Permutation Permutation::from_word(std::size_t m, const std::vector<int>& word) {
  Permutation p(m);
  for (int g : word) {
    if (g < 1 || g >= static_cast<int>(m)) throw Error(ErrorCode::IndexOutOfRange, "generator index");
    p = p * transposition(m, g - 1, g);
  }
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

std::size_t Permutation::length() const {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

int Permutation::sign() const { return length() % 2 ? -1 : 1; }

std::vector<int> Permutation::reduced_word() const {
  // Left-multiplying by s_j swaps positions j-1, j of the one-line form, so
  // peeling off descents from the left yields w = s_{a_1} s_{a_2} ... .
  std::vector<int> img = img_, word;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t j = 0; j + 1 < img.size(); ++j)
      if (img[j] > img[j + 1]) {
        word.push_back(static_cast<int>(j) + 1);
        std::swap(img[j], img[j + 1]);
        again = true;
        break;
      }
  }
  return word;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) throw Error(ErrorCode::ShapeMismatch, "permutation degrees differ");
  std::vector<int> img(u.degree());
  for (std::size_t i = 0; i < u.degree(); ++i) img[i] = v(u(static_cast<int>(i)));
  return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> young_subgroup(const std::vector<int>& c) {
  int m = std::accumulate(c.begin(), c.end(), 0);
  std::vector<Permutation> out{Permutation(m)};
  int start = 0;
  for (int len : c) {
    std::vector<Permutation> next;
    std::vector<int> block(len);
    std::iota(block.begin(), block.end(), start);
    for (const auto& p : out) {
      std::vector<int> perm = block;
      do {
        std::vector<int> img = p.images();
        for (int i = 0; i < len; ++i) img[start + i] = perm[i];
        next.emplace_back(img);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out = std::move(next);
    start += len;
  }
  return out;
}

bool StdTableau::is_standard() const {
  std::vector<bool> seen(size() + 1, false);
  for (std::size_t c = 0; c < rows.size(); ++c)
    for (std::size_t i = 0; i < rows[c].size(); ++i)
      for (std::size_t j = 0; j < rows[c][i].size(); ++j) {
        int e = rows[c][i][j];
        if (e < 1 || e > size() || seen[e]) return false;
        seen[e] = true;
        if (j && rows[c][i][j - 1] >= e) return false;
        if (i && rows[c][i - 1][j] >= e) return false;
      }
  return true;
}

StdTableau StdTableau::act(const Permutation& w) const {
  StdTableau t = *this;
  for (auto& comp : t.rows)
    for (auto& row : comp)
      for (auto& e : row) e = w(e - 1) + 1;
  return t;
}

std::string StdTableau::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t c = 0; c < rows.size(); ++c) {
    if (c) os << ',';
    if (rows[c].empty()) os << "-";
    for (std::size_t i = 0; i < rows[c].size(); ++i) {
      if (i) os << '/';
      for (std::size_t j = 0; j < rows[c][i].size(); ++j) os << (j ? " " : "") << rows[c][i][j];
    }
  }
  os << ')';
  return os.str();
}

namespace {
StdTableau empty_tableau(const Multipartition& l) {
  StdTableau t{l, {}};
  for (const auto& p : l.comps) {
    std::vector<std::vector<int>> comp;
    for (int len : p) comp.emplace_back(len, 0);
    t.rows.push_back(std::move(comp));
  }
  return t;
}
}  // namespace

StdTableau initial_tableau(const Multipartition& l) {
  StdTableau t = empty_tableau(l);
  int e = 1;
  for (auto& comp : t.rows)
    for (auto& row : comp)
      for (auto& x : row) x = e++;
  return t;
}

StdTableau final_tableau(const Multipartition& l) {
  StdTableau t = empty_tableau(l);
  int e = 1;
  for (int c = l.level() - 1; c >= 0; --c) {
    const Partition& p = l.comps[c];
    for (int col = 0; !p.empty() && col < p[0]; ++col)
      for (std::size_t row = 0; row < p.size() && p[row] > col; ++row) t.rows[c][row][col] = e++;
  }
  return t;
}

std::vector<StdTableau> standard_tableaux(const Multipartition& l) {
  std::vector<StdTableau> out;
  StdTableau t = empty_tableau(l);
  std::vector<std::vector<int>> filled;  // per component per row: count placed
  for (const auto& p : l.comps) filled.emplace_back(p.size(), 0);
  int r = l.size();
  std::function<void(int)> rec = [&](int e) {
    if (e > r) {
      out.push_back(t);
      return;
    }
    for (std::size_t c = 0; c < l.comps.size(); ++c)
      for (std::size_t row = 0; row < l.comps[c].size(); ++row) {
        int col = filled[c][row];
        if (col >= l.comps[c][row]) continue;
        if (row > 0 && filled[c][row - 1] <= col) continue;
        t.rows[c][row][col] = e;
        ++filled[c][row];
        rec(e + 1);
        --filled[c][row];
      }
  };
  rec(1);
  return out;
}

Permutation d_of(const StdTableau& s) {
  StdTableau t0 = initial_tableau(s.shape);
  std::vector<int> img(s.size());
  for (std::size_t c = 0; c < s.rows.size(); ++c)
    for (std::size_t i = 0; i < s.rows[c].size(); ++i)
      for (std::size_t j = 0; j < s.rows[c][i].size(); ++j) img[t0.rows[c][i][j] - 1] = s.rows[c][i][j] - 1;
  return Permutation(std::move(img));
}

Permutation w_lambda(const Multipartition& l) { return d_of(final_tableau(l)); }

Permutation w_bracket(const Multipartition& l) {
  auto a = l.bracket();
  int r = a.back();
  std::vector<int> img(r);
  for (int i = 1; i <= l.level(); ++i)
    for (int x = 1; x <= a[i] - a[i - 1]; ++x) img[a[i - 1] + x - 1] = r - a[i] + x - 1;
  return Permutation(std::move(img));
}

namespace {
Permutation component_w(const Multipartition& l, int i, int offset) {
  Multipartition single{{l.comps[i - 1]}};
  Permutation w = w_lambda(single);
  std::vector<int> img(l.size());
  std::iota(img.begin(), img.end(), 0);
  for (std::size_t x = 0; x < w.degree(); ++x) img[offset + x] = offset + w(static_cast<int>(x));
  return Permutation(std::move(img));
}
}  // namespace

Permutation w_component(const Multipartition& l, int i) { return component_w(l, i, l.bracket()[i - 1]); }

Permutation w_component_shifted(const Multipartition& l, int i) {
  auto a = l.bracket();
  return component_w(l, i, a.back() - a[i]);
}

std::vector<int> s_range(int i, int j) {
  std::vector<int> w;
  if (i > j)
    for (int g = i - 1; g >= j; --g) w.push_back(g);
  else
    for (int g = i; g < j; ++g) w.push_back(g);
  return w;
}

std::pair<Permutation, Permutation> coset_permutations(const CosetRep& c, int r, int t) {
  int f = static_cast<int>(c.i.size());
  Permutation L(r), R(t);
  for (int m = 0; m < f; ++m) {
    L = L * Permutation::from_word(r, s_range(r - f + 1 + m, c.i[m]));
    R = R * Permutation::from_word(t, s_range(t - f + 1 + m, c.j[m]));
  }
  return {L, R};
}

std::vector<std::pair<int, int>> coset_arcs(const CosetRep& c, int r, int t) {
  auto [L, R] = coset_permutations(c, r, t);
  int f = static_cast<int>(c.i.size());
  std::vector<std::pair<int, int>> arcs;
  for (int m = 0; m < f; ++m) arcs.emplace_back(L(r - f + m) + 1, R(t - f + m) + 1);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long binomial(int n, int m) {
  if (m < 0 || m > n) return 0;
  long long b = 1;
  for (int i = 1; i <= m; ++i) b = b * (n - m + i) / i;
  return b;
}

std::vector<CosetRep> coset_reps(int f, int r, int t) {
  if (f < 0 || f > std::min(r, t)) throw Error(ErrorCode::ShapeMismatch, "f out of range");
  std::vector<CosetRep> out;
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<int> ivec(f), jvec(f);
  std::function<void(int, int)> pick_j;
  std::function<void(int, int)> pick_i = [&](int m, int lo) {
    if (m == f) {
      pick_j(0, 0);
      return;
    }
    for (int v = lo; v <= r - (f - m) + 1; ++v) {
      ivec[m] = v;
      pick_i(m + 1, v + 1);
    }
  };
  pick_j = [&](int m, int) {
    if (m == f) {
      CosetRep c{ivec, jvec};
      if (seen.insert(coset_arcs(c, r, t)).second) out.push_back(c);
      return;
    }
    for (int v = m + 1; v <= t; ++v) {  // j_h >= h + f - t with h = t - f + 1 + m
      jvec[m] = v;
      pick_j(m + 1, 0);
    }
  };
  pick_i(0, 1);
  long long expect = binomial(r, f) * binomial(t, f) * factorial(f);
  if (static_cast<long long>(out.size()) != expect)
    throw Error(ErrorCode::ShapeMismatch, "coset representative count mismatch");
  return out;
}

std::string Cell::label() const {
  return "(" + std::to_string(f) + "," + mu.to_string() + "," + nu.to_string() + ")";
}

std::vector<Cell> enumerate_cells(int k, int r, int t) {
  std::vector<Cell> out;
  for (int f = std::min(r, t); f >= 0; --f)
    for (const auto& mu : enumerate_multipartitions(k, r - f))
      for (const auto& nu : enumerate_multipartitions(k, t - f)) out.push_back({f, mu, nu});
  return out;
}

std::vector<CellIndex> enumerate_cell_indices(int f, const Multipartition& mu, const Multipartition& nu,
                                              int k, int r, int t) {
  if (f < 0 || f > std::min(r, t) || mu.size() != r - f || nu.size() != t - f || mu.level() != k ||
      nu.level() != k)
    throw Error(ErrorCode::ShapeMismatch, "cell index shape");
  std::vector<CellIndex> out;
  auto reps = coset_reps(f, r, t);
  long long nk = 1;
  for (int i = 0; i < f; ++i) nk *= k;
  for (const auto& a : standard_tableaux(mu))
    for (const auto& b : standard_tableaux(nu))
      for (const auto& d : reps)
        for (long long code = 0; code < nk; ++code) {
          CellIndex ci{f, mu, nu, a, b, d, std::vector<int>(r, 0)};
          long long c = code;
          for (int m = 0; m < f; ++m) {
            ci.kappa[d.i[m] - 1] = static_cast<int>(c % k);
            c /= k;
          }
          out.push_back(std::move(ci));
        }
  return out;
}

}  // namespace cwb
