#include "cwb/glrep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cwb/error.hpp"

namespace cwb {

PBWEngine::PBWEngine(const GroundConfig& cfg) : cfg_(cfg), n_(cfg.n()) {
  id_.assign(n_ * n_, -1);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (cfg.block_of(i) > cfg.block_of(j)) {
        id_[(i - 1) * n_ + (j - 1)] = static_cast<int>(pairs_.size());
        pairs_.emplace_back(i, j);
      }
  if (pairs_.size() > 255) throw Error(ErrorCode::BoundExceeded, "too many lowering operators");
  for (int a = 1; a <= n_; ++a) hw_.push_back(cfg.c(cfg.block_of(a)));
}

void PBWEngine::add_into(std::map<Mono, Scalar>& acc, const Terms& t, const Scalar& c) {
  for (const auto& [m, x] : t) acc[m] += c * x;
}

const PBWEngine::Terms& PBWEngine::apply(int i, int j, const Mono& m) {
  std::string key;
  key.reserve(m.size() + 2);
  key.push_back(static_cast<char>(i));
  key.push_back(static_cast<char>(j));
  key += m;
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  Terms out;
  int id = pair_id(i, j);
  if (m.empty()) {
    if (id >= 0)
      out.emplace_back(Mono(1, static_cast<char>(id)), Scalar(1));
    else if (i == j && hw_[i - 1] != 0)
      out.emplace_back(Mono(), hw_[i - 1]);
  } else if (id >= 0 && id >= static_cast<unsigned char>(m.back())) {
    out.emplace_back(m + static_cast<char>(id), Scalar(1));
  } else {
    // e_ij X rest = X (e_ij rest) + [e_ij, X] rest, X the leftmost factor
    auto [a, b] = pairs_[static_cast<unsigned char>(m.back())];
    Mono rest = m.substr(0, m.size() - 1);
    std::map<Mono, Scalar> acc;
    Terms inner = apply(i, j, rest);
    for (const auto& [mm, c] : inner) add_into(acc, apply(a, b, mm), c);
    if (j == a) add_into(acc, apply(i, b, rest), Scalar(1));
    if (b == i) add_into(acc, apply(a, j, rest), Scalar(-1));
    for (auto& [mm, c] : acc)
      if (c != 0) out.emplace_back(mm, std::move(c));
  }
  return cache_.emplace(std::move(key), std::move(out)).first->second;
}

std::string PBWEngine::mono_to_string(const Mono& mono) const {
  std::ostringstream os;
  Mono m(mono.rbegin(), mono.rend());
  for (std::size_t s = 0; s < m.size();) {
    std::size_t e = s;
    while (e < m.size() && m[e] == m[s]) ++e;
    auto [i, j] = pairs_[static_cast<unsigned char>(m[s])];
    os << "e_{" << i << "," << j << "}";
    if (e - s > 1) os << "^" << (e - s);
    s = e;
  }
  os << "m";
  return os.str();
}

std::vector<Scalar> PBWEngine::weight(const Mono& m) const {
  std::vector<Scalar> w = hw_;
  for (char ch : m) {
    auto [i, j] = pairs_[static_cast<unsigned char>(ch)];
    w[i - 1] += 1;
    w[j - 1] -= 1;
  }
  return w;
}

std::string encode_key(const PBWEngine::Mono& mono, const std::vector<int>& labels) {
  std::string k;
  k.reserve(1 + mono.size() + labels.size());
  k.push_back(static_cast<char>(mono.size()));
  k += mono;
  for (int l : labels) k.push_back(static_cast<char>(l));
  return k;
}

TensorKey decode_key(const std::string& key) {
  std::size_t deg = static_cast<unsigned char>(key[0]);
  TensorKey out{key.substr(1, deg), {}};
  for (std::size_t p = 1 + deg; p < key.size(); ++p) out.labels.push_back(static_cast<unsigned char>(key[p]));
  return out;
}

namespace {
std::size_t label_offset(const std::string& key) { return 1 + static_cast<unsigned char>(key[0]); }

void accumulate(PBWVector& acc, std::string key, const Scalar& c) {
  auto [it, fresh] = acc.try_emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}
}  // namespace

void add_scaled(PBWVector& acc, const PBWVector& v, const Scalar& c) {
  if (c == 0) return;
  for (const auto& [k, x] : v) accumulate(acc, k, c * x);
}

TensorModule::TensorModule(const GroundConfig& cfg, int r, int t) : r_(r), t_(t), engine_(cfg) {
  if (r < 0 || t < 0 || r + t > 250) throw Error(ErrorCode::IndexOutOfRange, "tensor shape");
}

PBWVector TensorModule::seed(const std::vector<int>& labels) const {
  if (static_cast<int>(labels.size()) != r_ + t_) throw Error(ErrorCode::ShapeMismatch, "seed length");
  for (int l : labels)
    if (l < 1 || l > n()) throw Error(ErrorCode::IndexOutOfRange, "seed label");
  return {{encode_key({}, labels), Scalar(1)}};
}

PBWVector TensorModule::act_gl(int i, int j, int slot, const PBWVector& v) {
  PBWVector out;
  if (slot == 0) {
    for (const auto& [key, c] : v) {
      std::size_t off = label_offset(key);
      const auto& terms = engine_.apply(i, j, key.substr(1, off - 1));
      std::string labels = key.substr(off);
      for (const auto& [m, x] : terms) {
        std::string nk(1, static_cast<char>(m.size()));
        nk += m;
        nk += labels;
        accumulate(out, std::move(nk), c * x);
      }
    }
    return out;
  }
  int pos = slot - 1;
  bool dual = pos >= r_;
  for (const auto& [key, c] : v) {
    std::size_t at = label_offset(key) + pos;
    int lab = static_cast<unsigned char>(key[at]);
    std::string nk = key;
    if (!dual && lab == j) {
      nk[at] = static_cast<char>(i);
      accumulate(out, std::move(nk), c);
    } else if (dual && lab == i) {
      nk[at] = static_cast<char>(j);
      accumulate(out, std::move(nk), -c);
    }
  }
  return out;
}

PBWVector TensorModule::swap_positions(const PBWVector& v, int a, int b) const {
  PBWVector out;
  for (const auto& [key, c] : v) {
    std::string nk = key;
    std::size_t off = label_offset(key);
    std::swap(nk[off + a], nk[off + b]);
    out.emplace(std::move(nk), c);
  }
  return out;
}

// x_i acts by -pi_{0,i}(Omega) minus the transpositions (j i), j < i; same for the barred side.
PBWVector TensorModule::jm(int strand, bool barred, const PBWVector& v) {
  int pos = barred ? r_ + strand - 1 : r_ - strand;
  int n = this->n();
  PBWVector out;
  for (const auto& [key, c] : v) {
    std::size_t off = label_offset(key);
    std::string mono = key.substr(1, off - 1);
    int lab = static_cast<unsigned char>(key[off + pos]);
    for (int b = 1; b <= n; ++b) {
      // unbarred: -(e_{lab,b} u) (x) v_b ; barred: +(e_{b,lab} u) (x) v*_b
      const auto& terms = barred ? engine_.apply(b, lab, mono) : engine_.apply(lab, b, mono);
      if (terms.empty()) continue;
      std::string labels = key.substr(off);
      labels[pos] = static_cast<char>(b);
      for (const auto& [m, x] : terms) {
        std::string nk(1, static_cast<char>(m.size()));
        nk += m;
        nk += labels;
        Scalar v = c * x;
        if (!barred) v = -v;
        accumulate(out, std::move(nk), v);
      }
    }
  }
  for (int j = 1; j < strand; ++j) {
    int other = barred ? r_ + j - 1 : r_ - j;
    add_scaled(out, swap_positions(v, pos, other), Scalar(-1));
  }
  return out;
}

PBWVector TensorModule::act_letter(const Letter& l, const PBWVector& v) {
  switch (l.kind) {
    case Letter::S:
      if (l.index < 1 || l.index >= r_) throw Error(ErrorCode::IndexOutOfRange, "s index");
      return swap_positions(v, r_ - l.index, r_ - l.index - 1);
    case Letter::SBar:
      if (l.index < 1 || l.index >= t_) throw Error(ErrorCode::IndexOutOfRange, "sbar index");
      return swap_positions(v, r_ + l.index - 1, r_ + l.index);
    case Letter::E: {
      if (r_ < 1 || t_ < 1) throw Error(ErrorCode::IndexOutOfRange, "e1 needs r,t >= 1");
      PBWVector out;
      for (const auto& [key, c] : v) {
        std::size_t off = label_offset(key);
        if (key[off + r_ - 1] != key[off + r_]) continue;
        std::string nk = key;
        for (int a = 1; a <= n(); ++a) {
          nk[off + r_ - 1] = nk[off + r_] = static_cast<char>(a);
          accumulate(out, nk, c);
        }
      }
      return out;
    }
    case Letter::X:
      if (l.index < 1 || l.index > r_) throw Error(ErrorCode::IndexOutOfRange, "x index");
      return jm(l.index, false, v);
    case Letter::XBar:
      if (l.index < 1 || l.index > t_) throw Error(ErrorCode::IndexOutOfRange, "xbar index");
      return jm(l.index, true, v);
  }
  return {};
}

PBWVector TensorModule::act_diagram(const WalledDiagram& d, const PBWVector& v) const {
  if (d.r() != r_ || d.t() != t_) throw Error(ErrorCode::ShapeMismatch, "diagram shape");
  PBWVector out;
  for (const auto& [key, c] : v) {
    std::size_t off = label_offset(key);
    std::vector<int> in;
    for (std::size_t p = off; p < key.size(); ++p) in.push_back(static_cast<unsigned char>(key[p]));
    for (const auto& lab : d.act_on_labels(in, n())) {
      std::string nk = key.substr(0, off);
      for (int l : lab) nk.push_back(static_cast<char>(l));
      accumulate(out, std::move(nk), c);
    }
  }
  return out;
}

PBWVector TensorModule::act_word(const Word& w, PBWVector v) {
  for (const auto& l : w) {
    if (v.empty()) break;
    v = act_letter(l, v);
  }
  return v;
}

PBWVector TensorModule::act(const AlgebraElement& a, const PBWVector& v) {
  // Words are visited in sorted order; images of shared prefixes are reused.
  PBWVector out;
  std::vector<PBWVector> stack{v};
  const Word* prev = nullptr;
  for (const auto& [w, c] : a.terms()) {
    std::size_t common = 0;
    if (prev)
      while (common < prev->size() && common < w.size() && (*prev)[common] == w[common]) ++common;
    stack.resize(std::min(stack.size(), common + 1));
    while (stack.size() <= w.size()) {
      const auto& top = stack.back();
      stack.push_back(top.empty() ? PBWVector{} : act_letter(w[stack.size() - 1], top));
    }
    add_scaled(out, stack[w.size()], c);
    prev = &w;
  }
  return out;
}

std::optional<std::vector<Scalar>> TensorModule::weight_of(const PBWVector& v) const {
  std::optional<std::vector<Scalar>> res;
  for (const auto& [key, c] : v) {
    auto tk = decode_key(key);
    auto w = engine_.weight(tk.mono);
    for (int p = 0; p < r_ + t_; ++p) w[tk.labels[p] - 1] += p < r_ ? 1 : -1;
    if (!res)
      res = std::move(w);
    else if (*res != w)
      return std::nullopt;
  }
  if (!res) res = engine_.weight({});
  return res;
}

std::string TensorModule::key_to_string(const std::string& key) const {
  auto tk = decode_key(key);
  std::ostringstream os;
  os << engine_.mono_to_string(tk.mono) << "⊗v(";
  for (int p = 0; p < r_ + t_; ++p) os << (p == r_ ? ";" : (p ? "," : "")) << tk.labels[p];
  if (r_ + t_ == r_) os << ";";
  os << ")";
  return os.str();
}

std::string TensorModule::to_string(const PBWVector& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : v) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << "(" << cwb::to_string(c) << ")";
    os << key_to_string(key);
  }
  return os.str();
}

std::vector<std::vector<int>> all_seeds(int n, int width) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(width, 1);
  while (true) {
    out.push_back(cur);
    int p = width - 1;
    while (p >= 0 && cur[p] == n) cur[p--] = 1;
    if (p < 0) break;
    ++cur[p];
  }
  return out;
}

VermaOracle::VermaOracle(const GroundConfig& cfg, int r, int t, OracleOptions opts)
    : cfg_(cfg), r_(r), t_(t), opts_(opts), echelon_(0) {
  cfg_.validate();
  int minq = *std::min_element(cfg_.q.begin(), cfg_.q.end());
  if (opts_.require_faithful && r + t > minq)
    throw Error(ErrorCode::ConfigTooSmall, "seed embedding needs r+t <= min q");
  module_ = std::make_unique<TensorModule>(cfg_, r, t);
  basis_ = regular_monomials(cfg_.k, r, t);
  std::size_t N = basis_.size();
  monomial_at_.resize(N);
  std::iota(monomial_at_.begin(), monomial_at_.end(), 0);
  std::stable_sort(monomial_at_.begin(), monomial_at_.end(),
                   [&](std::size_t a, std::size_t b) { return basis_[a].degree() > basis_[b].degree(); });
  column_of_.resize(N);
  for (std::size_t c = 0; c < N; ++c) column_of_[monomial_at_[c]] = c;
  echelon_ = SparseEchelon(N);

  // Seeds with many distinct labels from the lower blocks first: those reach
  // the most lowering operators.
  auto seeds = all_seeds(cfg_.n(), r + t);
  auto score = [&](const std::vector<int>& s) {
    std::vector<int> u = s;
    std::sort(u.begin(), u.end());
    int distinct = static_cast<int>(std::unique(u.begin(), u.end()) - u.begin());
    int blocks = 0;
    for (int l : s) blocks += cfg_.block_of(l);
    return std::make_pair(distinct, blocks);
  };
  std::stable_sort(seeds.begin(), seeds.end(),
                   [&](const auto& a, const auto& b) { return score(a) > score(b); });

  ModularKernel screen(N);
  auto seed_rows = [&](const std::vector<int>& s) {
    auto imgs = monomial_images(s);
    std::map<std::string, std::map<std::size_t, Scalar>> rows;
    for (std::size_t m = 0; m < N; ++m)
      for (const auto& [key, c] : imgs[m]) rows[key][column_of_[m]] = c;
    std::map<std::string, SparseVec> sparse;
    for (auto& [key, row] : rows) sparse[key] = SparseVec(row.begin(), row.end());
    return sparse;
  };
  auto record = [&](const std::vector<int>& s, std::map<std::string, SparseVec> rows, bool used) {
    if (!used) return;
    used_seeds_.push_back(s);
    seed_rows_.push_back(opts_.verify ? std::move(rows) : std::map<std::string, SparseVec>{});
  };
  for (const auto& s : seeds) {
    if (echelon_.full()) break;
    auto sparse = seed_rows(s);
    bool used = false;
    for (auto it = sparse.rbegin(); it != sparse.rend() && !echelon_.full(); ++it) {
      if (!screen.absorb(ModularKernel::reduce(it->second))) continue;
      if (!echelon_.insert(it->second)) throw Error(ErrorCode::MatrixMismatch, "modular screen disagrees with exact rank");
      row_keys_.emplace_back(used_seeds_.size(), it->first);
      used = true;
    }
    record(s, std::move(sparse), used);
  }
  // Seeds exhausted below full rank: the exact kernel must act as zero on every
  // seed, otherwise some row was dependent only modulo the screening prime.
  while (!echelon_.full()) {
    kernel_ = echelon_.kernel_basis();
    const std::vector<int>* witness = nullptr;
    for (const auto& s : seeds) {
      auto imgs = monomial_images(s);
      for (const auto& k : kernel_) {
        PBWVector acc;
        for (std::size_t m = 0; m < N; ++m) add_scaled(acc, imgs[m], k[column_of_[m]]);
        if (!acc.empty()) {
          witness = &s;
          break;
        }
      }
      if (witness) break;
    }
    if (!witness) break;
    auto sparse = seed_rows(*witness);
    bool used = false;
    for (auto it = sparse.rbegin(); it != sparse.rend(); ++it)
      if (echelon_.insert(it->second)) {
        row_keys_.emplace_back(used_seeds_.size(), it->first);
        used = true;
      }
    record(*witness, std::move(sparse), used);
  }
  if (echelon_.full()) kernel_.clear();
  // kernel vectors are kept in basis order
  for (auto& k : kernel_) {
    std::vector<Scalar> b(N);
    for (std::size_t m = 0; m < N; ++m) b[m] = k[column_of_[m]];
    k = std::move(b);
  }
}

std::vector<PBWVector> VermaOracle::monomial_images(const std::vector<int>& seed) const {
  auto& mod = *module_;
  PBWVector v0 = mod.seed(seed);
  std::map<std::vector<int>, PBWVector> after_x;
  std::map<std::pair<std::vector<int>, std::string>, PBWVector> after_d;
  std::vector<PBWVector> out;
  out.reserve(basis_.size());
  for (const auto& m : basis_) {
    auto ix = after_x.find(m.alpha);
    if (ix == after_x.end()) {
      PBWVector v = v0;
      for (int i = 0; i < r_; ++i)
        for (int e = 0; e < m.alpha[i]; ++e) v = mod.act_letter(x(i + 1), v);
      ix = after_x.emplace(m.alpha, std::move(v)).first;
    }
    auto dk = std::make_pair(m.alpha, m.D.to_string());
    auto id = after_d.find(dk);
    if (id == after_d.end()) id = after_d.emplace(dk, mod.act_diagram(m.D, ix->second)).first;
    PBWVector v = id->second;
    for (int j = 0; j < t_; ++j)
      for (int e = 0; e < m.beta[j]; ++e) v = mod.act_letter(xbar(j + 1), v);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Scalar> VermaOracle::coordinates(const AlgebraElement& a) const {
  if (!echelon_.full())
    throw Error(ErrorCode::FaithfulnessViolation, "seed embedding is not injective on the regular monomials");
  std::vector<PBWVector> imgs;
  for (const auto& s : used_seeds_) imgs.push_back(module_->act(a, module_->seed(s)));
  std::vector<Scalar> y;
  y.reserve(row_keys_.size());
  for (const auto& [si, key] : row_keys_) {
    auto it = imgs[si].find(key);
    y.push_back(it == imgs[si].end() ? Scalar(0) : it->second);
  }
  auto cols = echelon_.solve(y);
  if (opts_.verify) {
    for (std::size_t si = 0; si < used_seeds_.size(); ++si) {
      PBWVector rest = imgs[si];
      for (const auto& [key, row] : seed_rows_[si]) {
        Scalar acc = 0;
        for (const auto& [c, x] : row) acc += x * cols[c];
        auto it = rest.find(key);
        Scalar have = it == rest.end() ? Scalar(0) : it->second;
        if (have != acc) throw Error(ErrorCode::NotInFamilySpan, "element image is not in the span of the basis");
        if (it != rest.end()) rest.erase(it);
      }
      if (!rest.empty()) throw Error(ErrorCode::NotInFamilySpan, "element image leaves the span of the basis");
    }
  }
  std::vector<Scalar> out(basis_.size());
  for (std::size_t m = 0; m < basis_.size(); ++m) out[m] = cols[column_of_[m]];
  return out;
}

bool VermaOracle::annihilates(const AlgebraElement& a) const {
  for (const auto& s : all_seeds(cfg_.n(), r_ + t_))
    if (!module_->act(a, module_->seed(s)).empty()) return false;
  return true;
}

std::vector<PBWVector> VermaOracle::seed_embedding(const AlgebraElement& a) const {
  std::vector<PBWVector> out;
  for (const auto& s : all_seeds(cfg_.n(), r_ + t_)) out.push_back(module_->act(a, module_->seed(s)));
  return out;
}

Scalar omega_extract(const GroundConfig& cfg, int a, bool barred) {
  TensorModule mod(cfg, 1, 1);
  Word w{e1()};
  for (int i = 0; i < a; ++i) w.push_back(barred ? xbar(1) : x(1));
  w.push_back(e1());
  std::optional<Scalar> lambda;
  for (const auto& s : all_seeds(cfg.n(), 2)) {
    PBWVector base = mod.act_word({e1()}, mod.seed(s));
    PBWVector img = mod.act_word(w, mod.seed(s));
    if (!lambda && !base.empty()) {
      const auto& [key, c] = *base.begin();
      auto it = img.find(key);
      lambda = it == img.end() ? Scalar(0) : Scalar(it->second / c);
    }
    if (lambda) add_scaled(img, base, -*lambda);
    if (!img.empty()) throw Error(ErrorCode::NonScalar, "e_1 x^a e_1 is not a multiple of e_1");
  }
  if (!lambda) throw Error(ErrorCode::NonScalar, "e_1 acts as zero");
  return *lambda;
}

std::vector<Scalar> omega_table(const GroundConfig& cfg, int horizon, bool barred) {
  std::vector<Scalar> out;
  for (int a = 0; a <= horizon; ++a) out.push_back(omega_extract(cfg, a, barred));
  return out;
}

long AffineLabel::value(const std::vector<int>& q) const {
  long v = constant;
  for (std::size_t i = 0; i < coef.size() && i < q.size(); ++i) v += coef[i] * q[i];
  return v;
}

std::string AffineLabel::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < coef.size(); ++i) {
    long c = coef[i];
    if (c == 0) continue;
    if (c < 0)
      os << "-";
    else if (any)
      os << "+";
    if (c != 1 && c != -1) os << (c < 0 ? -c : c) << "*";
    os << "q_" << i + 1;
    any = true;
  }
  if (!any)
    os << constant;
  else if (constant > 0)
    os << "+" << constant;
  else if (constant < 0)
    os << constant;
  return os.str();
}

namespace {
std::string label_sequence(const std::vector<AffineLabel>& l, int r) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) os << (static_cast<int>(i) == r ? "; " : ", ");
    os << l[i].to_string();
  }
  if (static_cast<int>(l.size()) == r) os << ";";
  os << ")";
  return os.str();
}
}  // namespace

std::string LabeledCertificate::bottom_string() const { return label_sequence(bottom, r); }
std::string LabeledCertificate::top_string() const { return label_sequence(top, r); }

std::string LabeledCertificate::lowering_string() const {
  if (lowering.empty()) return "1";
  std::string s;
  for (const auto& [a, b] : lowering) s += "e_{" + a.to_string() + "," + b.to_string() + "}";
  return s;
}

// Sources are the bottom unbarred and top barred vertices. A head carrying h
// beads is labeled source - q_{k-1} - ... - q_{k-h}; the lowering operator of
// that edge walks the same chain of labels.
LabeledCertificate labeled_certificate(const RegularMonomial& mono, int k) {
  const auto& D = mono.D;
  int r = D.r(), t = D.t(), m = D.width();
  LabeledCertificate cert;
  cert.r = r;
  cert.bottom.resize(m);
  cert.top.resize(m);
  AffineLabel base;
  base.coef.assign(k, 0);
  for (int i = 0; i + 1 < k; ++i) base.coef[i] = 1;
  auto beads_at = [&](int v) {
    bool top = D.is_top(v);
    int pos = top ? v : v - m;
    int strand = D.strand_at(pos);
    if (D.barred_at(pos)) return top ? 0 : mono.beta[strand - 1];
    return top ? mono.alpha[strand - 1] : 0;
  };
  auto place = [&](int v, const AffineLabel& l) {
    if (D.is_top(v))
      cert.top[v] = l;
    else
      cert.bottom[v - m] = l;
  };
  std::vector<int> sources;
  for (int pos = 0; pos < r; ++pos) sources.push_back(D.bottom(pos));
  for (int pos = r; pos < m; ++pos) sources.push_back(D.top(pos));
  for (std::size_t s = 0; s < sources.size(); ++s) {
    AffineLabel l = base;
    l.constant = static_cast<long>(s) + 1;
    place(sources[s], l);
    int head = D.partner(sources[s]);
    int h = beads_at(head);
    if (h >= k) throw Error(ErrorCode::IndexOutOfRange, "exponent not below k");
    for (int b = 1; b <= h; ++b) {
      AffineLabel next = l;
      next.coef[k - b - 1] -= 1;
      cert.lowering.emplace_back(l, next);
      l = next;
    }
    place(head, l);
  }
  (void)t;
  return cert;
}

LabeledCertificate labeled_certificate(const RegularMonomial& mono, const GroundConfig& cfg) {
  int minq = *std::min_element(cfg.q.begin(), cfg.q.end());
  if (mono.D.width() > minq) throw Error(ErrorCode::ConfigTooSmall, "labels need r+t <= min q");
  auto cert = labeled_certificate(mono, cfg.k);
  auto numeric = [&](AffineLabel& l) {
    l.constant = l.value(cfg.q);
    l.coef.assign(l.coef.size(), 0);
  };
  for (auto& l : cert.bottom) numeric(l);
  for (auto& l : cert.top) numeric(l);
  for (auto& [a, b] : cert.lowering) {
    numeric(a);
    numeric(b);
  }
  return cert;
}

Scalar certificate_coefficient(const RegularMonomial& mono, const GroundConfig& cfg) {
  auto cert = labeled_certificate(mono, cfg);
  TensorModule mod(cfg, mono.D.r(), mono.D.t());
  std::vector<int> bottom, top;
  for (const auto& l : cert.bottom) bottom.push_back(static_cast<int>(l.constant));
  for (const auto& l : cert.top) top.push_back(static_cast<int>(l.constant));
  PBWEngine::Mono y;
  for (const auto& [a, b] : cert.lowering) {
    int id = mod.engine().pair_id(static_cast<int>(a.constant), static_cast<int>(b.constant));
    if (id < 0) throw Error(ErrorCode::IndexOutOfRange, "lowering operator outside B_q");
    y.push_back(static_cast<char>(id));
  }
  std::sort(y.begin(), y.end(), [](char a, char b) {
    return static_cast<unsigned char>(a) < static_cast<unsigned char>(b);
  });
  PBWVector img = mod.act(sigma(monomial_element(mono)), mod.seed(bottom));
  auto it = img.find(encode_key(y, top));
  return it == img.end() ? Scalar(0) : it->second;
}

}  // namespace cwb
