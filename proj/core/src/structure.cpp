#include "cwb/structure.hpp"

#include <algorithm>
#include <numeric>

#include "cwb/error.hpp"
#include "cwb/glrep.hpp"

namespace cwb {

namespace {

void axpy_dense(Coords& acc, const SparseVec& row, const Scalar& c) {
  for (const auto& [j, v] : row) acc[j] += c * v;
}

Coords times(const Coords& a, const std::vector<SparseVec>& rows) {
  Coords out(a.size());
  for (std::size_t m = 0; m < a.size(); ++m)
    if (a[m] != 0) axpy_dense(out, rows[m], a[m]);
  return out;
}

bool all_zero(const Coords& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

}  // namespace

std::vector<Letter> StructureAlgebra::generators(int r, int t) {
  std::vector<Letter> g;
  for (int i = 1; i < r; ++i) g.push_back(s(i));
  for (int j = 1; j < t; ++j) g.push_back(sbar(j));
  if (r >= 1 && t >= 1) g.push_back(e1());
  if (r >= 1) g.push_back(x(1));
  if (t >= 1) g.push_back(xbar(1));
  return g;
}

StructureAlgebra::StructureAlgebra(int k, int r, int t, std::map<Letter, std::vector<SparseVec>> right)
    : k_(k), r_(r), t_(t), basis_(regular_monomials(k, r, t)), right_(std::move(right)) {
  for (const auto& g : generators(r, t)) {
    auto it = right_.find(g);
    if (it == right_.end() || it->second.size() != basis_.size())
      throw Error(ErrorCode::ShapeMismatch, "structure constants missing for " + g.name());
  }
  for (const auto& m : basis_) monomials_.push_back(monomial_element(m));
  for (std::size_t m = 0; m < basis_.size(); ++m)
    if (basis_[m].degree() == 0 && basis_[m].D == WalledDiagram::identity(r, t)) unit_index_ = m;
}

Coords StructureAlgebra::unit() const {
  Coords u(dim());
  u[unit_index_] = 1;
  return u;
}

Coords StructureAlgebra::act_letter(const Letter& l, const Coords& a) const {
  if ((l.kind == Letter::X || l.kind == Letter::XBar) && l.index > 1) {
    Letter sw = l.kind == Letter::X ? s(l.index - 1) : sbar(l.index - 1);
    Letter lower{l.kind, static_cast<std::uint8_t>(l.index - 1)};
    Coords as = act_letter(sw, a);
    Coords out = act_letter(sw, act_letter(lower, as));
    for (std::size_t m = 0; m < out.size(); ++m) out[m] -= as[m];
    return out;
  }
  auto it = right_.find(l);
  if (it == right_.end()) throw Error(ErrorCode::IndexOutOfRange, "no generator " + l.name());
  return times(a, it->second);
}

Coords StructureAlgebra::act_word(const Word& w, Coords a) const {
  for (const auto& l : w) a = act_letter(l, a);
  return a;
}

Coords StructureAlgebra::act(const AlgebraElement& w, const Coords& a) const {
  Coords out(dim());
  // terms are sorted by word, so consecutive words share prefixes
  std::vector<Coords> stack{a};
  const Word* prev = nullptr;
  for (const auto& [word, c] : w.terms()) {
    std::size_t p = 0;
    if (prev)
      while (p < prev->size() && p < word.size() && (*prev)[p] == word[p]) ++p;
    stack.resize(p + 1);
    for (std::size_t i = p; i < word.size(); ++i) stack.push_back(act_letter(word[i], stack.back()));
    const Coords& v = stack.back();
    for (std::size_t m = 0; m < v.size(); ++m)
      if (v[m] != 0) out[m] += c * v[m];
    prev = &word;
  }
  return out;
}

Coords StructureAlgebra::multiply(const Coords& a, const Coords& b) const {
  Coords out(dim());
  for (std::size_t m = 0; m < b.size(); ++m) {
    if (b[m] == 0) continue;
    Coords v = act(monomials_[m], a);
    for (std::size_t j = 0; j < v.size(); ++j) out[j] += b[m] * v[j];
  }
  return out;
}

std::vector<Scalar> StructureAlgebra::regular_traces() const {
  std::size_t N = dim();
  std::vector<Scalar> tr(N);
  for (std::size_t i = 0; i < N; ++i) {
    Coords e(N);
    e[i] = 1;
    for (std::size_t m = 0; m < N; ++m) tr[m] += act(monomials_[m], e)[i];
  }
  return tr;
}

std::vector<Coords> StructureAlgebra::sigma_matrix() const {
  std::vector<Coords> out;
  for (const auto& m : monomials_) out.push_back(coordinates(sigma(m)));
  return out;
}

bool StructureOracle::annihilates(const AlgebraElement& a) const {
  for (std::size_t i = 0; i < a_->dim(); ++i) {
    Coords e(a_->dim());
    e[i] = 1;
    if (!all_zero(a_->act(a, e))) return false;
  }
  return true;
}

ModelOracle::ModelOracle(const GroundConfig& cfg, int r, int t)
    : model_(ModelKind::Shifted, cfg, r, t), basis_(regular_monomials(cfg.k, r, t)), echelon_(basis_.size()) {
  std::size_t N = basis_.size();
  const auto& tab = model_.tableau();
  auto seeds = all_seeds(model_.n(), r + t);
  // Distinct unbarred labels in late columns first (x_1 moves a label one column
  // left), then distinct barred labels in early columns (xbar_1 moves right).
  auto part_score = [&](const std::vector<int>& sd, int from, int to, int sign) {
    std::vector<int> u(sd.begin() + from, sd.begin() + to);
    int cols = 0;
    for (int l : u) cols += sign * tab.col(l);
    std::sort(u.begin(), u.end());
    int distinct = static_cast<int>(std::unique(u.begin(), u.end()) - u.begin());
    return std::make_pair(distinct, cols);
  };
  auto score = [&](const std::vector<int>& sd) {
    return std::make_pair(part_score(sd, 0, r, 1), part_score(sd, r, r + t, -1));
  };
  std::stable_sort(seeds.begin(), seeds.end(), [&](const auto& a, const auto& b) { return score(a) > score(b); });

  for (const auto& sd : seeds) {
    if (echelon_.full()) break;
    ++tried_;
    ModelVector v0 = basis_vector(sd);
    std::map<std::vector<int>, ModelVector> after_x;
    std::vector<ModelVector> imgs;
    imgs.reserve(N);
    for (const auto& m : basis_) {
      auto ix = after_x.find(m.alpha);
      if (ix == after_x.end()) {
        ModelVector v = v0;
        for (int i = 0; i < r; ++i)
          for (int e = 0; e < m.alpha[i]; ++e) v = model_.act_letter(x(i + 1), v);
        ix = after_x.emplace(m.alpha, std::move(v)).first;
      }
      ModelVector v = model_.act_diagram(m.D, ix->second);
      for (int j = 0; j < t; ++j)
        for (int e = 0; e < m.beta[j]; ++e) v = model_.act_letter(xbar(j + 1), v);
      imgs.push_back(std::move(v));
    }
    std::map<TensorIndex, SparseVec> rows;
    for (std::size_t m = 0; m < N; ++m)
      for (const auto& [key, c] : imgs[m]) rows[key].emplace_back(m, c);
    bool used = false;
    for (auto& [key, row] : rows) {
      if (echelon_.full()) break;
      if (echelon_.insert(row)) {
        row_keys_.emplace_back(seeds_.size(), key);
        used = true;
      }
    }
    if (used) {
      seeds_.push_back(sd);
      images_.push_back(std::move(imgs));
    }
  }
}

Coords ModelOracle::solve(const std::vector<ModelVector>& imgs) const {
  if (!echelon_.full())
    throw Error(ErrorCode::FaithfulnessViolation, "model is not faithful on the regular monomials");
  std::vector<Scalar> y;
  y.reserve(row_keys_.size());
  for (const auto& [si, key] : row_keys_) {
    auto it = imgs[si].find(key);
    y.push_back(it == imgs[si].end() ? Scalar(0) : it->second);
  }
  Coords c = echelon_.solve(y);
  for (std::size_t si = 0; si < seeds_.size(); ++si) {
    ModelVector rest = imgs[si];
    for (std::size_t m = 0; m < c.size(); ++m)
      if (c[m] != 0) add_scaled(rest, images_[si][m], -c[m]);
    if (!rest.empty()) throw Error(ErrorCode::NotInFamilySpan, "element image is not in the span of the basis");
  }
  return c;
}

std::vector<Scalar> ModelOracle::coordinates(const AlgebraElement& a) const {
  std::vector<ModelVector> imgs;
  for (const auto& sd : seeds_) imgs.push_back(model_.act(a, basis_vector(sd)));
  return solve(imgs);
}

bool ModelOracle::annihilates(const AlgebraElement& a) const {
  for (std::size_t i = 0; i < model_.dim(); ++i)
    if (!model_.act(a, basis_vector(model_.index_at(i))).empty()) return false;
  return true;
}

std::vector<SparseVec> ModelOracle::right_matrix(const Letter& g) const {
  std::vector<SparseVec> out;
  for (std::size_t m = 0; m < basis_.size(); ++m) {
    std::vector<ModelVector> imgs;
    for (std::size_t si = 0; si < seeds_.size(); ++si) imgs.push_back(model_.act_letter(g, images_[si][m]));
    Coords c = solve(imgs);
    SparseVec row;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) row.emplace_back(j, c[j]);
    out.push_back(std::move(row));
  }
  return out;
}

StructureAlgebra structure_from_oracle(const RepresentationOracle& o) {
  if (auto* mo = dynamic_cast<const ModelOracle*>(&o)) {
    std::map<Letter, std::vector<SparseVec>> right;
    for (const auto& g : StructureAlgebra::generators(o.r(), o.t())) right[g] = mo->right_matrix(g);
    return StructureAlgebra(o.level(), o.r(), o.t(), std::move(right));
  }
  std::map<Letter, std::vector<SparseVec>> right;
  const auto& basis = o.basis();
  for (const auto& g : StructureAlgebra::generators(o.r(), o.t())) {
    auto& rows = right[g];
    for (const auto& m : basis) {
      Coords c = o.coordinates(monomial_element(m) * AlgebraElement::letter(g));
      SparseVec row;
      for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) row.emplace_back(j, c[j]);
      rows.push_back(std::move(row));
    }
  }
  return StructureAlgebra(o.level(), o.r(), o.t(), std::move(right));
}

namespace {

GroundConfig shifted(const GroundConfig& cfg, int s) {
  GroundConfig c = cfg;
  for (auto& q : c.q) q += s;
  return c;
}

// Does the s = 0 model factor through the algebra? Every basis vector image
// of b_m g must equal sum_j R_g[m][j] (image of b_j).
bool factors_through(const TensorModel& model, const StructureAlgebra& a) {
  const auto& basis = a.basis();
  std::vector<AlgebraElement> monos;
  for (const auto& m : basis) monos.push_back(monomial_element(m));
  for (std::size_t i = 0; i < model.dim(); ++i) {
    ModelVector v0 = basis_vector(model.index_at(i));
    std::vector<ModelVector> imgs;
    for (const auto& m : monos) imgs.push_back(model.act(m, v0));
    for (const auto& [g, rows] : a.right())
      for (std::size_t m = 0; m < basis.size(); ++m) {
        ModelVector lhs = model.act_letter(g, imgs[m]);
        for (const auto& [j, c] : rows[m]) add_scaled(lhs, imgs[j], -c);
        if (!lhs.empty()) return false;
      }
  }
  return true;
}

}  // namespace

StructureAlgebra extrapolated_structure(const GroundConfig& cfg, int r, int t, ExtrapolationReport* report,
                                        int confirmations, int max_samples) {
  cfg.validate();
  int minq = *std::min_element(cfg.q.begin(), cfg.q.end());
  int s0 = std::max(1, r + t - minq);
  auto gens = StructureAlgebra::generators(r, t);
  std::size_t N = regular_monomials(cfg.k, r, t).size();

  // constants keyed by (generator, row, column); Newton divided differences per key
  using Key = std::tuple<Letter, std::size_t, std::size_t>;
  std::vector<Scalar> xs;
  std::map<Key, std::vector<Scalar>> values;  // sample values, zero-padded
  std::map<Key, std::vector<Scalar>> newton;  // divided-difference coefficients
  int degree = -1, confirmed = 0;
  for (int m = 0; m < max_samples; ++m) {
    int s_val = s0 + m;
    ModelOracle o(shifted(cfg, s_val), r, t);
    if (!o.faithful()) throw Error(ErrorCode::FaithfulnessViolation, "shifted model is not faithful");
    std::map<Key, Scalar> sample;
    for (const auto& g : gens) {
      auto rows = o.right_matrix(g);
      for (std::size_t i = 0; i < N; ++i)
        for (const auto& [j, c] : rows[i]) sample[{g, i, j}] = c;
    }
    xs.push_back(s_val);
    for (auto& [key, vals] : values) vals.push_back(0);
    for (const auto& [key, c] : sample) {
      auto& vals = values[key];
      if (vals.empty()) vals.assign(xs.size(), 0);
      vals.back() = c;
    }
    // highest nonzero divided difference over all constants
    int deg = -1;
    for (const auto& [key, vals] : values) {
      std::vector<Scalar> dd = vals;
      for (std::size_t lvl = 1; lvl < dd.size(); ++lvl)
        for (std::size_t i = dd.size() - 1; i >= lvl; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
      for (int i = static_cast<int>(dd.size()) - 1; i >= 0; --i)
        if (dd[i] != 0) {
          deg = std::max(deg, i);
          break;
        }
      newton[key] = std::move(dd);
    }
    degree = deg;
    confirmed = static_cast<int>(xs.size()) - 1 - degree;
    if (confirmed >= confirmations) break;
  }
  if (confirmed < confirmations)
    throw Error(ErrorCode::BoundExceeded, "structure constants did not stabilise as polynomials in the shift");

  std::map<Letter, std::vector<SparseVec>> right;
  for (const auto& g : gens) right[g].resize(N);
  for (const auto& [key, dd] : newton) {
    // Horner evaluation of the Newton form at s = 0
    Scalar v = 0;
    for (int i = static_cast<int>(dd.size()) - 1; i >= 0; --i) v = v * (Scalar(0) - xs[i]) + dd[i];
    if (v != 0) right[std::get<0>(key)][std::get<1>(key)].emplace_back(std::get<2>(key), v);
  }
  StructureAlgebra a(cfg.k, r, t, std::move(right));

  if (report) {
    report->shifts.clear();
    for (std::size_t i = 0; i < xs.size(); ++i) report->shifts.push_back(s0 + static_cast<int>(i));
    report->degree = degree;
    report->confirmations = confirmed;
    auto p = derive_parameters(cfg, 2 * cfg.k + 2);
    p.omegabar = omegabar_series(cfg, 2 * cfg.k + 2);
    bool ok = true;
    auto rels = relation_suite(r, t, p);
    auto cyc = cyclotomic_relations(cfg.k, r, t, p);
    rels.insert(rels.end(), cyc.begin(), cyc.end());
    for (std::size_t i = 0; i < N && ok; ++i) {
      Coords e(N);
      e[i] = 1;
      for (const auto& rel : rels)
        if (!all_zero(a.act(rel.element, e))) {
          ok = false;
          break;
        }
    }
    report->relations_hold = ok;
    report->module_consistent = factors_through(TensorModel(ModelKind::Shifted, cfg, r, t), a);
  }
  return a;
}

std::shared_ptr<const StructureAlgebra> structure_algebra(const GroundConfig& cfg, int r, int t,
                                                          ExtrapolationReport* report) {
  cfg.validate();
  int minq = *std::min_element(cfg.q.begin(), cfg.q.end());
  if (r + t <= minq) {
    ModelOracle o(cfg, r, t);
    if (o.faithful()) return std::make_shared<const StructureAlgebra>(structure_from_oracle(o));
    VermaOracle v(cfg, r, t);
    return std::make_shared<const StructureAlgebra>(structure_from_oracle(v));
  }
  return std::make_shared<const StructureAlgebra>(extrapolated_structure(cfg, r, t, report));
}

}  // namespace cwb
