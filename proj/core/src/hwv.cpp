#include "cwb/hwv.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "cwb/error.hpp"

namespace cwb {

namespace {

int part(const Partition& p, int a) { return a <= static_cast<int>(p.size()) ? p[a - 1] : 0; }

std::vector<Scalar> delta_c(const GroundConfig& cfg) {
  std::vector<Scalar> w;
  for (int a = 1; a <= cfg.n(); ++a) w.push_back(cfg.c(cfg.block_of(a)));
  return w;
}

std::vector<int> label_weight(const std::vector<int>& labels, int r, int n) {
  std::vector<int> w(n, 0);
  for (std::size_t p = 0; p < labels.size(); ++p) w[labels[p] - 1] += static_cast<int>(p) < r ? 1 : -1;
  return w;
}

// Dense coordinates of vs over a shared key index.
struct Dense {
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<Scalar>> rows;
};

Dense densify(const std::vector<const PBWVector*>& vs) {
  Dense d;
  for (const auto* v : vs)
    for (const auto& [key, c] : *v) d.index.emplace(key, 0);
  std::size_t i = 0;
  for (auto& [key, pos] : d.index) pos = i++;
  for (const auto* v : vs) {
    std::vector<Scalar> row(d.index.size());
    for (const auto& [key, c] : *v) row[d.index.at(key)] = c;
    d.rows.push_back(std::move(row));
  }
  return d;
}

bool is_zero(const PBWVector& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

std::vector<Scalar> hwv_weight(const Cell& cell, const GroundConfig& cfg) {
  std::vector<Scalar> w = delta_c(cfg);
  for (int i = 1; i <= cfg.k; ++i) {
    const Partition& mu = cell.mu.comps[i - 1];
    const Partition& nu = cell.nu.comps[i - 1];
    int q = cfg.q[i - 1];
    for (int a = 1; a <= q; ++a) w[cfg.p(i - 1) + a - 1] += part(mu, a) - part(nu, q - a + 1);
  }
  return w;
}

std::vector<int> hwv_labels(const Cell& cell, const GroundConfig& cfg, int r, int t) {
  std::vector<int> labels(cell.f, 1);
  for (int j = cfg.k; j >= 1; --j)
    for (int a = cfg.q[j - 1]; a >= 1; --a) labels.insert(labels.end(), part(cell.mu.comps[j - 1], a), cfg.p(j - 1) + a);
  for (int j = cfg.k; j >= 1; --j)
    for (int a = 1; a <= cfg.q[j - 1]; ++a) labels.insert(labels.end(), part(cell.nu.comps[j - 1], a), cfg.p(j) - a + 1);
  labels.insert(labels.end(), cell.f, 1);
  if (static_cast<int>(labels.size()) != r + t)
    throw Error(ErrorCode::ShapeMismatch, "cell " + cell.label() + " does not fit r, t");
  return labels;
}

Cell matching_cell(const Cell& cell) { return {cell.f, cell.mu.conjugate(), cell.nu.reversed().conjugate()}; }

std::vector<CellIndex> hwv_indices(const Cell& cell, int k, int r, int t) {
  Cell m = matching_cell(cell);
  return enumerate_cell_indices(m.f, m.mu, m.nu, k, r, t);
}

AlgebraElement hwv_word(const Cell& cell, const CellIndex& idx, const AlgebraParameters& p, int r, int t) {
  Multipartition nuo = cell.nu.reversed();
  AlgebraElement w = e_power(cell.f, r, t);
  w = w * from_permutation(w_lambda(cell.mu), false) * from_permutation(w_lambda(nuo), true);
  w = w * y_lambda(cell.mu.conjugate(), p, false) * y_lambda(nuo.conjugate(), p, true);
  w = w * from_permutation(d_of(idx.s_mu), false) * from_permutation(d_of(idx.s_nu), true);
  return w * coset_element(idx.d, r, t) * x_power(idx.kappa);
}

PBWVector build_hwv(TensorModule& mod, const Cell& cell, const CellIndex& idx, const AlgebraParameters& p) {
  const GroundConfig& cfg = mod.engine().config();
  if (mod.r() + mod.t() > cfg.min_block())
    throw Error(ErrorCode::ConfigTooSmall, "highest weight vectors need r + t <= min q");
  return mod.act(hwv_word(cell, idx, p, mod.r(), mod.t()), mod.seed(hwv_labels(cell, cfg, mod.r(), mod.t())));
}

PBWVector act_gl_total(TensorModule& mod, int i, int j, const PBWVector& v) {
  PBWVector out;
  for (int slot = 0; slot <= mod.r() + mod.t(); ++slot) add_scaled(out, mod.act_gl(i, j, slot, v), 1);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

HwvReport verify_hwv(TensorModule& mod, const PBWVector& v, const std::vector<Scalar>& expected_weight) {
  HwvReport rep;
  auto w = mod.weight_of(v);
  rep.weight_ok = !is_zero(v) && w && *w == expected_weight;
  rep.highest = true;
  for (int a = 1; a < mod.n(); ++a)
    if (!act_gl_total(mod, a, a + 1, v).empty()) {
      rep.highest = false;
      rep.failing_root = a;
      break;
    }
  return rep;
}

std::vector<std::string> weight_space_keys(TensorModule& mod, const std::vector<Scalar>& weight) {
  PBWEngine& eng = mod.engine();
  const int n = mod.n(), r = mod.r();
  std::vector<Scalar> dc = delta_c(eng.config());
  std::vector<int> target(n);
  for (int a = 0; a < n; ++a) {
    Scalar diff = weight[a] - dc[a];
    if (diff.get_den() != 1) return {};
    target[a] = static_cast<int>(diff.get_num().get_si());
  }
  std::vector<std::string> keys;
  for (const auto& labels : all_seeds(n, r + mod.t())) {
    std::vector<int> lw = label_weight(labels, r, n);
    // PBW part must have weight P = sum over factors e_{i,j} of (eps_i - eps_j), i > j.
    std::vector<int> P(n);
    long height = 0;
    for (int a = 0; a < n; ++a) {
      P[a] = target[a] - lw[a];
      height += static_cast<long>(a + 1) * P[a];
    }
    if (std::accumulate(P.begin(), P.end(), 0) != 0) continue;
    PBWEngine::Mono mono;
    std::function<void(int, long)> rec = [&](int start, long h) {
      if (std::all_of(P.begin(), P.end(), [](int x) { return x == 0; })) {
        keys.push_back(encode_key(mono, labels));
        return;
      }
      for (int id = start; id < eng.pairs(); ++id) {
        auto [i, j] = eng.pair_at(id);
        if (i - j > h) continue;
        --P[i - 1];
        ++P[j - 1];
        mono.push_back(static_cast<char>(id));
        rec(id, h - (i - j));
        mono.pop_back();
        ++P[i - 1];
        --P[j - 1];
      }
    };
    if (height >= 0) rec(0, height);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<PBWVector> brute_force_hwv_space(TensorModule& mod, const std::vector<Scalar>& weight) {
  std::vector<std::string> keys = weight_space_keys(mod, weight);
  if (keys.empty()) return {};
  std::map<std::pair<int, std::string>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c)
    for (int a = 1; a < mod.n(); ++a)
      for (const auto& [key, x] : act_gl_total(mod, a, a + 1, PBWVector{{keys[c], 1}})) {
        auto [it, fresh] = row_of.emplace(std::make_pair(a, key), row_of.size());
        cols[c].emplace_back(it->second, x);
      }
  Matrix m(row_of.size(), keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c)
    for (const auto& [row, x] : cols[c]) m(row, c) = x;
  std::vector<PBWVector> out;
  for (const auto& kv : kernel(m)) {
    PBWVector v;
    for (std::size_t c = 0; c < keys.size(); ++c)
      if (kv[c] != 0) v[keys[c]] = kv[c];
    out.push_back(std::move(v));
  }
  return out;
}

PBWVector m_component(const PBWVector& v) {
  PBWVector out;
  for (const auto& [key, c] : v)
    if (c != 0 && decode_key(key).mono.empty()) out.emplace(key, c);
  return out;
}

PBWVector lift_hwv(const PBWVector& v, const std::vector<PBWVector>& hw_space) {
  PBWVector top = m_component(v);
  if (top.empty()) throw Error(ErrorCode::NotInFamilySpan, "vector has no m-component");
  std::vector<PBWVector> tops;
  std::vector<const PBWVector*> ptrs;
  for (const auto& h : hw_space) tops.push_back(m_component(h));
  for (const auto& h : tops) ptrs.push_back(&h);
  ptrs.push_back(&top);
  Dense d = densify(ptrs);
  std::vector<std::vector<Scalar>> basis(d.rows.begin(), d.rows.end() - 1);
  SolveResult s = basis.empty() ? SolveResult{} : solve_in_span(basis, d.rows.back());
  if (s.status != SolveStatus::Ok) throw Error(ErrorCode::NotInFamilySpan, "m-component does not lift");
  PBWVector out;
  for (std::size_t i = 0; i < hw_space.size(); ++i) add_scaled(out, hw_space[i], s.coeffs[i]);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

HwvFamily build_hwv_family(TensorModule& mod, const Cell& cell, const AlgebraParameters& p) {
  const GroundConfig& cfg = mod.engine().config();
  HwvFamily fam{cell, hwv_weight(cell, cfg), hwv_indices(cell, cfg.k, mod.r(), mod.t()), {}, {}, 0};
  for (const auto& idx : fam.indices) fam.raw.push_back(build_hwv(mod, cell, idx, p));
  std::vector<PBWVector> space;
  bool computed = false;
  for (const auto& v : fam.raw) {
    if (verify_hwv(mod, v, fam.weight).ok()) {
      ++fam.raw_highest;
      fam.vectors.push_back(v);
      continue;
    }
    if (!computed) {
      space = brute_force_hwv_space(mod, fam.weight);
      computed = true;
    }
    fam.vectors.push_back(lift_hwv(v, space));
  }
  return fam;
}

std::vector<std::vector<Scalar>> candidate_weights(const GroundConfig& cfg, int r, int t) {
  std::vector<Scalar> dc = delta_c(cfg);
  std::set<std::vector<Scalar>> seen;
  std::vector<std::vector<Scalar>> out;
  for (const auto& labels : all_seeds(cfg.n(), r + t)) {
    std::vector<int> lw = label_weight(labels, r, cfg.n());
    std::vector<Scalar> w(cfg.n());
    for (int a = 0; a < cfg.n(); ++a) w[a] = dc[a] + lw[a];
    bool dominant = true;
    for (int a = 1; a < cfg.n() && dominant; ++a)
      if (cfg.block_of(a) == cfg.block_of(a + 1)) {
        Scalar gap = w[a - 1] - w[a];
        dominant = gap.get_den() == 1 && gap >= 0;
      }
    if (dominant && seen.insert(w).second) out.push_back(std::move(w));
  }
  return out;
}

std::size_t family_rank(const std::vector<PBWVector>& vs) {
  if (vs.empty()) return 0;
  std::vector<const PBWVector*> ptrs;
  for (const auto& v : vs) ptrs.push_back(&v);
  Dense d = densify(ptrs);
  if (d.index.empty()) return 0;
  Matrix m(d.rows.size(), d.index.size());
  for (std::size_t i = 0; i < d.rows.size(); ++i)
    for (std::size_t j = 0; j < d.index.size(); ++j) m(i, j) = d.rows[i][j];
  return rank(m);
}

bool spans_into(const std::vector<PBWVector>& a, const std::vector<PBWVector>& b) {
  std::vector<const PBWVector*> ptrs;
  for (const auto& v : b) ptrs.push_back(&v);
  for (const auto& v : a) ptrs.push_back(&v);
  Dense d = densify(ptrs);
  std::vector<std::vector<Scalar>> basis(d.rows.begin(), d.rows.begin() + static_cast<long>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& target = d.rows[b.size() + i];
    if (std::all_of(target.begin(), target.end(), [](const Scalar& x) { return x == 0; })) continue;
    if (basis.empty() || solve_in_span(basis, target).status == SolveStatus::NotInSpan) return false;
  }
  return true;
}

bool HwvClassification::ok() const {
  return failures.empty() && families == families_ok &&
         std::all_of(weights.begin(), weights.end(), [](const WeightCount& w) { return w.brute == w.expected; });
}

HwvClassification classify_hwv(const GroundConfig& cfg, int r, int t) {
  HwvClassification out;
  out.r = r;
  out.t = t;
  TensorModule mod(cfg, r, t);
  AlgebraParameters p = derive_parameters(cfg, 2 * (r + t) + 2);
  std::map<std::vector<Scalar>, Cell> by_weight;
  for (const auto& cell : enumerate_cells(cfg.k, r, t)) by_weight.emplace(hwv_weight(cell, cfg), cell);

  std::map<std::vector<Scalar>, std::vector<PBWVector>> brute;
  for (const auto& w : candidate_weights(cfg, r, t)) {
    WeightCount wc;
    wc.weight = w;
    auto& space = brute[w] = brute_force_hwv_space(mod, w);
    wc.brute = space.size();
    if (auto it = by_weight.find(w); it != by_weight.end()) {
      wc.cell = it->second;
      wc.expected = hwv_indices(it->second, cfg.k, r, t).size();
    }
    out.weights.push_back(std::move(wc));
  }

  for (const auto& [w, cell] : by_weight) {
    ++out.families;
    auto it = brute.find(w);
    if (it == brute.end()) {
      out.failures.push_back(cell.label() + ": weight is not a candidate");
      continue;
    }
    HwvFamily fam = build_hwv_family(mod, cell, p);
    if (fam.raw_highest == fam.raw.size())
      ++out.raw_families_ok;
    else
      out.raw_failures.push_back(cell.label() + ": " + std::to_string(fam.raw.size() - fam.raw_highest) + " of " +
                                 std::to_string(fam.raw.size()) + " word images are not highest");
    bool ok = true;
    for (std::size_t i = 0; i < fam.vectors.size(); ++i) {
      HwvReport rep = verify_hwv(mod, fam.vectors[i], fam.weight);
      if (!rep.ok()) {
        ok = false;
        out.failures.push_back(cell.label() + ": vector " + std::to_string(i) + " fails" +
                               (rep.weight_ok ? " e_{" + std::to_string(rep.failing_root) + "," +
                                                    std::to_string(rep.failing_root + 1) + "}"
                                              : " weight"));
      }
    }
    if (family_rank(fam.vectors) != fam.vectors.size()) {
      ok = false;
      out.failures.push_back(cell.label() + ": family is dependent");
    }
    if (!spans_into(fam.vectors, it->second) || !spans_into(it->second, fam.vectors)) {
      ok = false;
      out.failures.push_back(cell.label() + ": family does not span the highest weight space");
    }
    if (ok) ++out.families_ok;
  }
  return out;
}

HomCellReport hom_cell_iso_check(TensorModule& mod, const CellDatum& datum, const Cell& cell) {
  HomCellReport rep;
  rep.cell = cell;
  HwvFamily fam = build_hwv_family(mod, cell, datum.params);
  rep.dim = fam.vectors.size();
  Cell target = matching_cell(cell);
  auto pos = std::find(datum.poset.begin(), datum.poset.end(), target);
  if (pos == datum.poset.end()) throw Error(ErrorCode::IndexOutOfRange, "no cell " + target.label());
  CellModule cm = cell_module(datum, static_cast<std::size_t>(pos - datum.poset.begin()));
  if (cm.basis != fam.indices) throw Error(ErrorCode::MatrixMismatch, "cell module basis differs from the family");

  for (const auto& g : StructureAlgebra::generators(mod.r(), mod.t())) {
    ++rep.generators;
    Matrix m(rep.dim, rep.dim);
    for (std::size_t i = 0; i < rep.dim; ++i) {
      PBWVector img = mod.act_letter(g, fam.vectors[i]);
      std::erase_if(img, [](const auto& kv) { return kv.second == 0; });
      if (img.empty()) continue;
      std::vector<const PBWVector*> ptrs;
      for (const auto& v : fam.vectors) ptrs.push_back(&v);
      ptrs.push_back(&img);
      Dense d = densify(ptrs);
      std::vector<std::vector<Scalar>> basis(d.rows.begin(), d.rows.end() - 1);
      SolveResult s = solve_in_span(basis, d.rows.back());
      if (s.status != SolveStatus::Ok)
        throw Error(ErrorCode::NotInFamilySpan, cell.label() + " under " + word_to_string({g}));
      for (std::size_t j = 0; j < rep.dim; ++j) m(i, j) = s.coeffs[j];
    }
    if (!(m == cm.action.at(g))) rep.mismatches.push_back(word_to_string({g}));
  }
  return rep;
}

}  // namespace cwb
