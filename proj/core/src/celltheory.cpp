#include "cwb/celltheory.hpp"

#include <algorithm>
#include <random>

#include "cwb/error.hpp"

namespace cwb {

namespace {

bool nonzero(const Coords& v) {
  return std::any_of(v.begin(), v.end(), [](const Scalar& x) { return x != 0; });
}

std::string element_name(const CellDatum& d, std::size_t b) {
  const auto& e = d.elements[b];
  return d.poset[e.cell].label() + "[" + std::to_string(e.row) + "," + std::to_string(e.col) + "]";
}

Matrix scaled_identity(std::size_t n, const Scalar& c) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

// Rows of a basis of {x : x m = 0}.
std::vector<std::vector<Scalar>> left_kernel(const Matrix& m) { return kernel(m.transpose()); }

// Quotient of a right module by the submodule spanned by the rows of sub:
// change to the basis [sub; complement] and keep the lower-right block.
std::map<Letter, Matrix> quotient_action(const std::map<Letter, Matrix>& action,
                                         const std::vector<std::vector<Scalar>>& sub, std::size_t dim) {
  std::vector<std::vector<Scalar>> rows = sub;
  auto pivots = sub.empty() ? std::vector<std::size_t>{} : rref_rank(Matrix::from_rows(sub)).pivot_cols;
  for (std::size_t j = 0; j < dim; ++j)
    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) {
      std::vector<Scalar> e(dim);
      e[j] = 1;
      rows.push_back(e);
    }
  Matrix p = Matrix::from_rows(rows);
  auto pinv = inverse(p);
  if (!pinv) throw Error(ErrorCode::MatrixMismatch, "quotient basis is singular");
  std::size_t k = sub.size(), q = dim - k;
  std::map<Letter, Matrix> out;
  for (const auto& [g, m] : action) {
    Matrix full = p * m * *pinv;
    Matrix block(q, q);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j) block(i, j) = full(k + i, k + j);
    out[g] = std::move(block);
  }
  return out;
}

Matrix module_word(const std::map<Letter, Matrix>& action, std::size_t dim, const Word& w);

Matrix module_letter(const std::map<Letter, Matrix>& action, std::size_t dim, const Letter& l) {
  if ((l.kind == Letter::X || l.kind == Letter::XBar) && l.index > 1) {
    Letter sw = l.kind == Letter::X ? s(l.index - 1) : sbar(l.index - 1);
    Letter lower{l.kind, static_cast<std::uint8_t>(l.index - 1)};
    Matrix ms = module_letter(action, dim, sw);
    return ms * module_letter(action, dim, lower) * ms - ms;
  }
  auto it = action.find(l);
  if (it == action.end()) throw Error(ErrorCode::IndexOutOfRange, "no generator " + l.name());
  return it->second;
}

Matrix module_word(const std::map<Letter, Matrix>& action, std::size_t dim, const Word& w) {
  Matrix m = Matrix::identity(dim);
  for (const auto& l : w) m = m * module_letter(action, dim, l);
  return m;
}

Matrix module_element(const std::map<Letter, Matrix>& action, std::size_t dim, const AlgebraElement& a) {
  Matrix out(dim, dim);
  std::vector<Matrix> stack{Matrix::identity(dim)};
  const Word* prev = nullptr;
  for (const auto& [word, c] : a.terms()) {
    std::size_t p = 0;
    if (prev)
      while (p < prev->size() && p < word.size() && (*prev)[p] == word[p]) ++p;
    stack.resize(p + 1);
    for (std::size_t i = p; i < word.size(); ++i) stack.push_back(stack.back() * module_letter(action, dim, word[i]));
    out = out + c * stack.back();
    prev = &word;
  }
  return out;
}

}  // namespace

bool cell_above(const Cell& a, const Cell& b) {
  if (a.f != b.f) return a.f > b.f;
  return a != b && dominates(a.mu, b.mu) && dominates(a.nu, b.nu);
}

std::size_t CellDatum::element_index(std::size_t cell, std::size_t row, std::size_t col) const {
  std::size_t b = 0;
  for (std::size_t c = 0; c < cell; ++c) b += indices[c].size() * indices[c].size();
  return b + row * indices[cell].size() + col;
}

AlgebraElement CellDatum::element(std::size_t b) const {
  const auto& e = elements.at(b);
  return cellular_element(indices[e.cell][e.row], indices[e.cell][e.col], params, r, t);
}

Coords CellDatum::cellular(const Coords& v) const {
  Coords out(dim());
  for (std::size_t m = 0; m < v.size(); ++m)
    if (v[m] != 0)
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[m] * inverse(m, j);
  return out;
}

Coords CellDatum::monomial(const Coords& c) const {
  Coords out(dim());
  for (std::size_t b = 0; b < c.size(); ++b)
    if (c[b] != 0)
      for (std::size_t m = 0; m < out.size(); ++m) out[m] += c[b] * change_of_basis(b, m);
  return out;
}

CellDatum build_cell_datum(const GroundConfig& cfg, int r, int t, std::shared_ptr<const StructureAlgebra> algebra) {
  CellDatum d;
  d.config = cfg;
  d.r = r;
  d.t = t;
  d.params = derive_parameters(cfg, 2 * cfg.k + 2);
  d.algebra = std::move(algebra);
  d.poset = enumerate_cells(cfg.k, r, t);
  for (std::size_t c = 0; c < d.poset.size(); ++c) {
    const auto& cell = d.poset[c];
    d.indices.push_back(enumerate_cell_indices(cell.f, cell.mu, cell.nu, cfg.k, r, t));
    std::size_t n = d.indices.back().size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d.elements.push_back({c, i, j});
  }
  std::size_t N = d.algebra->dim();
  if (d.elements.size() != N) throw Error(ErrorCode::SingularChangeOfBasis, "cellular basis has the wrong size");
  d.change_of_basis = Matrix(N, N);
  for (std::size_t b = 0; b < N; ++b) {
    Coords v = d.algebra->coordinates(d.element(b));
    for (std::size_t m = 0; m < N; ++m) d.change_of_basis(b, m) = v[m];
  }
  auto inv = inverse(d.change_of_basis);
  if (!inv) throw Error(ErrorCode::SingularChangeOfBasis, "cellular elements are linearly dependent");
  d.inverse = std::move(*inv);
  return d;
}

CellDatum build_cell_datum(const GroundConfig& cfg, int r, int t) {
  return build_cell_datum(cfg, r, t, structure_algebra(cfg, r, t));
}

Matrix CellModule::act_letter(const Letter& l) const { return module_letter(action, dim(), l); }
Matrix CellModule::act_word(const Word& w) const { return module_word(action, dim(), w); }
Matrix CellModule::act(const AlgebraElement& a) const { return module_element(action, dim(), a); }

CellModule cell_module(const CellDatum& datum, std::size_t cell) {
  CellModule mod;
  mod.cell = cell;
  mod.label = datum.poset.at(cell);
  mod.basis = datum.indices[cell];
  std::size_t n = mod.dim();
  for (const auto& g : StructureAlgebra::generators(datum.r, datum.t)) {
    Matrix m(n, n);
    for (std::size_t T = 0; T < n; ++T) {
      Coords v = datum.algebra->act_letter(g, datum.change_of_basis.row(datum.element_index(cell, 0, T)));
      Coords c = datum.cellular(v);
      for (std::size_t b = 0; b < c.size(); ++b) {
        if (c[b] == 0) continue;
        const auto& e = datum.elements[b];
        if (e.cell == cell && e.row == 0)
          m(T, e.col) = c[b];
        else if (e.cell == cell || !cell_above(datum.poset[e.cell], mod.label))
          throw Error(ErrorCode::MatrixMismatch, "product with " + g.name() + " leaves the cell: " +
                                                     element_name(datum, b));
      }
    }
    mod.action[g] = std::move(m);
  }
  return mod;
}

Matrix gram_matrix(const CellDatum& datum, const CellModule& mod) {
  std::size_t n = mod.dim();
  Matrix g(n, n);
  for (std::size_t U = 0; U < n; ++U) {
    Matrix m = mod.act(datum.element(datum.element_index(mod.cell, U, 0)));
    for (std::size_t T = 0; T < n; ++T) g(T, U) = m(T, 0);
  }
  return g;
}

CellularityReport weak_cellularity_check(const CellDatum& datum) {
  CellularityReport rep;
  const auto& alg = *datum.algebra;
  auto sig = alg.sigma_matrix();
  std::size_t N = datum.dim();
  auto gens = StructureAlgebra::generators(datum.r, datum.t);
  std::vector<Coords> left_gen;
  for (const auto& g : gens) left_gen.push_back(alg.coordinates(AlgebraElement::letter(g)));

  for (std::size_t b = 0; b < N; ++b) {
    const auto& e = datum.elements[b];
    const Cell& cell = datum.poset[e.cell];
    Coords row = datum.change_of_basis.row(b);
    // sigma(C_ST) in monomial coordinates, then cellular
    Coords sv(N);
    for (std::size_t m = 0; m < N; ++m)
      if (row[m] != 0)
        for (std::size_t j = 0; j < N; ++j) sv[j] += row[m] * sig[m][j];
    Coords c = datum.cellular(sv);
    c[datum.element_index(e.cell, e.col, e.row)] -= 1;
    ++rep.pairs_checked;
    bool exact = true;
    for (std::size_t j = 0; j < N; ++j) {
      if (c[j] == 0) continue;
      exact = false;
      if (!cell_above(datum.poset[datum.elements[j].cell], cell)) {
        rep.violations.push_back("sigma " + element_name(datum, b) + " -> " + element_name(datum, j));
        break;
      }
    }
    if (exact) ++rep.exact;

    // two-sided filtration: right products keep the row, left products the column
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Coords rc = datum.cellular(alg.act_letter(gens[gi], row));
      Coords lc = datum.cellular(alg.act(datum.element(b), left_gen[gi]));
      for (int side = 0; side < 2; ++side) {
        const Coords& v = side == 0 ? rc : lc;
        for (std::size_t j = 0; j < N; ++j) {
          if (v[j] == 0) continue;
          const auto& f = datum.elements[j];
          bool same = f.cell == e.cell && (side == 0 ? f.row == e.row : f.col == e.col);
          if (!same && !cell_above(datum.poset[f.cell], cell)) {
            rep.filtration_violations.push_back(std::string(side == 0 ? "right " : "left ") + gens[gi].name() +
                                                " " + element_name(datum, b) + " -> " + element_name(datum, j));
            break;
          }
        }
      }
    }
  }
  return rep;
}

std::size_t hom_dimension(const std::map<Letter, Matrix>& a, const std::map<Letter, Matrix>& b) {
  std::size_t p = a.begin()->second.rows(), q = b.begin()->second.rows();
  // unknown X (p x q) with A_g X = X B_g for every generator
  std::vector<std::vector<Scalar>> eqs;
  for (const auto& [g, ma] : a) {
    const Matrix& mb = b.at(g);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        std::vector<Scalar> row(p * q);
        for (std::size_t l = 0; l < p; ++l) row[l * q + j] += ma(i, l);
        for (std::size_t l = 0; l < q; ++l) row[i * q + l] -= mb(l, j);
        eqs.push_back(std::move(row));
      }
  }
  if (eqs.empty()) return p * q;
  return p * q - rank(Matrix::from_rows(eqs));
}

bool DecompositionResult::is_identity() const {
  if (rows.size() != columns.size()) return false;
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix[i].size(); ++j)
      if (matrix[i][j] != (rows[i] == columns[j] ? 1 : 0)) return false;
  return true;
}

bool DecompositionResult::all_grams_full() const {
  for (std::size_t i = 0; i < cell_dims.size(); ++i)
    if (gram_ranks[i] != cell_dims[i]) return false;
  return true;
}

DecompositionResult decomposition_matrix(const CellDatum& datum, std::size_t max_dim) {
  std::size_t N = datum.dim();
  if (N > max_dim)
    throw Error(ErrorCode::BoundExceeded, "algebra dimension " + std::to_string(N) + " exceeds " +
                                              std::to_string(max_dim));
  const auto& alg = *datum.algebra;
  DecompositionResult res;
  res.algebra_dim = N;
  res.rows = datum.poset;

  // (i) radical: kernel of the trace form tau(b_i b_j) of the regular representation
  std::vector<Scalar> tau = alg.regular_traces();
  Matrix form(N, N);
  for (std::size_t i = 0; i < N; ++i) {
    Coords e(N);
    e[i] = 1;
    for (std::size_t j = 0; j < N; ++j) {
      Coords v = alg.act(alg.monomial(j), e);
      Scalar acc = 0;
      for (std::size_t m = 0; m < N; ++m)
        if (v[m] != 0) acc += v[m] * tau[m];
      form(i, j) = acc;
    }
  }
  auto radical = kernel(form);
  res.radical_dim = radical.size();

  // cell modules, Gram forms and simple heads
  std::vector<CellModule> mods;
  std::vector<std::map<Letter, Matrix>> simples;
  std::vector<std::size_t> simple_cell;
  for (std::size_t c = 0; c < datum.poset.size(); ++c) {
    mods.push_back(cell_module(datum, c));
    Matrix g = gram_matrix(datum, mods.back());
    std::size_t rk = rank(g);
    res.cell_dims.push_back(mods.back().dim());
    res.gram_ranks.push_back(rk);
    if (rk == 0) continue;
    simples.push_back(quotient_action(mods.back().action, left_kernel(g), mods.back().dim()));
    simple_cell.push_back(c);
    res.columns.push_back(datum.poset[c]);
    res.simple_dims.push_back(rk);
  }
  std::size_t wed = 0;
  for (auto d : res.simple_dims) wed += d * d;
  res.wedderburn_ok = wed == N - res.radical_dim;

  // (ii) center of B/J: z with z g - g z in J for every generator
  auto gens = StructureAlgebra::generators(datum.r, datum.t);
  std::size_t R = radical.size(), unknowns = N + gens.size() * R;
  std::vector<std::vector<Scalar>> eqs;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    Coords gl = alg.coordinates(AlgebraElement::letter(gens[gi]));
    // columns m: b_m g - g b_m
    std::vector<Coords> cols;
    for (std::size_t m = 0; m < N; ++m) {
      Coords e(N);
      e[m] = 1;
      Coords right = alg.act_letter(gens[gi], e);
      Coords left = alg.act(alg.monomial(m), gl);
      for (std::size_t j = 0; j < N; ++j) right[j] -= left[j];
      cols.push_back(std::move(right));
    }
    for (std::size_t j = 0; j < N; ++j) {
      std::vector<Scalar> row(unknowns);
      for (std::size_t m = 0; m < N; ++m) row[m] = cols[m][j];
      for (std::size_t c = 0; c < R; ++c) row[N + gi * R + c] = -radical[c][j];
      eqs.push_back(std::move(row));
    }
  }
  std::vector<Coords> center;
  for (auto& v : kernel(Matrix::from_rows(eqs))) {
    v.resize(N);
    if (nonzero(v)) center.push_back(std::move(v));
  }

  // module images of every regular monomial, for elements given in coordinates
  auto images = [&](const std::map<Letter, Matrix>& action, std::size_t dim) {
    std::vector<Matrix> out;
    for (std::size_t m = 0; m < N; ++m) out.push_back(module_element(action, dim, alg.monomial(m)));
    return out;
  };
  auto image_of = [&](const std::vector<Matrix>& imgs, const Coords& z, std::size_t dim) {
    Matrix out(dim, dim);
    for (std::size_t m = 0; m < N; ++m)
      if (z[m] != 0) out = out + z[m] * imgs[m];
    return out;
  };
  std::vector<std::vector<Matrix>> simple_imgs, cell_imgs;
  for (std::size_t i = 0; i < simples.size(); ++i) simple_imgs.push_back(images(simples[i], res.simple_dims[i]));
  for (const auto& mod : mods) cell_imgs.push_back(images(mod.action, mod.dim()));

  // a central element separating the simple modules by its scalars
  std::mt19937 rng(12345);
  std::vector<Scalar> scalars;
  Coords z;
  for (int attempt = 0; attempt < 64 && scalars.size() != simples.size(); ++attempt) {
    z.assign(N, 0);
    for (const auto& c : center) {
      long w = static_cast<long>(rng() % 199) - 99;
      for (std::size_t m = 0; m < N; ++m) z[m] += w * c[m];
    }
    std::vector<Scalar> sc;
    for (std::size_t i = 0; i < simples.size(); ++i) {
      Matrix zi = image_of(simple_imgs[i], z, res.simple_dims[i]);
      if (zi != scaled_identity(res.simple_dims[i], zi(0, 0)))
        throw Error(ErrorCode::MatrixMismatch, "central element is not scalar on a simple module");
      sc.push_back(zi(0, 0));
    }
    auto sorted = sc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) scalars = sc;
  }
  if (scalars.size() != simples.size())
    throw Error(ErrorCode::MatrixMismatch, "center does not separate the simple modules");

  // (iii) block idempotents as polynomials in z, lifted on each cell module
  res.matrix.assign(mods.size(), std::vector<long>(simples.size(), 0));
  res.rows_ok = true;
  for (std::size_t l = 0; l < mods.size(); ++l) {
    std::size_t dim = mods[l].dim();
    Matrix zl = image_of(cell_imgs[l], z, dim);
    std::size_t total = 0;
    for (std::size_t mu = 0; mu < simples.size(); ++mu) {
      Matrix e = Matrix::identity(dim);
      for (std::size_t nu = 0; nu < simples.size(); ++nu)
        if (nu != mu) e = e * ((Scalar(1) / (scalars[mu] - scalars[nu])) * (zl - scaled_identity(dim, scalars[nu])));
      for (int it = 0; it < 64 && e * e != e; ++it) {
        Matrix e2 = e * e;
        e = Scalar(3) * e2 - Scalar(2) * (e2 * e);
      }
      if (e * e != e) throw Error(ErrorCode::MatrixMismatch, "idempotent lifting did not converge");
      std::size_t rk = rank(e);
      if (rk % res.simple_dims[mu] != 0) throw Error(ErrorCode::MatrixMismatch, "multiplicity is not integral");
      res.matrix[l][mu] = static_cast<long>(rk / res.simple_dims[mu]);
      total += rk;
    }
    if (total != dim) res.rows_ok = false;
  }
  return res;
}

DecompositionResult decomposition_matrix(const GroundConfig& cfg, int r, int t, std::size_t max_dim) {
  std::size_t N = regular_monomials(cfg.k, r, t).size();
  if (N > max_dim)
    throw Error(ErrorCode::BoundExceeded, "algebra dimension " + std::to_string(N) + " exceeds " +
                                              std::to_string(max_dim));
  return decomposition_matrix(build_cell_datum(cfg, r, t), max_dim);
}

}  // namespace cwb
