#include "hopfclass/repn.hpp"

#include "hopfclass/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hopfclass {

namespace {

int mod(long x, int n) { return static_cast<int>(((x % n) + n) % n); }

bool is_h1_kind(LabelKind k) { return k == LabelKind::V || k == LabelKind::Pr; }

std::vector<GradedOp> radical_ops(const AlgebraContext& ctx, const Module& m) {
  std::vector<GradedOp> ops;
  for (const auto& g : ctx.radical().generators) ops.push_back(element_op(m, g));
  return ops;
}

/// The nilpotent generator used to find highest-weight vectors: "a" when
/// present, otherwise the first nilpotent generator.
int raising_generator(const Algebra& h) {
  const auto& gens = h.presentation().gens;
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (gens[g].name == "a") return static_cast<int>(g);
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (gens[g].kind == GenKind::Nilpotent) return static_cast<int>(g);
  throw std::logic_error("algebra has no nilpotent generator");
}

/// Character test: S can only occur in M if every weight of S occurs in M.
bool weights_fit(const Module& s, const Module& m) {
  const auto cs = s.character(), cm = m.character();
  for (std::size_t w = 0; w < cs.size(); ++w)
    if (cs[w] > 0 && cm[w] == 0) return false;
  return true;
}

long to_long(const CycloNum& x, const std::string& what) {
  if (!x.is_rational()) throw std::logic_error(what + ": irrational value");
  const Rational r = x.coeff(0);
  if (r.get_den() != 1) throw std::logic_error(what + ": non-integral value " + r.get_str());
  return r.get_num().get_si();
}

/// Module given by left multiplication on a left ideal (in PBW coordinates).
Module left_ideal_module(const Algebra& h, const Subspace& ideal, std::string label) {
  std::vector<Mat> acts;
  for (int g = 0; g < h.num_generators(); ++g) acts.push_back(restrict_operator(h.left_matrix(g), ideal));
  return weight_normalize(Module(h, std::move(acts), std::move(label)));
}

Vec random_combination(const std::vector<Vec>& basis, std::size_t len, const CycloField& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Vec v(len);
  for (const auto& b : basis) {
    const int c = dist(rng);
    if (c != 0) axpy(v, k.integer(c), b);
  }
  return v;
}


/// Top M / J M of a weight module.
Module top_of(const AlgebraContext& ctx, const Module& m) {
  const auto full = full_subspace(m);
  return subquotient(m, full, apply_ops(m, radical_ops(ctx, m), full));
}

Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

/// Splits a projective weight module into indecomposable summands by
/// lifting a complete set of orthogonal primitive idempotents of End(top M)
/// to End(M).  Each returned summand has simple top.
std::vector<Module> split_projective(const AlgebraContext& ctx, const Module& m, const std::vector<Module>& simples) {
  const auto& k = m.algebra().field();
  const std::size_t dim = m.dim();
  const GradedSubspace full = full_subspace(m);
  const GradedSubspace jm = apply_ops(m, radical_ops(ctx, m), full);
  const Module top = subquotient(m, full, jm);
  const auto reps = subquotient_lifts(m, full, jm);
  const std::size_t tdim = top.dim();

  // End(M) and its image in End(top M).
  const std::vector<Mat> ends = hom_basis(m, m);
  auto induced = [&](const Mat& phi) {
    Mat out(tdim, tdim);
    for (int w = 0; w < top.lattice().count(); ++w) {
      const auto& tidx = top.block(w);
      const auto& midx = m.block(w);
      const auto ww = static_cast<std::size_t>(w);
      for (std::size_t r = 0; r < tidx.size(); ++r) {
        Vec x(dim);
        for (std::size_t i = 0; i < midx.size(); ++i) x[midx[i]] = reps[ww].basis()[r][i];
        const Vec y = phi.apply(x);
        Vec local(midx.size());
        for (std::size_t i = 0; i < midx.size(); ++i) local[i] = y[midx[i]];
        const auto c = reps[ww].coordinates(jm.parts[ww].reduce(local));
        if (!c) throw std::logic_error("split_projective: endomorphism does not preserve J M");
        for (std::size_t i = 0; i < c->size(); ++i) out(tidx[i], tidx[r]) = (*c)[i];
      }
    }
    return out;
  };
  std::vector<Vec> induced_cols;
  for (const auto& phi : ends) induced_cols.push_back(flatten(induced(phi)));
  const Mat lift_system = Mat::from_columns(tdim * tdim, induced_cols);

  // top M = direct sum of the images of Hom(S, top M) bases.
  std::vector<Vec> cols;
  std::vector<std::pair<std::size_t, std::size_t>> copies;  // column range per copy
  for (const auto& s : simples) {
    if (!weights_fit(s, top)) continue;
    for (const Mat& phi : hom_basis(s, top)) {
      copies.emplace_back(cols.size(), cols.size() + s.dim());
      for (std::size_t c = 0; c < s.dim(); ++c) cols.push_back(phi.col_vec(c));
    }
  }
  if (cols.size() != tdim) throw std::logic_error("split_projective: top is not a sum of known simples");
  const Mat basis = Mat::from_columns(tdim, cols);
  const auto basis_inv = inverse(basis);
  if (!basis_inv) throw std::logic_error("split_projective: simple copies in the top are not independent");

  std::vector<Module> out;
  Mat used(dim, dim);  // sum of the idempotents lifted so far
  const Mat id = Mat::identity(k, dim);
  for (const auto& [lo, hi] : copies) {
    Mat sel(tdim, tdim);
    for (std::size_t c = lo; c < hi; ++c) sel(c, c) = k.one();
    const Mat target = basis * sel * *basis_inv;
    const auto sol = solve(lift_system, flatten(target));
    if (!sol) throw std::logic_error("split_projective: idempotent of the top does not lift");
    Mat e(dim, dim);
    for (std::size_t i = 0; i < ends.size(); ++i)
      if (!sol->particular[i].is_zero()) {
        Mat t = ends[i];
        t *= sol->particular[i];
        e = e + t;
      }
    const Mat rest = id - used;
    e = rest * e * rest;
    for (int iter = 0; !(e * e == e); ++iter) {
      if (iter > 64) throw std::logic_error("split_projective: idempotent refinement does not converge");
      const Mat e2 = e * e;
      Mat a = e2, b = e2 * e;
      a *= k.integer(3);
      b *= k.integer(2);
      e = a - b;
    }
    used = used + e;
    GradedSubspace image = zero_subspace(m);
    for (std::size_t c = 0; c < dim; ++c) {
      const Vec col = e.col_vec(c);
      if (is_zero(col)) continue;
      const auto w = static_cast<std::size_t>(m.weight(c));
      const auto& idx = m.block(static_cast<int>(w));
      Vec local(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) local[i] = col[idx[i]];
      image.parts[w].insert(std::move(local));
    }
    Module piece = submodule(m, image);
    const Module ptop = top_of(ctx, piece);
    if (hom_dim(ptop, ptop) != 1) throw std::logic_error("split_projective: summand without simple top");
    out.push_back(std::move(piece));
  }
  if (!(used == id)) throw std::logic_error("split_projective: idempotents do not sum to the identity");
  std::size_t total = 0;
  for (const auto& p : out) total += p.dim();
  if (total != dim) throw std::logic_error("split_projective: summand dimensions do not add up");
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Labels

std::string BasisLabel::to_string() const {
  const char* name = kind == LabelKind::S ? "S" : kind == LabelKind::V ? "V" : "P";
  return std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::strong_ordering operator<=>(const BasisLabel& a, const BasisLabel& b) {
  if (is_h1_kind(a.kind) && is_h1_kind(b.kind)) {
    if (auto c = b.i <=> a.i; c != 0) return c;
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.j <=> b.j;
  }
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.i <=> b.i; c != 0) return c;
  return a.j <=> b.j;
}

BasisLabel parse_label(const std::string& text, bool h1, int n) {
  static const std::regex re(R"(^\s*(S|P|V|Pr)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("cannot parse class label '" + text + "'");
  const std::string kind = m[1];
  const long x = std::stol(m[2]), y = std::stol(m[3]);
  BasisLabel out;
  if (!h1) {
    if (kind != "S" && kind != "P") throw std::invalid_argument("label '" + text + "': use S(i,j) or P(i,j) here");
    out.kind = kind == "S" ? LabelKind::S : LabelKind::P;
    out.i = mod(x, n);
    out.j = mod(y, n);
    return out;
  }
  if (kind == "S") throw std::invalid_argument("label '" + text + "': use V(l,r) or P(l,r) here");
  if (x < 1 || x > n) throw std::invalid_argument("label '" + text + "': l must lie in 1.." + std::to_string(n));
  out.i = static_cast<int>(x);
  out.j = mod(y, n);
  out.kind = (kind == "V" || x == n) ? LabelKind::V : LabelKind::Pr;
  return out;
}

// ---------------------------------------------------------------------------
// Closed constructions

Module simple_S(const Algebra& h, int i, int j) {
  const int b = h.generator_index("b"), c = h.generator_index("c");
  const auto& k = h.field();
  std::vector<Mat> acts;
  for (int g = 0; g < h.num_generators(); ++g) {
    Mat m(1, 1);
    if (g == b) m(0, 0) = k.q_pow(i);
    else if (g == c) m(0, 0) = k.q_pow(j);
    else if (h.presentation().gens[static_cast<std::size_t>(g)].kind == GenKind::GroupLike) m(0, 0) = k.one();
    acts.push_back(std::move(m));
  }
  const int n = h.n();
  return Module(h, std::move(acts), BasisLabel{LabelKind::S, mod(i, n), mod(j, n)}.to_string());
}

Module projective_P(const Algebra& h, int i, int j) {
  const int n = h.n();
  const int a = h.generator_index("a"), d = h.generator_index("d");
  const AlgElt e = group_idempotents(h)[static_cast<std::size_t>(mod(i, n) * n + mod(j, n))];
  // x_{k,l} = a^k d^l e have disjoint PBW supports, so one pivot coordinate
  // per basis vector reads off coordinates.
  std::vector<AlgElt> basis;
  std::vector<std::size_t> pivot;
  std::vector<std::size_t> owner(h.dim(), SIZE_MAX);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      std::vector<int> exps(static_cast<std::size_t>(h.num_generators()), 0);
      exps[static_cast<std::size_t>(a)] = k;
      AlgElt x = h.mul(h.mul(h.monomial(exps), h.word(Word(static_cast<std::size_t>(l), d))), e);
      if (x.is_zero()) throw std::logic_error("projective_P: a^k d^l e vanishes");
      for (const auto& [u, c] : x.terms()) {
        if (owner[u] != SIZE_MAX) throw std::logic_error("projective_P: basis supports overlap");
        owner[u] = basis.size();
      }
      pivot.push_back(x.terms().begin()->first);
      basis.push_back(std::move(x));
    }
  const std::size_t dim = basis.size();
  std::vector<Mat> acts;
  for (int g = 0; g < h.num_generators(); ++g) {
    Mat m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const AlgElt y = h.mul(h.generator(g), basis[col]);
      AlgElt check;
      for (const auto& [u, c] : y.terms()) {
        const std::size_t r = owner[u];
        if (r == SIZE_MAX) throw std::logic_error("projective_P: H e is not spanned by a^k d^l e");
        if (u != pivot[r]) continue;
        m(r, col) = c * basis[r].coeff(u).inverse();
        check.add_scaled(basis[r], m(r, col));
      }
      if (!(check == y)) throw std::logic_error("projective_P: H e is not spanned by a^k d^l e");
    }
    acts.push_back(std::move(m));
  }
  return Module(h, std::move(acts), BasisLabel{LabelKind::P, mod(i, n), mod(j, n)}.to_string());
}

// ---------------------------------------------------------------------------
// ModuleSystem

BasisLabel ModuleSystem::pim_label(std::size_t k) const {
  if (projective_simple(k)) return labels_[k];
  BasisLabel l = labels_[k];
  l.kind = l.kind == LabelKind::S ? LabelKind::P : LabelKind::Pr;
  return l;
}

std::vector<BasisLabel> ModuleSystem::basis() const {
  std::vector<BasisLabel> out = labels_;
  for (std::size_t k = 0; k < size(); ++k)
    if (!projective_simple(k)) out.push_back(pim_label(k));
  return out;
}

std::size_t ModuleSystem::index_of(const BasisLabel& label) const {
  for (std::size_t k = 0; k < size(); ++k)
    if (labels_[k] == label || (!projective_simple(k) && pim_label(k) == label)) return k;
  throw std::invalid_argument("label " + label.to_string() + " is not a class of " + ctx_->label());
}

const Module& ModuleSystem::module_of(const BasisLabel& label) const {
  const std::size_t k = index_of(label);
  return label.is_projective() ? pims_[k] : simples_[k];
}

std::size_t ModuleSystem::dim_of(const BasisLabel& label) const { return module_of(label).dim(); }

ModuleSystem ModuleSystem::build(const AlgebraContext& ctx, std::uint64_t seed, unsigned jobs) {
  if (ctx.is_h1()) {
    ModuleSystem sys = discover(ctx, seed, jobs);
    sys.calibrate_h1();
    return sys;
  }
  const Algebra& h = ctx.algebra();
  if (ctx.spec().family != Family::TensorTaft && !ctx.is_h0())
    throw std::invalid_argument("no module system for " + ctx.label());
  ModuleSystem sys;
  sys.ctx_ = &ctx;
  const int n = ctx.n();
  const auto count = static_cast<std::size_t>(n * n);
  sys.simples_.resize(count);
  sys.pims_.resize(count);
  parallel_for(count, jobs, [&](std::size_t k) {
    const int i = static_cast<int>(k) / n, j = static_cast<int>(k) % n;
    sys.simples_[k] = simple_S(h, i, j);
    sys.pims_[k] = projective_P(h, i, j);
  });
  for (std::size_t k = 0; k < count; ++k)
    sys.labels_.push_back(BasisLabel{LabelKind::S, static_cast<int>(k) / n, static_cast<int>(k) % n});
  sys.finish();
  return sys;
}

ModuleSystem ModuleSystem::discover(const AlgebraContext& ctx, std::uint64_t seed, unsigned jobs) {
  const Algebra& h = ctx.algebra();
  const auto& k = h.field();
  const int a = raising_generator(h);
  const RadicalInfo& rad = ctx.radical();
  ModuleSystem sys;
  sys.ctx_ = &ctx;

  // Simples: spin highest-weight vectors of the semisimple quotient H/J.
  std::vector<Mat> qacts;
  for (int g = 0; g < h.num_generators(); ++g) qacts.push_back(quotient_operator(h.left_matrix(g), rad.ideal));
  const Module q = weight_normalize(Module(h, std::move(qacts), "H/J"));
  const WeightLattice& lat = q.lattice();
  std::vector<int> hw;  // weight of the highest-weight line of each simple
  std::size_t covered = 0;
  std::mt19937_64 rng(seed);
  for (int w = 0; w < lat.count() && covered < q.dim(); ++w) {
    if (q.block_dim(w) == 0) continue;
    const Subspace ker = kernel_basis(q.block_action(a, w), &k);
    std::vector<Vec> candidates = ker.basis();
    for (int extra = 0; extra < 8 && ker.dim() > 1; ++extra) candidates.push_back(random_combination(ker.basis(), q.block_dim(w), k, rng));
    for (const auto& v : candidates) {
      if (is_zero(v)) continue;
      GradedSubspace seedspace = zero_subspace(q);
      seedspace.parts[static_cast<std::size_t>(w)].insert(v);
      Module s = submodule(q, spin(q, seedspace));
      if (hom_dim(s, s) != 1) continue;  // a sum of simples: try another vector
      bool known = false;
      for (const auto& t : sys.simples_)
        if (t.dim() == s.dim() && hom_dim(s, t) > 0) known = true;
      if (known) continue;
      const auto idx = static_cast<int>(sys.simples_.size());
      s.set_label(BasisLabel{LabelKind::V, static_cast<int>(s.dim()), idx}.to_string());
      covered += s.dim() * s.dim();
      sys.labels_.push_back(BasisLabel{LabelKind::V, static_cast<int>(s.dim()), idx});
      // Highest-weight line inside s itself (the spinning vector's image).
      int sw = -1;
      for (int x = 0; x < lat.count() && sw < 0; ++x) {
        if (s.block_dim(x) == 0) continue;
        const Subspace kx = kernel_basis(s.block_action(a, x), &k);
        if (kx.dim() == 0) continue;
        if (kx.dim() != 1) throw std::logic_error("discover: simple with more than one highest-weight vector");
        sw = x;
      }
      if (sw < 0) throw std::logic_error("discover: simple without highest-weight vector");
      sys.simples_.push_back(std::move(s));
      hw.push_back(sw);
    }
  }
  if (covered != q.dim())
    throw std::logic_error("discover: simples found account for " + std::to_string(covered) + " of dim H/J = " +
                           std::to_string(q.dim()));

  // Projective covers: split H e_w, w a highest weight, into indecomposables.
  std::vector<int> weights(hw.begin(), hw.end());
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  const auto idem = group_idempotents(h);
  std::vector<std::vector<Module>> pieces(weights.size());
  parallel_for(weights.size(), jobs, [&](std::size_t wi) {
    const int w = weights[wi];
    const auto exps = lat.decode(w);
    const AlgElt& e = idem[static_cast<std::size_t>(exps[0] * ctx.n() + exps[1])];
    Subspace ideal(h.dim());
    for (std::size_t u = 0; u < h.dim(); ++u) ideal.insert(h.mul(AlgElt::basis(u, k.one()), e).to_vec(h.dim()));
    pieces[wi] = split_projective(ctx, left_ideal_module(h, ideal, "He"), sys.simples_);
  });

  sys.pims_.resize(sys.simples_.size());
  for (std::size_t s = 0; s < sys.simples_.size(); ++s) {
    const auto wi = static_cast<std::size_t>(std::lower_bound(weights.begin(), weights.end(), hw[s]) - weights.begin());
    bool assigned = false;
    for (const auto& p : pieces[wi])
      if (hom_dim(p, sys.simples_[s]) > 0) {
        sys.pims_[s] = p;
        sys.pims_[s].set_label(sys.pim_label(s).to_string());
        assigned = true;
        break;
      }
    if (!assigned) throw std::logic_error("discover: no projective cover found for simple " + std::to_string(s));
  }
  sys.finish();
  return sys;
}

void ModuleSystem::finish() {
  const std::size_t count = size();
  const Algebra& h = algebra();
  for (std::size_t s = 0; s < count; ++s)
    for (std::size_t t = s; t < count; ++t) {
      const std::size_t d = hom_dim(simples_[s], simples_[t]);
      if (d != (s == t ? 1U : 0U))
        throw std::logic_error("module system: dim Hom(" + labels_[s].to_string() + ", " + labels_[t].to_string() +
                               ") = " + std::to_string(d));
    }
  cartan_.assign(count, std::vector<long>(count, 0));
  std::size_t regular = 0;
  for (std::size_t t = 0; t < count; ++t) {
    const RadicalLayers layers = radical_filtration(pims_[t]);
    if (layers.multiplicities.front() != [&] {
          std::vector<long> e(count, 0);
          e[t] = 1;
          return e;
        }())
      throw std::logic_error("module system: top of the cover of " + labels_[t].to_string() + " is not simple");
    cartan_[t] = layers.composition;
    regular += simples_[t].dim() * pims_[t].dim();
  }
  if (regular != h.dim())
    throw std::logic_error("module system: sum of dim S * dim P(S) is " + std::to_string(regular) + ", not dim H");
}

RadicalLayers ModuleSystem::radical_filtration(const Module& m0) const {
  RadicalLayers out;
  out.composition.assign(size(), 0);
  if (m0.dim() == 0) return out;
  const Module m = weight_normalize(m0);
  const auto ops = radical_ops(*ctx_, m);
  GradedSubspace cur = full_subspace(m);
  while (cur.dim() > 0) {
    GradedSubspace next = apply_ops(m, ops, cur);
    const Module layer = subquotient(m, cur, next);
    std::vector<long> mult(size(), 0);
    std::size_t accounted = 0;
    for (std::size_t s = 0; s < size(); ++s) {
      if (!weights_fit(simples_[s], layer)) continue;
      mult[s] = static_cast<long>(hom_dim(layer, simples_[s]));
      accounted += static_cast<std::size_t>(mult[s]) * simples_[s].dim();
      out.composition[s] += mult[s];
    }
    if (accounted != layer.dim())
      throw std::logic_error("radical_filtration: layer " + std::to_string(out.dims.size()) + " of dim " +
                             std::to_string(layer.dim()) + " is not a sum of known simples");
    out.dims.push_back(layer.dim());
    out.multiplicities.push_back(std::move(mult));
    if (out.dims.size() > m.dim()) throw std::logic_error("radical_filtration: radical does not act nilpotently");
    cur = std::move(next);
  }
  return out;
}

DecompVector ModuleSystem::decompose(const Module& m0) const {
  DecompVector out;
  if (m0.dim() == 0) return out;
  const Module m = weight_normalize(m0);
  const std::size_t count = size();
  const RadicalLayers layers = radical_filtration(m);
  const auto& c = layers.composition;
  std::vector<long> t(count, 0);
  for (std::size_t s = 0; s < count; ++s)
    if (weights_fit(simples_[s], m)) t[s] = static_cast<long>(hom_dim(m, simples_[s]));
  if (t != layers.multiplicities.front()) throw std::logic_error("decompose: Hom count disagrees with the top layer");

  // (C^T - I) b = c - t over the non-projective simples; a = t - b.
  const auto& k = algebra().field();
  std::vector<std::size_t> np;
  for (std::size_t s = 0; s < count; ++s)
    if (!projective_simple(s)) np.push_back(s);
  Mat sys(np.size(), np.size());
  Vec rhs(np.size());
  for (std::size_t r = 0; r < np.size(); ++r) {
    for (std::size_t col = 0; col < np.size(); ++col)
      sys(r, col) = k.integer(cartan_[np[col]][np[r]] - (r == col ? 1 : 0));
    rhs[r] = k.integer(c[np[r]] - t[np[r]]);
  }
  std::vector<long> b(count, 0), a(count, 0);
  if (!np.empty()) {
    const auto sol = solve(sys, rhs);
    if (!sol) throw std::logic_error("decompose: module outside the projective class subcategory (inconsistent)");
    if (sol->homogeneous.dim() != 0) throw std::logic_error("decompose: C - I is singular");
    for (std::size_t r = 0; r < np.size(); ++r) b[np[r]] = to_long(sol->particular[r], "decompose");
  }
  for (std::size_t s = 0; s < count; ++s) a[s] = t[s] - b[s];
  // Projective simples: multiplicity equals the top count; their
  // composition equation is the remaining consistency check.
  for (std::size_t s = 0; s < count; ++s) {
    if (a[s] < 0 || b[s] < 0)
      throw std::logic_error("decompose: module outside the projective class subcategory (negative multiplicity)");
    long expect = a[s];
    for (std::size_t tt = 0; tt < count; ++tt) expect += cartan_[tt][s] * b[tt];
    if (expect != c[s]) throw std::logic_error("decompose: composition factors of the claimed sum differ at " + labels_[s].to_string());
  }
  std::size_t dim = 0;
  for (std::size_t s = 0; s < count; ++s) {
    dim += static_cast<std::size_t>(a[s]) * simples_[s].dim() + static_cast<std::size_t>(b[s]) * pims_[s].dim();
    if (a[s] > 0) out.simple_mults.emplace_back(labels_[s], a[s]);
  }
  for (std::size_t s = 0; s < count; ++s)
    if (b[s] > 0) out.proj_mults.emplace_back(pim_label(s), b[s]);
  if (dim != m.dim()) throw std::logic_error("decompose: dimensions do not add up");
  return out;
}

// ---------------------------------------------------------------------------
// H_n(1,q) labels

void ModuleSystem::calibrate_h1() {
  const Algebra& h = algebra();
  const int n = ctx_->n();
  const std::size_t count = size();
  auto single = [&](const Module& m, const std::string& what) -> std::size_t {
    const DecompVector d = decompose(m);
    if (d.proj_mults.empty() && d.simple_mults.size() == 1 && d.simple_mults[0].second == 1)
      return index_of(d.simple_mults[0].first);
    throw std::logic_error("H1 calibration: " + what + " is not simple: " + decomp_text(d));
  };
  auto summand_of_dim = [&](const Module& m, std::size_t dim, const std::string& what) -> std::size_t {
    const DecompVector d = decompose(m);
    std::size_t found = SIZE_MAX;
    for (const auto& [l, mult] : d.simple_mults)
      if (dim_of(l) == dim) {
        if (found != SIZE_MAX || mult != 1) throw std::logic_error("H1 calibration: " + what + " has no unique summand of dim " + std::to_string(dim));
        found = index_of(l);
      }
    if (found == SIZE_MAX) throw std::logic_error("H1 calibration: " + what + " has no simple summand of dim " + std::to_string(dim));
    return found;
  };

  // One-dimensional simples against the closed form a, d -> 0, (b, c) -> (q^r, q^-r).
  std::vector<std::size_t> one_dim(static_cast<std::size_t>(n), SIZE_MAX);
  for (int r = 0; r < n; ++r) {
    const Module closed = simple_S(h, r, -r);
    for (std::size_t s = 0; s < count; ++s)
      if (simples_[s].dim() == 1 && hom_dim(closed, simples_[s]) == 1) one_dim[static_cast<std::size_t>(r)] = s;
    if (one_dim[static_cast<std::size_t>(r)] == SIZE_MAX)
      throw std::logic_error("H1 calibration: closed-form one-dimensional module " + std::to_string(r) + " not found");
  }

  std::vector<BasisLabel> label(count);
  std::vector<char> assigned(count, 0);
  auto assign = [&](std::size_t s, int l, int r) {
    const BasisLabel want{LabelKind::V, l, mod(r, n)};
    if (assigned[s] && !(label[s] == want))
      throw std::logic_error("H1 calibration: conflicting labels " + label[s].to_string() + " and " + want.to_string());
    label[s] = want;
    assigned[s] = 1;
  };

  std::size_t t_index = SIZE_MAX;
  for (std::size_t s = 0; s < count && t_index == SIZE_MAX; ++s)
    if (simples_[s].dim() == 2) t_index = s;
  if (t_index == SIZE_MAX) throw std::logic_error("H1 calibration: no two-dimensional simple");
  const Module& t = simples_[t_index];
  const std::size_t x_index = summand_of_dim(tensor_module(t, t), 1, "T (x) T");
  int x_exp = -1;
  for (int r = 0; r < n; ++r)
    if (one_dim[static_cast<std::size_t>(r)] == x_index) x_exp = r;
  notes_.push_back("V(1,0) is the trivial module");
  notes_.push_back("V(2,0) is the two-dimensional simple found first in the search");
  notes_.push_back("V(1,1) is the one-dimensional summand of V(2,0)(x)V(2,0); b acts on it by q^" + std::to_string(x_exp));

  // V(1,r) = V(1,1)^{(x)r}
  std::vector<std::size_t> v1(static_cast<std::size_t>(n));
  Module cur = simples_[one_dim[0]];
  for (int r = 0; r < n; ++r) {
    v1[static_cast<std::size_t>(r)] = single(cur, "V(1,1)^" + std::to_string(r));
    assign(v1[static_cast<std::size_t>(r)], 1, r);
    cur = tensor_module(cur, simples_[x_index]);
  }
  // V(l+1,0) is the (l+1)-dimensional summand of V(2,0) (x) V(l,0).
  std::vector<std::size_t> v0(static_cast<std::size_t>(n + 1), SIZE_MAX);
  v0[1] = v1[0];
  v0[2] = t_index;
  for (int l = 2; l < n; ++l)
    v0[static_cast<std::size_t>(l + 1)] = summand_of_dim(tensor_module(t, simples_[v0[static_cast<std::size_t>(l)]]),
                                                         static_cast<std::size_t>(l + 1), "V(2,0)(x)V(" + std::to_string(l) + ",0)");
  for (int l = 1; l <= n; ++l)
    for (int r = 0; r < n; ++r) {
      const std::size_t s =
          l == 1 ? v1[static_cast<std::size_t>(r)]
                 : single(tensor_module(simples_[v1[static_cast<std::size_t>(r)]], simples_[v0[static_cast<std::size_t>(l)]]),
                          "V(1," + std::to_string(r) + ")(x)V(" + std::to_string(l) + ",0)");
      if (simples_[s].dim() != static_cast<std::size_t>(l))
        throw std::logic_error("H1 calibration: V(" + std::to_string(l) + "," + std::to_string(r) + ") has dimension " +
                               std::to_string(simples_[s].dim()));
      assign(s, l, r);
    }
  for (std::size_t s = 0; s < count; ++s)
    if (!assigned[s]) throw std::logic_error("H1 calibration: simple " + std::to_string(s) + " received no label");

  // Reorder into (l, r) order.
  std::vector<std::size_t> perm(count);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return std::pair(label[x].i, label[x].j) < std::pair(label[y].i, label[y].j);
  });
  std::vector<Module> simples, pims;
  std::vector<std::vector<long>> cartan(count, std::vector<long>(count));
  labels_.clear();
  for (std::size_t s : perm) {
    simples.push_back(simples_[s]);
    pims.push_back(pims_[s]);
    labels_.push_back(label[s]);
  }
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t y = 0; y < count; ++y) cartan[x][y] = cartan_[perm[x]][perm[y]];
  simples_ = std::move(simples);
  pims_ = std::move(pims);
  cartan_ = std::move(cartan);
  for (std::size_t s = 0; s < count; ++s) {
    simples_[s].set_label(labels_[s].to_string());
    pims_[s].set_label(pim_label(s).to_string());
    if ((labels_[s].i == n) != projective_simple(s))
      throw std::logic_error("H1 calibration: " + labels_[s].to_string() + (projective_simple(s) ? " is" : " is not") +
                             " projective");
  }
}

// ---------------------------------------------------------------------------
// Export

nlohmann::ordered_json module_json(const Module& m) {
  nlohmann::ordered_json j;
  j["label"] = m.label();
  j["dim"] = m.dim();
  nlohmann::ordered_json mats = nlohmann::ordered_json::object();
  const auto& gens = m.algebra().presentation().gens;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    const Mat& a = m.action(static_cast<int>(g));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c).to_string());
      rows.push_back(std::move(row));
    }
    mats[gens[g].name] = std::move(rows);
  }
  j["actions"] = std::move(mats);
  return j;
}

namespace {

std::vector<std::pair<BasisLabel, long>> merged_terms(const DecompVector& d) {
  std::vector<std::pair<BasisLabel, long>> terms = d.simple_mults;
  terms.insert(terms.end(), d.proj_mults.begin(), d.proj_mults.end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return terms;
}

}  // namespace

nlohmann::ordered_json decomp_json(const DecompVector& d) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [l, m] : merged_terms(d)) out.push_back({{"label", l.to_string()}, {"mult", m}});
  return out;
}

std::string decomp_text(const DecompVector& d) {
  std::string s;
  for (const auto& [l, m] : merged_terms(d)) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + "·";
    s += l.to_string();
  }
  return s.empty() ? "0" : s;
}

std::size_t decomp_dim(const DecompVector& d, const ModuleSystem& sys) {
  std::size_t dim = 0;
  for (const auto& [l, m] : d.simple_mults) dim += static_cast<std::size_t>(m) * sys.dim_of(l);
  for (const auto& [l, m] : d.proj_mults) dim += static_cast<std::size_t>(m) * sys.dim_of(l);
  return dim;
}

}  // namespace hopfclass
