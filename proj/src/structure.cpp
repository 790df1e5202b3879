#include "hopfclass/structure.hpp"

#include "hopfclass/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hopfclass {

namespace {

Vec vec_of(const Algebra& h, const AlgElt& x) { return x.to_vec(h.dim()); }

void add3(Tensor3Elt& t, std::array<std::size_t, 3> k, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

std::vector<std::size_t> choose_elements(std::size_t dim, std::size_t samples, std::uint64_t seed) {
  std::vector<std::size_t> idx(dim);
  std::iota(idx.begin(), idx.end(), 0);
  if (dim <= samples) return idx;
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(samples);
  std::sort(idx.begin(), idx.end());
  return idx;
}

AlgElt power(const Algebra& h, int g, int e) { return h.word(Word(static_cast<std::size_t>(e), g)); }

/// dim A - dim rad(A) for a commutative subalgebra A given by a basis.
std::size_t semisimple_rank(const Algebra& h, const Subspace& a) {
  const std::size_t m = a.dim();
  if (m == 0) return 0;
  std::vector<Mat> left;
  for (std::size_t i = 0; i < m; ++i) {
    Mat l(m, m);
    const AlgElt zi = AlgElt::from_vec(a.basis()[i]);
    for (std::size_t j = 0; j < m; ++j) {
      auto c = a.coordinates(vec_of(h, h.mul(zi, AlgElt::from_vec(a.basis()[j]))));
      if (!c) throw std::logic_error("semisimple_rank: subspace is not closed under products");
      for (std::size_t r = 0; r < m; ++r) l(r, j) = (*c)[r];
    }
    left.push_back(std::move(l));
  }
  Mat gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) gram(i, j) = gram(j, i) = (left[i] * left[j]).trace();
  return m - bilinear_radical(gram, &h.field()).dim();
}

}  // namespace

// ---------------------------------------------------------------------------
// Context

AlgebraContext::AlgebraContext(AlgebraSpec spec, std::uint64_t seed)
    : spec_(std::move(spec)), seed_(seed), algebra_(build_algebra(spec_, seed)) {}

bool AlgebraContext::is_h0() const { return spec_.family == Family::Hpq && (!spec_.p || spec_.p->is_zero()); }
bool AlgebraContext::is_h1() const { return spec_.family == Family::Hpq && spec_.p && spec_.p->is_one(); }

const RadicalInfo& AlgebraContext::radical() const {
  std::call_once(radical_once_, [&] { radical_ = jacobson_radical(*algebra_); });
  return *radical_;
}

Module regular_representation(const Algebra& h) {
  std::vector<Mat> acts;
  for (int g = 0; g < h.num_generators(); ++g) acts.push_back(h.left_matrix(g));
  return Module(h, std::move(acts), "H");
}

// ---------------------------------------------------------------------------
// Hopf axioms

Report verify_hopf_axioms(const Algebra& h, std::size_t samples, std::uint64_t seed, unsigned jobs) {
  Report rep;
  rep.title = "Hopf axioms for " + h.presentation().name;
  const auto elems = choose_elements(h.dim(), samples, seed);
  rep.data["elements_checked"] = elems.size();
  rep.data["mode"] = elems.size() == h.dim() ? "full" : "sampled";
  const AlgElt one = h.one();
  // 0 = ok, bit 1 coassoc, 2 counit, 4 antipode
  std::vector<int> status(elems.size(), 0);
  parallel_for(elems.size(), jobs, [&](std::size_t k) {
    const std::size_t u = elems[k];
    const TensorElt& du = h.coproduct(u);
    Tensor3Elt lhs, rhs;
    AlgElt el, er, sl, sr;
    for (const auto& [xy, c] : du) {
      const auto [x, y] = xy;
      for (const auto& [x12, c2] : h.coproduct(x)) add3(lhs, {x12.first, x12.second, y}, c * c2);
      for (const auto& [y12, c3] : h.coproduct(y)) add3(rhs, {x, y12.first, y12.second}, c * c3);
      el.add_term(y, c * h.counit(x));
      er.add_term(x, c * h.counit(y));
      sl.add_scaled(h.mul(h.antipode(x), AlgElt::basis(y, c)), h.field().one());
      sr.add_scaled(h.mul(AlgElt::basis(x, c), h.antipode(y)), h.field().one());
    }
    int s = 0;
    if (lhs != rhs) s |= 1;
    const AlgElt bu = AlgElt::basis(u, h.field().one());
    if (!(el == bu) || !(er == bu)) s |= 2;
    const AlgElt unit = h.counit(u) * one;
    if (!(sl == unit) || !(sr == unit)) s |= 4;
    status[k] = s;
  });
  const char* names[] = {"coassociativity", "counit", "antipode"};
  for (int bit = 0; bit < 3; ++bit) {
    std::string witness;
    for (std::size_t k = 0; k < elems.size() && witness.empty(); ++k)
      if (status[k] & (1 << bit)) witness = "fails on " + h.basis_label(elems[k]);
    rep.add(names[bit], witness.empty(), witness);
  }
  // Coproduct, counit and antipode respect the defining relations.
  const auto rels = h.presentation().relations();
  std::string bad_delta, bad_eps, bad_s;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    TensorElt d;
    CycloNum e;
    AlgElt s;
    for (const auto& t : rels[r]) {
      for (const auto& [k, v] : h.coproduct_of_word(t.word)) add_term(d, k.first, k.second, t.coeff * v);
      CycloNum ev = h.field().one();
      AlgElt sv = h.one();
      for (int g : t.word) {
        ev *= h.presentation().counit[static_cast<std::size_t>(g)];
        sv = h.mul(h.evaluate(h.presentation().antipode[static_cast<std::size_t>(g)]), sv);
      }
      e.add_mul(t.coeff, ev);
      s.add_scaled(sv, t.coeff);
    }
    const std::string name = "relation " + std::to_string(r);
    if (!d.empty() && bad_delta.empty()) bad_delta = name;
    if (!e.is_zero() && bad_eps.empty()) bad_eps = name;
    if (!s.is_zero() && bad_s.empty()) bad_s = name;
  }
  rep.add("coproduct respects relations", bad_delta.empty(), bad_delta);
  rep.add("counit respects relations", bad_eps.empty(), bad_eps);
  rep.add("antipode respects relations", bad_s.empty(), bad_s);
  return rep;
}

// ---------------------------------------------------------------------------
// Tensor product isomorphism

Report tensor_iso_check(int n, std::uint64_t seed) {
  Report rep;
  rep.title = "H_n(q) ~ A_n(q) (x) A_n(q^-1), n=" + std::to_string(n);
  const Algebra src(make_presentation({Family::TensorTaft, n, std::nullopt}), 500, seed);
  const Algebra tgt(tensor_presentation(make_presentation({Family::Taft, n, std::nullopt}),
                                        make_presentation({Family::TaftOpp, n, std::nullopt})),
                    500, seed);
  rep.data["dim_source"] = src.dim();
  rep.data["dim_target"] = tgt.dim();
  if (!rep.add("dimensions agree", src.dim() == tgt.dim())) return rep;
  // Target generators: g, x, g1, x1.
  const int a = src.generator_index("a"), b = src.generator_index("b"), c = src.generator_index("c"),
            d = src.generator_index("d");
  std::vector<int> image(4);
  image[static_cast<std::size_t>(a)] = tgt.generator_index("x1");
  image[static_cast<std::size_t>(b)] = tgt.generator_index("g1");
  image[static_cast<std::size_t>(c)] = tgt.generator_index("g");
  image[static_cast<std::size_t>(d)] = tgt.generator_index("x");
  auto map_word = [&](const Word& w) {
    Word out;
    for (int g : w) out.push_back(image[static_cast<std::size_t>(g)]);
    return out;
  };
  std::vector<AlgElt> phi(src.dim());
  for (std::size_t u = 0; u < src.dim(); ++u) {
    Word w;
    const auto e = src.exponents(u);
    for (int g = 0; g < 4; ++g) w.insert(w.end(), static_cast<std::size_t>(e[static_cast<std::size_t>(g)]), g);
    phi[u] = tgt.word(map_word(w));
  }
  auto apply = [&](const AlgElt& x) {
    AlgElt out;
    for (const auto& [u, cu] : x.terms()) out.add_scaled(phi[u], cu);
    return out;
  };
  std::vector<Vec> cols;
  for (const auto& p : phi) cols.push_back(p.to_vec(tgt.dim()));
  rep.add("bijective", Subspace::span(tgt.dim(), cols).dim() == src.dim());

  std::string witness;
  for (const auto& rel : src.presentation().relations()) {
    AlgElt acc;
    for (const auto& t : rel) acc.add_scaled(tgt.word(map_word(t.word)), t.coeff);
    if (!acc.is_zero() && witness.empty()) witness = "a relation is not preserved";
  }
  rep.add("relations transported", witness.empty(), witness);
  rep.add("image of ba equals q times image of ab",
          apply(src.word({b, a})) == src.field().q() * apply(src.word({a, b})));

  witness.clear();
  std::size_t pairs = 0;
  const bool full = src.dim() <= 256;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, src.dim() - 1);
  const std::size_t total = full ? src.dim() * src.dim() : 20000;
  for (std::size_t k = 0; k < total && witness.empty(); ++k) {
    const std::size_t u = full ? k / src.dim() : pick(rng), v = full ? k % src.dim() : pick(rng);
    if (!(apply(src.mul_basis(u, v)) == tgt.mul(phi[u], phi[v])))
      witness = "product " + src.basis_label(u) + " * " + src.basis_label(v);
    ++pairs;
  }
  rep.data["product_pairs_checked"] = pairs;
  rep.add("algebra map", witness.empty(), witness);

  witness.clear();
  for (std::size_t u = 0; u < src.dim() && witness.empty(); ++u) {
    TensorElt lhs;
    for (const auto& [xy, cxy] : src.coproduct(u))
      for (const auto& [i, ci] : phi[xy.first].terms())
        for (const auto& [j, cj] : phi[xy.second].terms()) add_term(lhs, i, j, cxy * ci * cj);
    if (lhs != tgt.coproduct(phi[u])) witness = "coproduct of " + src.basis_label(u);
    else if (tgt.counit(phi[u]) != src.counit(u)) witness = "counit of " + src.basis_label(u);
    else if (!(apply(src.antipode(u)) == tgt.antipode(phi[u]))) witness = "antipode of " + src.basis_label(u);
  }
  rep.add("coalgebra map commuting with antipodes", witness.empty(), witness);
  return rep;
}

CycloNum skew_pairing_tau(const CycloField& field, const CycloNum& p, int i, int j, int k, int l) {
  if (j != k) return field.zero();
  const CycloNum pj = j == 0 ? field.one() : p.pow(j);
  return pj * field.q_pow(static_cast<long>(i) * l) * q_factorial(j, field);
}

// ---------------------------------------------------------------------------
// Idempotents

std::vector<AlgElt> group_idempotents(const Algebra& h) {
  const int n = h.n();
  const int b = h.generator_index("b"), c = h.generator_index("c");
  const auto& k = h.field();
  const CycloNum scale = k.rational(Rational(1, n * n));
  std::vector<AlgElt> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      AlgElt e;
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          std::vector<int> exps(static_cast<std::size_t>(h.num_generators()), 0);
          exps[static_cast<std::size_t>(b)] = s;
          exps[static_cast<std::size_t>(c)] = t;
          e.add_term(h.index_of(exps), scale * k.q_pow(-static_cast<long>(i) * s - static_cast<long>(j) * t));
        }
      out.push_back(std::move(e));
    }
  return out;
}

Report check_group_idempotents(const AlgebraContext& ctx) {
  const Algebra& h = ctx.algebra();
  const int n = h.n();
  Report rep;
  rep.title = "weight idempotents e_{i,j} of " + ctx.label();
  const auto e = group_idempotents(h);
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(((i % n + n) % n) * n + ((j % n + n) % n)); };
  std::string witness;
  for (std::size_t x = 0; x < e.size() && witness.empty(); ++x)
    for (std::size_t y = 0; y < e.size() && witness.empty(); ++y) {
      const AlgElt p = h.mul(e[x], e[y]);
      if (!(x == y ? p == e[x] : p.is_zero()))
        witness = "e" + std::to_string(x) + " * e" + std::to_string(y);
    }
  rep.add("orthogonal idempotents", witness.empty(), witness);
  AlgElt sum;
  for (const auto& x : e) sum += x;
  rep.add("sum is 1", sum == h.one());
  // Shifts as stated for the two algebras: a e_{i,j} = e_{i+1,j} a, d e_{i,j} = e_{i,j-1} d
  // for the tensor-product algebra; a e_{i,j} = e_{i+1,j+1} a, d e_{i,j} = e_{i-1,j-1} d for H_n(p,q).
  const bool tensor = ctx.spec().family == Family::TensorTaft;
  const int da_i = 1, da_j = tensor ? 0 : 1, dd_i = tensor ? 0 : -1, dd_j = -1;
  const AlgElt a = h.generator(h.generator_index("a")), d = h.generator(h.generator_index("d"));
  const AlgElt b = h.generator(h.generator_index("b")), c = h.generator(h.generator_index("c"));
  witness.clear();
  for (int i = 0; i < n && witness.empty(); ++i)
    for (int j = 0; j < n && witness.empty(); ++j) {
      const AlgElt& eij = e[idx(i, j)];
      if (!(h.mul(b, eij) == ctx.field().q_pow(i) * eij) || !(h.mul(c, eij) == ctx.field().q_pow(j) * eij))
        witness = "weights of e(" + std::to_string(i) + "," + std::to_string(j) + ")";
      else if (!(h.mul(a, eij) == h.mul(e[idx(i + da_i, j + da_j)], a)))
        witness = "a e(" + std::to_string(i) + "," + std::to_string(j) + ")";
      else if (!(h.mul(d, eij) == h.mul(e[idx(i + dd_i, j + dd_j)], d)))
        witness = "d e(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  if (ctx.spec().family == Family::TensorTaft || ctx.is_h0())
    rep.add("a and d move idempotents", witness.empty(), witness);
  else
    rep.data["a_d_shift_rule_holds"] = witness.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// Radical

RadicalInfo jacobson_radical(const Algebra& h) {
  const std::size_t dim = h.dim();
  const WeightLattice* lat = h.weights();
  std::vector<int> deg(dim, 0);
  if (lat)
    for (std::size_t u = 0; u < dim; ++u) deg[u] = h.degree(u);
  // t(w) = trace of left multiplication by w; nonzero only in degree 0.
  Vec t(dim);
  for (std::size_t w = 0; w < dim; ++w) {
    if (deg[w] != 0) continue;
    CycloNum s;
    for (std::size_t x = 0; x < dim; ++x) {
      const AlgElt& p = h.mul_basis(w, x);
      if (!p.is_zero()) s += p.coeff(x);
    }
    t[w] = s;
  }
  Mat gram(dim, dim);
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = 0; v < dim; ++v) {
      if (lat && lat->add(deg[u], deg[v]) != 0) continue;
      CycloNum s;
      for (const auto& [w, c] : h.mul_basis(u, v).terms())
        if (!t[w].is_zero()) s.add_mul(c, t[w]);
      gram(u, v) = s;
    }
  RadicalInfo info;
  info.ideal = bilinear_radical(gram, &h.field());

  // Right-ideal generators, homogeneous, found greedily.
  Subspace span(dim);
  auto consider = [&](const AlgElt& x) {
    if (x.is_zero() || span.contains(vec_of(h, x))) return;
    info.generators.push_back(x);
    for (std::size_t u = 0; u < dim; ++u) span.insert(vec_of(h, h.mul(x, AlgElt::basis(u, h.field().one()))));
  };
  for (int g = 0; g < h.num_generators() && span.dim() < info.ideal.dim(); ++g) {
    const AlgElt x = h.generator(g);
    if (info.ideal.contains(vec_of(h, x))) consider(x);
  }
  for (const auto& v : info.ideal.basis()) {
    if (span.dim() == info.ideal.dim()) break;
    std::map<int, AlgElt> parts;
    for (std::size_t u = 0; u < dim; ++u)
      if (!v[u].is_zero()) parts[deg[u]].add_term(u, v[u]);
    for (const auto& [dg, x] : parts) consider(x);
  }
  if (!(span == info.ideal)) throw std::logic_error("jacobson_radical: generators do not span the radical");

  info.powers.push_back(Subspace::full(h.field(), dim));
  info.powers.push_back(info.ideal);
  while (info.powers.back().dim() > 0) {
    if (info.powers.size() > dim + 2) throw std::logic_error("jacobson_radical: radical is not nilpotent");
    Subspace next(dim);
    for (const auto& g : info.generators)
      for (const auto& y : info.powers.back().basis()) next.insert(vec_of(h, h.mul(g, AlgElt::from_vec(y))));
    info.powers.push_back(std::move(next));
  }
  return info;
}

Report radical_report(const AlgebraContext& ctx) {
  const Algebra& h = ctx.algebra();
  const RadicalInfo& rad = ctx.radical();
  const std::size_t dim = h.dim();
  const int n = ctx.n();
  Report rep;
  rep.title = "Jacobson radical of " + ctx.label();
  rep.data["dim"] = dim;
  rep.data["dim_radical"] = rad.ideal.dim();
  rep.data["dim_quotient"] = dim - rad.ideal.dim();
  rep.data["loewy_length"] = rad.loewy_length();
  std::vector<std::size_t> power_dims;
  for (const auto& p : rad.powers) power_dims.push_back(p.dim());
  rep.data["power_dims"] = power_dims;
  rep.data["right_ideal_generators"] = rad.generators.size();

  rep.add("dimension n^4", dim == static_cast<std::size_t>(n * n * n * n));
  rep.add("nilpotent", rad.powers.back().dim() == 0);
  // Two-sided: closed under multiplication by generators on both sides.
  std::string witness;
  for (int g = 0; g < h.num_generators() && witness.empty(); ++g) {
    const AlgElt x = h.generator(g);
    for (const auto& y : rad.ideal.basis()) {
      const AlgElt ye = AlgElt::from_vec(y);
      if (!rad.ideal.contains(vec_of(h, h.mul(x, ye))) || !rad.ideal.contains(vec_of(h, h.mul(ye, x)))) {
        witness = "not closed under " + h.presentation().gens[static_cast<std::size_t>(g)].name;
        break;
      }
    }
  }
  rep.add("two-sided ideal", witness.empty(), witness);

  // Semisimple quotient: the trace form of H/J on the free coordinates is
  // nondegenerate.
  const auto free = rad.ideal.free_coordinates();
  const std::size_t m = free.size();
  std::vector<int> deg(dim, 0);
  const WeightLattice* lat = h.weights();
  if (lat)
    for (std::size_t u = 0; u < dim; ++u) deg[u] = h.degree(u);
  auto reduced_product = [&](std::size_t u, std::size_t v) {
    return rad.ideal.reduce(vec_of(h, h.mul_basis(u, v)));
  };
  Vec tq(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (deg[free[i]] != 0) continue;
    CycloNum s;
    for (std::size_t k = 0; k < m; ++k) s += reduced_product(free[i], free[k])[free[k]];
    tq[i] = s;
  }
  Mat gq(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (lat && lat->add(deg[free[i]], deg[free[j]]) != 0) continue;
      const Vec p = reduced_product(free[i], free[j]);
      CycloNum s;
      for (std::size_t k = 0; k < m; ++k)
        if (!tq[k].is_zero() && !p[free[k]].is_zero()) s.add_mul(p[free[k]], tq[k]);
      gq(i, j) = s;
    }
  rep.add("quotient is semisimple", m == 0 || bilinear_radical(gq, &h.field()).dim() == 0);

  if (ctx.spec().family == Family::TensorTaft || ctx.is_h0()) {
    rep.add("Loewy length 2n-1", rad.loewy_length() == 2 * n - 1,
            "measured " + std::to_string(rad.loewy_length()));
    rep.add("dim H/J = n^2", m == static_cast<std::size_t>(n * n));
    Subspace left(dim);
    const std::size_t ia = h.index_of({1, 0, 0, 0}), id = h.index_of({0, 0, 0, 1});
    for (std::size_t u = 0; u < dim; ++u) {
      left.insert(vec_of(h, h.mul_basis(u, ia)));
      left.insert(vec_of(h, h.mul_basis(u, id)));
    }
    rep.add("J = Ha + Hd", left == rad.ideal);

    // Basic: H/J is commutative of dimension n^2, so every simple is 1-dim.
    bool commutative = true;
    for (int g = 0; g < h.num_generators(); ++g)
      for (int k = g + 1; k < h.num_generators(); ++k) {
        const AlgElt x = h.generator(g), y = h.generator(k);
        commutative = commutative && rad.ideal.contains(vec_of(h, h.mul(x, y) - h.mul(y, x)));
      }
    rep.add("basic (H/J commutative)", commutative);

    // Hopf ideal: eps(J) = 0, S(J) in J, and Delta(J) vanishes in H/J (x) H/J.
    std::vector<Vec> cls(dim);
    for (std::size_t u = 0; u < dim; ++u) {
      Vec e(dim, h.field().zero());
      e[u] = h.field().one();
      cls[u] = rad.ideal.reduce(std::move(e));
    }
    std::string bad;
    for (const auto& yv : rad.ideal.basis()) {
      if (!bad.empty()) break;
      const AlgElt y = AlgElt::from_vec(yv);
      if (!h.counit(y).is_zero()) bad = "counit does not vanish";
      else if (!rad.ideal.contains(vec_of(h, h.antipode(y)))) bad = "antipode leaves J";
      else {
        std::map<std::pair<std::size_t, std::size_t>, CycloNum> image;
        for (const auto& [uv, c] : h.coproduct(y)) {
          const Vec& l = cls[uv.first];
          const Vec& r = cls[uv.second];
          for (std::size_t i = 0; i < dim; ++i) {
            if (l[i].is_zero()) continue;
            const CycloNum cl = c * l[i];
            for (std::size_t j = 0; j < dim; ++j)
              if (!r[j].is_zero()) image[{i, j}].add_mul(cl, r[j]);
          }
        }
        for (const auto& [ij, v] : image)
          if (!v.is_zero()) {
            bad = "coproduct not in J(x)H + H(x)J";
            break;
          }
      }
    }
    rep.add("J is a Hopf ideal", bad.empty(), bad);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Integrals and centre

Report integrals_and_symmetry(const AlgebraContext& ctx) {
  const Algebra& h = ctx.algebra();
  const std::size_t dim = h.dim();
  const int m = h.num_generators();
  Report rep;
  rep.title = "integrals and S^2 for " + ctx.label();
  Mat left(static_cast<std::size_t>(m) * dim, dim), right(static_cast<std::size_t>(m) * dim, dim);
  for (int g = 0; g < m; ++g) {
    const CycloNum eps = h.presentation().counit[static_cast<std::size_t>(g)];
    const Mat l = h.left_matrix(g), r = h.right_matrix(h.generator(g));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        left(static_cast<std::size_t>(g) * dim + i, j) = i == j ? l(i, j) - eps : l(i, j);
        right(static_cast<std::size_t>(g) * dim + i, j) = i == j ? r(i, j) - eps : r(i, j);
      }
  }
  const Subspace li = kernel_basis(left, &h.field()), ri = kernel_basis(right, &h.field());
  const bool unimodular = li == ri;
  rep.data["left_integral_dim"] = li.dim();
  rep.data["right_integral_dim"] = ri.dim();
  rep.data["unimodular"] = unimodular;
  rep.add("left integrals 1-dimensional", li.dim() == 1);
  rep.add("right integrals 1-dimensional", ri.dim() == 1);

  const int n = h.n();
  auto inner_by = [&](const char* name) {
    const int g = h.generator_index(name);
    const AlgElt x = h.generator(g), xinv = power(h, g, n - 1);
    for (std::size_t u = 0; u < dim; ++u) {
      const AlgElt s2 = h.antipode(h.antipode(u));
      if (!(s2 == h.mul(h.mul(x, AlgElt::basis(u, h.field().one())), xinv))) return false;
    }
    return true;
  };
  const bool by_b = inner_by("b"), by_c = inner_by("c");
  rep.data["s2_inner_by_b"] = by_b;
  rep.data["s2_inner_by_c"] = by_c;
  if (ctx.is_h0()) {
    rep.add("unimodular", unimodular);
    rep.add("S^2 is conjugation by b", by_b);
    rep.add("S^2 is conjugation by c", by_c);
  } else if (ctx.spec().family == Family::TensorTaft) {
    rep.add("not unimodular", !unimodular);
  }
  return rep;
}

std::vector<AlgElt> central_idempotents_h0(const Algebra& h) {
  const int n = h.n();
  const int b = h.generator_index("b"), c = h.generator_index("c");
  const auto& k = h.field();
  std::vector<AlgElt> out;
  for (int i = 0; i < n; ++i) {
    AlgElt e;
    for (int j = 0; j < n; ++j) {
      std::vector<int> exps(static_cast<std::size_t>(h.num_generators()), 0);
      exps[static_cast<std::size_t>(b)] = j;
      exps[static_cast<std::size_t>(c)] = (n - j) % n;
      e.add_term(h.index_of(exps), k.rational(Rational(1, n)) * k.q_pow(-static_cast<long>(i) * j));
    }
    out.push_back(std::move(e));
  }
  return out;
}

Report center_and_blocks(const AlgebraContext& ctx) {
  const Algebra& h = ctx.algebra();
  const std::size_t dim = h.dim();
  const int m = h.num_generators();
  const int n = ctx.n();
  Report rep;
  rep.title = "centre and blocks of " + ctx.label();
  Mat comm(static_cast<std::size_t>(m) * dim, dim);
  for (int g = 0; g < m; ++g) {
    const Mat l = h.left_matrix(g), r = h.right_matrix(h.generator(g));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) comm(static_cast<std::size_t>(g) * dim + i, j) = l(i, j) - r(i, j);
  }
  const Subspace z = kernel_basis(comm, &h.field());
  const std::size_t blocks = semisimple_rank(h, z);
  rep.data["center_dim"] = z.dim();
  rep.data["block_count"] = blocks;
  int expected = -1;
  if (ctx.spec().family == Family::TensorTaft) expected = 1;
  else if (ctx.is_h0()) expected = n;
  else if (ctx.is_h1()) expected = n * (n + 1) / 2;
  if (expected >= 0)
    rep.add("block count " + std::to_string(expected), blocks == static_cast<std::size_t>(expected),
            "measured " + std::to_string(blocks));

  if (ctx.is_h0()) {
    const auto e = central_idempotents_h0(h);
    const auto eij = group_idempotents(h);
    bool sums = true, central = true, orth = true, indec = true;
    AlgElt total;
    for (int i = 0; i < n; ++i) {
      AlgElt s;
      for (int j = 0; j < n; ++j) s += eij[static_cast<std::size_t>(((i + j) % n) * n + j)];
      sums = sums && s == e[static_cast<std::size_t>(i)];
      central = central && z.contains(vec_of(h, e[static_cast<std::size_t>(i)]));
      for (int k = 0; k < n; ++k) {
        const AlgElt p = h.mul(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(k)]);
        orth = orth && (i == k ? p == e[static_cast<std::size_t>(i)] : p.is_zero());
      }
      total += e[static_cast<std::size_t>(i)];
      std::vector<Vec> ez;
      for (const auto& zb : z.basis()) ez.push_back(vec_of(h, h.mul(e[static_cast<std::size_t>(i)], AlgElt::from_vec(zb))));
      indec = indec && semisimple_rank(h, Subspace::span(dim, ez)) == 1;
    }
    rep.add("e_i = sum_j e_{i+j,j}", sums);
    rep.add("e_i central", central);
    rep.add("e_i orthogonal idempotents", orth);
    rep.add("sum e_i = 1", total == h.one());
    rep.add("e_i primitive in the centre", indec);
  }
  return rep;
}

Report blocks_isomorphic_h0(const AlgebraContext& ctx) {
  const Algebra& h = ctx.algebra();
  const int n = ctx.n();
  const std::size_t dim = h.dim();
  Report rep;
  rep.title = "blocks of " + ctx.label();
  if (!ctx.is_h0()) throw std::invalid_argument("blocks_isomorphic_h0 needs H_n(0,q)");
  const auto e = central_idempotents_h0(h);
  const int a = h.generator_index("a"), b = h.generator_index("b"), d = h.generator_index("d");
  const std::size_t bs = static_cast<std::size_t>(n * n * n);
  std::vector<std::vector<Vec>> tables;
  bool indep = true, spans = true, unit = true, closed = true;
  for (int i = 0; i < n; ++i) {
    const AlgElt& ei = e[static_cast<std::size_t>(i)];
    std::vector<AlgElt> basis;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Word w(static_cast<std::size_t>(j), a);
          w.insert(w.end(), static_cast<std::size_t>(k), d);
          w.insert(w.end(), static_cast<std::size_t>(l), b);
          basis.push_back(h.mul(h.word(w), ei));
        }
    // Echelon form of [basis | identity] gives coordinates in this basis.
    std::vector<Vec> aug;
    for (std::size_t k = 0; k < bs; ++k) {
      Vec v = vec_of(h, basis[k]);
      v.resize(dim + bs);
      v[dim + k] = h.field().one();
      aug.push_back(std::move(v));
    }
    const Subspace ech = Subspace::span(dim + bs, aug);
    std::size_t rank = 0;
    for (auto p : ech.pivots()) rank += p < dim ? 1 : 0;
    indep = indep && rank == bs;
    std::vector<Vec> hei;
    for (std::size_t u = 0; u < dim; ++u) hei.push_back(vec_of(h, h.mul(AlgElt::basis(u, h.field().one()), ei)));
    spans = spans && Subspace::span(dim, hei).dim() == bs;
    auto coords = [&](const Vec& v) -> std::optional<Vec> {
      Vec c(bs);
      Vec residual = v;
      for (std::size_t r = 0; r < ech.dim(); ++r) {
        const std::size_t p = ech.pivots()[r];
        if (p >= dim) break;
        const CycloNum f = residual[p];
        if (f.is_zero()) continue;
        for (std::size_t k = 0; k < dim; ++k)
          if (!ech.basis()[r][k].is_zero()) residual[k].sub_mul(f, ech.basis()[r][k]);
        for (std::size_t k = 0; k < bs; ++k)
          if (!ech.basis()[r][dim + k].is_zero()) c[k].add_mul(f, ech.basis()[r][dim + k]);
      }
      if (!is_zero(residual)) return std::nullopt;
      return c;
    };
    if (!indep) break;
    std::vector<Vec> table;
    for (std::size_t x = 0; x < bs; ++x) {
      unit = unit && h.mul(ei, basis[x]) == basis[x] && h.mul(basis[x], ei) == basis[x];
      for (std::size_t y = 0; y < bs; ++y) {
        auto c = coords(vec_of(h, h.mul(basis[x], basis[y])));
        if (!c) {
          closed = false;
          c = Vec(bs);
        }
        table.push_back(std::move(*c));
      }
    }
    tables.push_back(std::move(table));
  }
  rep.data["block_dim"] = bs;
  rep.add("a^j d^k b^l e_i linearly independent", indep);
  if (!indep) return rep;
  rep.add("H e_i has dimension n^3", spans);
  rep.add("e_i is the unit of its block", unit);
  rep.add("block closed under products", closed);
  bool same = true;
  for (std::size_t i = 1; i < tables.size(); ++i) same = same && tables[i] == tables[0];
  rep.add("all blocks share one structure-constant table", same);
  return rep;
}

nlohmann::ordered_json structure_constants_json(const AlgebraContext& ctx) {
  const Algebra& h = ctx.algebra();
  nlohmann::ordered_json j;
  j["family"] = family_name(ctx.spec().family);
  j["n"] = ctx.n();
  if (ctx.spec().family == Family::Hpq) j["p"] = ctx.spec().p ? ctx.spec().p->to_string() : "0";
  auto& basis = j["basis"] = nlohmann::ordered_json::array();
  for (std::size_t u = 0; u < h.dim(); ++u) basis.push_back(h.exponents(u));
  auto& prods = j["products"] = nlohmann::ordered_json::array();
  for (std::size_t u = 0; u < h.dim(); ++u)
    for (std::size_t v = 0; v < h.dim(); ++v) {
      const AlgElt& p = h.mul_basis(u, v);
      if (p.is_zero()) continue;
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const auto& [w, c] : p.terms()) terms.push_back({w, c.to_string()});
      prods.push_back({u, v, std::move(terms)});
    }
  return j;
}

}  // namespace hopfclass
