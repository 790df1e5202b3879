#include "hopfclass/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hopfclass {

// ---------------------------------------------------------------------------
// AlgElt

AlgElt AlgElt::basis(std::size_t index, const CycloNum& coeff) {
  AlgElt x;
  x.add_term(index, coeff);
  return x;
}

CycloNum AlgElt::coeff(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? CycloNum() : it->second;
}

void AlgElt::add_term(std::size_t index, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgElt::add_scaled(const AlgElt& other, const CycloNum& s) {
  if (s.is_zero()) return;
  for (const auto& [k, c] : other.terms_) add_term(k, s * c);
}

AlgElt& AlgElt::operator+=(const AlgElt& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

AlgElt& AlgElt::operator-=(const AlgElt& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

AlgElt operator*(const CycloNum& s, const AlgElt& a) {
  AlgElt out;
  out.add_scaled(a, s);
  return out;
}

Vec AlgElt::to_vec(std::size_t dim) const {
  Vec v(dim);
  for (const auto& [k, c] : terms_) v.at(k) = c;
  return v;
}

AlgElt AlgElt::from_vec(const Vec& v) {
  AlgElt x;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) x.terms_.emplace(i, v[i]);
  }
  return x;
}

void add_term(TensorElt& t, std::size_t u, std::size_t v, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace({u, v}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

// ---------------------------------------------------------------------------
// Presentations

int Presentation::generator_index(const std::string& gname) const {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].name == gname) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown generator '" + gname + "' in " + name);
}

std::vector<std::vector<WordTerm>> Presentation::relations() const {
  std::vector<std::vector<WordTerm>> rels;
  const CycloNum one = field->one();
  for (const auto& r : swaps) {
    std::vector<WordTerm> rel;
    rel.push_back({one, {r.later, r.earlier}});
    rel.push_back({-r.coeff, {r.earlier, r.later}});
    for (const auto& t : r.extra) rel.push_back({-t.coeff, t.word});
    rels.push_back(std::move(rel));
  }
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::vector<WordTerm> rel;
    rel.push_back({one, Word(static_cast<std::size_t>(n), static_cast<int>(g))});
    if (gens[g].kind == GenKind::GroupLike) rel.push_back({-one, {}});
    rels.push_back(std::move(rel));
  }
  return rels;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Taft: return "taft";
    case Family::TaftOpp: return "taft-opp";
    case Family::TensorTaft: return "tensor-taft";
    case Family::Hpq: return "hpq";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "taft") return Family::Taft;
  if (name == "taft-opp") return Family::TaftOpp;
  if (name == "tensor-taft") return Family::TensorTaft;
  if (name == "hpq") return Family::Hpq;
  throw std::invalid_argument("unknown algebra family '" + name + "'");
}

std::string spec_label(const AlgebraSpec& spec) {
  std::string s = family_name(spec.family) + "(n=" + std::to_string(spec.n);
  if (spec.family == Family::Hpq) s += ", p=" + (spec.p ? spec.p->to_string() : std::string("0"));
  return s + ")";
}

namespace {

Word repeat(int g, int times) { return Word(static_cast<std::size_t>(times), g); }

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Group-like generator: coproduct g (x) g, counit 1, antipode g^{n-1}.
void add_grouplike_hopf(Presentation& p, int g) {
  const CycloNum one = p.field->one();
  p.coproduct[static_cast<std::size_t>(g)] = {{one, {g}, {g}}};
  p.counit[static_cast<std::size_t>(g)] = one;
  p.antipode[static_cast<std::size_t>(g)] = {{one, repeat(g, p.n - 1)}};
}

// Skew-primitive x with coproduct x (x) h + 1 (x) x, antipode -x h^{-1}.
void add_skew_primitive_hopf(Presentation& p, int x, int h) {
  const CycloNum one = p.field->one();
  p.coproduct[static_cast<std::size_t>(x)] = {{one, {x}, {h}}, {one, {}, {x}}};
  p.counit[static_cast<std::size_t>(x)] = p.field->zero();
  p.antipode[static_cast<std::size_t>(x)] = {{-one, concat({x}, repeat(h, p.n - 1))}};
}

void resize_hopf(Presentation& p) {
  p.coproduct.resize(p.gens.size());
  p.counit.resize(p.gens.size());
  p.antipode.resize(p.gens.size());
}

}  // namespace

Presentation make_presentation(const AlgebraSpec& spec) {
  Presentation p;
  p.n = spec.n;
  p.field = &CycloField::get(spec.n);
  const CycloField& k = *p.field;
  const CycloNum one = k.one();
  const CycloNum q = k.q();
  const CycloNum qinv = k.q_pow(-1);
  switch (spec.family) {
    case Family::Taft:
    case Family::TaftOpp: {
      const bool opp = spec.family == Family::TaftOpp;
      p.name = opp ? "A_n(q^-1)" : "A_n(q)";
      const std::string suffix = opp ? "1" : "";
      p.gens = {{"g" + suffix, GenKind::GroupLike}, {"x" + suffix, GenKind::Nilpotent}};
      // x g = q g x (resp. q^{-1})
      p.swaps = {{1, 0, opp ? qinv : q, {}}};
      resize_hopf(p);
      add_grouplike_hopf(p, 0);
      add_skew_primitive_hopf(p, 1, 0);
      break;
    }
    case Family::TensorTaft:
    case Family::Hpq: {
      const bool deformed = spec.family == Family::Hpq;
      p.name = deformed ? "H_n(p,q)" : "A_n(q)(x)A_n(q^-1)";
      p.gens = {{"a", GenKind::Nilpotent}, {"b", GenKind::GroupLike}, {"c", GenKind::GroupLike},
                {"d", GenKind::Nilpotent}};
      constexpr int a = 0, b = 1, c = 2, d = 3;
      if (!deformed) {
        // ba=qab, ca=ac, da=ad, cb=bc, db=bd, dc=qcd
        p.swaps = {{b, a, q, {}}, {c, a, one, {}}, {d, a, one, {}},
                   {c, b, one, {}}, {d, b, one, {}}, {d, c, q, {}}};
      } else {
        const CycloNum pp = spec.p ? *spec.p : k.zero();
        // ba=qab, ca=qac, da=qad+p(1-bc), cb=bc, db=qbd, dc=qcd
        std::vector<WordTerm> extra;
        if (!pp.is_zero()) extra = {{pp, {}}, {-pp, {b, c}}};
        p.swaps = {{b, a, q, {}}, {c, a, q, {}}, {d, a, q, extra},
                   {c, b, one, {}}, {d, b, q, {}}, {d, c, q, {}}};
      }
      resize_hopf(p);
      add_grouplike_hopf(p, b);
      add_grouplike_hopf(p, c);
      add_skew_primitive_hopf(p, a, b);
      add_skew_primitive_hopf(p, d, c);
      break;
    }
  }
  return p;
}

Presentation tensor_presentation(const Presentation& left, const Presentation& right) {
  if (left.field != right.field) throw std::invalid_argument("tensor_presentation: different fields");
  Presentation p;
  p.name = left.name + "(x)" + right.name;
  p.n = left.n;
  p.field = left.field;
  const int off = static_cast<int>(left.gens.size());
  auto shift = [off](Word w) {
    for (auto& g : w) g += off;
    return w;
  };
  p.gens = left.gens;
  for (const auto& g : right.gens) p.gens.push_back(g);
  p.swaps = left.swaps;
  for (const auto& r : right.swaps) {
    SwapRule s{r.later + off, r.earlier + off, r.coeff, {}};
    for (const auto& t : r.extra) s.extra.push_back({t.coeff, shift(t.word)});
    p.swaps.push_back(std::move(s));
  }
  for (int i = 0; i < off; ++i)
    for (int j = 0; j < static_cast<int>(right.gens.size()); ++j)
      p.swaps.push_back({j + off, i, p.field->one(), {}});
  p.coproduct = left.coproduct;
  p.counit = left.counit;
  p.antipode = left.antipode;
  for (std::size_t g = 0; g < right.gens.size(); ++g) {
    std::vector<CoproductTerm> cp;
    for (const auto& t : right.coproduct[g]) cp.push_back({t.coeff, shift(t.left), shift(t.right)});
    p.coproduct.push_back(std::move(cp));
    p.counit.push_back(right.counit[g]);
    std::vector<WordTerm> s;
    for (const auto& t : right.antipode[g]) s.push_back({t.coeff, shift(t.word)});
    p.antipode.push_back(std::move(s));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Weights

WeightLattice::WeightLattice(int n, std::vector<int> grouplike, std::vector<std::vector<int>> shifts)
    : n_(n), grouplike_(std::move(grouplike)) {
  for (std::size_t i = 0; i < grouplike_.size(); ++i) count_ *= n_;
  for (const auto& s : shifts) shift_ids_.push_back(encode(s));
}

int WeightLattice::grouplike_position(int g) const {
  for (std::size_t i = 0; i < grouplike_.size(); ++i)
    if (grouplike_[i] == g) return static_cast<int>(i);
  return -1;
}

std::vector<int> WeightLattice::decode(int w) const {
  std::vector<int> e(grouplike_.size());
  for (auto& x : e) {
    x = w % n_;
    w /= n_;
  }
  return e;
}

int WeightLattice::encode(const std::vector<int>& exps) const {
  int w = 0;
  for (std::size_t i = exps.size(); i-- > 0;) w = w * n_ + ((exps[i] % n_) + n_) % n_;
  return w;
}

int WeightLattice::add(int w, int delta) const {
  auto a = decode(w);
  const auto b = decode(delta);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return encode(a);
}

int WeightLattice::negate(int w) const {
  auto a = decode(w);
  for (auto& x : a) x = -x;
  return encode(a);
}

std::string WeightLattice::to_string(int w) const {
  std::string s = "(";
  const auto e = decode(w);
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

void Algebra::build_weights() {
  const int m = num_generators();
  std::vector<int> gl;
  for (int g = 0; g < m; ++g)
    if (pres_.gens[static_cast<std::size_t>(g)].kind == GenKind::GroupLike) gl.push_back(g);
  std::vector<std::vector<int>> shifts(static_cast<std::size_t>(m), std::vector<int>(gl.size(), 0));
  for (int g = 0; g < m; ++g) {
    if (pres_.gens[static_cast<std::size_t>(g)].kind == GenKind::GroupLike) continue;
    for (std::size_t k = 0; k < gl.size(); ++k) {
      const int h = gl[k];
      // h g = q^s g h means g raises the h-eigenvalue exponent by s.
      const SwapRule& r = g > h ? swap_rule(g, h) : swap_rule(h, g);
      if (!r.extra.empty()) return;
      const int e = field().q_log(r.coeff);
      if (e < 0) return;
      shifts[static_cast<std::size_t>(g)][k] = g > h ? (pres_.n - e) % pres_.n : e;
    }
  }
  weights_.emplace(pres_.n, std::move(gl), std::move(shifts));
}

int Algebra::degree(std::size_t index) const {
  if (!weights_) throw std::logic_error("algebra has no weight grading");
  const auto e = exponents(index);
  int w = 0;
  for (std::size_t g = 0; g < e.size(); ++g)
    for (int k = 0; k < e[g]; ++k) w = weights_->act(static_cast<int>(g), w);
  return w;
}

std::optional<int> Algebra::degree(const AlgElt& x) const {
  std::optional<int> d;
  for (const auto& [u, c] : x.terms()) {
    const int du = degree(u);
    if (d && *d != du) return std::nullopt;
    d = du;
  }
  return d ? d : std::optional<int>(0);
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(Presentation pres, std::size_t assoc_samples, std::uint64_t seed) : pres_(std::move(pres)) {
  const int m = num_generators();
  if (pres_.n < 3 || !pres_.field) throw std::invalid_argument("Algebra: presentation needs n >= 3 and a field");
  dim_ = 1;
  radix_.assign(static_cast<std::size_t>(m), 0);
  for (int i = m - 1; i >= 0; --i) {
    radix_[static_cast<std::size_t>(i)] = dim_;
    dim_ *= static_cast<std::size_t>(pres_.n);
  }
  swap_index_.assign(static_cast<std::size_t>(m * m), -1);
  for (std::size_t s = 0; s < pres_.swaps.size(); ++s) {
    const auto& r = pres_.swaps[s];
    if (r.later <= r.earlier) throw std::invalid_argument("Algebra: swap rule must have later > earlier");
    swap_index_[static_cast<std::size_t>(r.later * m + r.earlier)] = static_cast<int>(s);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j)
      if (swap_index_[static_cast<std::size_t>(i * m + j)] < 0)
        throw std::invalid_argument("Algebra: missing commutation rule for " + pres_.gens[static_cast<std::size_t>(i)].name +
                                    pres_.gens[static_cast<std::size_t>(j)].name);

  lmul_memo_.resize(static_cast<std::size_t>(m) * dim_);
  lmul_state_.assign(static_cast<std::size_t>(m) * dim_, 0);
  for (int g = 0; g < m; ++g)
    for (std::size_t u = 0; u < dim_; ++u) compute_lmul(g, u);

  product_once_ = std::make_unique<std::once_flag[]>(dim_ * dim_);
  product_memo_.resize(dim_ * dim_);
  coproduct_once_ = std::make_unique<std::once_flag[]>(dim_);
  coproduct_memo_.resize(dim_);
  antipode_once_ = std::make_unique<std::once_flag[]>(dim_);
  antipode_memo_.resize(dim_);

  check_associativity(assoc_samples, seed);
  build_weights();
}

std::vector<int> Algebra::exponents(std::size_t index) const {
  std::vector<int> e(radix_.size());
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    e[i] = static_cast<int>(index / radix_[i]);
    index %= radix_[i];
  }
  return e;
}

std::size_t Algebra::index_of(const std::vector<int>& exps) const {
  if (exps.size() != radix_.size()) throw std::invalid_argument("index_of: wrong number of exponents");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    if (exps[i] < 0 || exps[i] >= pres_.n) throw std::out_of_range("index_of: exponent out of range");
    idx += static_cast<std::size_t>(exps[i]) * radix_[i];
  }
  return idx;
}

std::string Algebra::basis_label(std::size_t index) const {
  const auto e = exponents(index);
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += pres_.gens[i].name;
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Algebra::to_string(const AlgElt& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*" + basis_label(k);
  }
  return s;
}

const SwapRule& Algebra::swap_rule(int later, int earlier) const {
  return pres_.swaps[static_cast<std::size_t>(swap_index_[static_cast<std::size_t>(later * num_generators() + earlier)])];
}

const AlgElt& Algebra::compute_lmul(int g, std::size_t m) const {
  const std::size_t slot = static_cast<std::size_t>(g) * dim_ + m;
  if (lmul_state_[slot] == 2) return *lmul_memo_[slot];
  if (lmul_state_[slot] == 1)
    throw std::logic_error("rewriting does not terminate at " + pres_.gens[static_cast<std::size_t>(g)].name + " * " +
                           basis_label(m));
  lmul_state_[slot] = 1;
  std::vector<int> e = exponents(m);
  int first = -1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0) {
      first = static_cast<int>(i);
      break;
    }
  }
  AlgElt result;
  const CycloNum one = field().one();
  if (first < 0 || g < first) {
    e[static_cast<std::size_t>(g)] = 1;
    result.add_term(index_of(e), one);
  } else if (g == first) {
    auto& eg = e[static_cast<std::size_t>(g)];
    if (eg + 1 < pres_.n) {
      ++eg;
      result.add_term(index_of(e), one);
    } else if (pres_.gens[static_cast<std::size_t>(g)].kind == GenKind::GroupLike) {
      eg = 0;
      result.add_term(index_of(e), one);
    }
  } else {
    // g * h * rest  with  g h = coeff h g + extra
    const SwapRule& rule = swap_rule(g, first);
    --e[static_cast<std::size_t>(first)];
    const std::size_t rest = index_of(e);
    const AlgElt moved = lmul_generator(first, compute_lmul(g, rest));
    result.add_scaled(moved, rule.coeff);
    for (const auto& t : rule.extra) result.add_scaled(apply_word(t.word, AlgElt::basis(rest, one)), t.coeff);
  }
  lmul_memo_[slot] = std::move(result);
  lmul_state_[slot] = 2;
  return *lmul_memo_[slot];
}

const AlgElt& Algebra::lmul_generator(int g, std::size_t m) const {
  const std::size_t slot = static_cast<std::size_t>(g) * dim_ + m;
  if (lmul_state_[slot] == 2) return *lmul_memo_[slot];
  return compute_lmul(g, m);
}

AlgElt Algebra::lmul_generator(int g, const AlgElt& x) const {
  AlgElt out;
  for (const auto& [k, c] : x.terms()) out.add_scaled(lmul_generator(g, k), c);
  return out;
}

AlgElt Algebra::apply_word(const Word& w, const AlgElt& x) const {
  AlgElt out = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = lmul_generator(*it, out);
  return out;
}

AlgElt Algebra::generator(int g) const { return lmul_generator(g, std::size_t{0}); }

AlgElt Algebra::word(const Word& w) const { return apply_word(w, one()); }

AlgElt Algebra::evaluate(const std::vector<WordTerm>& terms) const {
  AlgElt out;
  for (const auto& t : terms) out.add_scaled(word(t.word), t.coeff);
  return out;
}

AlgElt Algebra::monomial(const std::vector<int>& exps) const { return AlgElt::basis(index_of(exps), field().one()); }

const AlgElt& Algebra::mul_basis(std::size_t u, std::size_t v) const {
  const std::size_t slot = u * dim_ + v;
  std::call_once(product_once_[slot], [&] {
    const auto e = exponents(u);
    AlgElt x = AlgElt::basis(v, field().one());
    for (int g = num_generators() - 1; g >= 0; --g)
      for (int k = 0; k < e[static_cast<std::size_t>(g)]; ++k) x = lmul_generator(g, x);
    product_memo_[slot] = std::move(x);
  });
  return product_memo_[slot];
}

AlgElt Algebra::mul(const AlgElt& x, const AlgElt& y) const {
  AlgElt out;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) out.add_scaled(mul_basis(u, v), cu * cv);
  return out;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (std::size_t u = 0; u < dim_; ++u) {
    if (x[u].is_zero()) continue;
    for (std::size_t v = 0; v < dim_; ++v) {
      if (y[v].is_zero()) continue;
      const CycloNum s = x[u] * y[v];
      for (const auto& [w, c] : mul_basis(u, v).terms()) out[w].add_mul(s, c);
    }
  }
  return out;
}

Vec Algebra::mul_right_basis(const Vec& x, std::size_t v) const {
  Vec out(dim_);
  for (std::size_t u = 0; u < dim_; ++u) {
    if (x[u].is_zero()) continue;
    for (const auto& [w, c] : mul_basis(u, v).terms()) out[w].add_mul(x[u], c);
  }
  return out;
}

Mat Algebra::left_matrix(int g) const {
  Mat m(dim_, dim_);
  for (std::size_t u = 0; u < dim_; ++u)
    for (const auto& [w, c] : lmul_generator(g, u).terms()) m(w, u) = c;
  return m;
}

Mat Algebra::left_matrix(const AlgElt& y) const {
  Mat m(dim_, dim_);
  for (std::size_t u = 0; u < dim_; ++u)
    for (const auto& [v, cv] : y.terms())
      for (const auto& [w, c] : mul_basis(v, u).terms()) m(w, u).add_mul(cv, c);
  return m;
}

Mat Algebra::right_matrix(const AlgElt& y) const {
  Mat m(dim_, dim_);
  for (std::size_t u = 0; u < dim_; ++u)
    for (const auto& [v, cv] : y.terms())
      for (const auto& [w, c] : mul_basis(u, v).terms()) m(w, u).add_mul(cv, c);
  return m;
}

// ---------------------------------------------------------------------------
// Hopf structure

TensorElt Algebra::tensor_mul(const TensorElt& x, const TensorElt& y) const {
  TensorElt out;
  for (const auto& [ab, c1] : x) {
    for (const auto& [st, c2] : y) {
      const AlgElt& left = mul_basis(ab.first, st.first);
      if (left.is_zero()) continue;
      const AlgElt& right = mul_basis(ab.second, st.second);
      const CycloNum c = c1 * c2;
      for (const auto& [l, cl] : left.terms())
        for (const auto& [r, cr] : right.terms()) add_term(out, l, r, c * cl * cr);
    }
  }
  return out;
}

TensorElt Algebra::generator_coproduct(int g) const {
  TensorElt out;
  for (const auto& t : pres_.coproduct[static_cast<std::size_t>(g)]) {
    const AlgElt l = word(t.left), r = word(t.right);
    for (const auto& [i, ci] : l.terms())
      for (const auto& [j, cj] : r.terms()) add_term(out, i, j, t.coeff * ci * cj);
  }
  return out;
}

TensorElt Algebra::coproduct_of_word(const Word& w) const {
  TensorElt acc;
  add_term(acc, 0, 0, field().one());
  for (int g : w) acc = tensor_mul(acc, generator_coproduct(g));
  return acc;
}

const TensorElt& Algebra::coproduct(std::size_t u) const {
  std::call_once(coproduct_once_[u], [&] {
    TensorElt out;
    if (u == 0) {
      add_term(out, 0, 0, field().one());
    } else {
      auto e = exponents(u);
      std::size_t g = 0;
      while (e[g] == 0) ++g;
      --e[g];
      out = tensor_mul(generator_coproduct(static_cast<int>(g)), coproduct(index_of(e)));
    }
    coproduct_memo_[u] = std::move(out);
  });
  return coproduct_memo_[u];
}

TensorElt Algebra::coproduct(const AlgElt& x) const {
  TensorElt out;
  for (const auto& [u, c] : x.terms())
    for (const auto& [k, v] : coproduct(u)) add_term(out, k.first, k.second, c * v);
  return out;
}

CycloNum Algebra::counit(std::size_t u) const {
  const auto e = exponents(u);
  CycloNum acc = field().one();
  for (std::size_t g = 0; g < e.size(); ++g) {
    if (e[g] > 0) acc *= pres_.counit[g].pow(e[g]);
  }
  return acc;
}

CycloNum Algebra::counit(const AlgElt& x) const {
  CycloNum acc = field().zero();
  for (const auto& [u, c] : x.terms()) acc.add_mul(c, counit(u));
  return acc;
}

const AlgElt& Algebra::antipode(std::size_t u) const {
  std::call_once(antipode_once_[u], [&] {
    AlgElt out;
    if (u == 0) {
      out = one();
    } else {
      auto e = exponents(u);
      std::size_t g = 0;
      while (e[g] == 0) ++g;
      --e[g];
      out = mul(antipode(index_of(e)), evaluate(pres_.antipode[g]));
    }
    antipode_memo_[u] = std::move(out);
  });
  return antipode_memo_[u];
}

AlgElt Algebra::antipode(const AlgElt& x) const {
  AlgElt out;
  for (const auto& [u, c] : x.terms()) out.add_scaled(antipode(u), c);
  return out;
}

void Algebra::check_associativity(std::size_t samples, std::uint64_t seed) const {
  const int m = num_generators();
  auto fail = [&](const std::string& what) {
    throw std::logic_error("rewriting system for " + pres_.name + " is not associative: " + what);
  };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        const AlgElt lhs = mul(word({x, y}), generator(z));
        const AlgElt rhs = mul(generator(x), word({y, z}));
        if (!(lhs == rhs))
          fail(pres_.gens[static_cast<std::size_t>(x)].name + pres_.gens[static_cast<std::size_t>(y)].name +
               pres_.gens[static_cast<std::size_t>(z)].name);
      }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, dim_ - 1);
  const CycloNum one = field().one();
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t u = pick(rng), v = pick(rng), w = pick(rng);
    const AlgElt lhs = mul(mul_basis(u, v), AlgElt::basis(w, one));
    const AlgElt rhs = mul(AlgElt::basis(u, one), mul_basis(v, w));
    if (!(lhs == rhs)) fail("(" + basis_label(u) + ")(" + basis_label(v) + ")(" + basis_label(w) + ")");
  }
}

std::unique_ptr<Algebra> build_algebra(const AlgebraSpec& spec, std::uint64_t seed) {
  if (spec.n < 3) throw std::invalid_argument("build_algebra: n must be >= 3");
  return std::make_unique<Algebra>(make_presentation(spec), 500, seed);
}

}  // namespace hopfclass
