#include "hopfclass/green_ring.hpp"

#include "hopfclass/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hopfclass {

namespace {

int mod(long a, int n) { return static_cast<int>(((a % n) + n) % n); }

/// Integer part of (t+1)/2.
int c_of(int t) {
  const int v = t + 1;
  return v >= 0 ? v / 2 : -((1 - v) / 2);
}

long binom(long m, long k) {
  if (k < 0 || m < 0 || k > m) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return r.get_si();
}

/// num / den, which must divide exactly.
long exact_div(long num, long den) {
  if (den == 0 || num % den != 0)
    throw std::logic_error("non-integral coefficient " + std::to_string(num) + "/" + std::to_string(den));
  return num / den;
}

BasisLabel V(int l, int r, int n) { return {LabelKind::V, l, mod(r, n)}; }
BasisLabel S(int i, int j, int n) { return {LabelKind::S, mod(i, n), mod(j, n)}; }
BasisLabel P(int i, int j, int n) { return {LabelKind::P, mod(i, n), mod(j, n)}; }

RingElt h1_fusion(int n, BasisLabel a, BasisLabel b, CaseCoverage* cov) {
  RingElt out;
  int l = 0, lp = 0, tcur = 0;
  auto fail = [&](const std::string& why) {
    return std::logic_error("no tensor product rule for " + a.to_string() + " (x) " + b.to_string() + " (l=" +
                            std::to_string(l) + ", l'=" + std::to_string(lp) + ", t=" + std::to_string(tcur) +
                            "): " + why);
  };
  auto putV = [&](int len, int r, long m) {
    if (len < 1 || len > n) throw fail("V length " + std::to_string(len) + " out of range");
    add_to(out, V(len, r, n), m);
  };
  // P(n, r) is V(n, r).
  auto putP = [&](int len, int r, long m) {
    if (len < 1 || len > n) throw fail("P length " + std::to_string(len) + " out of range");
    add_to(out, len == n ? V(n, r, n) : BasisLabel{LabelKind::Pr, len, mod(r, n)}, m);
  };
  auto hit = [&](int c) {
    if (cov) ++cov->hits[static_cast<std::size_t>(c)];
  };

  const bool av = a.kind == LabelKind::V, bv = b.kind == LabelKind::V;
  if (!av && a.kind != LabelKind::Pr) throw fail("not a class label of H_n(1,q)");
  if (!bv && b.kind != LabelKind::Pr) throw fail("not a class label of H_n(1,q)");
  for (const BasisLabel& x : {a, b}) {
    const int top = x.kind == LabelKind::V ? n : n - 1;
    if (x.i < 1 || x.i > top || x.j < 0 || x.j >= n) throw fail(x.to_string() + " is out of range");
  }

  if (av && bv) {
    if (a.i > b.i) std::swap(a, b);
    l = a.i;
    lp = b.i;
    const int r = a.j + b.j;
    tcur = l + lp - (n + 1);
    if (l == 1) {
      hit(1);
      putV(lp, r, 1);
    } else if (l + lp <= n + 1) {
      hit(3);
      for (int i = 0; i <= l - 1; ++i) putV(l + lp - 1 - 2 * i, r + i, 1);
    } else {
      hit(4);
      const int t = tcur;
      for (int i = c_of(t); i <= t; ++i) putP(l + lp - 1 - 2 * i, r + i, 1);
      for (int i = t + 1; i <= l - 1; ++i) putV(l + lp - 1 - 2 * i, r + i, 1);
    }
    return out;
  }

  if (av || bv) {
    const BasisLabel v = av ? a : b, p = av ? b : a;
    l = v.i;
    lp = p.i;
    const int r = v.j + p.j;
    tcur = l + lp - (n + 1);
    const int t = tcur;
    if (l == 1) {
      hit(2);
      putP(lp, r, 1);
    } else if (l == n) {
      hit(9);
      for (int i = c_of(lp - 1); i <= lp - 1; ++i) putP(n + lp - 1 - 2 * i, r + i, 2);
      for (int i = 1; i <= c_of(n - lp); ++i) putP(lp - 1 + 2 * i, r - i, 2);
    } else if (l <= lp) {
      if (l + lp <= n) {
        hit(5);
        for (int i = 0; i <= l - 1; ++i) putP(l + lp - 1 - 2 * i, r + i, 1);
      } else {
        hit(6);
        for (int i = c_of(t); i <= t; ++i) putP(l + lp - 1 - 2 * i, r + i, 2);
        for (int i = t + 1; i <= l - 1; ++i) putP(l + lp - 1 - 2 * i, r + i, 1);
      }
    } else {
      if (l + lp <= n) {
        hit(7);
        for (int i = 0; i <= lp - 1; ++i) putP(l + lp - 1 - 2 * i, r + i, 1);
        for (int i = c_of(l + lp - 1); i <= l - 1; ++i) putP(n + l + lp - 1 - 2 * i, r + i, 2);
      } else {
        hit(8);
        for (int i = c_of(t); i <= t; ++i) putP(l + lp - 1 - 2 * i, r + i, 2);
        for (int i = t + 1; i <= lp - 1; ++i) putP(l + lp - 1 - 2 * i, r + i, 1);
        for (int i = c_of(l + lp - 1); i <= l - 1; ++i) putP(n + l + lp - 1 - 2 * i, r + i, 2);
      }
    }
    return out;
  }

  if (a.i > b.i) std::swap(a, b);
  l = a.i;
  lp = b.i;
  const int r = a.j + b.j;
  tcur = l + lp - (n + 1);
  const int t = tcur;
  if (l + lp <= n) {
    hit(10);
    for (int i = 0; i <= l - 1; ++i) putP(l + lp - 1 - 2 * i, r + i, 2);
    for (int i = lp; i <= lp + l - 1; ++i) putP(n + l + lp - 1 - 2 * i, r + i, 2);
    for (int i = c_of(lp + l - 1); i <= lp - 1; ++i) putP(n + l + lp - 1 - 2 * i, r + i, 4);
    for (int i = 1; i <= c_of(n - l - lp); ++i) putP(l + lp - 1 + 2 * i, r - i, 4);
  } else {
    hit(11);
    for (int i = c_of(t); i <= t; ++i) putP(l + lp - 1 - 2 * i, r + i, 4);
    for (int i = t + 1; i <= l - 1; ++i) putP(l + lp - 1 - 2 * i, r + i, 2);
    for (int i = lp; i <= n - 1; ++i) putP(n + l + lp - 1 - 2 * i, r + i, 2);
    for (int i = c_of(lp + l - 1); i <= lp - 1; ++i) putP(n + l + lp - 1 - 2 * i, r + i, 4);
  }
  return out;
}

std::string label_list(const std::vector<BasisLabel>& labels) {
  std::string s;
  for (const auto& l : labels) s += (s.empty() ? "" : " ") + l.to_string();
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring elements

void add_to(RingElt& x, const BasisLabel& label, long mult) {
  if (mult == 0) return;
  auto [it, fresh] = x.try_emplace(label, mult);
  if (!fresh && (it->second += mult) == 0) x.erase(it);
}

RingElt add(RingElt x, const RingElt& y, long scale) {
  for (const auto& [l, m] : y) add_to(x, l, scale * m);
  return x;
}

std::string ring_text(const RingElt& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [l, m] : x) {
    if (s.empty())
      s += m < 0 ? "-" : "";
    else
      s += m < 0 ? " - " : " + ";
    const long a = m < 0 ? -m : m;
    if (a != 1) s += std::to_string(a) + "·";
    s += l.to_string();
  }
  return s;
}

nlohmann::ordered_json ring_json(const RingElt& x) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [l, m] : x) out.push_back({{"label", l.to_string()}, {"mult", m}});
  return out;
}

RingElt to_ring(const DecompVector& d) {
  RingElt x;
  for (const auto& [l, m] : d.simple_mults) add_to(x, l, m);
  for (const auto& [l, m] : d.proj_mults) add_to(x, l, m);
  return x;
}

ClassFamily class_family(const AlgebraSpec& spec) {
  if (spec.family == Family::TensorTaft) return ClassFamily::TensorTaft;
  if (spec.family == Family::Hpq) {
    if (!spec.p || spec.p->is_zero()) return ClassFamily::H0;
    if (spec.p->is_one()) return ClassFamily::H1;
  }
  throw std::invalid_argument("no projective class ring for " + spec_label(spec));
}

std::string class_family_name(ClassFamily f) {
  switch (f) {
    case ClassFamily::TensorTaft: return "tensor-taft";
    case ClassFamily::H0: return "hpq(p=0)";
    case ClassFamily::H1: return "hpq(p=1)";
  }
  return "?";
}

std::vector<BasisLabel> class_basis(ClassFamily f, int n) {
  std::vector<BasisLabel> out;
  if (f == ClassFamily::H1) {
    for (int l = 1; l <= n; ++l)
      for (int r = 0; r < n; ++r) out.push_back({LabelKind::V, l, r});
    for (int l = 1; l < n; ++l)
      for (int r = 0; r < n; ++r) out.push_back({LabelKind::Pr, l, r});
    return out;
  }
  for (auto kind : {LabelKind::S, LabelKind::P})
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.push_back({kind, i, j});
  return out;
}

long class_dim(ClassFamily f, int n, const BasisLabel& label) {
  switch (label.kind) {
    case LabelKind::S: return 1;
    case LabelKind::P: return static_cast<long>(n) * n;
    case LabelKind::V: return label.i;
    case LabelKind::Pr: return 2L * n;
  }
  (void)f;
  return 0;
}

std::vector<int> CaseCoverage::missing() const {
  std::vector<int> out;
  for (int c = 1; c <= 11; ++c)
    if (hits[static_cast<std::size_t>(c)] == 0) out.push_back(c);
  return out;
}

RingElt closed_form_fusion(ClassFamily f, int n, const BasisLabel& a, const BasisLabel& b, CaseCoverage* coverage) {
  if (f == ClassFamily::H1) return h1_fusion(n, a, b, coverage);
  auto check = [&](const BasisLabel& x) {
    if (x.kind != LabelKind::S && x.kind != LabelKind::P)
      throw std::logic_error("label " + x.to_string() + " does not belong to " + class_family_name(f));
  };
  check(a);
  check(b);
  for (const BasisLabel& x : {a, b})
    if (x.i < 0 || x.i >= n || x.j < 0 || x.j >= n) throw std::logic_error("label " + x.to_string() + " is out of range");
  RingElt out;
  if (!a.is_projective() && !b.is_projective()) {
    add_to(out, S(a.i + b.i, a.j + b.j, n), 1);
  } else if (!a.is_projective() || !b.is_projective()) {
    add_to(out, P(a.i + b.i, a.j + b.j, n), 1);
  } else if (f == ClassFamily::TensorTaft) {
    for (int r = 0; r < n; ++r)
      for (int t = 0; t < n; ++t) add_to(out, P(r, t, n), 1);
  } else {
    for (int t = 0; t < n; ++t) add_to(out, P(a.i + b.i + t, a.j + b.j + t, n), n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tables

FusionTable::FusionTable(ClassFamily family, int n, std::vector<BasisLabel> basis)
    : family_(family), n_(n), basis_(std::move(basis)), entries_(basis_.size() * basis_.size()) {
  for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
}

std::size_t FusionTable::index(const BasisLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw std::invalid_argument("label " + label.to_string() + " is not in the table basis");
  return it->second;
}

RingElt FusionTable::mul(const RingElt& x, const RingElt& y) const {
  RingElt out;
  for (const auto& [a, ca] : x) {
    const std::size_t ia = index(a);
    for (const auto& [b, cb] : y) out = add(std::move(out), product(ia, index(b)), ca * cb);
  }
  return out;
}

RingElt FusionTable::pow(const RingElt& x, int e) const {
  RingElt out = unit();
  for (int k = 0; k < e; ++k) out = mul(out, x);
  return out;
}

RingElt FusionTable::unit() const {
  return cls(family_ == ClassFamily::H1 ? BasisLabel{LabelKind::V, 1, 0} : BasisLabel{LabelKind::S, 0, 0});
}

nlohmann::ordered_json FusionTable::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = class_family_name(family_);
  j["n"] = n_;
  auto labels = nlohmann::ordered_json::array();
  for (const auto& l : basis_) labels.push_back(l.to_string());
  j["basis"] = labels;
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < basis_.size(); ++a)
    for (std::size_t b = 0; b < basis_.size(); ++b)
      entries.push_back({{"a", basis_[a].to_string()}, {"b", basis_[b].to_string()}, {"result", ring_json(product(a, b))}});
  j["entries"] = entries;
  return j;
}

std::string FusionTable::to_csv() const {
  std::ostringstream os;
  os << "a,b,label,mult\n";
  for (std::size_t a = 0; a < basis_.size(); ++a)
    for (std::size_t b = 0; b < basis_.size(); ++b)
      for (const auto& [l, m] : product(a, b))
        os << '"' << basis_[a].to_string() << "\",\"" << basis_[b].to_string() << "\",\"" << l.to_string() << "\","
           << m << '\n';
  return os.str();
}

FusionTable closed_form_table(ClassFamily f, int n, CaseCoverage* coverage) {
  FusionTable t(f, n, class_basis(f, n));
  const auto& basis = t.basis();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) t.set(a, b, closed_form_fusion(f, n, basis[a], basis[b], coverage));
  return t;
}

FusionTable computed_table(const ModuleSystem& sys, unsigned jobs) {
  const ClassFamily f = class_family(sys.context().spec());
  const int n = sys.context().n();
  FusionTable t(f, n, class_basis(f, n));
  const auto& basis = t.basis();
  const std::size_t m = basis.size();
  std::vector<RingElt> results(m * m);
  parallel_for(m * m, jobs, [&](std::size_t k) {
    const Module prod = tensor_module(sys.module_of(basis[k / m]), sys.module_of(basis[k % m]));
    results[k] = to_ring(sys.decompose(prod));
  });
  for (std::size_t k = 0; k < m * m; ++k) t.set(k / m, k % m, std::move(results[k]));
  return t;
}

Report crosscheck(const FusionTable& expected, const FusionTable& computed) {
  Report rep;
  rep.title = "closed form vs computed, " + class_family_name(expected.family()) + " n=" + std::to_string(expected.n());
  const bool same_basis = expected.basis() == computed.basis();
  if (!rep.add("same basis", same_basis,
               same_basis ? "" : label_list(expected.basis()) + " vs " + label_list(computed.basis())))
    return rep;
  const auto& basis = expected.basis();
  std::size_t mismatches = 0;
  std::string first;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (expected.product(a, b) == computed.product(a, b)) continue;
      if (mismatches++ == 0)
        first = basis[a].to_string() + " (x) " + basis[b].to_string() + ": closed form " +
                ring_text(expected.product(a, b)) + ", computed " + ring_text(computed.product(a, b));
    }
  rep.data["entries"] = basis.size() * basis.size();
  rep.data["mismatches"] = mismatches;
  rep.add("all entries agree", mismatches == 0, first);
  return rep;
}

Report ring_axioms(const FusionTable& t, std::size_t full_limit, std::size_t samples, std::uint64_t seed) {
  Report rep;
  rep.title = "ring axioms, " + class_family_name(t.family()) + " n=" + std::to_string(t.n());
  const auto& basis = t.basis();
  const std::size_t m = basis.size();
  const int n = t.n();

  std::string witness;
  for (std::size_t a = 0; a < m && witness.empty(); ++a)
    for (std::size_t b = a + 1; b < m && witness.empty(); ++b)
      if (t.product(a, b) != t.product(b, a)) witness = basis[a].to_string() + ", " + basis[b].to_string();
  rep.add("commutative", witness.empty(), witness);

  witness.clear();
  const RingElt one = t.unit();
  for (std::size_t a = 0; a < m && witness.empty(); ++a) {
    const RingElt x = FusionTable::cls(basis[a]);
    if (t.mul(one, x) != x || t.mul(x, one) != x) witness = basis[a].to_string();
  }
  rep.add("trivial class is the unit", witness.empty(), witness);

  witness.clear();
  bool nonnegative = true;
  for (std::size_t a = 0; a < m && witness.empty(); ++a)
    for (std::size_t b = 0; b < m && witness.empty(); ++b) {
      long d = 0;
      for (const auto& [l, c] : t.product(a, b)) {
        d += c * class_dim(t.family(), n, l);
        nonnegative = nonnegative && c > 0;
      }
      if (d != class_dim(t.family(), n, basis[a]) * class_dim(t.family(), n, basis[b]))
        witness = basis[a].to_string() + " (x) " + basis[b].to_string() + " has dim " + std::to_string(d);
    }
  rep.add("dimensions multiply", witness.empty(), witness);
  rep.add("coefficients nonnegative", nonnegative);

  witness.clear();
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    const RingElt x = FusionTable::cls(basis[a]), z = FusionTable::cls(basis[c]);
    const RingElt lhs = t.mul(t.product(a, b), z);
    const RingElt rhs = t.mul(x, t.product(b, c));
    if (lhs != rhs && witness.empty())
      witness = "(" + basis[a].to_string() + " " + basis[b].to_string() + ") " + basis[c].to_string() + ": " +
                ring_text(lhs) + " vs " + ring_text(rhs);
  };
  std::size_t triples = 0;
  if (m <= full_limit) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c, ++triples) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (; triples < samples; ++triples) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      assoc(a, b, c);
    }
  }
  rep.data["associativity_triples"] = triples;
  rep.add("associative", witness.empty(), witness);
  return rep;
}

// ---------------------------------------------------------------------------
// Polynomials and presentations

Poly Poly::constant(int vars, long c) {
  Poly p;
  if (c != 0) p.terms[std::vector<int>(static_cast<std::size_t>(vars), 0)] = c;
  return p;
}

Poly Poly::var(int vars, int v, int power) {
  Poly p;
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  e[static_cast<std::size_t>(v)] = power;
  p.terms[e] = 1;
  return p;
}

int Poly::vars() const { return terms.empty() ? 0 : static_cast<int>(terms.begin()->first.size()); }

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms)
    if ((terms[e] += c) == 0) terms.erase(e);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms)
    if ((terms[e] -= c) == 0) terms.erase(e);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      if ((out.terms[e] += ca * cb) == 0) out.terms.erase(e);
    }
  return out;
}

Poly operator*(long c, Poly a) {
  if (c == 0) return {};
  for (auto& [e, v] : a.terms) v *= c;
  return a;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::string s;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      mono += (mono.empty() ? "" : "*") + names[k];
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    const long a = c < 0 ? -c : c;
    s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (mono.empty())
      s += std::to_string(a);
    else
      s += (a == 1 ? "" : std::to_string(a) + "*") + mono;
  }
  return s;
}

namespace {

/// sum_{i=0}^{[m/2]} (-1)^i m/(m-i) C(m-i,i) x^i y^{m-2i}; for m = 0 this is 2.
Poly lucas_like(int m) {
  if (m == 0) return Poly::constant(2, 2);
  Poly p;
  for (int i = 0; 2 * i <= m; ++i) {
    const long c = exact_div(static_cast<long>(m) * binom(m - i, i), m - i);
    p += (i % 2 ? -c : c) * (Poly::var(2, 0, i) * Poly::var(2, 1, m - 2 * i));
  }
  return p;
}

/// sum_{i=0}^{[(m-1)/2]} (-1)^i C(m-1-i,i) x^i y^{m-1-2i}
Poly chebyshev_like(int m) {
  Poly p;
  for (int i = 0; 2 * i <= m - 1; ++i) {
    const long c = binom(m - 1 - i, i);
    p += (i % 2 ? -c : c) * (Poly::var(2, 0, i) * Poly::var(2, 1, m - 1 - 2 * i));
  }
  return p;
}

std::vector<long> coords(const FusionTable& t, const RingElt& x) {
  std::vector<long> v(t.basis().size(), 0);
  for (const auto& [l, c] : x) v[t.index(l)] = c;
  return v;
}

}  // namespace

PresentationSpec class_ring_presentation(ClassFamily f, int n) {
  PresentationSpec s;
  if (f == ClassFamily::H1) {
    s.name = "r_p(H_" + std::to_string(n) + "(1,q))";
    s.variables = {"x", "y"};
    s.images = {{LabelKind::V, 1, 1}, {LabelKind::V, 2, 0}};
    s.relations.push_back(Poly::var(2, 0, n) - Poly::constant(2, 1));
    s.relations.push_back((lucas_like(n) - Poly::constant(2, 2)) * chebyshev_like(n));
    for (int l = 0; l < n; ++l)
      for (int m = 0; m <= 2 * n - 2; ++m) s.normal_forms.push_back({l, m});
    return s;
  }
  s.variables = {"x", "y", "z"};
  const Poly x = Poly::var(3, 0), y = Poly::var(3, 1), z = Poly::var(3, 2);
  s.relations.push_back(Poly::var(3, 0, n) - Poly::constant(3, 1));
  s.relations.push_back(Poly::var(3, 1, n) - Poly::constant(3, 1));
  Poly sum;
  if (f == ClassFamily::TensorTaft) {
    s.name = "r_p(tensor-product algebra, n=" + std::to_string(n) + ")";
    s.images = {{LabelKind::S, 1, 0}, {LabelKind::S, 0, 1}, {LabelKind::P, 0, 0}};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sum += Poly::var(3, 0, i) * Poly::var(3, 1, j) * z;
  } else {
    s.name = "r_p(H_" + std::to_string(n) + "(0,q))";
    s.images = {{LabelKind::S, 1, 1}, {LabelKind::S, 0, 1}, {LabelKind::P, 0, 0}};
    for (int i = 0; i < n; ++i) sum += static_cast<long>(n) * (Poly::var(3, 0, i) * z);
  }
  s.relations.push_back(z * z - sum);
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s.normal_forms.push_back({i, j, e});
  return s;
}

RingElt evaluate(const FusionTable& t, const Poly& p, const std::vector<BasisLabel>& images) {
  std::map<std::pair<std::size_t, int>, RingElt> powers;
  auto power = [&](std::size_t v, int e) -> const RingElt& {
    int have = 0;
    while (have < e && powers.count({v, have + 1})) ++have;
    if (have == 0) powers.try_emplace({v, 0}, t.unit());
    for (; have < e; ++have)
      powers.emplace(std::make_pair(v, have + 1), t.mul(powers.at({v, have}), FusionTable::cls(images[v])));
    return powers.at({v, e});
  };
  RingElt out;
  for (const auto& [e, c] : p.terms) {
    RingElt mono = t.unit();
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) mono = t.mul(mono, power(v, e[v]));
    out = add(std::move(out), mono, c);
  }
  return out;
}

BigInt integer_determinant(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) throw std::invalid_argument("integer_determinant: matrix is not square");
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m[r][c];
  }
  // Bareiss fraction-free elimination.
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Report verify_presentation(const FusionTable& t, const PresentationSpec& spec) {
  Report rep;
  rep.title = "presentation of " + spec.name;
  std::vector<std::string> names = spec.variables;
  auto rels = nlohmann::ordered_json::array();
  for (const auto& r : spec.relations) {
    const RingElt v = evaluate(t, r, spec.images);
    rels.push_back({{"relation", r.to_string(names)}, {"value", ring_text(v)}});
    rep.add("relation " + r.to_string(names) + " vanishes", v.empty(), ring_text(v));
  }
  rep.data["relations"] = rels;
  auto images = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < names.size(); ++k) images[names[k]] = spec.images[k].to_string();
  rep.data["images"] = images;

  std::vector<std::vector<long>> rows;
  for (const auto& e : spec.normal_forms) {
    Poly mono;
    mono.terms[e] = 1;
    rows.push_back(coords(t, evaluate(t, mono, spec.images)));
  }
  rep.data["normal_forms"] = rows.size();
  if (!rep.add("normal-form count equals rank", rows.size() == t.basis().size(),
               std::to_string(rows.size()) + " monomials, rank " + std::to_string(t.basis().size())))
    return rep;
  const BigInt det = integer_determinant(rows);
  rep.data["determinant"] = det.get_str();
  rep.add("normal forms are a Z-basis (det = +-1)", det == 1 || det == -1, "det " + det.get_str());
  return rep;
}

// ---------------------------------------------------------------------------
// Identities in r_p(H_n(1,q))

Report identity_suite_h1(const FusionTable& t, const std::string& only) {
  if (t.family() != ClassFamily::H1) throw std::invalid_argument("identity_suite_h1: table is not for H_n(1,q)");
  const int n = t.n();
  Report rep;
  rep.title = "identities in r_p(H_" + std::to_string(n) + "(1,q))";
  const std::vector<BasisLabel> images{{LabelKind::V, 1, 1}, {LabelKind::V, 2, 0}};
  const RingElt x = FusionTable::cls(images[0]), y = FusionTable::cls(images[1]);
  auto Vc = [&](int l, int r) { return FusionTable::cls(V(l, r, n)); };
  auto Pc = [&](int l, int r) {
    return FusionTable::cls(l == n ? V(n, r, n) : BasisLabel{LabelKind::Pr, l, mod(r, n)});
  };
  auto xp = [&](long k) { return t.pow(x, mod(k, n)); };
  auto wanted = [&](const std::string& name) { return only.empty() || name.rfind(only, 0) == 0; };
  auto same = [&](const std::string& name, const RingElt& lhs, const RingElt& rhs) {
    return rep.add(name, lhs == rhs, "lhs " + ring_text(lhs) + ", rhs " + ring_text(rhs));
  };

  if (wanted("lemma5.3")) {
    for (int m = 2; m <= n - 1; ++m) {
      RingElt rhs;
      for (int i = 0; 2 * i <= m; ++i)
        add_to(rhs, V(m + 1 - 2 * i, i, n), exact_div((m - 2 * i + 1) * binom(m, i), m - i + 1));
      same("lemma5.3 m=" + std::to_string(m), t.pow(y, m), rhs);
    }
  }

  if (wanted("cor5.4")) {
    same("cor5.4(1) x^n = 1", t.pow(x, n), t.unit());
    std::string bad;
    for (int m = 1; m <= n; ++m)
      for (int i = 0; i < 2 * n; ++i)
        if (Vc(m, i) != t.mul(t.pow(x, i), Vc(m, 0)) && bad.empty())
          bad = "V(" + std::to_string(m) + "," + std::to_string(i) + ")";
    rep.add("cor5.4(1) [V(m,i)] = x^i [V(m,0)]", bad.empty(), bad);
    bad.clear();
    for (int m = 1; m < n; ++m)
      for (int i = 0; i < 2 * n; ++i)
        if (Pc(m, i) != t.mul(t.pow(x, i), Pc(m, 0)) && bad.empty())
          bad = "P(" + std::to_string(m) + "," + std::to_string(i) + ")";
    rep.add("cor5.4(2) [P(m,i)] = x^i [P(m,0)]", bad.empty(), bad);
    same("cor5.4(3) y[V(n,0)] = x[P(n-1,0)]", t.mul(y, Vc(n, 0)), t.mul(x, Pc(n - 1, 0)));
    same("cor5.4(4) y[P(1,0)] = [P(2,0)] + 2x[V(n,0)]", t.mul(y, Pc(1, 0)), add(Pc(2, 0), t.mul(x, Vc(n, 0)), 2));
    same("cor5.4(5) y[P(n-1,0)] = 2[V(n,0)] + x[P(n-2,0)]", t.mul(y, Pc(n - 1, 0)),
         add(t.mul(x, Pc(n - 2, 0)), Vc(n, 0), 2));
    if (n < 4) rep.add("cor5.4(6) (no m with 2 <= m <= n-2)", true);
    for (int m = 2; m <= n - 2; ++m)
      same("cor5.4(6) m=" + std::to_string(m), t.mul(y, Pc(m, 0)), add(Pc(m + 1, 0), t.mul(x, Pc(m - 1, 0))));
    for (int m = 2; m < n; ++m) {
      RingElt rhs = t.pow(y, m);
      for (int i = 1; 2 * i <= m; ++i)
        rhs = add(std::move(rhs), t.mul(t.pow(x, i), Vc(m + 1 - 2 * i, 0)),
                  -exact_div((m + 1 - 2 * i) * binom(m, i), m + 1 - i));
      same("cor5.4(7) m=" + std::to_string(m), Vc(m + 1, 0), rhs);
    }
  }

  if (wanted("prop5.5")) {
    // Polynomials in x, y for every basis class, built only from the
    // recurrences and then evaluated.
    auto X = [&](long k) { return Poly::var(2, 0, mod(k, n)); };
    const Poly Y = Poly::var(2, 1);
    std::map<BasisLabel, Poly> expr;
    std::vector<Poly> v0(static_cast<std::size_t>(n) + 1);
    v0[1] = Poly::constant(2, 1);
    v0[2] = Y;
    for (int m = 2; m < n; ++m) {
      Poly p = Poly::var(2, 1, m);
      for (int i = 1; 2 * i <= m; ++i)
        p -= exact_div((m + 1 - 2 * i) * binom(m, i), m + 1 - i) * (X(i) * v0[static_cast<std::size_t>(m + 1 - 2 * i)]);
      v0[static_cast<std::size_t>(m + 1)] = p;
    }
    for (int l = 1; l <= n; ++l)
      for (int i = 0; i < n; ++i) expr[V(l, i, n)] = X(i) * v0[static_cast<std::size_t>(l)];
    std::vector<Poly> p0(static_cast<std::size_t>(n));
    p0[static_cast<std::size_t>(n - 1)] = X(-1) * Y * v0[static_cast<std::size_t>(n)];
    p0[static_cast<std::size_t>(n - 2)] =
        X(-1) * (Y * p0[static_cast<std::size_t>(n - 1)] - 2 * v0[static_cast<std::size_t>(n)]);
    for (int m = n - 2; m >= 2; --m)
      p0[static_cast<std::size_t>(m - 1)] =
          X(-1) * (Y * p0[static_cast<std::size_t>(m)] - p0[static_cast<std::size_t>(m + 1)]);
    for (int l = 1; l < n; ++l)
      for (int i = 0; i < n; ++i) expr[{LabelKind::Pr, l, i}] = X(i) * p0[static_cast<std::size_t>(l)];
    // x^n = 1 was checked above; fold x exponents for readable output.
    for (auto& [label, p] : expr) {
      Poly folded;
      for (const auto& [e, c] : p.terms) folded += c * (X(e[0]) * Poly::var(2, 1, e[1]));
      p = folded;
    }
    std::string bad;
    auto json = nlohmann::ordered_json::object();
    for (const auto& label : t.basis()) {
      auto it = expr.find(label);
      if (it == expr.end()) {
        if (bad.empty()) bad = label.to_string() + " has no expression";
        continue;
      }
      const RingElt v = evaluate(t, it->second, images);
      if (v != FusionTable::cls(label) && bad.empty()) bad = label.to_string() + " evaluates to " + ring_text(v);
      if (label.j == 0) json[label.to_string()] = it->second.to_string({"x", "y"});
    }
    rep.data["generators_expressions"] = json;
    rep.add("prop5.5 every basis class is a polynomial in x, y", bad.empty(), bad);
  }

  if (wanted("lemma5.6")) {
    for (int m = 1; m <= n; ++m)
      same("lemma5.6(1) m=" + std::to_string(m), Vc(m, 0), evaluate(t, chebyshev_like(m), images));
    for (int m = 1; m <= n - 1; ++m) {
      Poly p;
      for (int i = 0; 2 * i <= n - m; ++i) {
        const long c = exact_div((n - m) * binom(n - m - i, i), n - m - i);
        p += (i % 2 ? -c : c) * (Poly::var(2, 0, m + i) * Poly::var(2, 1, n - m - 2 * i));
      }
      same("lemma5.6(2) m=" + std::to_string(m), Pc(m, 0), t.mul(evaluate(t, p, images), Vc(n, 0)));
    }
  }

  if (wanted("prop5.7")) {
    const Poly rel = (lucas_like(n) - Poly::constant(2, 2)) * chebyshev_like(n);
    same("prop5.7 product relation vanishes", evaluate(t, rel, images), {});
  }

  if (wanted("cor5.8")) {
    std::vector<std::vector<long>> rows;
    for (int l = 0; l < n; ++l)
      for (int m = 0; m <= 2 * n - 2; ++m) rows.push_back(coords(t, t.mul(xp(l), t.pow(y, m))));
    const bool square = rows.size() == t.basis().size();
    const BigInt det = square ? integer_determinant(rows) : BigInt(0);
    rep.add("cor5.8 {x^l y^m : l < n, m <= 2n-2} is a Z-basis", det == 1 || det == -1,
            square ? "det " + det.get_str() : "size mismatch");
  }
  if (rep.checks.empty()) rep.add("identity family '" + only + "' exists", false);
  return rep;
}

// ---------------------------------------------------------------------------
// Radicals of the class algebras

Report class_algebra_radical(const FusionTable& t) {
  if (t.family() == ClassFamily::H1) throw std::invalid_argument("class_algebra_radical: H_n(1,q) is not covered");
  const int n = t.n();
  const CycloField& k = CycloField::get(n);
  const auto& basis = t.basis();
  const std::size_t m = basis.size();
  const bool h0 = t.family() == ClassFamily::H0;
  Report rep;
  rep.title = "radical of the projective class algebra, " + class_family_name(t.family()) + " n=" + std::to_string(n);

  auto to_vec = [&](const RingElt& x) {
    Vec v(m, k.zero());
    for (const auto& [l, c] : x) v[t.index(l)] = k.integer(c);
    return v;
  };
  auto mul = [&](const Vec& u, const Vec& v) {
    Vec out(m, k.zero());
    for (std::size_t a = 0; a < m; ++a) {
      if (u[a].is_zero()) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (v[b].is_zero()) continue;
        const CycloNum uv = u[a] * v[b];
        for (const auto& [l, c] : t.product(a, b)) out[t.index(l)].add_mul(uv, k.integer(c));
      }
    }
    return out;
  };

  // Trace form: G(a, b) = tr(L_{ab}) with tr(L_c) = sum_b [c b : b].
  std::vector<long> tr(m, 0);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t b = 0; b < m; ++b) {
      auto it = t.product(c, b).find(basis[b]);
      if (it != t.product(c, b).end()) tr[c] += it->second;
    }
  Mat gram(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      long s = 0;
      for (const auto& [l, c] : t.product(a, b)) s += c * tr[t.index(l)];
      gram(a, b) = k.integer(s);
    }
  const Subspace rad = bilinear_radical(gram, &k);

  const RingElt one = t.unit();
  const RingElt z = FusionTable::cls({LabelKind::P, 0, 0});
  std::vector<std::pair<std::string, RingElt>> gens;
  if (h0) {
    gens.emplace_back("(1-x)z", add(z, t.mul(FusionTable::cls({LabelKind::S, 1, 1}), z), -1));
  } else {
    gens.emplace_back("(1-x)z", add(z, t.mul(FusionTable::cls({LabelKind::S, 1, 0}), z), -1));
    gens.emplace_back("(1-y)z", add(z, t.mul(FusionTable::cls({LabelKind::S, 0, 1}), z), -1));
  }
  Subspace ideal(m);
  for (const auto& [name, g] : gens) {
    rep.add(name + " squares to zero", t.mul(g, g).empty(), ring_text(t.mul(g, g)));
    const Vec gv = to_vec(g);
    for (std::size_t b = 0; b < m; ++b) {
      Vec e(m, k.zero());
      e[b] = k.one();
      ideal.insert(mul(gv, e));
    }
  }
  rep.data["radical_dim"] = rad.dim();
  rep.data["ideal_dim"] = ideal.dim();
  rep.add("radical equals the ideal of the stated generators", rad == ideal,
          "radical dim " + std::to_string(rad.dim()) + ", ideal dim " + std::to_string(ideal.dim()));
  const std::size_t qdim = m - rad.dim();
  const std::size_t expected = h0 ? static_cast<std::size_t>(n * (n + 1)) : static_cast<std::size_t>(n * n + 1);
  rep.data["quotient_dim"] = qdim;
  rep.add("quotient dimension", qdim == expected, "measured " + std::to_string(qdim) + ", expected " + std::to_string(expected));

  // Idempotents: the character sums of x and y, split by z.
  const Rational inv_n = Rational(1, n), inv_n2 = Rational(1, n * n);
  const RingElt xr = FusionTable::cls(h0 ? BasisLabel{LabelKind::S, 1, 1} : BasisLabel{LabelKind::S, 1, 0});
  const RingElt yr = FusionTable::cls({LabelKind::S, 0, 1});
  std::vector<Vec> xpow(static_cast<std::size_t>(n)), ypow(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xpow[static_cast<std::size_t>(i)] = to_vec(t.pow(xr, i));
    ypow[static_cast<std::size_t>(i)] = to_vec(t.pow(yr, i));
  }
  auto f = [&](int kk) {  // (1/n) sum q^{k i} x^i
    Vec v(m, k.zero());
    for (int i = 0; i < n; ++i) axpy(v, k.q_pow(static_cast<long>(kk) * i) * inv_n, xpow[static_cast<std::size_t>(i)]);
    return v;
  };
  auto g = [&](int l) {
    Vec v(m, k.zero());
    for (int i = 0; i < n; ++i) axpy(v, k.q_pow(static_cast<long>(l) * i) * inv_n, ypow[static_cast<std::size_t>(i)]);
    return v;
  };
  const Vec zs = scale(to_vec(z), k.rational(inv_n2));
  std::vector<std::pair<std::string, Vec>> idem;
  if (h0) {
    for (int kk = 1; kk < n; ++kk)
      for (int l = 0; l < n; ++l)
        idem.emplace_back("f_" + std::to_string(kk) + " g_" + std::to_string(l), mul(f(kk), g(l)));
    for (int l = 0; l < n; ++l) {
      Vec f0z = f(0);
      axpy(f0z, k.integer(-1), zs);
      idem.emplace_back("(f_0 - z/n^2) g_" + std::to_string(l), mul(f0z, g(l)));
      idem.emplace_back("(z/n^2) g_" + std::to_string(l), mul(zs, g(l)));
    }
  } else {
    auto fkl = [&](int a, int b) { return mul(f(a), g(b)); };  // (1/n^2) sum q^{ai+bj} x^i y^j
    for (int kk = 1; kk < n; ++kk)
      for (int l = 0; l < n; ++l) idem.emplace_back("f_" + std::to_string(kk) + "," + std::to_string(l), fkl(kk, l));
    for (int kk = 1; kk < n; ++kk) idem.emplace_back("f_0," + std::to_string(kk), fkl(0, kk));
    Vec f00z = fkl(0, 0);
    axpy(f00z, k.integer(-1), zs);
    idem.emplace_back("f_0,0 - z/n^2", f00z);
    idem.emplace_back("z/n^2", zs);
  }
  rep.data["idempotents"] = idem.size();
  rep.add("idempotent count equals quotient dimension", idem.size() == qdim, std::to_string(idem.size()));

  auto in_rad = [&](const Vec& v) { return rad.contains(v); };
  std::string bad;
  Vec total(m, k.zero());
  for (std::size_t a = 0; a < idem.size(); ++a) {
    const Vec& e = idem[a].second;
    total = add(total, e);
    Vec sq = mul(e, e);
    axpy(sq, k.integer(-1), e);
    if (!in_rad(sq) && bad.empty()) bad = idem[a].first + " is not idempotent";
    if (in_rad(e) && bad.empty()) bad = idem[a].first + " vanishes";
    for (std::size_t b = a + 1; b < idem.size() && bad.empty(); ++b)
      if (!in_rad(mul(e, idem[b].second))) bad = idem[a].first + " and " + idem[b].first + " are not orthogonal";
  }
  rep.add("idempotents are orthogonal and nonzero modulo the radical", bad.empty(), bad);
  axpy(total, k.integer(-1), to_vec(one));
  rep.add("idempotents sum to 1 modulo the radical", in_rad(total));
  bad.clear();
  for (const auto& [name, e] : idem) {
    Subspace block = rad;
    for (std::size_t b = 0; b < m; ++b) {
      Vec u(m, k.zero());
      u[b] = k.one();
      block.insert(mul(e, u));
    }
    if (block.dim() != rad.dim() + 1 && bad.empty())
      bad = name + " spans a block of dim " + std::to_string(block.dim() - rad.dim());
  }
  rep.add("each idempotent spans a one-dimensional block", bad.empty(), bad);
  return rep;
}

// ---------------------------------------------------------------------------
// Gabriel quiver of H_n(0,q)

Report quiver_check_h0(const AlgebraContext& ctx) {
  if (!ctx.is_h0()) throw std::invalid_argument("quiver_check_h0: algebra is not H_n(0,q)");
  const Algebra& h = ctx.algebra();
  const int n = ctx.n();
  const std::size_t dim = h.dim();
  const CycloField& k = h.field();
  const RadicalInfo& rad = ctx.radical();
  const auto idem = group_idempotents(h);
  auto ebar = [&](int j) { return idem[static_cast<std::size_t>(mod(j, n) * n + mod(j, n))]; };
  Report rep;
  rep.title = "Gabriel quiver of the principal block of " + ctx.label();

  // ebar_t J ebar_s modulo ebar_t J^2 ebar_s.
  std::vector<std::vector<std::size_t>> arrows(static_cast<std::size_t>(n), std::vector<std::size_t>(static_cast<std::size_t>(n)));
  std::size_t total = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<AlgElt> right;
    for (std::size_t u = 0; u < dim; ++u) {
      AlgElt x = h.mul(AlgElt::basis(u, k.one()), ebar(s));
      if (!x.is_zero()) right.push_back(std::move(x));
    }
    for (int t = 0; t < n; ++t) {
      Subspace corner(dim);
      for (const auto& x : right) {
        const AlgElt y = h.mul(ebar(t), x);
        if (!y.is_zero()) corner.insert(y.to_vec(dim));
      }
      const std::size_t d1 = corner.intersect(rad.powers[1]).dim(), d2 = corner.intersect(rad.powers[2]).dim();
      arrows[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = d1 - d2;
      total += d1 - d2;
    }
  }
  bool crown = true;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const std::size_t want = (mod(t - s, n) == 1 || mod(s - t, n) == 1) ? 1 : 0;
      crown = crown && arrows[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] == want;
    }
  rep.data["vertices"] = n;
  rep.data["arrows"] = total;
  rep.data["arrow_matrix"] = arrows;
  rep.add("2n arrows", total == static_cast<std::size_t>(2 * n), "measured " + std::to_string(total));
  rep.add("one arrow each way between neighbours (crown)", crown);

  const AlgElt a = h.generator(h.generator_index("a")), d = h.generator(h.generator_index("d"));
  auto alpha = [&](int j) { return h.mul(a, ebar(j)); };
  auto beta = [&](int j) { return h.mul(d, ebar(j + 1)); };
  std::string bad;
  for (int j = 0; j < n && bad.empty(); ++j) {
    if (h.mul(ebar(j + 1), alpha(j)) != alpha(j)) bad = "a e_" + std::to_string(j) + " does not end at " + std::to_string(j + 1);
    if (h.mul(ebar(j), beta(j)) != beta(j)) bad = "d e_" + std::to_string(j + 1) + " does not end at " + std::to_string(j);
    for (const AlgElt& arr : {alpha(j), beta(j)})
      if (rad.powers[2].contains(arr.to_vec(dim)) || !rad.powers[1].contains(arr.to_vec(dim)))
        bad = "arrow representative at " + std::to_string(j) + " is not in J \\ J^2";
  }
  rep.add("a e_j : j -> j+1 and d e_{j+1} : j+1 -> j represent the arrows", bad.empty(), bad);

  // beta_j alpha_j = s_j alpha_{j-1} beta_{j-1}
  auto scalars = nlohmann::ordered_json::array();
  bad.clear();
  std::set<int> logs;
  for (int j = 0; j < n; ++j) {
    const AlgElt lhs = h.mul(beta(j), alpha(j)), rhs = h.mul(alpha(j - 1), beta(j - 1));
    if (rhs.is_zero() || lhs.is_zero()) {
      if (bad.empty()) bad = "zero path at vertex " + std::to_string(j);
      continue;
    }
    const auto& [idx, c] = *rhs.terms().begin();
    const CycloNum s = lhs.coeff(idx) * c.inverse();
    if (lhs != s * rhs && bad.empty()) bad = "paths at vertex " + std::to_string(j) + " are not proportional";
    const int lg = k.q_log(s);
    logs.insert(lg);
    scalars.push_back({{"j", j}, {"scalar", s.to_string()}, {"q_power", lg}});
  }
  rep.data["commutation_scalars"] = scalars;
  rep.add("beta_j alpha_j = s_j alpha_{j-1} beta_{j-1} with s_j a power of q", bad.empty() && !logs.count(-1), bad);
  rep.add("commutation scalar is q for every j", logs == std::set<int>{1},
          "q-powers measured: " + nlohmann::json(std::vector<int>(logs.begin(), logs.end())).dump());

  bad.clear();
  for (int j = 0; j < n && bad.empty(); ++j) {
    AlgElt pa = ebar(j), pb = ebar(j + n);
    for (int step = 0; step < n; ++step) {
      if (step == n - 1 && (pa.is_zero() || pb.is_zero())) bad = "path of length n-1 vanishes at " + std::to_string(j);
      pa = h.mul(alpha(j + step), pa);
      pb = h.mul(beta(j - step - 1), pb);
    }
    if (!pa.is_zero() || !pb.is_zero()) bad = "path of length n survives at " + std::to_string(j);
  }
  rep.add("alpha and beta paths of length n vanish (length n-1 do not)", bad.empty(), bad);
  return rep;
}

}  // namespace hopfclass
