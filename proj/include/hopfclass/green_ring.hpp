#pragma once

// Projective class rings r_p(H): closed-form fusion rules, fusion tables
// computed from modules, ring presentations, identities in r_p(H_n(1,q)),
// radicals of the class algebras and the Gabriel quiver of H_n(0,q).

#include "hopfclass/repn.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hopfclass {

/// Finitely supported Z-combination of class labels, no stored zeros.
using RingElt = std::map<BasisLabel, long>;

void add_to(RingElt& x, const BasisLabel& label, long mult);
RingElt add(RingElt x, const RingElt& y, long scale = 1);
/// "V(3,0) + V(1,1)", "3·P(0,0) - S(1,0)", "0".
std::string ring_text(const RingElt& x);
nlohmann::ordered_json ring_json(const RingElt& x);
RingElt to_ring(const DecompVector& d);

enum class ClassFamily { TensorTaft, H0, H1 };
/// Throws std::invalid_argument for algebras without a class ring here.
ClassFamily class_family(const AlgebraSpec& spec);
std::string class_family_name(ClassFamily f);

/// S(i,j) then P(i,j) (i-major), or V(l,r) then P(l,r) for l < n (l-major).
std::vector<BasisLabel> class_basis(ClassFamily f, int n);
/// S -> 1, P -> n^2, V(l,r) -> l, P(l,r) -> 2n (l < n).
long class_dim(ClassFamily f, int n, const BasisLabel& label);

/// Hits per case of the H_n(1,q) tensor product rules, index 1..11.
struct CaseCoverage {
  std::array<long, 12> hits{};
  [[nodiscard]] std::vector<int> missing() const;
};

/// The closed-form product [A][B].  For H_n(1,q) the arguments are
/// normalized (l <= l', V before P) by commutativity before a case is
/// chosen.  Throws std::logic_error naming (l, l', t) if no case applies.
RingElt closed_form_fusion(ClassFamily f, int n, const BasisLabel& a, const BasisLabel& b,
                           CaseCoverage* coverage = nullptr);

class FusionTable {
 public:
  FusionTable(ClassFamily family, int n, std::vector<BasisLabel> basis);

  [[nodiscard]] ClassFamily family() const { return family_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<BasisLabel>& basis() const { return basis_; }
  [[nodiscard]] std::size_t index(const BasisLabel& label) const;
  [[nodiscard]] const RingElt& product(std::size_t a, std::size_t b) const { return entries_[a * basis_.size() + b]; }
  [[nodiscard]] const RingElt& product(const BasisLabel& a, const BasisLabel& b) const {
    return product(index(a), index(b));
  }
  void set(std::size_t a, std::size_t b, RingElt value) { entries_[a * basis_.size() + b] = std::move(value); }

  [[nodiscard]] RingElt mul(const RingElt& x, const RingElt& y) const;
  [[nodiscard]] RingElt pow(const RingElt& x, int e) const;
  [[nodiscard]] RingElt unit() const;
  [[nodiscard]] static RingElt cls(const BasisLabel& label) { return RingElt{{label, 1}}; }

  [[nodiscard]] nlohmann::ordered_json to_json() const;
  [[nodiscard]] std::string to_csv() const;

 private:
  ClassFamily family_;
  int n_;
  std::vector<BasisLabel> basis_;
  std::map<BasisLabel, std::size_t> index_;
  std::vector<RingElt> entries_;
};

FusionTable closed_form_table(ClassFamily f, int n, CaseCoverage* coverage = nullptr);
/// decompose(A (x) B) for every pair of basis classes.
FusionTable computed_table(const ModuleSystem& sys, unsigned jobs = 1);
/// Entrywise equality, reporting the first discrepancy with both values.
Report crosscheck(const FusionTable& expected, const FusionTable& computed);
/// Commutativity, unit, dimension grading and associativity (all triples
/// when the basis has at most `full_limit` elements, else `samples` seeded
/// triples).
Report ring_axioms(const FusionTable& t, std::size_t full_limit = 18, std::size_t samples = 2000, std::uint64_t seed = 0);

/// Polynomial with integer coefficients in a few variables.
struct Poly {
  std::map<std::vector<int>, long> terms;
  static Poly constant(int vars, long c);
  static Poly var(int vars, int v, int power = 1);
  [[nodiscard]] int vars() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(long c, Poly a);
  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;
};

struct PresentationSpec {
  std::string name;
  std::vector<std::string> variables;
  std::vector<BasisLabel> images;  // class of each variable
  std::vector<Poly> relations;
  /// Normal-form monomials (exponent vectors) that should form a Z-basis.
  std::vector<std::vector<int>> normal_forms;
};

/// x^n - 1, y^n - 1, z^2 - sum x^i y^j z (tensor-product algebra) or
/// z^2 - n sum x^i z (H_n(0,q)); x^n - 1 and the product relation for H_n(1,q).
PresentationSpec class_ring_presentation(ClassFamily f, int n);
RingElt evaluate(const FusionTable& t, const Poly& p, const std::vector<BasisLabel>& images);
/// Every relation evaluates to zero and the normal forms have a unimodular
/// change-of-basis matrix.
Report verify_presentation(const FusionTable& t, const PresentationSpec& spec);

/// Determinant of an integer matrix (exact).
BigInt integer_determinant(const std::vector<std::vector<long>>& m);

/// Identities of r_p(H_n(1,q)) with x = [V(1,1)], y = [V(2,0)].  Each check
/// is named after the identity family, e.g. "cor5.4(3)"; `only` restricts
/// to names with that prefix.
Report identity_suite_h1(const FusionTable& t, const std::string& only = {});

/// Radical of Q(zeta_n) (x) r_p(H) and the idempotent census of the quotient.
Report class_algebra_radical(const FusionTable& t);

/// Gabriel quiver of the principal block of H_n(0,q) and its relations.
Report quiver_check_h0(const AlgebraContext& ctx);

}  // namespace hopfclass
