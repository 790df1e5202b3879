#pragma once

// Structure of the Hopf algebras: Hopf axioms, the tensor-product
// isomorphism, the skew pairing, weight idempotents, Jacobson radical and
// Loewy length, integrals, centre and blocks.

#include "hopfclass/algebra.hpp"
#include "hopfclass/module.hpp"
#include "hopfclass/report.hpp"

#include <memory>
#include <mutex>
#include <optional>

namespace hopfclass {

struct RadicalInfo {
  Subspace ideal;  // in PBW coordinates
  /// Homogeneous elements with J = sum g H, so J M = sum g M for any module.
  std::vector<AlgElt> generators;
  /// J^0 = H, J^1 = J, ..., ending with the first zero power.
  std::vector<Subspace> powers;
  [[nodiscard]] int loewy_length() const { return static_cast<int>(powers.size()) - 1; }
};

/// An algebra together with lazily computed data that several analyses share.
class AlgebraContext {
 public:
  explicit AlgebraContext(AlgebraSpec spec, std::uint64_t seed = 0);

  [[nodiscard]] const AlgebraSpec& spec() const { return spec_; }
  [[nodiscard]] const Algebra& algebra() const { return *algebra_; }
  [[nodiscard]] const CycloField& field() const { return algebra_->field(); }
  [[nodiscard]] int n() const { return spec_.n; }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] std::string label() const { return spec_label(spec_); }
  /// True for H_n(p,q) with p = 0 / p = 1.
  [[nodiscard]] bool is_h0() const;
  [[nodiscard]] bool is_h1() const;
  [[nodiscard]] const RadicalInfo& radical() const;

 private:
  AlgebraSpec spec_;
  std::uint64_t seed_;
  std::unique_ptr<Algebra> algebra_;
  mutable std::once_flag radical_once_;
  mutable std::optional<RadicalInfo> radical_;
};

/// Left multiplication matrices of the generators on the PBW basis.
Module regular_representation(const Algebra& h);

/// Coassociativity, counit and antipode axioms on every basis element when
/// dim <= samples, otherwise on `samples` distinct seeded basis elements;
/// plus compatibility of coproduct, counit and antipode with the relations.
Report verify_hopf_axioms(const Algebra& h, std::size_t samples = 500, std::uint64_t seed = 0, unsigned jobs = 1);

/// Checks that a -> 1(x)x1, b -> 1(x)g1, c -> g(x)1, d -> x(x)1 extends to a
/// bijective algebra and coalgebra map onto A_n(q) (x) A_n(q^{-1}).
Report tensor_iso_check(int n, std::uint64_t seed = 0);

/// tau_p(g^i x^j, x1^k g1^l) = delta_{jk} p^j q^{il} (j)!_q.
CycloNum skew_pairing_tau(const CycloField& field, const CycloNum& p, int i, int j, int k, int l);

/// e_{i,j} = (1/n^2) sum_{k,l} q^{-ik-jl} b^k c^l, returned at index i*n + j
/// (indices mod n).
std::vector<AlgElt> group_idempotents(const Algebra& h);
/// Orthogonality, completeness and the commutation of a, d with e_{i,j}.
Report check_group_idempotents(const AlgebraContext& ctx);

/// Radical as the kernel of the trace form of the regular representation,
/// with right-ideal generators and all powers.
RadicalInfo jacobson_radical(const Algebra& h);
/// Nilpotency, two-sidedness, semisimple quotient, Loewy length, and for
/// the tensor-product algebra and H_n(0,q) equality with Ha + Hd.
Report radical_report(const AlgebraContext& ctx);

/// Integral spaces, unimodularity, and S^2 = conjugation by b (and by c).
Report integrals_and_symmetry(const AlgebraContext& ctx);

/// Centre, block count dim Z - dim rad Z, and for H_n(0,q) the central
/// idempotents e_i = sum_j e_{i+j,j}.
Report center_and_blocks(const AlgebraContext& ctx);
/// e_i = (1/n) sum_j q^{-ij} b^j c^{-j}
std::vector<AlgElt> central_idempotents_h0(const Algebra& h);

/// H_n(0,q): each block H e_i has basis a^j d^k b^l e_i and all blocks share
/// one structure-constant table.
Report blocks_isomorphic_h0(const AlgebraContext& ctx);

/// {family, n, p, basis, products} with coefficients in cyclo text format.
nlohmann::ordered_json structure_constants_json(const AlgebraContext& ctx);

}  // namespace hopfclass
