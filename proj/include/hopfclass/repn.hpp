#pragma once

// Simple and indecomposable projective modules, radical filtrations and
// decomposition of modules into simples and projectives by Hom counting.

#include "hopfclass/module.hpp"
#include "hopfclass/structure.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hopfclass {

/// Class labels.  S/P are used for the tensor-product algebra and H_n(0,q),
/// V/Pr for H_n(1,q) where (i, j) = (l, r) with 1 <= l <= n and Pr only for
/// l < n.
enum class LabelKind { S, P, V, Pr };

struct BasisLabel {
  LabelKind kind = LabelKind::S;
  int i = 0;
  int j = 0;

  [[nodiscard]] bool is_projective() const { return kind == LabelKind::P || kind == LabelKind::Pr; }
  /// "S(1,0)", "P(2,1)", "V(3,0)"; Pr renders as "P(l,r)".
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
  /// Display order: for V/Pr larger l first, V before Pr, then r; for S/P
  /// simples first, then by index.
  friend std::strong_ordering operator<=>(const BasisLabel& a, const BasisLabel& b);
};

/// Parses "S(i,j)", "P(i,j)", "V(l,r)", "Pr(l,r)" for the given family.  For
/// H_n(1,q) "P(l,r)" means Pr(l,r) and P(n,r) becomes V(n,r).  Indices are
/// reduced mod n where they live in Z_n.  Throws std::invalid_argument.
BasisLabel parse_label(const std::string& text, bool h1, int n);

/// The one-dimensional module with b -> q^i, c -> q^j and every nilpotent
/// generator acting by zero.
Module simple_S(const Algebra& h, int i, int j);
/// H e_{i,j} on the basis a^k d^l e_{i,j}, k-major.
Module projective_P(const Algebra& h, int i, int j);

struct RadicalLayers {
  std::vector<std::size_t> dims;                  // dim J^k M / J^{k+1} M
  std::vector<std::vector<long>> multiplicities;  // [layer][simple]
  std::vector<long> composition;                  // [M : S]
};

struct DecompVector {
  std::vector<std::pair<BasisLabel, long>> simple_mults;
  std::vector<std::pair<BasisLabel, long>> proj_mults;
  friend bool operator==(const DecompVector&, const DecompVector&) = default;
};

/// Simples, their projective covers and the Cartan matrix of one algebra.
class ModuleSystem {
 public:
  /// Closed constructions for the tensor-product algebra and H_n(0,q);
  /// search and label calibration for H_n(1,q).  Throws std::logic_error
  /// with a diagnostic if any consistency check fails.
  static ModuleSystem build(const AlgebraContext& ctx, std::uint64_t seed = 0, unsigned jobs = 1);
  /// Family-independent search: simples by spinning highest-weight vectors
  /// of H/J, covers by lifting primitive idempotents of End(H e_w).  No
  /// calibration; simple k of dimension d is labeled V(d,k).  Used for
  /// H_n(1,q) and as an independent check of the closed constructions.
  static ModuleSystem discover(const AlgebraContext& ctx, std::uint64_t seed = 0, unsigned jobs = 1);

  [[nodiscard]] const AlgebraContext& context() const { return *ctx_; }
  [[nodiscard]] const Algebra& algebra() const { return ctx_->algebra(); }
  [[nodiscard]] std::size_t size() const { return simples_.size(); }
  [[nodiscard]] const Module& simple(std::size_t k) const { return simples_[k]; }
  [[nodiscard]] const Module& pim(std::size_t k) const { return pims_[k]; }
  [[nodiscard]] const BasisLabel& simple_label(std::size_t k) const { return labels_[k]; }
  /// Label of the class of pim(k): Pr/P, or the simple's own label when
  /// the simple is projective.
  [[nodiscard]] BasisLabel pim_label(std::size_t k) const;
  [[nodiscard]] bool projective_simple(std::size_t k) const { return pims_[k].dim() == simples_[k].dim(); }
  /// cartan()[T][S] = [P(T) : S]
  [[nodiscard]] const std::vector<std::vector<long>>& cartan() const { return cartan_; }
  /// Simple labels followed by the labels of the non-simple projectives.
  [[nodiscard]] std::vector<BasisLabel> basis() const;
  [[nodiscard]] std::size_t dim_of(const BasisLabel& label) const;
  [[nodiscard]] std::size_t index_of(const BasisLabel& label) const;
  /// Module representing a basis label.
  [[nodiscard]] const Module& module_of(const BasisLabel& label) const;
  /// Notes on how the labels were fixed (H_n(1,q) calibration).
  [[nodiscard]] const std::vector<std::string>& notes() const { return notes_; }

  /// Radical layers of M with their decomposition into simples.
  [[nodiscard]] RadicalLayers radical_filtration(const Module& m) const;
  /// Writes M as sum a_S S + sum b_T P(T).  Throws std::logic_error when M
  /// is outside add(simples and projectives) or the bookkeeping fails.
  [[nodiscard]] DecompVector decompose(const Module& m) const;

 private:
  ModuleSystem() = default;
  void finish();  // Cartan matrix and consistency checks
  void calibrate_h1();

  const AlgebraContext* ctx_ = nullptr;
  std::vector<Module> simples_;
  std::vector<Module> pims_;
  std::vector<BasisLabel> labels_;
  std::vector<std::vector<long>> cartan_;
  std::vector<std::string> notes_;
};

nlohmann::ordered_json module_json(const Module& m);
nlohmann::ordered_json decomp_json(const DecompVector& d);
/// "V(3,0) + V(1,1)", "2 P(0,0)"; "0" when empty.
std::string decomp_text(const DecompVector& d);
std::size_t decomp_dim(const DecompVector& d, const ModuleSystem& sys);

}  // namespace hopfclass
