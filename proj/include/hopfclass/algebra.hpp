#pragma once

// Finite-dimensional Hopf algebras given by a PBW-type rewriting presentation.
//
// A presentation lists ordered generators, each either group-like (g^n = 1)
// or nilpotent (g^n = 0), and one commutation rule per out-of-order pair:
//   later * earlier = coeff * earlier * later + (lower terms).
// Normal forms are the ordered monomials g_0^{e_0} ... g_{m-1}^{e_{m-1}}
// with 0 <= e_i < n.  Products are computed by left-multiplying a normal
// form by one generator at a time, memoized per (generator, basis element).

#include "hopfclass/cyclo.hpp"
#include "hopfclass/linalg.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace hopfclass {

enum class GenKind { GroupLike, Nilpotent };

struct Generator {
  std::string name;
  GenKind kind;
};

using Word = std::vector<int>;

struct WordTerm {
  CycloNum coeff;
  Word word;
};

/// later * earlier = coeff * earlier * later + sum(extra)
struct SwapRule {
  int later;
  int earlier;
  CycloNum coeff;
  std::vector<WordTerm> extra;
};

struct CoproductTerm {
  CycloNum coeff;
  Word left;
  Word right;
};

struct Presentation {
  std::string name;
  int n = 0;
  const CycloField* field = nullptr;
  std::vector<Generator> gens;
  std::vector<SwapRule> swaps;
  std::vector<std::vector<CoproductTerm>> coproduct;  // per generator
  std::vector<CycloNum> counit;                       // per generator
  std::vector<std::vector<WordTerm>> antipode;        // per generator

  [[nodiscard]] int generator_index(const std::string& name) const;
  /// Defining relations as linear combinations of words that must vanish.
  [[nodiscard]] std::vector<std::vector<WordTerm>> relations() const;
};

enum class Family { Taft, TaftOpp, TensorTaft, Hpq };

/// Which algebra to build.  `p` is only meaningful for Hpq.
struct AlgebraSpec {
  Family family = Family::TensorTaft;
  int n = 3;
  std::optional<CycloNum> p;
};

std::string family_name(Family f);
Family parse_family(const std::string& name);
std::string spec_label(const AlgebraSpec& spec);

/// Presentations of A_n(q), A_n(q^{-1}), the tensor-product algebra on a,b,c,d,
/// and H_n(p,q).
Presentation make_presentation(const AlgebraSpec& spec);
/// Tensor product Hopf algebra of two presentations: generators of the
/// second factor follow those of the first and commute with them.
Presentation tensor_presentation(const Presentation& left, const Presentation& right);

/// Finitely supported linear combination of basis indices.
class AlgElt {
 public:
  AlgElt() = default;

  static AlgElt basis(std::size_t index, const CycloNum& coeff);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<std::size_t, CycloNum>& terms() const { return terms_; }
  [[nodiscard]] CycloNum coeff(std::size_t index) const;
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  void add_term(std::size_t index, const CycloNum& c);
  /// this += s * other
  void add_scaled(const AlgElt& other, const CycloNum& s);

  AlgElt& operator+=(const AlgElt& o);
  AlgElt& operator-=(const AlgElt& o);
  friend AlgElt operator+(AlgElt a, const AlgElt& b) { return a += b; }
  friend AlgElt operator-(AlgElt a, const AlgElt& b) { return a -= b; }
  friend AlgElt operator*(const CycloNum& s, const AlgElt& a);
  friend bool operator==(const AlgElt& a, const AlgElt& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] Vec to_vec(std::size_t dim) const;
  static AlgElt from_vec(const Vec& v);

 private:
  std::map<std::size_t, CycloNum> terms_;
};

/// Element of H (x) H keyed by pairs of basis indices.
using TensorElt = std::map<std::pair<std::size_t, std::size_t>, CycloNum>;
using Tensor3Elt = std::map<std::array<std::size_t, 3>, CycloNum>;

void add_term(TensorElt& t, std::size_t u, std::size_t v, const CycloNum& c);

/// Weights of a module are joint eigenvalue exponents of the group-like
/// generators, encoded as one integer in [0, n^k) for k group-likes.  Every
/// other generator moves weights by a fixed shift read off the commutation
/// rules, which is what lets module computations run one weight block at a
/// time.
class WeightLattice {
 public:
  WeightLattice() = default;
  WeightLattice(int n, std::vector<int> grouplike, std::vector<std::vector<int>> shifts);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int rank() const { return static_cast<int>(grouplike_.size()); }
  [[nodiscard]] int count() const { return count_; }
  [[nodiscard]] const std::vector<int>& grouplike() const { return grouplike_; }
  /// Position of generator g among the group-likes, or -1.
  [[nodiscard]] int grouplike_position(int g) const;

  [[nodiscard]] std::vector<int> decode(int w) const;
  [[nodiscard]] int encode(const std::vector<int>& exps) const;
  [[nodiscard]] int add(int w, int delta) const;
  [[nodiscard]] int negate(int w) const;
  /// Shift of generator g as an encoded weight (0 for group-likes).
  [[nodiscard]] int shift(int g) const { return shift_ids_[static_cast<std::size_t>(g)]; }
  /// Weight of g v for v of weight w.
  [[nodiscard]] int act(int g, int w) const { return add(w, shift(g)); }
  [[nodiscard]] std::string to_string(int w) const;

 private:
  int n_ = 0;
  int count_ = 1;
  std::vector<int> grouplike_;
  std::vector<int> shift_ids_;
};

class Algebra {
 public:
  /// Builds the rewriting tables and checks associativity on all generator
  /// triples and `assoc_samples` seeded random basis triples.  Throws
  /// std::logic_error if rewriting does not terminate or is not associative.
  explicit Algebra(Presentation pres, std::size_t assoc_samples = 500, std::uint64_t seed = 0);

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  [[nodiscard]] const Presentation& presentation() const { return pres_; }
  [[nodiscard]] const CycloField& field() const { return *pres_.field; }
  [[nodiscard]] int n() const { return pres_.n; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] int num_generators() const { return static_cast<int>(pres_.gens.size()); }
  [[nodiscard]] int generator_index(const std::string& name) const { return pres_.generator_index(name); }

  /// Weight grading; nullptr when some commutation rule between a
  /// group-like and another generator is not a power of q.
  [[nodiscard]] const WeightLattice* weights() const { return weights_ ? &*weights_ : nullptr; }
  /// Degree of a PBW monomial under conjugation by the group-likes.
  [[nodiscard]] int degree(std::size_t index) const;
  /// Degree of x if x is homogeneous, otherwise nullopt.
  [[nodiscard]] std::optional<int> degree(const AlgElt& x) const;

  [[nodiscard]] std::vector<int> exponents(std::size_t index) const;
  [[nodiscard]] std::size_t index_of(const std::vector<int>& exps) const;
  [[nodiscard]] std::string basis_label(std::size_t index) const;
  [[nodiscard]] std::string to_string(const AlgElt& x) const;

  [[nodiscard]] AlgElt one() const { return AlgElt::basis(0, field().one()); }
  [[nodiscard]] AlgElt generator(int g) const;
  /// Normal form of a product of generators.
  [[nodiscard]] AlgElt word(const Word& w) const;
  [[nodiscard]] AlgElt evaluate(const std::vector<WordTerm>& terms) const;
  /// Monomial with the given exponents (in generator order) as an element.
  [[nodiscard]] AlgElt monomial(const std::vector<int>& exps) const;

  /// g * basis(m) in normal form.
  [[nodiscard]] const AlgElt& lmul_generator(int g, std::size_t m) const;
  [[nodiscard]] AlgElt lmul_generator(int g, const AlgElt& x) const;
  /// basis(u) * basis(v), memoized.
  [[nodiscard]] const AlgElt& mul_basis(std::size_t u, std::size_t v) const;
  [[nodiscard]] AlgElt mul(const AlgElt& x, const AlgElt& y) const;
  [[nodiscard]] Vec mul(const Vec& x, const Vec& y) const;
  /// x * basis(v) for a dense x.
  [[nodiscard]] Vec mul_right_basis(const Vec& x, std::size_t v) const;

  /// Left multiplication by generator g on the PBW basis.
  [[nodiscard]] Mat left_matrix(int g) const;
  /// Right multiplication by the element y on the PBW basis.
  [[nodiscard]] Mat right_matrix(const AlgElt& y) const;
  [[nodiscard]] Mat left_matrix(const AlgElt& y) const;

  // Hopf structure, extended multiplicatively (antipode anti-multiplicatively).
  [[nodiscard]] const TensorElt& coproduct(std::size_t u) const;
  [[nodiscard]] TensorElt coproduct(const AlgElt& x) const;
  [[nodiscard]] CycloNum counit(std::size_t u) const;
  [[nodiscard]] CycloNum counit(const AlgElt& x) const;
  [[nodiscard]] const AlgElt& antipode(std::size_t u) const;
  [[nodiscard]] AlgElt antipode(const AlgElt& x) const;
  /// Product in H (x) H.
  [[nodiscard]] TensorElt tensor_mul(const TensorElt& x, const TensorElt& y) const;
  /// Coproduct of a word computed as the product of generator coproducts.
  [[nodiscard]] TensorElt coproduct_of_word(const Word& w) const;

 private:
  const AlgElt& compute_lmul(int g, std::size_t m) const;
  [[nodiscard]] const SwapRule& swap_rule(int later, int earlier) const;
  [[nodiscard]] AlgElt apply_word(const Word& w, const AlgElt& x) const;
  [[nodiscard]] TensorElt generator_coproduct(int g) const;
  void check_associativity(std::size_t samples, std::uint64_t seed) const;
  void build_weights();

  Presentation pres_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> radix_;  // place value of each generator exponent
  std::vector<int> swap_index_;     // [later * m + earlier] -> index into swaps
  std::optional<WeightLattice> weights_;

  // Rewriting memo: filled completely during construction.
  mutable std::vector<std::optional<AlgElt>> lmul_memo_;
  mutable std::vector<char> lmul_state_;

  // Lazily filled caches, guarded per entry.
  mutable std::unique_ptr<std::once_flag[]> product_once_;
  mutable std::vector<AlgElt> product_memo_;
  mutable std::unique_ptr<std::once_flag[]> coproduct_once_;
  mutable std::vector<TensorElt> coproduct_memo_;
  mutable std::unique_ptr<std::once_flag[]> antipode_once_;
  mutable std::vector<AlgElt> antipode_memo_;
};

/// Build an algebra from a spec (presentation + rewriting tables).
std::unique_ptr<Algebra> build_algebra(const AlgebraSpec& spec, std::uint64_t seed = 0);

}  // namespace hopfclass
