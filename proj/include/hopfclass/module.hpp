#pragma once

// Finite-dimensional modules as exact matrix representations.
//
// Most computations assume a weight basis: every basis vector is a joint
// eigenvector of the group-like generators.  In that basis the group-likes
// are diagonal and each other generator maps weight block w to block
// w + shift, so Hom spaces, radical layers and submodule closures split into
// small per-block problems.  weight_normalize() puts any module in that form.

#include "hopfclass/algebra.hpp"
#include "hopfclass/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopfclass {

class Module {
 public:
  Module() = default;
  /// Checks every defining relation of `h` on the matrices and throws
  /// std::logic_error naming the first one that fails.  If the group-likes
  /// are diagonal with q-power entries the module is recorded as a weight
  /// module.
  Module(const Algebra& h, std::vector<Mat> actions, std::string label = {});

  /// The zero-dimensional module.
  static Module zero(const Algebra& h);

  [[nodiscard]] const Algebra& algebra() const { return *algebra_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const Mat& action(int g) const { return actions_[static_cast<std::size_t>(g)]; }
  [[nodiscard]] const std::vector<Mat>& actions() const { return actions_; }
  [[nodiscard]] const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  [[nodiscard]] bool has_weights() const { return !weight_.empty() || dim_ == 0; }
  [[nodiscard]] const WeightLattice& lattice() const;
  [[nodiscard]] int weight(std::size_t i) const { return weight_[i]; }
  /// Basis indices of weight w, increasing.
  [[nodiscard]] const std::vector<std::size_t>& block(int w) const { return blocks_[static_cast<std::size_t>(w)]; }
  [[nodiscard]] std::size_t block_dim(int w) const { return blocks_[static_cast<std::size_t>(w)].size(); }
  /// Generator g restricted to block w, as a map into block lattice().act(g, w).
  [[nodiscard]] const Mat& block_action(int g, int w) const {
    return gen_blocks_[static_cast<std::size_t>(g)][static_cast<std::size_t>(w)];
  }
  /// dim of each weight space (length lattice().count()).
  [[nodiscard]] std::vector<std::size_t> character() const;

 private:
  void detect_weights();
  void check_relations() const;

  const Algebra* algebra_ = nullptr;
  std::size_t dim_ = 0;
  std::vector<Mat> actions_;
  std::string label_;
  std::vector<int> weight_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::vector<Mat>> gen_blocks_;
};

/// The same module in a weight basis.  Returns the input unchanged if it
/// already is one.  Throws std::logic_error if the weight spaces do not span
/// (impossible for a genuine module over these algebras).
Module weight_normalize(const Module& m);
/// Joint eigenspaces of the group-likes in the module's own coordinates,
/// keyed by weight id; only nonzero spaces are listed.
std::map<int, Subspace> weight_decomposition(const Module& m);

/// Module on M (x) N through the coproduct, left factor major.
Module tensor_module(const Module& m, const Module& n);
Module direct_sum(const Module& m, const Module& n);
/// The module with matrices P^{-1} A P.
Module conjugate(const Module& m, const Mat& p, const Mat& p_inverse);

/// A subspace of a weight module, one part per weight block in
/// block-local coordinates.
struct GradedSubspace {
  std::vector<Subspace> parts;
  [[nodiscard]] std::size_t dim() const;
  [[nodiscard]] bool contains(const GradedSubspace& other) const;
  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) { return a.parts == b.parts; }
};

GradedSubspace zero_subspace(const Module& m);
GradedSubspace full_subspace(const Module& m);
/// Smallest submodule containing `seeds` (spinning).
GradedSubspace spin(const Module& m, GradedSubspace seeds);
/// Module on the submodule U, basis = the echelon bases of U's parts.
Module submodule(const Module& m, const GradedSubspace& u);
/// Module on U / V for submodules V <= U.
Module subquotient(const Module& m, const GradedSubspace& u, const GradedSubspace& v);
/// Per weight, the vectors of M's block representing the basis of the
/// subquotient's block (in the same order).
std::vector<Subspace> subquotient_lifts(const Module& m, const GradedSubspace& u, const GradedSubspace& v);
/// Graded subspace spanned by one full-coordinate weight vector.
GradedSubspace graded_span(const Module& m, const std::vector<Vec>& weight_vectors);
/// Embed a graded subspace back into full coordinates.
Subspace to_full(const Module& m, const GradedSubspace& u);

/// Action of a homogeneous algebra element, block by block.
struct GradedOp {
  int degree = 0;
  std::vector<Mat> blocks;  // blocks[w] : block(w) -> block(w + degree)
};
GradedOp element_op(const Module& m, const AlgElt& x);
/// Sum of the images of U under the given operators.
GradedSubspace apply_ops(const Module& m, const std::vector<GradedOp>& ops, const GradedSubspace& u);

/// Basis of Hom_H(M, N) (each as a dim N x dim M matrix in the modules'
/// weight bases).  Both modules must be weight modules.
std::vector<Mat> hom_basis(const Module& m, const Module& n);
/// dim Hom_H(M, N); normalizes weights first if needed.
std::size_t hom_dim(const Module& m, const Module& n);

}  // namespace hopfclass
