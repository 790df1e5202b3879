#pragma once

// Dense exact linear algebra over Q(zeta_n).

#include "hopfclass/cyclo.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hopfclass {

using Vec = std::vector<CycloNum>;

/// Dense row-major matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(const CycloField& field, std::size_t n);
  static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  CycloNum& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycloNum& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const CycloNum> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] Vec row_vec(std::size_t r) const;
  [[nodiscard]] Vec col_vec(std::size_t c) const;

  [[nodiscard]] Mat transpose() const;
  [[nodiscard]] CycloNum trace() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_diagonal() const;
  [[nodiscard]] std::size_t nonzeros() const;

  /// y = M x, skipping zero entries of x.
  [[nodiscard]] Vec apply(const Vec& x) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  Mat& operator*=(const CycloNum& s);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycloNum> data_;
};

bool is_zero(const Vec& v);
Vec add(Vec a, const Vec& b);
Vec scale(Vec v, const CycloNum& s);
/// a += s * b
void axpy(Vec& a, const CycloNum& s, const Vec& b);

/// Reduced row echelon form in place; returns pivot columns.  Pivots are
/// normalized to one as soon as they are chosen.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(const Mat& m);

/// Subspace of K^ambient held as a canonical reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, std::vector<Vec> vectors);
  static Subspace full(const CycloField& field, std::size_t ambient);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vec>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Non-pivot coordinates; their unit vectors span a complement.
  [[nodiscard]] std::vector<std::size_t> free_coordinates() const;

  /// Reduce v modulo the subspace.  The result vanishes on every pivot
  /// coordinate, so it is a canonical coset representative.
  [[nodiscard]] Vec reduce(Vec v) const;
  [[nodiscard]] bool contains(const Vec& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(), or nullopt if v is not in the subspace.
  [[nodiscard]] std::optional<Vec> coordinates(const Vec& v) const;

  /// Adds v; returns true if the dimension grew.  Keeps echelon form.
  bool insert(Vec v);

  [[nodiscard]] Subspace sum(const Subspace& other) const;
  [[nodiscard]] Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : M v = 0}.  `field` is only consulted when M has
/// no nonzero entry to take it from.
Subspace kernel_basis(const Mat& m, const CycloField* field = nullptr);
/// Column space.
Subspace image(const Mat& m);

struct LinearSolution {
  Vec particular;
  Subspace homogeneous;
};
/// All x with A x = b, or nullopt when inconsistent.
std::optional<LinearSolution> solve(const Mat& a, const Vec& b);

/// Radical {v : G v = 0} of a symmetric bilinear form given by its Gram
/// matrix.  Throws std::invalid_argument for non-square input.
Subspace bilinear_radical(const Mat& gram, const CycloField* field = nullptr);

/// Kronecker product, left factor major: (A (x) B)[(i,k),(j,l)] = A[i,j] B[k,l].
Mat kronecker(const Mat& a, const Mat& b);
Mat direct_sum(const Mat& a, const Mat& b);

/// Matrix of T restricted to the invariant subspace W, in W's basis.
/// Throws std::logic_error if W is not T-invariant.
Mat restrict_operator(const Mat& t, const Subspace& w);
/// Matrix of T on V/W in the basis given by W.free_coordinates().
/// Throws std::logic_error if W is not T-invariant.
Mat quotient_operator(const Mat& t, const Subspace& w);

/// Inverse of a square matrix; nullopt if singular.
std::optional<Mat> inverse(const Mat& m);

}  // namespace hopfclass
