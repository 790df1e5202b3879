#include "hopfclass/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfclass {

// ---------------------------------------------------------------------------
// Vec helpers

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const CycloNum& x) { return x.is_zero(); });
}

Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

Vec scale(Vec v, const CycloNum& s) {
  for (auto& x : v) {
    if (!x.is_zero()) x *= s;
  }
  return v;
}

void axpy(Vec& a, const CycloNum& s, const Vec& b) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_zero()) a[i].add_mul(s, b[i]);
  }
}

// ---------------------------------------------------------------------------
// Mat

Mat Mat::identity(const CycloField& field, std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Mat Mat::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Mat::from_rows: ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("Mat::from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Mat::row_vec(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

Vec Mat::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

CycloNum Mat::trace() const {
  CycloNum t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const CycloNum& x) { return x.is_zero(); });
}

bool Mat::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

std::size_t Mat::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const CycloNum& x) { return !x.is_zero(); }));
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("Mat::apply: dimension mismatch");
  Vec y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const CycloNum& a = (*this)(r, c);
      if (!a.is_zero()) y[r].add_mul(a, x[c]);
    }
  }
  return y;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Mat product: dimension mismatch");
  Mat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycloNum& y = b(k, j);
        if (!y.is_zero()) out(i, j).add_mul(x, y);
      }
    }
  }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat sum: dimension mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat difference: dimension mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Mat& Mat::operator*=(const CycloNum& s) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

// ---------------------------------------------------------------------------
// Elimination

std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Smallest-height pivot limits coefficient growth.
    std::size_t best = rows;
    std::size_t best_h = 0;
    for (std::size_t i = r; i < rows; ++i) {
      const CycloNum& x = m(i, c);
      if (x.is_zero()) continue;
      const std::size_t h = x.height();
      if (best == rows || h < best_h) {
        best = i;
        best_h = h;
        if (x.is_one()) break;
      }
    }
    if (best == rows) continue;
    if (best != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(best, j), m(r, j));
    }
    if (!m(r, c).is_one()) {
      const CycloNum inv = m(r, c).inverse();
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(r, j) *= inv;
      }
    }
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) nz.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const CycloNum f = m(i, c);
      for (std::size_t j : nz) m(i, j).sub_mul(f, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Mat& m) {
  Mat copy = m;
  return rref(copy).size();
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient, std::vector<Vec> vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Mat m = Mat::from_rows(ambient, vectors);
  s.pivots_ = rref(m);
  s.basis_.reserve(s.pivots_.size());
  for (std::size_t k = 0; k < s.pivots_.size(); ++k) s.basis_.push_back(m.row_vec(k));
  return s;
}

Subspace Subspace::full(const CycloField& field, std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec e(ambient);
    e[i] = field.one();
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<std::size_t> Subspace::free_coordinates() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: dimension mismatch");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p].is_zero()) continue;
    const CycloNum f = v[p];
    const Vec& row = basis_[k];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (!row[j].is_zero()) v[j].sub_mul(f, row[j]);
    }
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  if (!v[p].is_one()) {
    const CycloNum inv = v[p].inverse();
    for (std::size_t j = p; j < ambient_; ++j) {
      if (!v[j].is_zero()) v[j] *= inv;
    }
  }
  std::vector<std::size_t> nz;
  for (std::size_t j = p; j < ambient_; ++j) {
    if (!v[j].is_zero()) nz.push_back(j);
  }
  for (auto& row : basis_) {
    if (row[p].is_zero()) continue;
    const CycloNum f = row[p];
    for (std::size_t j : nz) row[j].sub_mul(f, v[j]);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  basis_.insert(basis_.begin() + pos, std::move(v));
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
  Subspace out = *this;
  for (const auto& v : other.basis_) out.insert(v);
  return out;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  const std::size_t d1 = dim(), d2 = other.dim();
  if (d1 == 0 || d2 == 0) return Subspace(ambient_);
  Mat m(ambient_, d1 + d2);
  for (std::size_t k = 0; k < d1; ++k)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, k) = basis_[k][r];
  for (std::size_t k = 0; k < d2; ++k)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, d1 + k) = -other.basis_[k][r];
  const Subspace ker = kernel_basis(m);
  std::vector<Vec> vecs;
  for (const auto& x : ker.basis()) {
    Vec v(ambient_);
    for (std::size_t k = 0; k < d1; ++k) axpy(v, x[k], basis_[k]);
    vecs.push_back(std::move(v));
  }
  return span(ambient_, std::move(vecs));
}

// ---------------------------------------------------------------------------

Subspace kernel_basis(const Mat& m, const CycloField* field) {
  Mat r = m;
  const auto pivots = rref(r);
  std::vector<Vec> vecs;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t i = 0; i < m.rows() && !field; ++i)
    for (std::size_t j = 0; j < m.cols() && !field; ++j) field = m(i, j).field();
  if (!field && pivots.size() < m.cols())
    throw std::invalid_argument("kernel_basis: zero matrix needs an explicit field");
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = field->one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), std::move(vecs));
}

Subspace image(const Mat& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col_vec(c));
  return Subspace::span(m.rows(), std::move(cols));
}

std::optional<LinearSolution> solve(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  LinearSolution sol;
  sol.particular.assign(a.cols(), CycloNum());
  for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = aug(k, a.cols());
  sol.homogeneous = kernel_basis(a);
  return sol;
}

Subspace bilinear_radical(const Mat& gram, const CycloField* field) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("bilinear_radical: Gram matrix must be square");
  return kernel_basis(gram, field);
}

Mat kronecker(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const CycloNum& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const CycloNum& y = b(k, l);
          if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
      }
    }
  }
  return out;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  Mat out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Mat restrict_operator(const Mat& t, const Subspace& w) {
  Mat out(w.dim(), w.dim());
  for (std::size_t k = 0; k < w.dim(); ++k) {
    auto coords = w.coordinates(t.apply(w.basis()[k]));
    if (!coords) throw std::logic_error("restrict_operator: subspace is not invariant");
    for (std::size_t r = 0; r < w.dim(); ++r) out(r, k) = (*coords)[r];
  }
  return out;
}

Mat quotient_operator(const Mat& t, const Subspace& w) {
  for (const auto& v : w.basis()) {
    if (!w.contains(t.apply(v))) throw std::logic_error("quotient_operator: subspace is not invariant");
  }
  const auto free = w.free_coordinates();
  Mat out(free.size(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    Vec image = w.reduce(t.col_vec(free[k]));
    for (std::size_t r = 0; r < free.size(); ++r) out(r, k) = image[free[r]];
  }
  return out;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
  const std::size_t n = m.rows();
  const CycloField* field = nullptr;
  for (std::size_t i = 0; i < n && !field; ++i)
    for (std::size_t j = 0; j < n && !field; ++j) field = m(i, j).field();
  if (!field) return n == 0 ? std::optional<Mat>(Mat()) : std::nullopt;
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = field->one();
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

}  // namespace hopfclass
