#include "burstkit/matrix.hpp"

#include <string>
#include <utility>

#include "burstkit/error.hpp"

namespace burstkit {

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Fe{0}) {}

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Fe> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw ShapeError("matrix data length does not match dimensions");
}

Mat Mat::from_rows(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Mat out(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].value >= out.field_->q()) throw DomainError("matrix entry out of range");
      out(r, c) = rows[r][c];
    }
  }
  return out;
}

Mat Mat::identity(FieldPtr field, std::size_t n) {
  Mat out(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Fe{1};
  return out;
}

Mat Mat::transpose() const {
  Mat out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Mat Mat::select_columns(std::span<const std::size_t> cols) const {
  Mat out(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw ShapeError("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, cols[j]);
  }
  return out;
}

Mat Mat::stack(const Mat& other) const {
  if (!field_->same_as(*other.field_)) throw ShapeError("matrices over different fields");
  if (rows_ > 0 && other.rows_ > 0 && cols_ != other.cols_) throw ShapeError("column counts differ in stack");
  const std::size_t cols = rows_ > 0 ? cols_ : other.cols_;
  std::vector<Fe> data(data_);
  data.insert(data.end(), other.data_.begin(), other.data_.end());
  return Mat(field_, rows_ + other.rows_, cols, std::move(data));
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (!a.field()->same_as(*b.field())) throw ShapeError("matrices over different fields");
  if (a.cols() != b.rows()) throw ShapeError("inner dimensions differ");
  const Field& f = *a.field();
  Mat out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Fe aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  return out;
}

Vec mat_vec(const Mat& a, std::span<const Fe> x) {
  if (x.size() != a.cols()) throw ShapeError("vector length does not match matrix columns");
  const Field& f = *a.field();
  Vec out(a.rows(), Fe{0});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Fe acc{0};
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a(i, j), x[j]));
    out[i] = acc;
  }
  return out;
}

RowEchelon rref(const Mat& a) {
  const Field& f = *a.field();
  Mat m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const Fe inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Fe factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& a) { return rref(a).rank(); }

Fe determinant(const Mat& a) {
  if (!a.square()) throw ShapeError("determinant of a non-square matrix");
  const Field& f = *a.field();
  Mat m = a;
  const std::size_t n = m.rows();
  Fe det{1};
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return Fe{0};
    if (piv != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(piv, c), m(col, c));
      negate = !negate;
    }
    det = f.mul(det, m(col, col));
    const Fe inv = f.inv(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Fe factor = f.mul(m(r, col), inv);
      for (std::size_t c = col; c < n; ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(col, c)));
    }
  }
  return negate ? f.neg(det) : det;
}

std::vector<Vec> null_space(const Mat& a) {
  const Field& f = *a.field();
  const RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols(), Fe{0});
    v[free] = Fe{1};
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> left_null_space(const Mat& a) { return null_space(a.transpose()); }

std::optional<AffineSolution> solve_affine(const Mat& a, std::span<const Fe> b) {
  if (b.size() != a.rows()) throw ShapeError("right-hand side length " + std::to_string(b.size()) +
                                             " does not match " + std::to_string(a.rows()) + " rows");
  // Augment and reduce; an augmented pivot means inconsistency.
  Mat aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  AffineSolution sol;
  sol.rank = e.rank();
  sol.particular.assign(a.cols(), Fe{0});
  for (std::size_t i = 0; i < e.pivots.size(); ++i) sol.particular[e.pivots[i]] = e.reduced(i, a.cols());
  sol.basis = null_space(a);
  return sol;
}

void for_each_solution(const Field& field, const AffineSolution& sol, const std::function<void(const Vec&)>& visit) {
  const std::size_t d = sol.basis.size();
  std::vector<std::uint32_t> coef(d, 0);
  Vec x = sol.particular;
  while (true) {
    visit(x);
    // Increment the base-q counter, updating x by the difference of each digit.
    std::size_t i = 0;
    for (; i < d; ++i) {
      const std::uint32_t next = coef[i] + 1 == field.q() ? 0 : coef[i] + 1;
      const Fe delta = field.sub(Fe{next}, Fe{coef[i]});
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = field.add(x[j], field.mul(delta, sol.basis[i][j]));
      coef[i] = next;
      if (next != 0) break;
    }
    if (i == d) return;
  }
}

Mat vandermonde(FieldPtr field, std::span<const Fe> xi) {
  const std::size_t m = xi.size();
  Mat out(field, m, m);
  for (std::size_t t = 0; t < m; ++t) {
    Fe p{1};
    for (std::size_t s = 0; s < m; ++s) {
      out(s, t) = p;
      p = field->mul(p, xi[t]);
    }
  }
  return out;
}

}  // namespace burstkit
