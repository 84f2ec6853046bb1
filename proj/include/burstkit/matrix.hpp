#ifndef BURSTKIT_MATRIX_HPP
#define BURSTKIT_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "burstkit/gf.hpp"

namespace burstkit {

using Vec = std::vector<Fe>;

/// Dense row-major matrix over a Field.
class Mat {
 public:
  Mat(FieldPtr field, std::size_t rows, std::size_t cols);
  Mat(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Fe> data);
  /// From nested rows; all rows must have the same length.
  static Mat from_rows(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols = 0);
  static Mat identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Fe operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Fe& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Fe> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Fe>& data() const { return data_; }

  Mat transpose() const;
  /// The columns listed, in order.
  Mat select_columns(std::span<const std::size_t> cols) const;
  /// Rows of *this followed by rows of other.
  Mat stack(const Mat& other) const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Fe> data_;
};

Mat mat_mul(const Mat& a, const Mat& b);
/// A x for a column vector x.
Vec mat_vec(const Mat& a, std::span<const Fe> x);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon rref(const Mat& a);
std::size_t rank(const Mat& a);

/// Exact determinant by pivoted elimination; row swaps flip the sign.
Fe determinant(const Mat& a);

/// Canonical basis of {x : A x = 0}: one vector per free column f of
/// rref(A), with 1 at f, zero at the other free columns.
std::vector<Vec> null_space(const Mat& a);
/// Canonical basis of {u : u A = 0}.
std::vector<Vec> left_null_space(const Mat& a);

/// {x : A x = b} as particular + span(basis).
struct AffineSolution {
  Vec particular;           // free variables set to zero
  std::vector<Vec> basis;   // canonical null-space basis of A
  std::size_t rank = 0;
};

std::optional<AffineSolution> solve_affine(const Mat& a, std::span<const Fe> b);

/// Visits every member of the affine set in the order of the coefficient
/// tuple (c_0, ..., c_{d-1}) counted in base q, c_0 least significant.
void for_each_solution(const Field& field, const AffineSolution& sol, const std::function<void(const Vec&)>& visit);

/// Entry (s, t) = xi[t]^s.
Mat vandermonde(FieldPtr field, std::span<const Fe> xi);

}  // namespace burstkit

#endif  // BURSTKIT_MATRIX_HPP
