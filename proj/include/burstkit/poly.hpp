#ifndef BURSTKIT_POLY_HPP
#define BURSTKIT_POLY_HPP

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "burstkit/gf.hpp"

namespace burstkit {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

/// Univariate polynomial over a Field, lowest degree first, no trailing zeros.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Fe> coeffs);

  static Poly constant(FieldPtr field, Fe c);
  /// x^k
  static Poly monomial(FieldPtr field, std::size_t k, Fe c);
  /// prod_j (x - roots[j]); monic of degree roots.size().
  static Poly from_roots(FieldPtr field, std::span<const Fe> roots);

  const FieldPtr& field() const { return field_; }
  const std::vector<Fe>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kZeroPolyDegree : static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k (zero past the degree).
  Fe coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Fe{0}; }

  Fe eval(Fe x) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  FieldPtr field_;
  std::vector<Fe> coeffs_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, Fe c);
Fe poly_eval(const Poly& p, Fe x);
/// (quotient, remainder) with a = q*b + r and deg r < deg b.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

}  // namespace burstkit

#endif  // BURSTKIT_POLY_HPP
