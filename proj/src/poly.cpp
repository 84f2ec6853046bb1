#include "burstkit/poly.hpp"

#include <algorithm>

#include "burstkit/error.hpp"

namespace burstkit {

namespace {

const Field& common_field(const Poly& a, const Poly& b) {
  if (!a.field()->same_as(*b.field())) throw ShapeError("polynomials over different fields");
  return *a.field();
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Fe> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Fe c : coeffs_)
    if (c.value >= field_->q()) throw DomainError("coefficient out of range");
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(FieldPtr field, Fe c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, std::size_t k, Fe c) {
  std::vector<Fe> coeffs(k + 1, Fe{0});
  coeffs[k] = c;
  return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::from_roots(FieldPtr field, std::span<const Fe> roots) {
  const Field& f = *field;
  std::vector<Fe> c{Fe{1}};
  c.reserve(roots.size() + 1);
  for (Fe root : roots) {
    const Fe minus_root = f.neg(root);
    c.push_back(Fe{0});
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = f.add(c[i - 1], f.mul(minus_root, c[i]));
    c[0] = f.mul(minus_root, c[0]);
  }
  return Poly(std::move(field), std::move(c));
}

Fe Poly::eval(Fe x) const {
  const Field& f = *field_;
  Fe acc{0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i]);
  return acc;
}

Poly poly_add(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  std::vector<Fe> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(a.field(), std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  std::vector<Fe> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field(), std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  std::vector<Fe> out(a.coeffs().size() + b.coeffs().size() - 1, Fe{0});
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
  return Poly(a.field(), std::move(out));
}

Poly poly_scale(const Poly& a, Fe c) {
  std::vector<Fe> out(a.coeffs());
  for (Fe& x : out) x = a.field()->mul(x, c);
  return Poly(a.field(), std::move(out));
}

Fe poly_eval(const Poly& p, Fe x) { return p.eval(x); }

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  const Field& f = common_field(a, b);
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Fe> rem(a.coeffs());
  const std::size_t db = b.coeffs().size() - 1;
  if (rem.size() <= db) return {Poly(a.field()), a};
  std::vector<Fe> quot(rem.size() - db, Fe{0});
  const Fe lead_inv = f.inv(b.coeffs().back());
  for (std::size_t k = rem.size(); k-- > db;) {
    const Fe factor = f.mul(rem[k], lead_inv);
    if (factor.is_zero()) continue;
    quot[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = f.sub(rem[k - db + j], f.mul(factor, b.coeffs()[j]));
  }
  rem.resize(db);
  return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(rem))};
}

}  // namespace burstkit
