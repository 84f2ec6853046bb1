#include "burstkit/resultant.hpp"

#include <numeric>
#include <stdexcept>

#include "burstkit/error.hpp"

namespace burstkit {

ResultantInstance::ResultantInstance(FieldPtr field, Fe alpha, std::vector<std::uint32_t> mu, std::vector<Fe> beta)
    : field_(std::move(field)), alpha_(alpha), mu_(std::move(mu)), beta_(std::move(beta)) {
  if (!field_) throw DomainError("missing field");
  if (mu_.size() < 2) throw DomainError("need at least two blocks (ell >= 1)");
  if (beta_.size() != mu_.size()) throw ShapeError("beta and mu must have the same length");
  for (auto m : mu_)
    if (m == 0) throw DomainError("mu entries must be positive");
  r_ = std::accumulate(mu_.begin(), mu_.end(), std::uint32_t{0});
  if (alpha_.value >= field_->q()) throw DomainError("alpha is not a field element");
  if (alpha_.is_zero() || field_->element_order(alpha_) < r_)
    throw DomainError("alpha must have multiplicative order at least r");
  for (Fe b : beta_) {
    if (b.value >= field_->q()) throw DomainError("beta entry is not a field element");
    if (b.is_zero()) throw DomainError("beta entries must be nonzero");
  }
}

std::uint32_t ResultantInstance::partial_sum(std::size_t i) const {
  return std::accumulate(mu_.begin(), mu_.begin() + static_cast<std::ptrdiff_t>(i + 1), std::uint32_t{0});
}

Poly build_Mi(const ResultantInstance& inst, std::size_t i) {
  const Field& f = *inst.field();
  std::vector<Fe> roots;
  Fe root = inst.beta().at(i);
  for (std::uint32_t j = 0; j < inst.tau(i); ++j) {
    roots.push_back(root);
    root = f.mul(root, inst.alpha());
  }
  return Poly::from_roots(inst.field(), roots);
}

Mat build_Ai(const ResultantInstance& inst, std::size_t i) {
  const Poly m = build_Mi(inst, i);
  const std::uint32_t mu = inst.mu().at(i), r = inst.r();
  Mat a(inst.field(), mu, r);
  for (std::uint32_t h = 0; h < mu; ++h)
    for (std::size_t j = 0; j < m.coeffs().size(); ++j) a(h, h + j) = m.coeffs()[j];
  return a;
}

Mat build_A(const ResultantInstance& inst) {
  Mat a = build_Ai(inst, 0);
  for (std::size_t i = 1; i < inst.mu().size(); ++i) a = a.stack(build_Ai(inst, i));
  return a;
}

Fe delta_direct(const ResultantInstance& inst) { return determinant(build_A(inst)); }

BigInt kappa_exponent(const std::vector<std::uint32_t>& mu) {
  const BigInt r = std::accumulate(mu.begin(), mu.end(), BigInt(0));
  BigInt total = 0;
  for (auto m : mu) {
    const BigInt tau = r - m;
    total += BigInt(m) * (tau * (tau - 1) / 2);
  }
  return total;
}

namespace {

// prod_{0 <= s < t < m} (alpha^t - alpha^s).
Fe vandermonde_det_powers(const Field& f, Fe alpha, std::uint32_t m) {
  Fe acc = f.one();
  for (std::uint32_t t = 0; t < m; ++t)
    for (std::uint32_t s = 0; s < t; ++s) acc = f.mul(acc, f.sub(f.pow(alpha, t), f.pow(alpha, s)));
  return acc;
}

}  // namespace

Fe kappa(const FieldPtr& field, Fe alpha, const std::vector<std::uint32_t>& mu) {
  const Field& f = *field;
  const std::uint32_t r = std::accumulate(mu.begin(), mu.end(), std::uint32_t{0});
  if (alpha.is_zero() || f.element_order(alpha) < r) throw DomainError("alpha must have multiplicative order at least r");
  const std::uint32_t order = f.element_order(alpha);
  const BigInt reduced = kappa_exponent(mu) % order;
  Fe acc = f.pow(alpha, reduced.convert_to<std::int64_t>());

  const Fe vr = vandermonde_det_powers(f, alpha, r);
  acc = f.div(acc, f.mul(vr, vr));
  for (auto m : mu) {
    const Fe vm = vandermonde_det_powers(f, alpha, m);
    acc = f.mul(acc, f.mul(vm, vm));
    for (std::uint32_t s = 0; s < m; ++s)
      for (std::uint32_t t = m; t < r; ++t) acc = f.mul(acc, f.sub(f.pow(alpha, t), f.pow(alpha, s)));
  }
  return acc;
}

Fe delta_closed_form(const ResultantInstance& inst) {
  const Field& f = *inst.field();
  const auto& mu = inst.mu();
  const auto& beta = inst.beta();
  Fe acc = kappa(inst.field(), inst.alpha(), mu);
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t k = i + 1; k < mu.size(); ++k)
      for (std::uint32_t s = 0; s < mu[i]; ++s)
        for (std::uint32_t t = 0; t < mu[k]; ++t) {
          const Fe lhs = f.mul(beta[k], f.pow(inst.alpha(), s));
          const Fe rhs = f.mul(beta[i], f.pow(inst.alpha(), t));
          acc = f.mul(acc, f.sub(lhs, rhs));
          if (acc.is_zero()) return acc;
        }
  return acc;
}

std::uint64_t closed_form_beta_degree(const std::vector<std::uint32_t>& mu, std::size_t i) {
  std::uint64_t d = 0;
  for (std::size_t a = 0; a < mu.size(); ++a)
    for (std::size_t b = a + 1; b < mu.size(); ++b)
      if (a == i || b == i) d += std::uint64_t{mu[a]} * mu[b];
  return d;
}

std::optional<RatioWitness> condition_ii(const ResultantInstance& inst) {
  const Field& f = *inst.field();
  const auto& mu = inst.mu();
  const auto& beta = inst.beta();
  const std::int64_t d = f.element_order(inst.alpha());
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t k = i + 1; k < mu.size(); ++k) {
      const auto t0 = f.discrete_log_ratio(beta[i], beta[k], inst.alpha());
      if (!t0) continue;
      // The admissible range has fewer than d integers, so at most one lift of t0 lands in it.
      const std::int64_t lo = -static_cast<std::int64_t>(mu[i]), hi = mu[k];
      for (std::int64_t t : {static_cast<std::int64_t>(*t0), static_cast<std::int64_t>(*t0) - d})
        if (lo < t && t < hi) return RatioWitness{i, k, t};
    }
  return std::nullopt;
}

bool replay_relation(const ResultantInstance& inst, const RelationWitness& w) {
  if (w.u.size() != inst.mu().size()) return false;
  bool any_nonzero = false;
  Poly sum(inst.field());
  for (std::size_t i = 0; i < w.u.size(); ++i) {
    if (w.u[i].degree() >= static_cast<int>(inst.mu()[i])) return false;
    any_nonzero = any_nonzero || !w.u[i].is_zero();
    sum = poly_add(sum, poly_mul(w.u[i], build_Mi(inst, i)));
  }
  return any_nonzero && sum.is_zero();
}

std::optional<RelationWitness> find_relation(const ResultantInstance& inst) {
  const auto left = left_null_space(build_A(inst));
  if (left.empty()) return std::nullopt;
  const Vec& u = left.front();
  RelationWitness w;
  std::size_t offset = 0;
  for (auto m : inst.mu()) {
    w.u.emplace_back(inst.field(), std::vector<Fe>(u.begin() + offset, u.begin() + offset + m));
    offset += m;
  }
  if (!replay_relation(inst, w)) throw std::logic_error("left null vector failed polynomial replay");
  return w;
}

std::vector<Fe> lemma_one_beta(const FieldPtr& field, Fe alpha, const std::vector<std::uint32_t>& mu) {
  std::vector<Fe> beta;
  std::int64_t partial = 0;
  for (auto m : mu) {
    partial += m;
    beta.push_back(field->pow(alpha, partial));
  }
  return beta;
}

}  // namespace burstkit
