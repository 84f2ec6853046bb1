#ifndef BURSTKIT_RESULTANT_HPP
#define BURSTKIT_RESULTANT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "burstkit/bigint.hpp"
#include "burstkit/gf.hpp"
#include "burstkit/matrix.hpp"
#include "burstkit/poly.hpp"

namespace burstkit {

/// (alpha, mu, beta) with sum(mu) = r, order(alpha) >= r and beta_i != 0.
class ResultantInstance {
 public:
  /// Throws DomainError when an invariant fails.
  ResultantInstance(FieldPtr field, Fe alpha, std::vector<std::uint32_t> mu, std::vector<Fe> beta);

  const FieldPtr& field() const { return field_; }
  Fe alpha() const { return alpha_; }
  const std::vector<std::uint32_t>& mu() const { return mu_; }
  const std::vector<Fe>& beta() const { return beta_; }
  std::size_t ell() const { return mu_.size() - 1; }
  std::uint32_t r() const { return r_; }
  std::uint32_t tau(std::size_t i) const { return r_ - mu_.at(i); }
  /// mu_0 + ... + mu_i.
  std::uint32_t partial_sum(std::size_t i) const;

 private:
  FieldPtr field_;
  Fe alpha_;
  std::vector<std::uint32_t> mu_;
  std::vector<Fe> beta_;
  std::uint32_t r_ = 0;
};

/// prod_{j < tau_i} (x - beta_i alpha^j).
Poly build_Mi(const ResultantInstance& inst, std::size_t i);
/// mu_i x r band matrix; row h holds the coefficients of x^h M_i.
Mat build_Ai(const ResultantInstance& inst, std::size_t i);
/// A_0 over A_1 over ... over A_ell.
Mat build_A(const ResultantInstance& inst);

Fe delta_direct(const ResultantInstance& inst);

/// sum_i mu_i * C(tau_i, 2), where tau_i = r - mu_i.
BigInt kappa_exponent(const std::vector<std::uint32_t>& mu);
Fe kappa(const FieldPtr& field, Fe alpha, const std::vector<std::uint32_t>& mu);
/// kappa(alpha) * prod_{i<k} prod_{s<mu_i} prod_{t<mu_k} (beta_k alpha^s - beta_i alpha^t).
Fe delta_closed_form(const ResultantInstance& inst);
/// Number of factors of the closed-form product that involve beta_i.
std::uint64_t closed_form_beta_degree(const std::vector<std::uint32_t>& mu, std::size_t i);

struct RatioWitness {
  std::size_t i = 0;
  std::size_t k = 0;
  std::int64_t t = 0;  // beta_k / beta_i = alpha^t with -mu_i < t < mu_k
  friend bool operator==(const RatioWitness&, const RatioWitness&) = default;
};

/// First pair i < k in lexicographic order with a ratio in range.
std::optional<RatioWitness> condition_ii(const ResultantInstance& inst);

/// Polynomials u_i, deg u_i < mu_i, not all zero, with sum u_i M_i = 0.
struct RelationWitness {
  std::vector<Poly> u;
};

/// Empty iff A(beta) is nonsingular. The returned relation has been replayed.
std::optional<RelationWitness> find_relation(const ResultantInstance& inst);
/// Recomputes sum u_i M_i with polynomial arithmetic and checks it vanishes.
bool replay_relation(const ResultantInstance& inst, const RelationWitness& w);

/// beta_i = alpha^(mu_0 + ... + mu_i).
std::vector<Fe> lemma_one_beta(const FieldPtr& field, Fe alpha, const std::vector<std::uint32_t>& mu);

}  // namespace burstkit

#endif  // BURSTKIT_RESULTANT_HPP
