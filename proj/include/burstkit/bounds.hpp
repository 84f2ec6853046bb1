#ifndef BURSTKIT_BOUNDS_HPP
#define BURSTKIT_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burstkit/bigint.hpp"

namespace burstkit {

enum class BoundId {
  sphere_packing,
  reiger_group,          // (ell+1) tau <= n
  reiger_group_relaxed,  // ell | tau and 2 tau <= n
  reiger_linear,         // r >= tau + ceil(tau / ell), either hypothesis
  general_ell2,
  general_any_ell,
  no_detection_ell2,
  lemma_Mell,
};

std::string_view bound_name(BoundId id);
std::optional<BoundId> parse_bound(std::string_view name);
const std::vector<BoundId>& all_bounds();

/// One bound evaluated on (q, n, tau, ell, |C|).
///
/// `satisfied` comes from an exact integer comparison only and is empty when
/// the bound's hypotheses fail. `min_redundancy` is a rendering for reports.
struct BoundVerdict {
  BoundId id{};
  bool applicable = false;
  std::string hypotheses;       // which hypotheses were checked, and how they came out
  BigInt size;                  // the |C| tested
  std::optional<BigInt> max_size;  // largest |C| the bound permits
  std::optional<bool> satisfied;
  std::string exact_terms;      // the integer inequality with its evaluated sides
  double min_redundancy = 0.0;  // real-valued lower bound on r, advisory
};

/// size * V_q(n, tau) <= ell * q^n.
BoundVerdict sphere_packing(std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                            const BigInt& size);
/// size^ell * q^((ell+1) tau) <= q^(n ell), under (ell+1) tau <= n.
BoundVerdict reiger_group(std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                          const BigInt& size);
/// Same inequality under ell | tau and 2 tau <= n.
BoundVerdict reiger_group_relaxed(std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                                  const BigInt& size);
/// tau + ceil(tau / ell).
std::uint64_t reiger_linear_min_r(std::uint64_t tau, std::uint64_t ell);
/// size <= q^(n - reiger_linear_min_r), under either group-code hypothesis.
BoundVerdict reiger_linear(std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                           const BigInt& size);
/// size <= q^(n - 2 tau) (2 q^(tau/2) - 2), under tau even and 2 tau <= n.
BoundVerdict general_code_ell2(std::uint64_t q, std::uint64_t n, std::uint64_t tau, const BigInt& size);
/// size < ell q^(n - (tau/ell)(ell+1)), under ell | tau, ell > 1, 2 tau <= n.
BoundVerdict general_code_any_ell(std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                                  const BigInt& size);
/// size < ell q^(ell-1) for codes of length 2 ell with tau = ell > 1.
BoundVerdict lemma_Mell(std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                        const BigInt& size);
/// size <= 2 q^(n - 2 tau + tau/2), under tau even and 2 tau <= n; no detection needed.
BoundVerdict no_detection_ell2(std::uint64_t q, std::uint64_t n, std::uint64_t tau, const BigInt& size);

/// Evaluates one bound with a uniform signature. The two ell = 2 bounds are
/// applicable only when ell <= 2, since a list of at most ell is then a list
/// of at most 2.
BoundVerdict evaluate_bound(BoundId id, std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                            const BigInt& size);

/// floor(x^(1/k)) for x >= 0, k >= 1.
BigInt integer_root(const BigInt& x, std::uint64_t k);

}  // namespace burstkit

#endif  // BURSTKIT_BOUNDS_HPP
