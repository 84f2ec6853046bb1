#include "burstkit/bounds.hpp"

#include <array>
#include <cmath>

#include "burstkit/burst.hpp"
#include "burstkit/error.hpp"

namespace burstkit {

namespace {

constexpr std::array<std::pair<BoundId, std::string_view>, 8> kNames{{
    {BoundId::sphere_packing, "sphere_packing"},
    {BoundId::reiger_group, "reiger_group"},
    {BoundId::reiger_group_relaxed, "reiger_group_relaxed"},
    {BoundId::reiger_linear, "reiger_linear"},
    {BoundId::general_ell2, "general_ell2"},
    {BoundId::general_any_ell, "general_any_ell"},
    {BoundId::no_detection_ell2, "no_detection_ell2"},
    {BoundId::lemma_Mell, "lemma_Mell"},
}};

double logq(double x, std::uint64_t q) { return std::log(x) / std::log(static_cast<double>(q)); }

double to_double(const BigInt& v) { return v.convert_to<double>(); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

void check_common(std::uint64_t q, std::uint64_t n, std::uint64_t tau) {
  if (q < 2) throw DomainError("alphabet size must be at least 2");
  if (tau < 1 || tau > n) throw DomainError("burst length must satisfy 1 <= tau <= n");
}

// Records a verdict of the form size <= max (strict = false) or size < bound.
void finish_upper(BoundVerdict& v, const BigInt& bound, bool strict, const std::string& bound_text) {
  v.max_size = strict ? BigInt(bound - 1) : bound;
  if (*v.max_size < 0) v.max_size = BigInt(0);
  if (!v.applicable) return;
  v.satisfied = strict ? v.size < bound : v.size <= bound;
  v.exact_terms = "size " + std::string(strict ? "< " : "<= ") + bound_text + " : " + v.size.str() +
                  (strict ? " < " : " <= ") + bound.str();
}

}  // namespace

std::string_view bound_name(BoundId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "unknown";
}

std::optional<BoundId> parse_bound(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<BoundId>& all_bounds() {
  static const std::vector<BoundId> ids = [] {
    std::vector<BoundId> v;
    for (const auto& [k, n] : kNames) v.push_back(k);
    return v;
  }();
  return ids;
}

BigInt integer_root(const BigInt& x, std::uint64_t k) {
  if (x < 0 || k == 0) throw DomainError("integer_root needs x >= 0 and k >= 1");
  if (k == 1 || x < 2) return x;
  BigInt lo = 0, hi = 1;
  while (boost::multiprecision::pow(hi, static_cast<unsigned>(k)) <= x) hi *= 2;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(k)) <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

BoundVerdict sphere_packing(std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                            const BigInt& size) {
  check_common(q, n, tau);
  if (ell < 1) throw DomainError("list size must be positive");
  BoundVerdict v;
  v.id = BoundId::sphere_packing;
  v.size = size;
  v.applicable = true;
  v.hypotheses = "1 <= tau <= n, ell >= 1";
  const BigInt volume = count_bursts(q, n, tau);
  const BigInt rhs = BigInt(ell) * big_pow(q, n);
  v.max_size = rhs / volume;
  v.satisfied = size * volume <= rhs;
  v.exact_terms = "size * V_q(n,tau) <= ell * q^n : " + BigInt(size * volume).str() + " <= " + rhs.str();
  v.min_redundancy = logq(to_double(volume) / static_cast<double>(ell), q);
  return v;
}

namespace {

BoundVerdict reiger_core(BoundId id, bool applicable, std::string hyp, std::uint64_t q, std::uint64_t n,
                         std::uint64_t tau, std::uint64_t ell, const BigInt& size) {
  BoundVerdict v;
  v.id = id;
  v.size = size;
  v.applicable = applicable;
  v.hypotheses = std::move(hyp);
  v.min_redundancy = (1.0 + 1.0 / static_cast<double>(ell)) * static_cast<double>(tau);
  // size^ell * q^((ell+1) tau) <= q^(n ell)
  const std::uint64_t lhs_exp = (ell + 1) * tau, rhs_exp = n * ell;
  v.max_size = lhs_exp > rhs_exp ? BigInt(0) : integer_root(big_pow(q, rhs_exp - lhs_exp), ell);
  if (applicable) {
    const BigInt lhs = boost::multiprecision::pow(size, static_cast<unsigned>(ell)) * big_pow(q, lhs_exp);
    const BigInt rhs = big_pow(q, rhs_exp);
    v.satisfied = lhs <= rhs;
    v.exact_terms = "size^ell * q^((ell+1)*tau) <= q^(n*ell) : " + lhs.str() + " <= " + rhs.str();
  }
  return v;
}

}  // namespace

BoundVerdict reiger_group(std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                          const BigInt& size) {
  check_common(q, n, tau);
  if (ell < 1) throw DomainError("list size must be positive");
  const bool ok = (ell + 1) * tau <= n;
  return reiger_core(BoundId::reiger_group, ok, "(ell+1)*tau <= n: " + yes_no(ok) + "; group code with detection",
                     q, n, tau, ell, size);
}

BoundVerdict reiger_group_relaxed(std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                                  const BigInt& size) {
  check_common(q, n, tau);
  if (ell < 1) throw DomainError("list size must be positive");
  const bool divides = tau % ell == 0, fits = 2 * tau <= n;
  return reiger_core(BoundId::reiger_group_relaxed, divides && fits,
                     "ell | tau: " + yes_no(divides) + "; 2*tau <= n: " + yes_no(fits) +
                         "; group code with detection",
                     q, n, tau, ell, size);
}

std::uint64_t reiger_linear_min_r(std::uint64_t tau, std::uint64_t ell) {
  if (tau < 1 || ell < 1) throw DomainError("tau and ell must be positive");
  return tau + (tau + ell - 1) / ell;
}

BoundVerdict reiger_linear(std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                           const BigInt& size) {
  check_common(q, n, tau);
  const std::uint64_t min_r = reiger_linear_min_r(tau, ell);
  const bool strict = (ell + 1) * tau <= n;
  const bool relaxed = tau % ell == 0 && 2 * tau <= n;
  BoundVerdict v;
  v.id = BoundId::reiger_linear;
  v.size = size;
  v.applicable = strict || relaxed;
  v.hypotheses = "(ell+1)*tau <= n: " + yes_no(strict) + "; ell | tau and 2*tau <= n: " + yes_no(relaxed) +
                 "; linear code with detection";
  v.min_redundancy = static_cast<double>(min_r);
  const BigInt bound = min_r > n ? BigInt(0) : big_pow(q, n - min_r);
  v.max_size = bound;
  if (v.applicable) {
    v.satisfied = size <= bound;
    v.exact_terms = "size <= q^(n - tau - ceil(tau/ell)) : " + size.str() + " <= " + bound.str();
  }
  return v;
}

BoundVerdict general_code_ell2(std::uint64_t q, std::uint64_t n, std::uint64_t tau, const BigInt& size) {
  check_common(q, n, tau);
  const bool even = tau % 2 == 0, fits = 2 * tau <= n;
  BoundVerdict v;
  v.id = BoundId::general_ell2;
  v.size = size;
  v.applicable = even && fits;
  v.hypotheses = "tau even: " + yes_no(even) + "; 2*tau <= n: " + yes_no(fits) + "; detection";
  if (!v.applicable) return v;
  const BigInt bound = big_pow(q, n - 2 * tau) * (2 * big_pow(q, tau / 2) - 2);
  finish_upper(v, bound, false, "q^(n-2tau) * (2 q^(tau/2) - 2)");
  v.min_redundancy = 2.0 * static_cast<double>(tau) - logq(2.0 * std::pow(double(q), double(tau) / 2.0) - 2.0, q);
  return v;
}

BoundVerdict general_code_any_ell(std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                                  const BigInt& size) {
  check_common(q, n, tau);
  const bool divides = ell >= 1 && tau % ell == 0, big_ell = ell > 1, fits = 2 * tau <= n;
  BoundVerdict v;
  v.id = BoundId::general_any_ell;
  v.size = size;
  v.applicable = divides && big_ell && fits;
  v.hypotheses = "ell | tau: " + yes_no(divides) + "; ell > 1: " + yes_no(big_ell) + "; 2*tau <= n: " +
                 yes_no(fits) + "; detection";
  if (!v.applicable) return v;
  const std::uint64_t b = tau / ell;
  const BigInt bound = BigInt(ell) * big_pow(q, n - b * (ell + 1));
  finish_upper(v, bound, true, "ell * q^(n - (tau/ell)(ell+1))");
  v.min_redundancy = (1.0 + 1.0 / double(ell)) * double(tau) - logq(double(ell), q);
  return v;
}

BoundVerdict lemma_Mell(std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                        const BigInt& size) {
  check_common(q, n, tau);
  const bool shape = n == 2 * ell && tau == ell, big_ell = ell > 1;
  BoundVerdict v;
  v.id = BoundId::lemma_Mell;
  v.size = size;
  v.applicable = shape && big_ell;
  v.hypotheses = "n = 2*ell and tau = ell: " + yes_no(shape) + "; ell > 1: " + yes_no(big_ell) + "; detection";
  if (!v.applicable) return v;
  const BigInt bound = BigInt(ell) * big_pow(q, ell - 1);
  finish_upper(v, bound, true, "ell * q^(ell-1)");
  v.min_redundancy = double(n) - logq(to_double(bound), q);
  return v;
}

BoundVerdict no_detection_ell2(std::uint64_t q, std::uint64_t n, std::uint64_t tau, const BigInt& size) {
  check_common(q, n, tau);
  const bool even = tau % 2 == 0, fits = 2 * tau <= n;
  BoundVerdict v;
  v.id = BoundId::no_detection_ell2;
  v.size = size;
  v.applicable = even && fits;
  v.hypotheses = "tau even: " + yes_no(even) + "; 2*tau <= n: " + yes_no(fits);
  if (!v.applicable) return v;
  const BigInt bound = 2 * big_pow(q, n - 2 * tau + tau / 2);
  finish_upper(v, bound, false, "2 q^(n - 2tau + tau/2)");
  v.min_redundancy = 1.5 * double(tau) - logq(2.0, q);
  return v;
}

BoundVerdict evaluate_bound(BoundId id, std::uint64_t q, std::uint64_t n, std::uint64_t tau, std::uint64_t ell,
                            const BigInt& size) {
  auto restrict_to_ell2 = [ell](BoundVerdict v) {
    if (ell > 2) {
      v.applicable = false;
      v.satisfied.reset();
      v.exact_terms.clear();
      v.hypotheses += "; ell <= 2: false";
    }
    return v;
  };
  switch (id) {
    case BoundId::sphere_packing:
      return sphere_packing(q, n, tau, ell, size);
    case BoundId::reiger_group:
      return reiger_group(q, n, tau, ell, size);
    case BoundId::reiger_group_relaxed:
      return reiger_group_relaxed(q, n, tau, ell, size);
    case BoundId::reiger_linear:
      return reiger_linear(q, n, tau, ell, size);
    case BoundId::general_ell2:
      return restrict_to_ell2(general_code_ell2(q, n, tau, size));
    case BoundId::general_any_ell:
      return general_code_any_ell(q, n, tau, ell, size);
    case BoundId::no_detection_ell2:
      return restrict_to_ell2(no_detection_ell2(q, n, tau, size));
    case BoundId::lemma_Mell:
      return lemma_Mell(q, n, tau, ell, size);
  }
  throw DomainError("unknown bound");
}

}  // namespace burstkit
