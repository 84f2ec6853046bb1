#ifndef BURSTKIT_REPRODUCE_HPP
#define BURSTKIT_REPRODUCE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "burstkit/json_io.hpp"
#include "burstkit/listdec.hpp"
#include "burstkit/resultant.hpp"

namespace burstkit {

struct CheckRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReproduceReport {
  std::string item;
  Json config;
  std::vector<CheckRow> rows;

  bool passed() const;
  std::size_t failures() const;
  Json to_json() const;
  /// name,pass,detail with one line per row.
  std::string to_csv() const;
};

struct ReproduceOptions {
  std::vector<std::uint64_t> q;  // empty: the item's default list
  std::uint64_t seed = 7;
  std::size_t samples = 500;     // random star vectors when exhaustive is too large
  std::size_t per_field = 1000;  // resultant instances per field
  Limits limits;
};

ReproduceReport reproduce_example1(std::uint64_t q, const Limits& limits = {});
ReproduceReport reproduce_example2(std::uint64_t q, const Limits& limits = {});
/// Exhaustive over star vectors when q^6 <= 729, else `samples` seeded draws.
ReproduceReport reproduce_appendix_a(std::uint64_t q, std::size_t samples, std::uint64_t seed,
                                     const Limits& limits = {});
/// All (ell, tau) with ell <= 3, tau <= 4 and r = tau + ceil(tau/ell) <= n - 1, for n = q - 1.
ReproduceReport reproduce_rs_grid(std::uint64_t q, const Limits& limits = {});
ReproduceReport reproduce_resultant_grid(std::uint64_t seed, std::size_t per_field);

/// Dispatches on example1 | example2 | appendix_a | rs_grid | resultant_grid.
/// Throws DomainError on an unknown item.
std::vector<ReproduceReport> run_reproduce(const std::string& item, const ReproduceOptions& opts);

/// Uniform integer in [0, n) from the raw generator output; portable across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n);

/// ell in [1, max_ell], r in [ell + 1, max_r] capped by order(alpha), a uniform
/// composition mu of r into ell + 1 parts, alpha of order >= r and uniform nonzero beta.
ResultantInstance random_resultant_instance(const FieldPtr& field, std::mt19937_64& rng, std::size_t max_ell = 3,
                                            std::uint32_t max_r = 10);
/// As above, then beta_k = beta_i alpha^t for a random pair and t drawn from
/// {-mu_i, mu_k - 1, mu_k}: the edges of the range in condition (ii).
ResultantInstance boundary_resultant_instance(const FieldPtr& field, std::mt19937_64& rng, std::size_t max_ell = 3,
                                              std::uint32_t max_r = 10);

/// One RS certification case: ell, tau and the redundancy tau + ceil(tau/ell).
struct RsCase {
  std::size_t ell = 0;
  std::size_t tau = 0;
  std::size_t r = 0;
};
std::vector<RsCase> rs_grid_cases(std::size_t n);

}  // namespace burstkit

#endif  // BURSTKIT_REPRODUCE_HPP
