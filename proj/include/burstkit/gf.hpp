#ifndef BURSTKIT_GF_HPP
#define BURSTKIT_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace burstkit {

/// A field element, stored as its canonical index in [0, q).
///
/// For m > 1 the index packs the polynomial-basis coordinates as base-p
/// digits, constant term least significant. Index 0 is the additive zero and
/// index 1 the multiplicative identity.
struct Fe {
  std::uint32_t value = 0;

  constexpr Fe() = default;
  constexpr explicit Fe(std::uint32_t v) : value(v) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

/// The finite field GF(p^m) with full log/antilog tables.
///
/// Construction is deterministic: the modulus is the monic irreducible of
/// degree m with the smallest canonical index (coefficients read as base-p
/// digits, constant term least significant), and the generator is the
/// smallest index of multiplicative order q - 1. Immutable once built.
class Field {
 public:
  Field(std::uint32_t p, std::uint32_t m);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, constant term first, length m + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Fe generator() const { return generator_; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  /// Canonical index -> element, with range check.
  Fe element(std::uint64_t index) const;
  /// The image of an integer under Z -> GF(p) -> GF(q).
  Fe from_int(std::int64_t v) const;

  Fe add(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe mul(Fe a, Fe b) const {
    if (a.is_zero() || b.is_zero()) return Fe{0};
    return exp_[log_[a.value] + log_[b.value]];
  }
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  /// a^e; negative exponents require a != 0. 0^0 = 1.
  Fe pow(Fe a, std::int64_t e) const;

  /// log_generator(a) in [0, q-1); a must be nonzero.
  std::uint32_t log(Fe a) const;
  /// generator^k for any integer k.
  Fe exp(std::int64_t k) const;

  /// Least d >= 1 with x^d = 1.
  std::uint32_t element_order(Fe x) const;

  /// The t in [0, order(base)) with b / a = base^t, found by scanning the
  /// powers of base; nullopt when b / a is outside <base>.
  std::optional<std::uint32_t> discrete_log_ratio(Fe a, Fe b, Fe base) const;

  bool same_as(const Field& other) const { return p_ == other.p_ && m_ == other.m_; }

 private:
  Fe add_slow(Fe a, Fe b) const;
  Fe mul_slow(Fe a, Fe b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Fe generator_;
  std::vector<std::uint32_t> log_;
  std::vector<Fe> exp_;  // length 2(q-1) so products never need a reduction
  std::vector<std::uint32_t> neg_;
  // Zech logarithms: 1 + g^k = g^zech_[k]; kNoZech when 1 + g^k = 0.
  std::vector<std::uint32_t> zech_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds (and caches) GF(p^m). Throws DomainError for a non-prime p, m = 0,
/// or p^m > 2^20.
FieldPtr field_new(std::uint32_t p, std::uint32_t m);

/// GF(q) for a prime power q.
FieldPtr field_for_size(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// Prime factors of n without multiplicity, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace burstkit

#endif  // BURSTKIT_GF_HPP
