#ifndef BURSTKIT_BURST_HPP
#define BURSTKIT_BURST_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "burstkit/bigint.hpp"
#include "burstkit/gf.hpp"

namespace burstkit {

using Word = std::vector<Fe>;

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 26;

/// A contiguous index range [start, start + length).
struct Window {
  std::size_t start = 0;
  std::size_t length = 0;
  bool contains(std::size_t j) const { return j >= start && j < start + length; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Where a single burst of length tau may sit in a word of length n.
///
/// Unrestricted bursts use every window [l, l + tau), 0 <= l <= n - tau.
/// Phased bursts use the aligned blocks [i tau, (i+1) tau) for i < n / tau;
/// when tau does not divide n the last block is clipped to [i tau, n).
class BurstSpace {
 public:
  BurstSpace(std::size_t n, std::size_t tau, bool phased = false);

  std::size_t n() const { return n_; }
  std::size_t tau() const { return tau_; }
  bool phased() const { return phased_; }
  const std::vector<Window>& windows() const { return windows_; }

  /// One past the last index a burst whose first nonzero entry is `first`
  /// may touch.
  std::size_t reach(std::size_t first) const;
  /// Whether w is an admissible error for this space (zero included).
  bool admits(const Word& w) const;

 private:
  std::size_t n_;
  std::size_t tau_;
  bool phased_;
  std::vector<Window> windows_;
};

/// A burst as (start, payload); the zero burst has an empty payload.
///
/// Canonical form: start is the first nonzero index clamped to n - tau and
/// the payload is the tau entries from start. The first payload entry is
/// therefore nonzero unless the burst lives in the final tau positions.
struct BurstPattern {
  std::size_t start = 0;
  std::vector<Fe> payload;

  bool is_zero() const { return payload.empty(); }
  Word expand(std::size_t n) const;
  friend bool operator==(const BurstPattern&, const BurstPattern&) = default;
};

/// w == 0 or (last nonzero index) - (first nonzero index) < tau.
bool is_burst(const Word& w, std::size_t tau);

/// Throws DomainError when w is not a tau-burst.
BurstPattern canonical_pattern(const Word& w, std::size_t tau);

/// First nonzero index, or w.size() for the zero word.
std::size_t first_nonzero(const Word& w);

/// q^tau * n, saturating; the budget measure for burst enumeration.
std::uint64_t enumeration_cost(std::uint64_t q, const BurstSpace& space);

/// Visits each nonzero burst whose first nonzero entry sits at `first`,
/// payload in lexicographic order (first entry most significant).
void for_each_burst_at(const Field& field, const BurstSpace& space, std::size_t first,
                       const std::function<void(const Word&)>& visit);

/// Every burst exactly once: zero first, then by (first nonzero index, payload).
void for_each_burst(const Field& field, const BurstSpace& space, const std::function<void(const Word&)>& visit,
                    std::uint64_t cap = kDefaultEnumerationCap);

std::vector<Word> enumerate_bursts(const Field& field, const BurstSpace& space,
                                   std::uint64_t cap = kDefaultEnumerationCap);

/// 1 + (q-1) n + (q-1)^2 sum_{i=0}^{tau-2} (n-i-1) q^i, exactly.
BigInt count_bursts(std::uint64_t q, std::uint64_t n, std::uint64_t tau);

/// Number of words whose support lies inside one phased block (zero included).
BigInt count_phased_bursts(std::uint64_t q, std::uint64_t n, std::uint64_t tau);

}  // namespace burstkit

#endif  // BURSTKIT_BURST_HPP
