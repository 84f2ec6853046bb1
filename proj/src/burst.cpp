#include "burstkit/burst.hpp"

#include <algorithm>
#include <string>

#include "burstkit/error.hpp"

namespace burstkit {

BurstSpace::BurstSpace(std::size_t n, std::size_t tau, bool phased) : n_(n), tau_(tau), phased_(phased) {
  if (tau < 1 || tau > n)
    throw DomainError("burst length " + std::to_string(tau) + " outside [1, " + std::to_string(n) + "]");
  if (phased) {
    for (std::size_t s = 0; s < n; s += tau) windows_.push_back({s, std::min(tau, n - s)});
  } else {
    for (std::size_t s = 0; s + tau <= n; ++s) windows_.push_back({s, tau});
  }
}

std::size_t BurstSpace::reach(std::size_t first) const {
  if (phased_) return std::min((first / tau_ + 1) * tau_, n_);
  return std::min(first + tau_, n_);
}

bool BurstSpace::admits(const Word& w) const {
  if (w.size() != n_) throw ShapeError("word length does not match burst space");
  const std::size_t first = first_nonzero(w);
  if (first == n_) return true;
  const std::size_t end = reach(first);
  for (std::size_t j = end; j < n_; ++j)
    if (!w[j].is_zero()) return false;
  return true;
}

Word BurstPattern::expand(std::size_t n) const {
  Word w(n, Fe{0});
  if (start + payload.size() > n) throw ShapeError("burst pattern does not fit the word length");
  std::copy(payload.begin(), payload.end(), w.begin() + static_cast<std::ptrdiff_t>(start));
  return w;
}

std::size_t first_nonzero(const Word& w) {
  for (std::size_t j = 0; j < w.size(); ++j)
    if (!w[j].is_zero()) return j;
  return w.size();
}

bool is_burst(const Word& w, std::size_t tau) {
  if (tau < 1 || tau > w.size())
    throw DomainError("burst length " + std::to_string(tau) + " outside [1, " + std::to_string(w.size()) + "]");
  const std::size_t first = first_nonzero(w);
  if (first == w.size()) return true;
  std::size_t last = w.size() - 1;
  while (w[last].is_zero()) --last;
  return last - first < tau;
}

BurstPattern canonical_pattern(const Word& w, std::size_t tau) {
  if (!is_burst(w, tau)) throw DomainError("word is not a burst of the requested length");
  const std::size_t first = first_nonzero(w);
  if (first == w.size()) return {};
  BurstPattern b;
  b.start = std::min(first, w.size() - tau);
  b.payload.assign(w.begin() + static_cast<std::ptrdiff_t>(b.start),
                   w.begin() + static_cast<std::ptrdiff_t>(b.start + tau));
  return b;
}

std::uint64_t enumeration_cost(std::uint64_t q, const BurstSpace& space) {
  return sat_mul(sat_pow(q, space.tau()), space.n());
}

void for_each_burst_at(const Field& field, const BurstSpace& space, std::size_t first,
                       const std::function<void(const Word&)>& visit) {
  const std::size_t end = space.reach(first);
  const std::uint32_t q = field.q();
  Word w(space.n(), Fe{0});
  w[first] = Fe{1};
  while (true) {
    visit(w);
    // Odometer over w[first..end), last position least significant.
    std::size_t j = end;
    while (j-- > first) {
      if (w[j].value + 1 < q) {
        w[j] = Fe{w[j].value + 1};
        break;
      }
      w[j] = Fe{j == first ? 1u : 0u};
      if (j == first) return;
    }
  }
}

void for_each_burst(const Field& field, const BurstSpace& space, const std::function<void(const Word&)>& visit,
                    std::uint64_t cap) {
  const std::uint64_t cost = enumeration_cost(field.q(), space);
  if (cost > cap) throw CapExceeded("burst enumeration", cost, cap);
  visit(Word(space.n(), Fe{0}));
  for (std::size_t first = 0; first < space.n(); ++first) for_each_burst_at(field, space, first, visit);
}

std::vector<Word> enumerate_bursts(const Field& field, const BurstSpace& space, std::uint64_t cap) {
  std::vector<Word> out;
  for_each_burst(field, space, [&](const Word& w) { out.push_back(w); }, cap);
  return out;
}

BigInt count_bursts(std::uint64_t q, std::uint64_t n, std::uint64_t tau) {
  if (tau > n) throw DomainError("burst length exceeds block length");
  const BigInt qm1 = BigInt(q) - 1;
  BigInt sum = 0;
  for (std::uint64_t i = 0; i + 2 <= tau; ++i) sum += BigInt(n - i - 1) * big_pow(q, i);
  return 1 + qm1 * n + qm1 * qm1 * sum;
}

BigInt count_phased_bursts(std::uint64_t q, std::uint64_t n, std::uint64_t tau) {
  if (tau < 1 || tau > n) throw DomainError("burst length outside [1, n]");
  BigInt total = 1;
  for (std::uint64_t s = 0; s < n; s += tau) total += big_pow(q, std::min(tau, n - s)) - 1;
  return total;
}

}  // namespace burstkit
