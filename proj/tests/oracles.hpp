// Independent reference computations for the tests. Nothing here calls the
// table-driven field arithmetic or the library's enumeration and decoding.
#ifndef BURSTKIT_TESTS_ORACLES_HPP
#define BURSTKIT_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "burstkit/gf.hpp"

namespace oracle {

using Digits = std::vector<std::uint32_t>;
using RawWord = std::vector<std::uint32_t>;

inline Digits to_digits(std::uint32_t v, std::uint32_t p, std::uint32_t m) {
  Digits d(m);
  for (auto& x : d) {
    x = v % p;
    v /= p;
  }
  return d;
}

inline std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Schoolbook arithmetic in GF(p)[x] / (modulus).
struct SlowField {
  std::uint32_t p, m;
  Digits modulus;  // monic, constant first

  explicit SlowField(const burstkit::Field& f) : p(f.p()), m(f.m()), modulus(f.modulus().begin(), f.modulus().end()) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    Digits x = to_digits(a, p, m), y = to_digits(b, p, m);
    for (std::uint32_t i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
    return from_digits(x, p);
  }
  std::uint32_t neg(std::uint32_t a) const {
    Digits x = to_digits(a, p, m);
    for (auto& v : x) v = (p - v) % p;
    return from_digits(x, p);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (m == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    Digits x = to_digits(a, p, m), y = to_digits(b, p, m);
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    for (std::size_t k = prod.size(); k-- > m;) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (std::uint32_t i = 0; i < m; ++i) prod[k - m + i] = (prod[k - m + i] + (p - c) * modulus[i]) % p;
    }
    Digits out(m);
    for (std::uint32_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return from_digits(out, p);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e-- > 0) r = mul(r, a);
    return r;
  }
  std::uint32_t q() const {
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < m; ++i) v *= p;
    return v;
  }
};

// First/last nonzero definition, written out directly.
inline bool is_burst(const RawWord& w, std::size_t tau) {
  std::size_t first = w.size(), last = 0;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (w[j] != 0) {
      if (first == w.size()) first = j;
      last = j;
    }
  return first == w.size() || last - first < tau;
}

// Support inside one aligned block [i tau, (i+1) tau), 0 <= i < n / tau.
inline bool is_phased_burst(const RawWord& w, std::size_t tau) {
  std::set<std::size_t> blocks;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (w[j] != 0) blocks.insert(j / tau);
  return blocks.size() <= 1;
}

// Every word of F^n, in base-q order.
inline std::vector<RawWord> all_words(std::uint32_t q, std::size_t n) {
  std::vector<RawWord> out;
  RawWord w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < n && ++w[i] == q) w[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline RawWord raw(const std::vector<burstkit::Fe>& w) {
  RawWord r;
  for (auto x : w) r.push_back(x.value);
  return r;
}

inline std::vector<burstkit::Fe> cooked(const RawWord& w) {
  std::vector<burstkit::Fe> r;
  for (auto x : w) r.push_back(burstkit::Fe{x});
  return r;
}

// {c in C : y - c is an admissible burst}.
inline std::set<RawWord> decode_scan(const SlowField& f, const std::vector<RawWord>& code, const RawWord& y,
                                     std::size_t tau, bool phased) {
  std::set<RawWord> out;
  for (const auto& c : code) {
    RawWord e(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) e[j] = f.sub(y[j], c[j]);
    if (phased ? is_phased_burst(e, tau) : is_burst(e, tau)) out.insert(c);
  }
  return out;
}

// max over y in F^n of the decode_scan size.
inline std::size_t max_list_scan(const SlowField& f, const std::vector<RawWord>& code, std::size_t n,
                                 std::size_t tau, bool phased) {
  std::size_t best = 0;
  for (const auto& y : all_words(f.q(), n)) best = std::max(best, decode_scan(f, code, y, tau, phased).size());
  return best;
}

inline std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace oracle

#endif  // BURSTKIT_TESTS_ORACLES_HPP
