#include "burstkit/gf.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "burstkit/error.hpp"

namespace burstkit {

namespace {

constexpr std::uint32_t kNoZech = 0xffffffffu;

// Dense polynomials over GF(p), constant term first. Only used while
// constructing a Field, before any tables exist.
using RawPoly = std::vector<std::uint32_t>;

void trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b must be nonzero.
RawPoly raw_mod(RawPoly a, RawPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor * b[i] % p)) % p);
    }
    trim(a);
  }
  return a;
}

RawPoly digits(std::uint64_t index, std::uint32_t p, std::uint32_t len) {
  RawPoly out(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return out;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const RawPoly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      RawPoly g = digits(idx, p, d);
      g.push_back(1);
      if (raw_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw DomainError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw DomainError("field size exceeds 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);

  // Smallest canonical index among monic irreducibles of degree m.
  const std::uint64_t candidates = ipow(p, m);
  for (std::uint64_t idx = 0; idx < candidates && modulus_.empty(); ++idx) {
    RawPoly f = digits(idx, p, m);
    f.push_back(1);
    if (is_irreducible(f, p)) modulus_ = std::move(f);
  }
  if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

  const std::uint32_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto pow_slow = [this](Fe a, std::uint64_t e) {
    Fe r{1};
    while (e > 0) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  if (q_ == 2) {
    generator_ = Fe{1};
  } else {
    for (std::uint32_t g = 2; g < q_; ++g) {
      bool primitive = true;
      for (auto f : factors) {
        if (pow_slow(Fe{g}, order / f) == Fe{1}) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator_ = Fe{g};
        break;
      }
    }
  }

  log_.assign(q_, 0);
  exp_.assign(2 * std::size_t{order}, Fe{0});
  Fe cur{1};
  for (std::uint32_t k = 0; k < order; ++k) {
    exp_[k] = cur;
    exp_[k + order] = cur;
    log_[cur.value] = k;
    cur = mul_slow(cur, generator_);
  }
  if (cur != Fe{1}) throw std::logic_error("generator does not have full order");

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    RawPoly d = digits(a, p_, m_);
    std::uint32_t out = 0;
    for (std::uint32_t i = m_; i-- > 0;) out = out * p_ + (p_ - d[i]) % p_;
    neg_[a] = out;
  }
  if (p_ != 2 && m_ > 1) {
    zech_.resize(order);
    for (std::uint32_t k = 0; k < order; ++k) {
      const Fe s = add_slow(Fe{1}, exp_[k]);
      zech_[k] = s.is_zero() ? kNoZech : log_[s.value];
    }
  }
}

Fe Field::add_slow(Fe a, Fe b) const {
  std::uint32_t out = 0, scale = 1, x = a.value, y = b.value;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Fe{out};
}

Fe Field::mul_slow(Fe a, Fe b) const {
  if (m_ == 1) return Fe{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  RawPoly x = digits(a.value, p_, m_), y = digits(b.value, p_, m_);
  RawPoly prod(2 * m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
  RawPoly r = raw_mod(prod, modulus_, p_);
  std::uint32_t out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return Fe{out};
}

Fe Field::element(std::uint64_t index) const {
  if (index >= q_) throw DomainError("element index " + std::to_string(index) + " out of range for GF(" +
                                     std::to_string(q_) + ")");
  return Fe{static_cast<std::uint32_t>(index)};
}

Fe Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fe{static_cast<std::uint32_t>(r)};
}

Fe Field::add(Fe a, Fe b) const {
  if (p_ == 2) return Fe{a.value ^ b.value};
  if (m_ == 1) return Fe{(a.value + b.value) % p_};
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::uint32_t order = q_ - 1;
  const std::uint32_t la = log_[a.value];
  std::uint32_t k = log_[b.value] + order - la;
  if (k >= order) k -= order;
  const std::uint32_t z = zech_[k];
  if (z == kNoZech) return Fe{0};
  return exp_[la + z];
}

Fe Field::neg(Fe a) const { return Fe{neg_[a.value]}; }

Fe Field::inv(Fe a) const {
  if (a.is_zero()) throw DomainError("inverse of zero");
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a.value]) % order];
}

Fe Field::pow(Fe a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e < 0) throw DomainError("negative power of zero");
    return e == 0 ? Fe{1} : Fe{0};
  }
  const std::int64_t order = q_ - 1;
  std::int64_t k = e % order;
  if (k < 0) k += order;
  return exp_[(std::int64_t{log_[a.value]} * k) % order];
}

std::uint32_t Field::log(Fe a) const {
  if (a.is_zero()) throw DomainError("logarithm of zero");
  return log_[a.value];
}

Fe Field::exp(std::int64_t k) const {
  const std::int64_t order = q_ - 1;
  k %= order;
  if (k < 0) k += order;
  return exp_[k];
}

std::uint32_t Field::element_order(Fe x) const {
  if (x.is_zero()) throw DomainError("order of zero is undefined");
  const std::uint32_t order = q_ - 1;
  return order / std::gcd(log_[x.value], order);
}

std::optional<std::uint32_t> Field::discrete_log_ratio(Fe a, Fe b, Fe base) const {
  if (a.is_zero() || b.is_zero() || base.is_zero()) throw DomainError("discrete log of zero");
  const Fe ratio = div(b, a);
  const std::uint32_t d = element_order(base);
  Fe cur{1};
  for (std::uint32_t t = 0; t < d; ++t) {
    if (cur == ratio) return t;
    cur = mul(cur, base);
  }
  return std::nullopt;
}

FieldPtr field_new(std::uint32_t p, std::uint32_t m) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({p, m});
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const Field>(p, m);
  cache.emplace(std::pair{p, m}, f);
  return f;
}

FieldPtr field_for_size(std::uint64_t q) {
  const auto factors = prime_factors(q);
  if (q < 2 || factors.size() != 1) throw DomainError("field size " + std::to_string(q) + " is not a prime power");
  const std::uint64_t p = factors.front();
  std::uint32_t m = 0;
  for (std::uint64_t x = q; x > 1; x /= p) ++m;
  if (q > kMaxFieldSize) throw DomainError("field size exceeds 2^20");
  return field_new(static_cast<std::uint32_t>(p), m);
}

}  // namespace burstkit
