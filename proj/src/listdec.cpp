#include "burstkit/listdec.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <span>
#include <thread>
#include <unordered_map>

#include "burstkit/error.hpp"

namespace burstkit {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0') return fallback;
  return parsed;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct VecKeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Bucket keys: a base-q packing when q^len fits in 64 bits, else the digit
// vector. Both order like the digit sequence read lexicographically.
template <typename Key>
struct KeyOps;

template <>
struct KeyOps<std::uint64_t> {
  using Hash = std::hash<std::uint64_t>;
  static std::uint64_t make(std::span<const Fe> digits, std::uint32_t q) {
    std::uint64_t k = 0;
    for (Fe d : digits) k = k * q + d.value;
    return k;
  }
};

template <>
struct KeyOps<std::vector<std::uint32_t>> {
  using Hash = VecKeyHash;
  static std::vector<std::uint32_t> make(std::span<const Fe> digits, std::uint32_t) {
    std::vector<std::uint32_t> k(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) k[i] = digits[i].value;
    return k;
  }
};

bool packable(std::uint32_t q, std::size_t len) { return sat_pow(q, len) < UINT64_MAX; }

struct Member {
  Word error;
  Word codeword;
};

struct BucketOutcome {
  std::uint64_t max_count = 0;
  std::uint64_t buckets = 0;
  std::uint64_t emitted = 0;
  std::vector<Member> members;  // first members of the winning bucket
};

// produce(part, emit) calls emit(key digits, error, codeword) for every item
// of one partition. Partitions are spread over threads; the merged counts and
// the winning bucket (largest, then smallest key) do not depend on the split.
template <typename Key, typename Produce>
BucketOutcome scan_buckets(std::size_t parts, unsigned threads, std::uint32_t q, std::size_t want,
                           std::optional<std::size_t> witness_above, const Produce& produce) {
  using Map = std::unordered_map<Key, std::uint64_t, typename KeyOps<Key>::Hash>;
  const unsigned t_count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(parts)));
  std::vector<Map> maps(t_count);
  std::vector<std::uint64_t> emitted(t_count, 0);
  auto work = [&](unsigned t) {
    for (std::size_t part = t; part < parts; part += t_count)
      produce(part, [&](std::span<const Fe> key, const Word&, const Word&) {
        ++maps[t][KeyOps<Key>::make(key, q)];
        ++emitted[t];
      });
  };
  if (t_count == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < t_count; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Map& merged = maps[0];
  for (unsigned t = 1; t < t_count; ++t)
    for (const auto& [k, c] : maps[t]) merged[k] += c;

  BucketOutcome out;
  out.buckets = merged.size();
  for (auto e : emitted) out.emitted += e;
  const Key* best = nullptr;
  for (const auto& [k, c] : merged) {
    if (c > out.max_count || (c == out.max_count && best != nullptr && k < *best)) {
      out.max_count = c;
      best = &k;
    }
  }
  if (best == nullptr || !witness_above || out.max_count <= *witness_above) return out;
  const Key target = *best;
  for (std::size_t part = 0; part < parts && out.members.size() < want; ++part)
    produce(part, [&](std::span<const Fe> key, const Word& error, const Word& codeword) {
      if (out.members.size() < want && KeyOps<Key>::make(key, q) == target) out.members.push_back({error, codeword});
    });
  return out;
}

template <typename Produce>
BucketOutcome scan_any(std::size_t key_len, std::size_t parts, unsigned threads, std::uint32_t q, std::size_t want,
                       std::optional<std::size_t> witness_above, const Produce& produce) {
  if (packable(q, key_len))
    return scan_buckets<std::uint64_t>(parts, threads, q, want, witness_above, produce);
  return scan_buckets<std::vector<std::uint32_t>>(parts, threads, q, want, witness_above, produce);
}

std::size_t first_window_admitting(const BurstSpace& space, const Word& e) {
  const std::size_t first = first_nonzero(e);
  if (first == e.size()) return space.windows().front().start;
  std::size_t last = e.size() - 1;
  while (e[last].is_zero()) --last;
  for (const Window& w : space.windows())
    if (w.contains(first) && w.contains(last)) return w.start;
  throw std::logic_error("burst outside every window");
}

Word word_sub(const Field& f, const Word& a, const Word& b) {
  Word out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = f.sub(a[j], b[j]);
  return out;
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  l.enumeration = env_or("BURSTKIT_CAP_ENUM", l.enumeration);
  l.solutions = env_or("BURSTKIT_CAP_SOLUTIONS", l.solutions);
  l.code_size = env_or("BURSTKIT_CAP_CODE", l.code_size);
  l.threads = static_cast<unsigned>(env_or("BURSTKIT_THREADS", l.threads));
  return l;
}

ListDecodeResult decode_linear(const LinearCode& code, const Word& y, std::size_t tau, bool phased,
                               const Limits& limits) {
  if (y.size() != code.n()) throw ShapeError("received word length differs from code length");
  const Field& f = *code.field();
  const BurstSpace space(code.n(), tau, phased);
  const Vec s = code.syndrome(y);
  std::map<Word, Candidate> found;
  ListDecodeResult result;
  for (const Window& w : space.windows()) {
    std::vector<std::size_t> cols(w.length);
    for (std::size_t t = 0; t < w.length; ++t) cols[t] = w.start + t;
    const auto sol = solve_affine(code.parity_check().select_columns(cols), s);
    WindowStat stat{w, 0};
    if (sol) {
      const std::uint64_t count = sat_pow(f.q(), sol->basis.size());
      if (count > limits.solutions) throw CapExceeded("window solution set", count, limits.solutions);
      stat.solutions = count;
      for_each_solution(f, *sol, [&](const Vec& local) {
        Word e(code.n(), Fe{0});
        std::copy(local.begin(), local.end(), e.begin() + static_cast<std::ptrdiff_t>(w.start));
        if (!space.admits(e)) return;
        Word c = word_sub(f, y, e);
        if (found.contains(c)) return;
        Candidate cand{c, e, canonical_pattern(e, tau), w.start};
        found.emplace(std::move(c), std::move(cand));
      });
    }
    result.window_stats.push_back(stat);
  }
  for (auto& [c, cand] : found) result.candidates.push_back(std::move(cand));
  return result;
}

ListDecodeResult decode_explicit(const ExplicitCode& code, const Word& y, std::size_t tau, bool phased,
                                 const Limits& limits) {
  if (y.size() != code.n()) throw ShapeError("received word length differs from code length");
  if (code.size() > limits.code_size) throw CapExceeded("explicit code scan", code.size(), limits.code_size);
  const Field& f = *code.field();
  const BurstSpace space(code.n(), tau, phased);
  ListDecodeResult result;
  for (const Window& w : space.windows()) result.window_stats.push_back({w, 0});
  for (const Word& c : code.codewords()) {
    Word e = word_sub(f, y, c);
    if (!space.admits(e)) continue;
    const std::size_t first = first_nonzero(e);
    std::size_t last = first;
    for (std::size_t j = first; j < e.size(); ++j)
      if (!e[j].is_zero()) last = j;
    for (auto& stat : result.window_stats)
      if (first == e.size() || (stat.window.contains(first) && stat.window.contains(last))) ++stat.solutions;
    const std::size_t start = first_window_admitting(space, e);
    BurstPattern pattern = canonical_pattern(e, tau);
    result.candidates.push_back({c, std::move(e), std::move(pattern), start});
  }
  return result;
}

ListDecodeResult decode(const CodeHandle& code, const Word& y, std::size_t tau, bool phased, const Limits& limits) {
  if (code.is_linear()) return decode_linear(code.linear(), y, tau, phased, limits);
  return decode_explicit(std::get<ExplicitCode>(code.code), y, tau, phased, limits);
}

bool detects_single_burst_linear(const LinearCode& code, std::size_t tau) {
  const BurstSpace space(code.n(), tau, false);
  if (code.r() < tau) return false;
  for (const Window& w : space.windows()) {
    std::vector<std::size_t> cols(w.length);
    for (std::size_t t = 0; t < w.length; ++t) cols[t] = w.start + t;
    if (rank(code.parity_check().select_columns(cols)) != tau) return false;
  }
  return true;
}

bool detects_single_burst_explicit(const ExplicitCode& code, std::size_t tau, const Limits& limits) {
  if (code.size() > limits.code_size) throw CapExceeded("explicit code scan", code.size(), limits.code_size);
  const Field& f = *code.field();
  const auto& words = code.codewords();
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (is_burst(word_sub(f, words[i], words[j]), tau)) return false;
  return true;
}

bool detects_single_burst(const CodeHandle& code, std::size_t tau, const Limits& limits) {
  if (code.is_linear()) return detects_single_burst_linear(code.linear(), tau);
  return detects_single_burst_explicit(std::get<ExplicitCode>(code.code), tau, limits);
}

CertReport max_list_size_linear(const LinearCode& code, std::size_t tau, bool phased,
                                std::optional<std::size_t> witness_above, const Limits& limits) {
  const Field& f = *code.field();
  const BurstSpace space(code.n(), tau, phased);
  const std::uint64_t cost = enumeration_cost(f.q(), space);
  if (cost > limits.enumeration) throw CapExceeded("burst enumeration", cost, limits.enumeration);

  const std::size_t r = code.r(), n = code.n();
  std::vector<Fe> hcol(n * r);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < r; ++i) hcol[j * r + i] = code.parity_check()(i, j);
  const Word zero(n, Fe{0});

  // Partition 0 is the zero burst, partition f + 1 the bursts starting at f.
  auto produce = [&](std::size_t part, const auto& emit) {
    Vec s(r, Fe{0});
    if (part == 0) {
      emit(std::span<const Fe>(s), zero, zero);
      return;
    }
    const std::size_t first = part - 1, end = space.reach(first);
    for_each_burst_at(f, space, first, [&](const Word& e) {
      std::fill(s.begin(), s.end(), Fe{0});
      for (std::size_t j = first; j < end; ++j) {
        if (e[j].is_zero()) continue;
        const Fe* col = &hcol[j * r];
        for (std::size_t i = 0; i < r; ++i) s[i] = f.add(s[i], f.mul(col[i], e[j]));
      }
      emit(std::span<const Fe>(s), e, zero);
    });
  };
  const std::size_t want = witness_above ? *witness_above + 1 : 0;
  BucketOutcome b = scan_any(r, n + 1, resolve_threads(limits.threads), f.q(), want, witness_above, produce);

  CertReport rep;
  rep.path = "syndrome";
  rep.tau = tau;
  rep.phased = phased;
  rep.max_list = b.max_count;
  rep.work = {b.emitted, b.buckets, 0};
  rep.detects = detects_single_burst_linear(code, tau);
  // Equal syndromes: y = e_0 and c_i = e_0 - e_i is a codeword.
  for (const Member& m : b.members) {
    const Word& e0 = b.members.front().error;
    rep.witness.push_back({word_sub(f, e0, m.error), m.error});
  }
  return rep;
}

CertReport max_list_size_explicit(const ExplicitCode& code, std::size_t tau, bool phased,
                                  std::optional<std::size_t> witness_above, const Limits& limits) {
  const Field& f = *code.field();
  const BurstSpace space(code.n(), tau, phased);
  if (code.size() > limits.code_size) throw CapExceeded("explicit code scan", code.size(), limits.code_size);
  const std::uint64_t cost = sat_mul(enumeration_cost(f.q(), space), code.size());
  if (cost > limits.enumeration) throw CapExceeded("explicit pair enumeration", cost, limits.enumeration);

  const auto bursts = enumerate_bursts(f, space, limits.enumeration);
  const auto& words = code.codewords();
  auto produce = [&](std::size_t part, const auto& emit) {
    const Word& c = words[part];
    Word y(code.n());
    for (const Word& e : bursts) {
      for (std::size_t j = 0; j < y.size(); ++j) y[j] = f.add(c[j], e[j]);
      emit(std::span<const Fe>(y), e, c);
    }
  };
  const std::size_t want = witness_above ? *witness_above + 1 : 0;
  BucketOutcome b =
      scan_any(code.n(), words.size(), resolve_threads(limits.threads), f.q(), want, witness_above, produce);

  CertReport rep;
  rep.path = "explicit";
  rep.tau = tau;
  rep.phased = phased;
  rep.max_list = b.max_count;
  rep.work = {b.emitted, b.buckets, words.size()};
  rep.detects = detects_single_burst_explicit(code, tau, limits);
  for (const Member& m : b.members) rep.witness.push_back({m.codeword, m.error});
  return rep;
}

CertReport max_list_size(const CodeHandle& code, std::size_t tau, bool phased,
                         std::optional<std::size_t> witness_above, const Limits& limits) {
  if (code.is_linear()) return max_list_size_linear(code.linear(), tau, phased, witness_above, limits);
  return max_list_size_explicit(std::get<ExplicitCode>(code.code), tau, phased, witness_above, limits);
}

CertReport certify(const CodeHandle& code, std::size_t tau, std::size_t ell, bool phased, const Limits& limits) {
  CertReport rep = max_list_size(code, tau, phased, ell, limits);
  rep.ell = ell;
  rep.decodable = rep.max_list <= ell;
  return rep;
}

bool replay_witness(const CodeHandle& code, std::size_t tau, bool phased, const std::vector<WitnessPair>& witness) {
  if (witness.size() < 2) return false;
  const Field& f = *code.field();
  const std::size_t n = code.n();
  const BurstSpace space(n, tau, phased);
  std::optional<Word> common;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    const auto& [c, e] = witness[i];
    if (c.size() != n || e.size() != n) return false;
    if (!code.contains(c) || !is_burst(e, tau) || !space.admits(e)) return false;
    Word sum(n);
    for (std::size_t j = 0; j < n; ++j) sum[j] = f.add(c[j], e[j]);
    if (common && *common != sum) return false;
    common = std::move(sum);
    for (std::size_t k = 0; k < i; ++k)
      if (witness[k].codeword == c) return false;
  }
  return true;
}

}  // namespace burstkit
