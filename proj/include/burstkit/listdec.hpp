#ifndef BURSTKIT_LISTDEC_HPP
#define BURSTKIT_LISTDEC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burstkit/burst.hpp"
#include "burstkit/codes.hpp"

namespace burstkit {

/// Enumeration budgets. Exceeding any of them raises CapExceeded.
struct Limits {
  std::uint64_t enumeration = kDefaultEnumerationCap;  // bursts (measured as q^tau * n), or |C| * that
  std::uint64_t solutions = std::uint64_t{1} << 20;    // members of one per-window affine solution set
  std::uint64_t code_size = kDefaultCodeSizeCap;       // codewords of an explicit expansion
  unsigned threads = 0;                                // 0: hardware concurrency

  /// Defaults overridden by BURSTKIT_CAP_ENUM, BURSTKIT_CAP_SOLUTIONS,
  /// BURSTKIT_CAP_CODE and BURSTKIT_THREADS when set.
  static Limits from_env();
};

struct Candidate {
  Word codeword;
  Word error;            // received - codeword
  BurstPattern burst;    // canonical form of error
  std::size_t window = 0;  // start of the first window that admits error
};

struct WindowStat {
  Window window;
  std::uint64_t solutions = 0;
};

struct ListDecodeResult {
  std::vector<Candidate> candidates;  // ascending by codeword
  std::vector<WindowStat> window_stats;
};

/// The complete decoder: every c with y - c an admissible burst.
///
/// Linear codes solve H_J e = H y per window J (burst turned erasure);
/// explicit codes scan every codeword. Both return the same set.
ListDecodeResult decode(const CodeHandle& code, const Word& y, std::size_t tau, bool phased,
                        const Limits& limits = {});
ListDecodeResult decode_linear(const LinearCode& code, const Word& y, std::size_t tau, bool phased,
                               const Limits& limits = {});
ListDecodeResult decode_explicit(const ExplicitCode& code, const Word& y, std::size_t tau, bool phased,
                                 const Limits& limits = {});

/// No difference of two distinct codewords is a tau-burst.
bool detects_single_burst(const CodeHandle& code, std::size_t tau, const Limits& limits = {});
/// Linear test: every tau consecutive columns of H are independent.
bool detects_single_burst_linear(const LinearCode& code, std::size_t tau);
/// Pairwise scan over codeword differences.
bool detects_single_burst_explicit(const ExplicitCode& code, std::size_t tau, const Limits& limits = {});

struct WitnessPair {
  Word codeword;
  Word error;
};

struct WorkCounters {
  std::uint64_t bursts = 0;    // bursts enumerated
  std::uint64_t buckets = 0;   // distinct syndromes / received words
  std::uint64_t codewords = 0;
};

struct CertReport {
  std::string path;  // "syndrome" or "explicit"
  std::size_t tau = 0;
  bool phased = false;
  bool detects = false;
  std::size_t max_list = 0;
  std::optional<std::size_t> ell;
  std::optional<bool> decodable;
  /// ell + 1 pairs summing to one word, present when the list exceeds ell.
  std::vector<WitnessPair> witness;
  WorkCounters work;
};

/// Largest list over all received words. With witness_above = ell, a bucket
/// of more than ell members is reported as an (ell + 1)-pair witness.
/// Linear codes bucket bursts by syndrome; explicit codes bucket c + e.
CertReport max_list_size(const CodeHandle& code, std::size_t tau, bool phased,
                         std::optional<std::size_t> witness_above = std::nullopt, const Limits& limits = {});
CertReport max_list_size_linear(const LinearCode& code, std::size_t tau, bool phased,
                                std::optional<std::size_t> witness_above = std::nullopt,
                                const Limits& limits = {});
CertReport max_list_size_explicit(const ExplicitCode& code, std::size_t tau, bool phased,
                                  std::optional<std::size_t> witness_above = std::nullopt,
                                  const Limits& limits = {});

/// Detection plus (ell, tau) list decodability, with a witness on failure.
CertReport certify(const CodeHandle& code, std::size_t tau, std::size_t ell, bool phased = false,
                   const Limits& limits = {});

/// Re-checks a witness with plain field arithmetic: every codeword belongs to
/// the code, every error is an admissible burst, all sums agree and the pairs
/// are distinct.
bool replay_witness(const CodeHandle& code, std::size_t tau, bool phased, const std::vector<WitnessPair>& witness);

}  // namespace burstkit

#endif  // BURSTKIT_LISTDEC_HPP
