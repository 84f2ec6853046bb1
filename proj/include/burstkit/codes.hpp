#ifndef BURSTKIT_CODES_HPP
#define BURSTKIT_CODES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "burstkit/bigint.hpp"
#include "burstkit/burst.hpp"
#include "burstkit/matrix.hpp"

namespace burstkit {

inline constexpr std::uint64_t kDefaultCodeSizeCap = std::uint64_t{1} << 20;

/// A linear [n, n - r] code given by a full-row-rank parity-check matrix H,
/// with a generator matrix G whose rows span the right null space of H.
class LinearCode {
 public:
  /// H must have full row rank; G is derived as the canonical null-space basis.
  static LinearCode from_parity_check(Mat h);
  /// G must have full row rank; H is derived as the canonical null-space basis.
  static LinearCode from_generator(Mat g);

  const FieldPtr& field() const { return h_.field(); }
  std::size_t n() const { return h_.cols(); }
  std::size_t r() const { return h_.rows(); }
  std::size_t k() const { return g_.rows(); }
  const Mat& parity_check() const { return h_; }
  const Mat& generator() const { return g_; }

  Vec syndrome(const Word& y) const { return mat_vec(h_, y); }
  bool contains(const Word& y) const;
  /// Every codeword, in order of the message counted base q (first row least significant).
  std::vector<Word> codewords(std::uint64_t cap = kDefaultCodeSizeCap) const;

 private:
  LinearCode(Mat h, Mat g) : h_(std::move(h)), g_(std::move(g)) {}
  Mat h_;
  Mat g_;
};

/// A code given by its list of codewords: sorted, deduplicated, nonempty.
class ExplicitCode {
 public:
  ExplicitCode(FieldPtr field, std::size_t n, std::vector<Word> words);

  const FieldPtr& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& codewords() const { return words_; }
  bool contains(const Word& w) const;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Word> words_;
};

ExplicitCode to_explicit(const LinearCode& code, std::uint64_t cap = kDefaultCodeSizeCap);

/// A code plus the name and parameters of the construction that built it.
struct CodeHandle {
  std::string name;
  std::map<std::string, std::string> meta;
  std::variant<LinearCode, ExplicitCode> code;

  const FieldPtr& field() const;
  std::size_t n() const;
  bool is_linear() const { return std::holds_alternative<LinearCode>(code); }
  const LinearCode& linear() const { return std::get<LinearCode>(code); }
  BigInt size() const;
  bool contains(const Word& w) const;
  ExplicitCode explicit_form(std::uint64_t cap = kDefaultCodeSizeCap) const;
};

/// Reed-Solomon code with H[s][j] = alpha^(s j), alpha = g^((q-1)/n).
/// Requires n | q - 1 and r < n.
LinearCode rs_code(FieldPtr field, std::size_t n, std::size_t r);
/// The element of order n used by rs_code.
Fe rs_alpha(const Field& field, std::size_t n);

/// {(a a a 0)} u {(0 a a a)} over nonzero a: length 4, size 2q - 2.
ExplicitCode example_code_1(FieldPtr field);
/// {(a 0 0 a)} u {(a d d a)} over all a, d = delta != 0: length 4, size 2q.
ExplicitCode example_code_2(FieldPtr field, Fe delta);

/// Star slots of the length-8 generator in reading order:
/// (row 0, col 1), (row 0, col 2), (row 1, col 2), (row 2, col 5), (row 3, col 5), (row 3, col 6).
using AppendixStars = std::array<Fe, 6>;

/// The 4 x 8 banded generator with the given star values.
Mat appendix_a_generator(FieldPtr field, const AppendixStars& stars);
LinearCode appendix_a_code(FieldPtr field, const AppendixStars& stars);

/// Closed under subtraction (and therefore a subgroup of F^n).
bool is_group_code(const ExplicitCode& code);

}  // namespace burstkit

#endif  // BURSTKIT_CODES_HPP
