#include "burstkit/codes.hpp"

#include <algorithm>

#include "burstkit/error.hpp"

namespace burstkit {

LinearCode LinearCode::from_parity_check(Mat h) {
  if (rank(h) != h.rows()) throw DomainError("parity-check matrix must have full row rank");
  auto basis = null_space(h);
  Mat g = Mat::from_rows(h.field(), basis, h.cols());
  return LinearCode(std::move(h), std::move(g));
}

LinearCode LinearCode::from_generator(Mat g) {
  if (rank(g) != g.rows()) throw DomainError("generator matrix must have full row rank");
  auto basis = null_space(g);
  Mat h = Mat::from_rows(g.field(), basis, g.cols());
  return LinearCode(std::move(h), std::move(g));
}

bool LinearCode::contains(const Word& y) const {
  if (y.size() != n()) return false;
  for (Fe s : syndrome(y))
    if (!s.is_zero()) return false;
  return true;
}

std::vector<Word> LinearCode::codewords(std::uint64_t cap) const {
  const Field& f = *field();
  const std::uint64_t count = sat_pow(f.q(), k());
  if (count > cap) throw CapExceeded("linear code expansion", count, cap);
  std::vector<Word> out;
  out.reserve(count);
  std::vector<std::uint32_t> msg(k(), 0);
  while (true) {
    Word c(n(), Fe{0});
    for (std::size_t i = 0; i < k(); ++i) {
      if (msg[i] == 0) continue;
      for (std::size_t j = 0; j < n(); ++j) c[j] = f.add(c[j], f.mul(Fe{msg[i]}, g_(i, j)));
    }
    out.push_back(std::move(c));
    std::size_t i = 0;
    for (; i < k(); ++i) {
      if (++msg[i] < f.q()) break;
      msg[i] = 0;
    }
    if (i == k()) break;
  }
  return out;
}

ExplicitCode::ExplicitCode(FieldPtr field, std::size_t n, std::vector<Word> words)
    : field_(std::move(field)), n_(n), words_(std::move(words)) {
  if (words_.empty()) throw DomainError("a code needs at least one codeword");
  for (const Word& w : words_) {
    if (w.size() != n_) throw ShapeError("codeword length differs from code length");
    for (Fe x : w)
      if (x.value >= field_->q()) throw DomainError("codeword entry out of range");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool ExplicitCode::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

ExplicitCode to_explicit(const LinearCode& code, std::uint64_t cap) {
  return ExplicitCode(code.field(), code.n(), code.codewords(cap));
}

const FieldPtr& CodeHandle::field() const {
  return std::visit([](const auto& c) -> const FieldPtr& { return c.field(); }, code);
}

std::size_t CodeHandle::n() const {
  return std::visit([](const auto& c) { return c.n(); }, code);
}

BigInt CodeHandle::size() const {
  if (is_linear()) return big_pow(field()->q(), linear().k());
  return BigInt(std::get<ExplicitCode>(code).size());
}

bool CodeHandle::contains(const Word& w) const {
  return std::visit([&](const auto& c) { return c.contains(w); }, code);
}

ExplicitCode CodeHandle::explicit_form(std::uint64_t cap) const {
  if (is_linear()) return to_explicit(linear(), cap);
  return std::get<ExplicitCode>(code);
}

Fe rs_alpha(const Field& field, std::size_t n) {
  const std::uint32_t order = field.q() - 1;
  if (n == 0 || order % n != 0)
    throw DomainError("RS length " + std::to_string(n) + " does not divide q - 1 = " + std::to_string(order));
  return field.exp(order / n);
}

LinearCode rs_code(FieldPtr field, std::size_t n, std::size_t r) {
  const Fe alpha = rs_alpha(*field, n);
  if (r >= n) throw DomainError("RS redundancy must be below the length");
  Mat h(field, r, n);
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t j = 0; j < n; ++j) h(s, j) = field->pow(alpha, static_cast<std::int64_t>((s * j) % n));
  return LinearCode::from_parity_check(std::move(h));
}

ExplicitCode example_code_1(FieldPtr field) {
  std::vector<Word> words;
  for (std::uint32_t a = 1; a < field->q(); ++a) {
    words.push_back({Fe{a}, Fe{a}, Fe{a}, Fe{0}});
    words.push_back({Fe{0}, Fe{a}, Fe{a}, Fe{a}});
  }
  return ExplicitCode(std::move(field), 4, std::move(words));
}

ExplicitCode example_code_2(FieldPtr field, Fe delta) {
  if (delta.is_zero()) throw DomainError("example code 2 needs a nonzero delta");
  if (delta.value >= field->q()) throw DomainError("delta out of range");
  std::vector<Word> words;
  for (std::uint32_t a = 0; a < field->q(); ++a) {
    words.push_back({Fe{a}, Fe{0}, Fe{0}, Fe{a}});
    words.push_back({Fe{a}, delta, delta, Fe{a}});
  }
  return ExplicitCode(std::move(field), 4, std::move(words));
}

Mat appendix_a_generator(FieldPtr field, const AppendixStars& s) {
  const Fe o{0}, i{1};
  std::vector<Vec> rows{
      {i, s[0], s[1], o, i, o, o, o},
      {o, i, s[2], o, i, i, o, o},
      {o, o, i, i, o, s[3], i, o},
      {o, o, o, i, o, s[4], s[5], i},
  };
  return Mat::from_rows(std::move(field), rows);
}

LinearCode appendix_a_code(FieldPtr field, const AppendixStars& stars) {
  return LinearCode::from_generator(appendix_a_generator(std::move(field), stars));
}

bool is_group_code(const ExplicitCode& code) {
  const Field& f = *code.field();
  const auto& words = code.codewords();
  Word diff(code.n());
  for (const Word& a : words)
    for (const Word& b : words) {
      for (std::size_t j = 0; j < code.n(); ++j) diff[j] = f.sub(a[j], b[j]);
      if (!code.contains(diff)) return false;
    }
  return true;
}

}  // namespace burstkit
