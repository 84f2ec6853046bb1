#ifndef BURSTKIT_ERROR_HPP
#define BURSTKIT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace burstkit {

// Arithmetic or algebraic precondition violated (zero inverse, non-prime p, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Dimension, length or field mismatch between operands.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured budget. Never truncate silently.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t needed, std::uint64_t cap)
      : std::runtime_error(what + ": needs " + std::to_string(needed) + ", cap " + std::to_string(cap)),
        needed_(needed),
        cap_(cap) {}

  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t needed_;
  std::uint64_t cap_;
};

}  // namespace burstkit

#endif  // BURSTKIT_ERROR_HPP
