#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "diffspec/ff.hpp"

namespace diffspec {

/// Index-level lookup data for the hot loops: base-p digits of every element,
/// negation, squaring and the quadratic character. The character is built by
/// enumerating squares, not by exponentiation. O(q n) memory.
class FieldTables {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

  explicit FieldTables(const ff::Field& field);

  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  unsigned n() const { return n_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (n_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    const std::uint32_t* da = digits_.data() + static_cast<std::size_t>(a) * n_;
    const std::uint32_t* db = digits_.data() + static_cast<std::size_t>(b) * n_;
    std::uint32_t r = 0;
    for (unsigned i = n_; i-- > 0;) {
      std::uint32_t d = da[i] + db[i];
      if (d >= p_) d -= p_;
      r = r * p_ + d;
    }
    return r;
  }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }
  std::uint32_t square(std::uint32_t a) const { return square_[a]; }
  int chi(std::uint32_t a) const { return chi_[a]; }

  /// out[x] = x + a for every x.
  void shift_row(std::uint32_t a, std::span<std::uint32_t> out) const;

 private:
  std::uint32_t p_;
  std::uint32_t q_;
  unsigned n_;
  std::vector<std::uint32_t> digits_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> square_;
  std::vector<std::int8_t> chi_;
};

}  // namespace diffspec
