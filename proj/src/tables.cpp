#include "diffspec/tables.hpp"

#include "diffspec/error.hpp"

namespace diffspec {

FieldTables::FieldTables(const ff::Field& field)
    : p_(field.p()), q_(static_cast<std::uint32_t>(field.q())), n_(field.n()) {
  if (field.q() > kMaxOrder) {
    throw CapExceeded("lookup tables limited to q <= " + std::to_string(kMaxOrder));
  }
  digits_.resize(static_cast<std::size_t>(q_) * n_);
  for (std::uint32_t x = 0; x < q_; ++x) {
    std::uint32_t r = x;
    for (unsigned i = 0; i < n_; ++i) {
      digits_[static_cast<std::size_t>(x) * n_ + i] = r % p_;
      r /= p_;
    }
  }

  neg_.resize(q_);
  for (std::uint32_t x = 0; x < q_; ++x) {
    std::uint32_t r = 0;
    for (unsigned i = n_; i-- > 0;) {
      const std::uint32_t d = digits_[static_cast<std::size_t>(x) * n_ + i];
      r = r * p_ + (d ? p_ - d : 0);
    }
    neg_[x] = r;
  }

  square_.resize(q_);
  chi_.assign(q_, -1);
  chi_[0] = 0;
  for (std::uint32_t x = 0; x < q_; ++x) {
    const auto e = field.elem_of_index(x);
    const auto sq = static_cast<std::uint32_t>(field.index_of(field.mul(e, e)));
    square_[x] = sq;
    if (x != 0) chi_[sq] = 1;
  }
}

void FieldTables::shift_row(std::uint32_t a, std::span<std::uint32_t> out) const {
  if (n_ == 1) {
    for (std::uint32_t x = 0; x < q_; ++x) {
      const std::uint32_t s = x + a;
      out[x] = s >= p_ ? s - p_ : s;
    }
    return;
  }
  for (std::uint32_t x = 0; x < q_; ++x) out[x] = add(x, a);
}

}  // namespace diffspec
