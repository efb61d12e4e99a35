#pragma once

// Exact arithmetic in F_p and F_{p^n} = Z_p[x]/(m(x)) in the polynomial basis.
//
// Elements are coefficient vectors of length n, coeffs[i] multiplying x^i, always
// fully reduced into [0, p). Every element has a canonical index
//     index = sum_i coeffs[i] * p^i
// so the prime subfield F_p is exactly the index range [0, p).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diffspec::ff {

using Coeff = std::uint32_t;

/// Polynomial over Z_p, little-endian coefficient list. Used for moduli.
using Poly = std::vector<Coeff>;

struct FieldElem {
  std::vector<Coeff> coeffs;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

bool is_prime(std::uint64_t v);

/// True iff the monic polynomial `poly` (degree >= 1) has no nontrivial
/// factorization over Z_p. Throws InvalidArgument on non-monic or constant input.
bool is_irreducible(std::uint32_t p, const Poly& poly);

/// The monic irreducible of degree n with the smallest base-p encoding of
/// (c_0, ..., c_{n-1}). Deterministic.
Poly find_irreducible(std::uint32_t p, unsigned n);

/// The first `count` monic irreducibles of degree n in encoding order.
std::vector<Poly> irreducibles(std::uint32_t p, unsigned n, std::size_t count);

/// "c0,c1,...,cn" in decimal, little-endian, monic.
Poly parse_modulus(std::string_view text);
std::string format_modulus(const Poly& modulus);

/// A concrete model of F_{p^n}. Immutable after construction.
class Field {
 public:
  /// Validates p (odd prime), monicity and irreducibility of `modulus`.
  Field(std::uint32_t p, Poly modulus);

  /// Field built on find_irreducible(p, n).
  static Field with_default_modulus(std::uint32_t p, unsigned n);

  std::uint32_t p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint64_t q() const { return q_; }
  const Poly& modulus() const { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  /// Image of the integer c in the prime subfield.
  FieldElem constant(std::int64_t c) const;

  bool is_zero(const FieldElem& a) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  /// Throws DomainError for a = 0.
  FieldElem inv(const FieldElem& a) const;
  /// Square-and-multiply; 0^0 = 1.
  FieldElem pow(const FieldElem& a, std::uint64_t e) const;

  std::uint64_t index_of(const FieldElem& a) const;
  FieldElem elem_of_index(std::uint64_t i) const;
  /// elem_of_index(0), ..., elem_of_index(q - 1).
  std::vector<FieldElem> elements() const;

  /// Throws InvalidArgument unless `a` has length n and reduced coefficients.
  void check(const FieldElem& a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  std::uint32_t p_;
  unsigned n_;
  std::uint64_t q_;
  Poly modulus_;
};

}  // namespace diffspec::ff
