#pragma once

// Quadratic character, exact character sums of polynomial arguments, and the
// cubic sum lambda_{p,n} = sum_{x in F_{p^n}} chi(x (x^2 - 2x - 1)) with its
// lift from F_p to F_{p^n} through the Frobenius trace recursion.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "diffspec/ff.hpp"
#include "diffspec/integer.hpp"

namespace diffspec::charsum {

/// Exact value of a character sum over F_q; |value| <= q.
using SumValue = std::int64_t;

struct LambdaEntry {
  std::uint32_t p = 0;
  unsigned n = 0;
  Integer lambda;

  friend bool operator==(const LambdaEntry&, const LambdaEntry&) = default;
};

/// 0 for a = 0, +1 if a^((q-1)/2) = 1, -1 otherwise.
int quadratic_character(const ff::Field& field, const ff::FieldElem& a);

/// sum_x chi(f(x)) by enumeration; f given little-endian over F_q.
SumValue char_sum_poly(const ff::Field& field, std::span<const ff::FieldElem> coeffs);

/// Closed form for a2 x^2 + a1 x + a0: -chi(a2) if the discriminant is
/// nonzero, (q-1) chi(a2) otherwise.
SumValue quad_sum_closed(const ff::Field& field, const ff::FieldElem& a2, const ff::FieldElem& a1,
                         const ff::FieldElem& a0);

/// lambda over the given model of F_{p^n}, by enumeration.
LambdaEntry lambda_direct(const ff::Field& field);
/// lambda over the default model of F_{p^n}.
LambdaEntry lambda_direct(std::uint32_t p, unsigned n);

/// Lifts Gamma_{p,1} of an elliptic curve over F_p to Gamma_{p,n}:
///   Gamma_n = (-1)^(n+1) / 2^(n-1) * sum_k (-1)^k C(n,2k) Gamma_1^(n-2k) (4p - Gamma_1^2)^k
/// The division is checked to be exact.
Integer gamma_extend(const Integer& gamma1, std::uint32_t p, unsigned n);

/// lambda_{p,1} by an O(p) sum over Z_p, then gamma_extend.
LambdaEntry lambda_extend(std::uint32_t p, unsigned n);

/// lambda_{p,1} for every prime 3 <= p <= max_p with p = 3 (mod 4), ascending.
std::vector<LambdaEntry> lambda_table(std::uint32_t max_p);

/// Number of affine solutions of y^2 = x^3 - 2x^2 - x over the field, counted
/// through the square-root multiplicity of each right-hand side.
std::uint64_t lambda_curve_affine_points(const ff::Field& field);

struct IdentityValue {
  std::string name;
  SumValue computed = 0;
  Integer expected;
};

/// The five quartic/cubic sums built from 1/2 whose values are fixed in terms
/// of lambda when q = 3 (mod 4). Rejects other q.
std::array<IdentityValue, 5> half_identities(const ff::Field& field, const Integer& lambda);

/// chi(2) in F_{p^n}: chi_p(2)^n.
int chi_of_two(std::uint32_t p, unsigned n);

}  // namespace diffspec::charsum
