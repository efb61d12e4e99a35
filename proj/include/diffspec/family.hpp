#pragma once

// The binomials f_u(x) = x^((q+3)/2) + u x^2 over F_q, q = p^n = 3 (mod 4),
// their closed-form differential invariants for u = +-1, and brute-force
// counters for every equation system those closed forms are assembled from.
//
// For u = +-1 the binomial collapses to f_u(x) = (chi(x) + u) x^2, which is
// what makes the counting tractable: f_1 is 2x^2 on squares and 0 elsewhere.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "diffspec/ff.hpp"
#include "diffspec/integer.hpp"
#include "diffspec/kernels.hpp"
#include "diffspec/sbox.hpp"

namespace diffspec::family {

using kernels::Exec;

inline constexpr std::uint64_t kDefaultCubicCap = 400;

/// Everything the closed forms depend on.
struct FamilyConstants {
  std::uint32_t p = 0;
  unsigned n = 0;
  Integer q;
  int chi2 = 0;
  Integer lambda;
};

/// Throws InvalidArgument unless p is an odd prime, n >= 1 and p^n = 3 (mod 4).
FamilyConstants family_constants(std::uint32_t p, unsigned n);

/// Table of x^((q+3)/2) + u x^2. With self_check and u = +-1, every entry is
/// compared against (chi(x) + u) x^2 with chi taken from the square table, and
/// a mismatch throws InternalError.
sbox::FunctionTable build_fu(const ff::Field& field, const ff::FieldElem& u, bool self_check = true);
sbox::FunctionTable build_f1(const ff::Field& field);

/// f_{-1}(x) = -f_1(-x) pointwise, and the two spectra coincide.
bool fminus1_check(const ff::Field& field);

Integer closed_uniformity(std::uint32_t p, unsigned n);
Integer closed_n4(std::uint32_t p, unsigned n);

/// omega_0, omega_1, omega_2 in terms of chi(2) and lambda, omega_{(q+1)/4} = q-1
/// and omega_q = 1. For q in {3, 7} the (q+1)/4 bin lands on 1 or 2 and is
/// merged into it.
sbox::Spectrum closed_spectrum(std::uint32_t p, unsigned n);

/// The same spectrum from the chi(2)-specialized formulas (p = 7 mod 8 loses
/// lambda entirely).
sbox::Spectrum closed_spectrum_by_residue(std::uint32_t p, unsigned n);

/// Signs of chi over a tuple of 3 or 4 nonzero elements.
class SignPattern {
 public:
  explicit SignPattern(std::vector<int> signs);
  static SignPattern from_index(unsigned index, std::size_t length = 4);

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  /// Bit i set iff entry i is -1.
  unsigned index() const;
  std::string str() const;

 private:
  std::vector<int> signs_;
};

struct CountCheck {
  std::uint64_t brute = 0;
  Integer closed;

  bool ok() const { return Integer(brute) == closed; }
};

/// (y1, y2, y3) in (F*)^3, y1 - y2 + y3 = 1, y1^2 - y2^2 + y3^2 = 1, all squares.
CountCheck count_triples_all_square(const ff::Field& field);
/// (y1, y2, y3) in (F*)^3, y1 - y2 + y3 = 1, y1^2 - y2^2 + y3^2 = 0, all nonsquares.
CountCheck count_triples_all_nonsquare(const ff::Field& field);
/// (y1, .., y4) in (F*)^4, y1 - y2 + y3 - y4 = 0, all nonsquares. O(q^3).
CountCheck count_quads_all_nonsquare(const ff::Field& field, std::uint64_t cap = kDefaultCubicCap,
                                     Exec exec = Exec::parallel);

Integer closed_signed_count(const SignPattern& pattern, const FamilyConstants& c);
Integer closed_zero_containing(unsigned zeros, const Integer& q);

/// Solutions in (F*)^4 of the f_1 quadruple system with the given chi signs.
CountCheck count_signed_quadruples(const ff::Field& field, const SignPattern& pattern,
                                   std::uint64_t cap = kDefaultCubicCap,
                                   Exec exec = Exec::parallel);
/// Solutions of the f_1 quadruple system with exactly `zeros` coordinates 0.
CountCheck count_zero_containing(const ff::Field& field, unsigned zeros,
                                 std::uint64_t cap = kDefaultCubicCap, Exec exec = Exec::parallel);

/// All 16 sign classes and 4 zero classes from a single census pass, next to an
/// independent N4 count and the closed N4.
struct Decomposition {
  std::array<CountCheck, 16> patterns;
  std::array<CountCheck, 4> zero_classes;  // [k-1] holds k zeros
  std::uint64_t n4_brute = 0;
  Integer n4_closed;

  Integer class_sum() const;
  bool ok() const;
};

Decomposition n4_decomposition(const ff::Field& field, std::uint64_t cap = kDefaultCubicCap,
                               Exec exec = Exec::parallel);

}  // namespace diffspec::family
