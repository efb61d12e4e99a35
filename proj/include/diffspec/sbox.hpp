#pragma once

// Difference distribution tables, differential spectra and the moment
// identities they satisfy, for arbitrary functions F: F_q -> F_q given as
// index lookup tables.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "diffspec/ff.hpp"
#include "diffspec/integer.hpp"
#include "diffspec/kernels.hpp"

namespace diffspec::sbox {

using kernels::Exec;

/// F as a table over element indices: table[i] = index of F(elem_of_index(i)).
class FunctionTable {
 public:
  /// Throws InvalidArgument unless the table has length q and entries in [0, q).
  FunctionTable(ff::Field field, std::vector<std::uint32_t> table);

  const ff::Field& field() const { return field_; }
  std::uint64_t q() const { return field_.q(); }
  std::span<const std::uint32_t> values() const { return table_; }
  std::uint32_t operator[](std::size_t i) const { return table_[i]; }

 private:
  ff::Field field_;
  std::vector<std::uint32_t> table_;
};

/// All q rows of delta_F(a, b), row-major by a.
class Ddt {
 public:
  explicit Ddt(std::uint32_t q) : q_(q), cells_(static_cast<std::size_t>(q) * q, 0) {}

  std::uint32_t q() const { return q_; }
  std::uint32_t at(std::uint32_t a, std::uint32_t b) const {
    return cells_[static_cast<std::size_t>(a) * q_ + b];
  }
  std::span<const std::uint32_t> row(std::uint32_t a) const {
    return {cells_.data() + static_cast<std::size_t>(a) * q_, q_};
  }
  std::span<std::uint32_t> cells() { return cells_; }
  std::span<const std::uint32_t> cells() const { return cells_; }

 private:
  std::uint32_t q_;
  std::vector<std::uint32_t> cells_;
};

/// Sparse multiplicities omega_i = #{(a, b) : delta(a, b) = i}; zero entries
/// are never stored.
struct Spectrum {
  Integer q;
  std::map<Integer, Integer> omega;

  void add(const Integer& value, const Integer& count) {
    if (count == 0) return;
    omega[value] += count;
  }
  Integer at(const Integer& value) const {
    auto it = omega.find(value);
    return it == omega.end() ? Integer(0) : it->second;
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

Ddt ddt_compute(const FunctionTable& f, Exec exec = Exec::parallel);

/// A single cell, computed with field arithmetic and no tables.
std::uint32_t delta(const FunctionTable& f, std::uint32_t a, std::uint32_t b);

/// Counts all q^2 cells, including the a = 0 row unless told otherwise.
Spectrum spectrum_from_ddt(const Ddt& ddt, bool include_zero_row = true);

/// Same as spectrum_from_ddt(ddt_compute(f)) without materializing the table.
Spectrum spectrum_of(const FunctionTable& f, bool include_zero_row = true,
                     Exec exec = Exec::parallel);

/// max delta(a, b) over a != 0.
std::uint32_t uniformity(const Ddt& ddt);

enum class LocalApn { yes, no, vacuous };

struct LocalApnReport {
  LocalApn verdict = LocalApn::vacuous;
  /// max over a != 0 and b outside F_p (indices >= p); 0 when that set is empty.
  std::uint32_t max_outside_prime_field = 0;
  /// max over a != 0 and b != 0.
  std::uint32_t max_nonzero = 0;
};

/// Locally-APN iff the max over a != 0, b not in F_p equals 2. For n = 1 that
/// range is empty and the verdict is vacuous.
LocalApnReport is_locally_apn(const Ddt& ddt, std::uint32_t p);

const char* to_string(LocalApn v);

struct MomentReport {
  Integer sum0;  // sum omega_i
  Integer sum1;  // sum i omega_i
  Integer sum2;  // sum i^2 omega_i
  bool ok = false;
};

/// Checks sum omega_i = q^2 and sum i omega_i = q^2.
MomentReport moment_check(const Spectrum& spectrum, const Integer& q);

/// sum of delta^2 over all q^2 cells.
std::uint64_t n4_from_ddt(const Ddt& ddt);

/// Direct count of (x1, x2, x3, x4) with x1 - x2 + x3 - x4 = 0 and
/// F(x1) - F(x2) + F(x3) - F(x4) = 0. O(q^3); refuses q > cap.
std::uint64_t n4_brute(const FunctionTable& f, std::uint64_t cap = 100, Exec exec = Exec::parallel);

}  // namespace diffspec::sbox
