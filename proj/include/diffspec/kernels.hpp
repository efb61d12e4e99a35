#pragma once

// The O(q^2) and O(q^3) loops. Every kernel exists twice: a plain serial
// reference and an OpenMP version partitioned over the outermost variable.
// Both must produce identical results; the serial one is what the tests trust.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "diffspec/tables.hpp"

namespace diffspec::kernels {

enum class Exec { serial, parallel };

struct DdtSummary {
  /// histogram[i] = #{(a, b) : a != 0, delta(a, b) = i}, length q + 1.
  std::vector<std::uint64_t> histogram;
  /// Same for the a = 0 row alone, counted from the table like any other row.
  std::vector<std::uint64_t> zero_row_histogram;
  std::uint64_t sum_squares = 0;  // over all q^2 cells
  std::uint32_t max_nonzero_a = 0;
  std::uint32_t max_nonzero_a_nonzero_b = 0;
  std::uint32_t max_nonzero_a_outside_prime = 0;
  bool rows_sum_to_q = true;

  friend bool operator==(const DdtSummary&, const DdtSummary&) = default;
};

/// Census of solutions of the N4 system, split by zero count and, for the
/// all-nonzero ones, by the sign pattern of chi(x1..x4). Bit i of the pattern
/// index is set when chi(x_{i+1}) = -1.
struct QuadrupleCensus {
  std::array<std::uint64_t, 16> by_pattern{};
  std::array<std::uint64_t, 5> by_zero_count{};  // [0] = sum(by_pattern)

  std::uint64_t total() const;
  friend bool operator==(const QuadrupleCensus&, const QuadrupleCensus&) = default;
};

using Table = std::span<const std::uint32_t>;

namespace serial {
void ddt_fill(const FieldTables& t, Table f, std::span<std::uint32_t> out);
DdtSummary ddt_summary(const FieldTables& t, Table f);
std::uint64_t n4_count(const FieldTables& t, Table f);
QuadrupleCensus quadruple_census(const FieldTables& t, Table f);
std::uint64_t nonsquare_quadruples(const FieldTables& t);
}  // namespace serial

namespace omp {
void ddt_fill(const FieldTables& t, Table f, std::span<std::uint32_t> out);
DdtSummary ddt_summary(const FieldTables& t, Table f);
std::uint64_t n4_count(const FieldTables& t, Table f);
QuadrupleCensus quadruple_census(const FieldTables& t, Table f);
std::uint64_t nonsquare_quadruples(const FieldTables& t);
/// Threads the OpenMP runtime would use; 1 when built without OpenMP.
int max_threads();
}  // namespace omp

inline void ddt_fill(const FieldTables& t, Table f, std::span<std::uint32_t> out, Exec e) {
  e == Exec::serial ? serial::ddt_fill(t, f, out) : omp::ddt_fill(t, f, out);
}
inline DdtSummary ddt_summary(const FieldTables& t, Table f, Exec e) {
  return e == Exec::serial ? serial::ddt_summary(t, f) : omp::ddt_summary(t, f);
}
inline std::uint64_t n4_count(const FieldTables& t, Table f, Exec e) {
  return e == Exec::serial ? serial::n4_count(t, f) : omp::n4_count(t, f);
}
inline QuadrupleCensus quadruple_census(const FieldTables& t, Table f, Exec e) {
  return e == Exec::serial ? serial::quadruple_census(t, f) : omp::quadruple_census(t, f);
}
inline std::uint64_t nonsquare_quadruples(const FieldTables& t, Exec e) {
  return e == Exec::serial ? serial::nonsquare_quadruples(t) : omp::nonsquare_quadruples(t);
}

}  // namespace diffspec::kernels
