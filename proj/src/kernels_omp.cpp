// OpenMP kernels. Rows (or outermost loop values) are independent; each thread
// keeps private accumulators and merges them once, so results do not depend on
// scheduling.

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "diffspec/kernels.hpp"

namespace diffspec::kernels::omp {

namespace {

// Per-thread scratch: x + a for a fixed shift, and neg(F(x)).
struct RowScratch {
  std::vector<std::uint32_t> shifted;
  std::vector<std::uint32_t> counts;
};

std::vector<std::uint32_t> negated(const FieldTables& t, Table f) {
  std::vector<std::uint32_t> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = t.neg(f[i]);
  return out;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void ddt_fill(const FieldTables& t, Table f, std::span<std::uint32_t> out) {
  const auto q = static_cast<std::int64_t>(t.q());
  const std::vector<std::uint32_t> neg_f = negated(t, f);
#pragma omp parallel
  {
    std::vector<std::uint32_t> shifted(q);
#pragma omp for schedule(static)
    for (std::int64_t a = 0; a < q; ++a) {
      std::uint32_t* row = out.data() + a * q;
      std::fill(row, row + q, 0);
      t.shift_row(static_cast<std::uint32_t>(a), shifted);
      for (std::int64_t x = 0; x < q; ++x) ++row[t.add(f[shifted[x]], neg_f[x])];
    }
  }
}

DdtSummary ddt_summary(const FieldTables& t, Table f) {
  const std::uint32_t q = t.q();
  const std::uint32_t p = t.p();
  const std::vector<std::uint32_t> neg_f = negated(t, f);

  DdtSummary s;
  s.histogram.assign(q + 1, 0);
  s.zero_row_histogram.assign(q + 1, 0);

  std::uint64_t sum_squares = 0;
  std::uint32_t max_a = 0, max_ab = 0, max_out = 0;
  bool rows_ok = true;

#pragma omp parallel reduction(+ : sum_squares) reduction(max : max_a, max_ab, max_out) \
    reduction(&& : rows_ok)
  {
    RowScratch scratch{std::vector<std::uint32_t>(q), std::vector<std::uint32_t>(q)};
    std::vector<std::uint64_t> hist(q + 1, 0);

#pragma omp for schedule(dynamic, 8)
    for (std::int64_t ai = 1; ai < static_cast<std::int64_t>(q); ++ai) {
      const auto a = static_cast<std::uint32_t>(ai);
      auto& row = scratch.counts;
      std::fill(row.begin(), row.end(), 0);
      t.shift_row(a, scratch.shifted);
      for (std::uint32_t x = 0; x < q; ++x) ++row[t.add(f[scratch.shifted[x]], neg_f[x])];

      std::uint64_t row_total = 0;
      for (std::uint32_t b = 0; b < q; ++b) {
        const std::uint32_t d = row[b];
        row_total += d;
        sum_squares += std::uint64_t{d} * d;
        ++hist[d];
        max_a = std::max(max_a, d);
        if (b != 0) max_ab = std::max(max_ab, d);
        if (b >= p) max_out = std::max(max_out, d);
      }
      rows_ok = rows_ok && row_total == q;
    }

#pragma omp critical
    for (std::uint32_t i = 0; i <= q; ++i) s.histogram[i] += hist[i];
  }

  // a = 0 row, counted from the table like the others
  std::vector<std::uint32_t> row0(q, 0);
  for (std::uint32_t x = 0; x < q; ++x) ++row0[t.add(f[x], neg_f[x])];
  std::uint64_t total0 = 0;
  for (std::uint32_t d : row0) {
    total0 += d;
    sum_squares += std::uint64_t{d} * d;
    ++s.zero_row_histogram[d];
  }

  s.sum_squares = sum_squares;
  s.max_nonzero_a = max_a;
  s.max_nonzero_a_nonzero_b = max_ab;
  s.max_nonzero_a_outside_prime = max_out;
  s.rows_sum_to_q = rows_ok && total0 == q;
  return s;
}

std::uint64_t n4_count(const FieldTables& t, Table f) {
  const auto q = static_cast<std::int64_t>(t.q());
  std::uint64_t count = 0;
#pragma omp parallel reduction(+ : count)
  {
    std::vector<std::uint32_t> shift_x(q), shift_f(q);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i1 = 0; i1 < q; ++i1) {
      const auto x1 = static_cast<std::uint32_t>(i1);
      for (std::uint32_t x2 = 0; x2 < q; ++x2) {
        // x4 = (x1 - x2) + x3 and F(x4) must equal (F(x1) - F(x2)) + F(x3)
        t.shift_row(t.sub(x1, x2), shift_x);
        t.shift_row(t.sub(f[x1], f[x2]), shift_f);
        for (std::int64_t x3 = 0; x3 < q; ++x3) {
          count += f[shift_x[x3]] == shift_f[f[x3]];
        }
      }
    }
  }
  return count;
}

QuadrupleCensus quadruple_census(const FieldTables& t, Table f) {
  const auto q = static_cast<std::int64_t>(t.q());
  QuadrupleCensus c;
#pragma omp parallel
  {
    QuadrupleCensus local;
    std::vector<std::uint32_t> shift_x(q), shift_f(q);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i1 = 0; i1 < q; ++i1) {
      const auto x1 = static_cast<std::uint32_t>(i1);
      const unsigned bit1 = x1 != 0 && t.chi(x1) < 0 ? 1u : 0u;
      for (std::uint32_t x2 = 0; x2 < q; ++x2) {
        const unsigned bit2 = x2 != 0 && t.chi(x2) < 0 ? 2u : 0u;
        const unsigned zeros12 = (x1 == 0) + (x2 == 0);
        t.shift_row(t.sub(x1, x2), shift_x);
        t.shift_row(t.sub(f[x1], f[x2]), shift_f);
        for (std::int64_t x3 = 0; x3 < q; ++x3) {
          const std::uint32_t x4 = shift_x[x3];
          if (f[x4] != shift_f[f[x3]]) continue;
          const unsigned zeros = zeros12 + (x3 == 0) + (x4 == 0);
          if (zeros != 0) {
            ++local.by_zero_count[zeros];
            continue;
          }
          const unsigned pattern = bit1 | bit2 | (t.chi(static_cast<std::uint32_t>(x3)) < 0 ? 4u : 0u) |
                                   (t.chi(x4) < 0 ? 8u : 0u);
          ++local.by_pattern[pattern];
        }
      }
    }
#pragma omp critical
    {
      for (std::size_t i = 0; i < 16; ++i) c.by_pattern[i] += local.by_pattern[i];
      for (std::size_t i = 1; i < 5; ++i) c.by_zero_count[i] += local.by_zero_count[i];
    }
  }
  c.by_zero_count[0] = std::accumulate(c.by_pattern.begin(), c.by_pattern.end(), std::uint64_t{0});
  return c;
}

std::uint64_t nonsquare_quadruples(const FieldTables& t) {
  const std::uint32_t q = t.q();
  std::vector<std::uint32_t> nonsquares;
  for (std::uint32_t y = 1; y < q; ++y) {
    if (t.chi(y) == -1) nonsquares.push_back(y);
  }
  const auto m = static_cast<std::int64_t>(nonsquares.size());
  std::uint64_t count = 0;
#pragma omp parallel reduction(+ : count)
  {
    std::vector<std::uint32_t> shifted(q);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < m; ++i) {
      for (std::int64_t j = 0; j < m; ++j) {
        t.shift_row(t.sub(nonsquares[i], nonsquares[j]), shifted);
        for (std::uint32_t y3 : nonsquares) count += t.chi(shifted[y3]) == -1;
      }
    }
  }
  return count;
}

}  // namespace diffspec::kernels::omp
