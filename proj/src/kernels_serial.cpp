// Serial reference kernels. Kept deliberately plain; the OpenMP versions are
// checked against these.

#include <algorithm>
#include <numeric>

#include "diffspec/kernels.hpp"

namespace diffspec::kernels {

std::uint64_t QuadrupleCensus::total() const {
  std::uint64_t t = 0;
  for (std::size_t z = 1; z < by_zero_count.size(); ++z) t += by_zero_count[z];
  for (auto c : by_pattern) t += c;
  return t;
}

namespace serial {

void ddt_fill(const FieldTables& t, Table f, std::span<std::uint32_t> out) {
  const std::uint32_t q = t.q();
  std::fill(out.begin(), out.end(), 0);
  std::vector<std::uint32_t> shifted(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    t.shift_row(a, shifted);
    std::uint32_t* row = out.data() + static_cast<std::size_t>(a) * q;
    for (std::uint32_t x = 0; x < q; ++x) {
      ++row[t.sub(f[shifted[x]], f[x])];
    }
  }
}

DdtSummary ddt_summary(const FieldTables& t, Table f) {
  const std::uint32_t q = t.q();
  DdtSummary s;
  s.histogram.assign(q + 1, 0);
  s.zero_row_histogram.assign(q + 1, 0);
  std::vector<std::uint32_t> shifted(q);
  std::vector<std::uint32_t> row(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::fill(row.begin(), row.end(), 0);
    t.shift_row(a, shifted);
    for (std::uint32_t x = 0; x < q; ++x) ++row[t.sub(f[shifted[x]], f[x])];

    std::uint64_t row_total = 0;
    for (std::uint32_t b = 0; b < q; ++b) {
      const std::uint32_t d = row[b];
      row_total += d;
      s.sum_squares += std::uint64_t{d} * d;
      if (a == 0) {
        ++s.zero_row_histogram[d];
        continue;
      }
      ++s.histogram[d];
      s.max_nonzero_a = std::max(s.max_nonzero_a, d);
      if (b != 0) s.max_nonzero_a_nonzero_b = std::max(s.max_nonzero_a_nonzero_b, d);
      if (b >= t.p()) s.max_nonzero_a_outside_prime = std::max(s.max_nonzero_a_outside_prime, d);
    }
    if (row_total != q) s.rows_sum_to_q = false;
  }
  return s;
}

std::uint64_t n4_count(const FieldTables& t, Table f) {
  const std::uint32_t q = t.q();
  std::uint64_t count = 0;
  for (std::uint32_t x1 = 0; x1 < q; ++x1) {
    for (std::uint32_t x2 = 0; x2 < q; ++x2) {
      const std::uint32_t d = t.sub(x1, x2);
      const std::uint32_t e = t.sub(f[x1], f[x2]);
      for (std::uint32_t x3 = 0; x3 < q; ++x3) {
        const std::uint32_t x4 = t.add(d, x3);
        if (t.add(e, f[x3]) == f[x4]) ++count;
      }
    }
  }
  return count;
}

QuadrupleCensus quadruple_census(const FieldTables& t, Table f) {
  const std::uint32_t q = t.q();
  QuadrupleCensus c;
  for (std::uint32_t x1 = 0; x1 < q; ++x1) {
    for (std::uint32_t x2 = 0; x2 < q; ++x2) {
      const std::uint32_t d = t.sub(x1, x2);
      const std::uint32_t e = t.sub(f[x1], f[x2]);
      for (std::uint32_t x3 = 0; x3 < q; ++x3) {
        const std::uint32_t x4 = t.add(d, x3);
        if (t.add(e, f[x3]) != f[x4]) continue;
        const std::uint32_t xs[4] = {x1, x2, x3, x4};
        unsigned zeros = 0, pattern = 0;
        for (unsigned i = 0; i < 4; ++i) {
          if (xs[i] == 0) ++zeros;
          else if (t.chi(xs[i]) < 0) pattern |= 1u << i;
        }
        if (zeros == 0) ++c.by_pattern[pattern];
        else ++c.by_zero_count[zeros];
      }
    }
  }
  c.by_zero_count[0] = std::accumulate(c.by_pattern.begin(), c.by_pattern.end(), std::uint64_t{0});
  return c;
}

std::uint64_t nonsquare_quadruples(const FieldTables& t) {
  const std::uint32_t q = t.q();
  std::uint64_t count = 0;
  for (std::uint32_t y1 = 1; y1 < q; ++y1) {
    if (t.chi(y1) != -1) continue;
    for (std::uint32_t y2 = 1; y2 < q; ++y2) {
      if (t.chi(y2) != -1) continue;
      const std::uint32_t d = t.sub(y1, y2);
      for (std::uint32_t y3 = 1; y3 < q; ++y3) {
        if (t.chi(y3) == -1 && t.chi(t.add(d, y3)) == -1) ++count;
      }
    }
  }
  return count;
}

}  // namespace serial
}  // namespace diffspec::kernels
