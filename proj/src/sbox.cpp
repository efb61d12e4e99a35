#include "diffspec/sbox.hpp"

#include <algorithm>

#include "diffspec/error.hpp"
#include "diffspec/tables.hpp"

namespace diffspec::sbox {

FunctionTable::FunctionTable(ff::Field field, std::vector<std::uint32_t> table)
    : field_(std::move(field)), table_(std::move(table)) {
  if (table_.size() != field_.q()) {
    throw InvalidArgument("function table has length " + std::to_string(table_.size()) +
                          ", expected q=" + std::to_string(field_.q()));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= field_.q()) {
      throw InvalidArgument("table entry " + std::to_string(i) + " = " +
                            std::to_string(table_[i]) + " is not a field index");
    }
  }
}

Ddt ddt_compute(const FunctionTable& f, Exec exec) {
  const FieldTables tables(f.field());
  Ddt ddt(tables.q());
  kernels::ddt_fill(tables, f.values(), ddt.cells(), exec);
  return ddt;
}

std::uint32_t delta(const FunctionTable& f, std::uint32_t a, std::uint32_t b) {
  const auto& field = f.field();
  const ff::FieldElem ea = field.elem_of_index(a);
  const ff::FieldElem eb = field.elem_of_index(b);
  std::uint32_t count = 0;
  for (std::uint64_t i = 0; i < field.q(); ++i) {
    const ff::FieldElem x = field.elem_of_index(i);
    const auto shifted = field.index_of(field.add(x, ea));
    const ff::FieldElem diff =
        field.sub(field.elem_of_index(f[shifted]), field.elem_of_index(f[i]));
    if (diff == eb) ++count;
  }
  return count;
}

Spectrum spectrum_from_ddt(const Ddt& ddt, bool include_zero_row) {
  const std::uint32_t q = ddt.q();
  std::vector<std::uint64_t> hist(q + 1, 0);
  for (std::uint32_t a = include_zero_row ? 0 : 1; a < q; ++a) {
    for (std::uint32_t d : ddt.row(a)) ++hist[d];
  }
  Spectrum s{Integer(q), {}};
  for (std::uint32_t i = 0; i <= q; ++i) s.add(Integer(i), Integer(hist[i]));
  return s;
}

Spectrum spectrum_of(const FunctionTable& f, bool include_zero_row, Exec exec) {
  const FieldTables tables(f.field());
  const auto summary = kernels::ddt_summary(tables, f.values(), exec);
  const std::uint32_t q = tables.q();
  Spectrum s{Integer(q), {}};
  for (std::uint32_t i = 0; i <= q; ++i) {
    std::uint64_t count = summary.histogram[i];
    if (include_zero_row) count += summary.zero_row_histogram[i];
    s.add(Integer(i), Integer(count));
  }
  return s;
}

std::uint32_t uniformity(const Ddt& ddt) {
  std::uint32_t best = 0;
  for (std::uint32_t a = 1; a < ddt.q(); ++a) {
    for (std::uint32_t d : ddt.row(a)) best = std::max(best, d);
  }
  return best;
}

LocalApnReport is_locally_apn(const Ddt& ddt, std::uint32_t p) {
  LocalApnReport r;
  for (std::uint32_t a = 1; a < ddt.q(); ++a) {
    const auto row = ddt.row(a);
    for (std::uint32_t b = 1; b < ddt.q(); ++b) {
      r.max_nonzero = std::max(r.max_nonzero, row[b]);
      if (b >= p) r.max_outside_prime_field = std::max(r.max_outside_prime_field, row[b]);
    }
  }
  if (ddt.q() <= p) {
    r.verdict = LocalApn::vacuous;
  } else {
    r.verdict = r.max_outside_prime_field == 2 ? LocalApn::yes : LocalApn::no;
  }
  return r;
}

const char* to_string(LocalApn v) {
  switch (v) {
    case LocalApn::yes:
      return "true";
    case LocalApn::no:
      return "false";
    case LocalApn::vacuous:
      return "vacuous";
  }
  return "?";
}

MomentReport moment_check(const Spectrum& spectrum, const Integer& q) {
  MomentReport r;
  for (const auto& [i, w] : spectrum.omega) {
    r.sum0 += w;
    r.sum1 += i * w;
    r.sum2 += i * i * w;
  }
  r.ok = r.sum0 == q * q && r.sum1 == q * q;
  return r;
}

std::uint64_t n4_from_ddt(const Ddt& ddt) {
  std::uint64_t total = 0;
  for (std::uint32_t d : ddt.cells()) total += std::uint64_t{d} * d;
  return total;
}

std::uint64_t n4_brute(const FunctionTable& f, std::uint64_t cap, Exec exec) {
  if (f.q() > cap) {
    throw CapExceeded("n4_brute: q=" + std::to_string(f.q()) + " exceeds cap " +
                      std::to_string(cap));
  }
  const FieldTables tables(f.field());
  return kernels::n4_count(tables, f.values(), exec);
}

}  // namespace diffspec::sbox
