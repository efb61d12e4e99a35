#include "diffspec/family.hpp"

#include <algorithm>

#include "diffspec/charsum.hpp"
#include "diffspec/error.hpp"
#include "diffspec/tables.hpp"

namespace diffspec::family {

namespace {

void check_q3(const ff::Field& field) {
  if (field.q() % 4 != 3) {
    throw InvalidArgument("q=" + std::to_string(field.q()) + " is not 3 mod 4");
  }
}

void check_cap(const ff::Field& field, std::uint64_t cap, const char* what) {
  if (field.q() > cap) {
    throw CapExceeded(std::string(what) + ": q=" + std::to_string(field.q()) + " exceeds cap " +
                      std::to_string(cap));
  }
}

kernels::QuadrupleCensus f1_census(const ff::Field& field, std::uint64_t cap, Exec exec) {
  check_q3(field);
  check_cap(field, cap, "quadruple census");
  const FieldTables tables(field);
  const auto f1 = build_f1(field);
  return kernels::quadruple_census(tables, f1.values(), exec);
}

}  // namespace

FamilyConstants family_constants(std::uint32_t p, unsigned n) {
  if (p < 3 || !ff::is_prime(p)) throw InvalidArgument("p must be an odd prime");
  if (n == 0) throw InvalidArgument("n must be >= 1");
  if (p % 4 != 3 || n % 2 == 0) {
    throw InvalidArgument(std::to_string(p) + "^" + std::to_string(n) + " is not 3 mod 4");
  }
  FamilyConstants c;
  c.p = p;
  c.n = n;
  c.q = ipow(Integer(p), n);
  c.chi2 = charsum::chi_of_two(p, n);
  c.lambda = charsum::lambda_extend(p, n).lambda;
  return c;
}

sbox::FunctionTable build_fu(const ff::Field& field, const ff::FieldElem& u, bool self_check) {
  field.check(u);
  const std::uint64_t q = field.q();
  const std::uint64_t exponent = (q + 3) / 2;
  std::vector<std::uint32_t> table(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    const ff::FieldElem x = field.elem_of_index(i);
    const ff::FieldElem value = field.add(field.pow(x, exponent), field.mul(u, field.mul(x, x)));
    table[i] = static_cast<std::uint32_t>(field.index_of(value));
  }

  const bool plus = u == field.one();
  const bool minus = u == field.constant(-1);
  if (self_check && (plus || minus)) {
    const FieldTables tables(field);
    const int sign = plus ? 1 : -1;
    for (std::uint32_t i = 0; i < q; ++i) {
      const ff::FieldElem factor = field.constant(tables.chi(i) + sign);
      const ff::FieldElem x2 = field.elem_of_index(tables.square(i));
      if (field.index_of(field.mul(factor, x2)) != table[i]) {
        throw InternalError("f_u power form disagrees with (chi(x)+u)x^2 at index " +
                            std::to_string(i));
      }
    }
  }
  return sbox::FunctionTable(field, std::move(table));
}

sbox::FunctionTable build_f1(const ff::Field& field) { return build_fu(field, field.one()); }

bool fminus1_check(const ff::Field& field) {
  check_q3(field);
  const auto f1 = build_f1(field);
  const auto fm1 = build_fu(field, field.constant(-1));
  for (std::uint64_t i = 0; i < field.q(); ++i) {
    const ff::FieldElem x = field.elem_of_index(i);
    const auto minus_x = field.index_of(field.neg(x));
    const ff::FieldElem rhs = field.neg(field.elem_of_index(f1[minus_x]));
    if (field.index_of(rhs) != fm1[i]) return false;
  }
  return sbox::spectrum_of(f1) == sbox::spectrum_of(fm1);
}

Integer closed_uniformity(std::uint32_t p, unsigned n) {
  const auto c = family_constants(p, n);
  return exact_div(c.q + 1, 4, "closed_uniformity");
}

Integer closed_n4(std::uint32_t p, unsigned n) {
  const auto c = family_constants(p, n);
  const Integer& q = c.q;
  const Integer inner = q * q + 34 * q + 17 + 4 * (c.chi2 - 1) * c.lambda;
  return exact_div((q - 1) * inner, 16, "closed_n4") + 1;
}

namespace {

sbox::Spectrum assemble(const Integer& q, const Integer& w0, const Integer& w1,
                        const Integer& w2) {
  sbox::Spectrum s{q, {}};
  s.add(0, w0);
  s.add(1, w1);
  s.add(2, w2);
  s.add(exact_div(q + 1, 4, "spectrum bin"), q - 1);  // merges into 1 or 2 for q = 3, 7
  s.add(q, 1);
  return s;
}

}  // namespace

sbox::Spectrum closed_spectrum(std::uint32_t p, unsigned n) {
  const auto c = family_constants(p, n);
  const Integer& q = c.q;
  const Integer t = (c.chi2 - 1) * c.lambda;
  return assemble(q, exact_div((q - 1) * (3 * q + 3 + t), 8, "omega_0"),
                  exact_div((q - 1) * (2 * q - 2 - t), 4, "omega_1"),
                  exact_div((q - 1) * (q + 1 + t), 8, "omega_2"));
}

sbox::Spectrum closed_spectrum_by_residue(std::uint32_t p, unsigned n) {
  const auto c = family_constants(p, n);
  const Integer& q = c.q;
  if (p % 8 == 7) {
    return assemble(q, exact_div(3 * (q * q - 1), 8, "omega_0"),
                    exact_div((q - 1) * (q - 1), 2, "omega_1"),
                    exact_div(q * q - 1, 8, "omega_2"));
  }
  const Integer& l = c.lambda;
  return assemble(q, exact_div((q - 1) * (3 * q + 3 - 2 * l), 8, "omega_0"),
                  exact_div((q - 1) * (q - 1 + l), 2, "omega_1"),
                  exact_div((q - 1) * (q + 1 - 2 * l), 8, "omega_2"));
}

SignPattern::SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.size() != 3 && signs_.size() != 4) {
    throw InvalidArgument("sign pattern must have length 3 or 4");
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw InvalidArgument("sign pattern entries must be +1 or -1");
  }
}

SignPattern SignPattern::from_index(unsigned index, std::size_t length) {
  std::vector<int> signs(length);
  for (std::size_t i = 0; i < length; ++i) signs[i] = (index >> i) & 1u ? -1 : 1;
  return SignPattern(std::move(signs));
}

unsigned SignPattern::index() const {
  unsigned idx = 0;
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] < 0) idx |= 1u << i;
  }
  return idx;
}

std::string SignPattern::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (i) s += ',';
    s += signs_[i] > 0 ? '+' : '-';
  }
  return s + ")";
}

CountCheck count_triples_all_square(const ff::Field& field) {
  check_q3(field);
  const FieldTables t(field);
  const std::uint32_t one = 1;
  std::uint64_t count = 0;
  for (std::uint32_t y1 = 1; y1 < t.q(); ++y1) {
    if (t.chi(y1) != 1) continue;
    for (std::uint32_t y2 = 1; y2 < t.q(); ++y2) {
      if (t.chi(y2) != 1) continue;
      const std::uint32_t y3 = t.add(t.sub(one, y1), y2);
      if (t.chi(y3) != 1) continue;
      const std::uint32_t lhs = t.add(t.sub(t.square(y1), t.square(y2)), t.square(y3));
      if (lhs == one) ++count;
    }
  }
  return {count, Integer(field.q()) - 2};
}

CountCheck count_triples_all_nonsquare(const ff::Field& field) {
  const auto c = family_constants(field.p(), field.n());
  const FieldTables t(field);
  const std::uint32_t one = 1;
  std::uint64_t count = 0;
  for (std::uint32_t y1 = 1; y1 < t.q(); ++y1) {
    if (t.chi(y1) != -1) continue;
    for (std::uint32_t y2 = 1; y2 < t.q(); ++y2) {
      if (t.chi(y2) != -1) continue;
      const std::uint32_t y3 = t.add(t.sub(one, y1), y2);
      if (t.chi(y3) != -1) continue;
      if (t.add(t.sub(t.square(y1), t.square(y2)), t.square(y3)) == 0) ++count;
    }
  }
  return {count, exact_div(c.q + 1 + (c.chi2 - 1) * c.lambda, 8, "nonsquare triples")};
}

CountCheck count_quads_all_nonsquare(const ff::Field& field, std::uint64_t cap, Exec exec) {
  check_q3(field);
  check_cap(field, cap, "nonsquare quadruples");
  const FieldTables t(field);
  const Integer q(field.q());
  return {kernels::nonsquare_quadruples(t, exec),
          exact_div((q - 1) * (q * q - 2 * q + 5), 16, "nonsquare quadruples")};
}

Integer closed_signed_count(const SignPattern& pattern, const FamilyConstants& c) {
  if (pattern.size() != 4) throw InvalidArgument("quadruple sign pattern must have length 4");
  const Integer& q = c.q;
  int nonsquares = 0;
  for (std::size_t i = 0; i < 4; ++i) nonsquares += pattern[i] < 0;
  switch (nonsquares) {
    case 0:
      return exact_div((q - 1) * (q - 2), 2, "pattern (+,+,+,+)");
    case 1:
      return exact_div((q - 1) * (q + 1 + (c.chi2 - 1) * c.lambda), 16, "one-nonsquare pattern");
    case 2:
      // (+,-,+,-) and (-,+,-,+) need x^2 + y^2 = 0 with x, y != 0; -1 is a nonsquare.
      if (pattern[0] == pattern[2]) return 0;
      return exact_div((q - 1) * (q - 1), 4, "two-nonsquare pattern");
    case 3:
      return 0;
    default:
      return exact_div((q - 1) * (q * q - 2 * q + 5), 16, "pattern (-,-,-,-)");
  }
}

Integer closed_zero_containing(unsigned zeros, const Integer& q) {
  switch (zeros) {
    case 4:
      return 1;
    case 3:
      return 0;
    case 2:
      return 4 * (q - 1);
    case 1:
      return exact_div((q - 3) * (q - 1), 2, "one-zero class");
    default:
      throw InvalidArgument("zero count must be in 1..4");
  }
}

CountCheck count_signed_quadruples(const ff::Field& field, const SignPattern& pattern,
                                   std::uint64_t cap, Exec exec) {
  if (pattern.size() != 4) throw InvalidArgument("quadruple sign pattern must have length 4");
  const auto c = family_constants(field.p(), field.n());
  const auto census = f1_census(field, cap, exec);
  return {census.by_pattern[pattern.index()], closed_signed_count(pattern, c)};
}

CountCheck count_zero_containing(const ff::Field& field, unsigned zeros, std::uint64_t cap,
                                 Exec exec) {
  if (zeros < 1 || zeros > 4) throw InvalidArgument("zero count must be in 1..4");
  const auto census = f1_census(field, cap, exec);
  return {census.by_zero_count[zeros], closed_zero_containing(zeros, Integer(field.q()))};
}

Integer Decomposition::class_sum() const {
  Integer total = 0;
  for (const auto& c : patterns) total += c.brute;
  for (const auto& c : zero_classes) total += c.brute;
  return total;
}

bool Decomposition::ok() const {
  const bool each = std::all_of(patterns.begin(), patterns.end(), [](auto& c) { return c.ok(); }) &&
                    std::all_of(zero_classes.begin(), zero_classes.end(),
                                [](auto& c) { return c.ok(); });
  return each && class_sum() == n4_brute && n4_closed == n4_brute;
}

Decomposition n4_decomposition(const ff::Field& field, std::uint64_t cap, Exec exec) {
  const auto c = family_constants(field.p(), field.n());
  const auto census = f1_census(field, cap, exec);
  Decomposition d;
  for (unsigned i = 0; i < 16; ++i) {
    d.patterns[i] = {census.by_pattern[i], closed_signed_count(SignPattern::from_index(i), c)};
  }
  for (unsigned z = 1; z <= 4; ++z) {
    d.zero_classes[z - 1] = {census.by_zero_count[z], closed_zero_containing(z, c.q)};
  }
  d.n4_brute = sbox::n4_brute(build_f1(field), cap, exec);
  d.n4_closed = closed_n4(field.p(), field.n());
  return d;
}

}  // namespace diffspec::family
