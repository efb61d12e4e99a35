#include "diffspec/charsum.hpp"

#include "diffspec/error.hpp"
#include "diffspec/tables.hpp"

namespace diffspec::charsum {

namespace {

using ff::Field;
using ff::FieldElem;

ff::FieldElem eval(const Field& field, std::span<const FieldElem> coeffs, const FieldElem& x) {
  FieldElem acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    acc = field.add(field.mul(acc, x), coeffs[i]);
  }
  return acc;
}

// Product of monic linear/quadratic factors as a coefficient list.
std::vector<FieldElem> poly_mul(const Field& field, const std::vector<FieldElem>& a,
                                const std::vector<FieldElem>& b) {
  std::vector<FieldElem> r(a.size() + b.size() - 1, field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = field.add(r[i + j], field.mul(a[i], b[j]));
    }
  }
  return r;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

int legendre(std::int64_t a, std::uint32_t p) {
  std::int64_t m = a % static_cast<std::int64_t>(p);
  if (m < 0) m += p;
  if (m == 0) return 0;
  return pow_mod(static_cast<std::uint64_t>(m), (p - 1) / 2, p) == 1 ? 1 : -1;
}

void check_odd_prime(std::uint32_t p) {
  if (p < 3 || !ff::is_prime(p)) {
    throw InvalidArgument("p must be an odd prime, got " + std::to_string(p));
  }
}

Integer binomial(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

int quadratic_character(const Field& field, const FieldElem& a) {
  if (field.is_zero(a)) return 0;
  const FieldElem r = field.pow(a, (field.q() - 1) / 2);
  return r == field.one() ? 1 : -1;
}

SumValue char_sum_poly(const Field& field, std::span<const FieldElem> coeffs) {
  if (coeffs.empty()) throw InvalidArgument("polynomial has no coefficients");
  for (const auto& c : coeffs) field.check(c);
  SumValue total = 0;
  for (std::uint64_t i = 0; i < field.q(); ++i) {
    total += quadratic_character(field, eval(field, coeffs, field.elem_of_index(i)));
  }
  return total;
}

SumValue quad_sum_closed(const Field& field, const FieldElem& a2, const FieldElem& a1,
                         const FieldElem& a0) {
  if (field.is_zero(a2)) throw InvalidArgument("leading coefficient is zero; not a quadratic");
  const FieldElem d =
      field.sub(field.mul(a1, a1), field.mul(field.constant(4), field.mul(a0, a2)));
  const int c = quadratic_character(field, a2);
  if (!field.is_zero(d)) return -c;
  return static_cast<SumValue>(field.q() - 1) * c;
}

LambdaEntry lambda_direct(const Field& field) {
  const FieldTables tables(field);
  const FieldElem two = field.constant(2);
  const FieldElem one = field.one();
  SumValue total = 0;
  for (std::uint32_t i = 0; i < tables.q(); ++i) {
    const FieldElem x = field.elem_of_index(i);
    // x (x^2 - 2x - 1)
    const FieldElem inner = field.sub(field.sub(field.mul(x, x), field.mul(two, x)), one);
    total += tables.chi(static_cast<std::uint32_t>(field.index_of(field.mul(x, inner))));
  }
  return {field.p(), field.n(), Integer(total)};
}

LambdaEntry lambda_direct(std::uint32_t p, unsigned n) {
  check_odd_prime(p);
  return lambda_direct(Field::with_default_modulus(p, n));
}

Integer gamma_extend(const Integer& gamma1, std::uint32_t p, unsigned n) {
  if (n == 0) throw InvalidArgument("extension degree must be >= 1");
  if (gamma1 == 0) {
    if (n % 2 == 1) return 0;
    const Integer mag = 2 * ipow(Integer(p), n / 2);
    return ((n / 2) % 2 == 1) ? mag : Integer(-mag);
  }
  const Integer disc = 4 * Integer(p) - gamma1 * gamma1;
  Integer sum = 0;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    Integer term = binomial(n, 2 * k) * ipow(gamma1, n - 2 * k) * ipow(disc, k);
    sum += (k % 2 == 0) ? term : Integer(-term);
  }
  Integer value = exact_div(sum, ipow(Integer(2), n - 1), "Frobenius trace recursion");
  return (n % 2 == 1) ? value : Integer(-value);
}

LambdaEntry lambda_extend(std::uint32_t p, unsigned n) {
  check_odd_prime(p);
  if (n == 0) throw InvalidArgument("extension degree must be >= 1");
  std::int64_t gamma1 = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    gamma1 += legendre(x * ((x * x - 2 * x - 1) % p), p);
  }
  return {p, n, gamma_extend(Integer(gamma1), p, n)};
}

std::vector<LambdaEntry> lambda_table(std::uint32_t max_p) {
  std::vector<LambdaEntry> out;
  for (std::uint32_t p = 3; p <= max_p && p >= 3; p += 4) {
    if (ff::is_prime(p)) out.push_back(lambda_extend(p, 1));
  }
  return out;
}

std::uint64_t lambda_curve_affine_points(const Field& field) {
  const std::uint64_t q = field.q();
  // roots[v] = #{y : y^2 = v}
  std::vector<std::uint32_t> roots(q, 0);
  for (std::uint64_t y = 0; y < q; ++y) {
    const FieldElem e = field.elem_of_index(y);
    ++roots[field.index_of(field.mul(e, e))];
  }
  const FieldElem two = field.constant(2);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < q; ++i) {
    const FieldElem x = field.elem_of_index(i);
    const FieldElem x2 = field.mul(x, x);
    const FieldElem rhs = field.sub(field.sub(field.mul(x2, x), field.mul(two, x2)), x);
    count += roots[field.index_of(rhs)];
  }
  return count;
}

std::array<IdentityValue, 5> half_identities(const Field& field, const Integer& lambda) {
  if (field.q() % 4 != 3) throw InvalidArgument("identities require q = 3 (mod 4)");
  const FieldElem half = field.inv(field.constant(2));
  const FieldElem one = field.one();
  const FieldElem zero = field.zero();
  auto lin = [&](const FieldElem& root) {  // x - root
    return std::vector<FieldElem>{field.neg(root), one};
  };
  const std::vector<FieldElem> x{zero, one};
  const std::vector<FieldElem> quad{half, field.neg(one), one};  // x^2 - x + 1/2

  auto sum = [&](const std::vector<FieldElem>& f) { return char_sum_poly(field, f); };
  const int chi2 = quadratic_character(field, field.constant(2));

  return {{
      {"x(x-1/2)(x-1)", sum(poly_mul(field, poly_mul(field, x, lin(half)), lin(one))), 0},
      {"(x-1/2)(x^2-x+1/2)", sum(poly_mul(field, lin(half), quad)), 0},
      {"x(x-1)(x^2-x+1/2)", sum(poly_mul(field, poly_mul(field, x, lin(one)), quad)), -1},
      {"(x-1)(x^2-x+1/2)", sum(poly_mul(field, lin(one), quad)), lambda},
      {"x(x-1/2)(x^2-x+1/2)", sum(poly_mul(field, poly_mul(field, x, lin(half)), quad)),
       -1 - chi2 * lambda},
  }};
}

int chi_of_two(std::uint32_t p, unsigned n) {
  check_odd_prime(p);
  const int base = legendre(2, p);
  return (n % 2 == 1) ? base : 1;
}

}  // namespace diffspec::charsum
