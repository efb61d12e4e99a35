#include "diffspec/ff.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "diffspec/error.hpp"

namespace diffspec::ff {

namespace {

using u64 = std::uint64_t;

constexpr u64 kMaxFieldOrder = std::numeric_limits<std::uint32_t>::max();

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m, m monic of degree >= 1.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const u64 c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j < dm; ++j) {
      const u64 sub = c * m[j] % p;
      a[shift + j] = static_cast<Coeff>((a[shift + j] + p - sub) % p);
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<Coeff>((r[i + j] + u64{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, m, p);
  }
  return result;
}

Coeff inv_mod(Coeff a, std::uint32_t p) {
  // p prime: a^(p-2)
  u64 r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<Coeff>(r);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    const Coeff lead_inv = inv_mod(b.back(), p);
    for (auto& c : b) c = static_cast<Coeff>(u64{c} * lead_inv % p);
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

void check_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) {
    throw InvalidArgument("characteristic must be an odd prime, got " + std::to_string(p));
  }
}

Poly decode_candidate(u64 code, std::uint32_t p, unsigned n) {
  Poly poly(n + 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    poly[i] = static_cast<Coeff>(code % p);
    code /= p;
  }
  poly[n] = 1;
  return poly;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const Poly& poly) {
  check_prime(p);
  Poly f = poly;
  trim(f);
  if (f.size() < 2) throw InvalidArgument("irreducibility test needs degree >= 1");
  if (f.back() != 1) throw InvalidArgument("modulus must be monic");
  for (Coeff c : f) {
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  }
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Ben-Or: f is irreducible iff gcd(x^(p^i) - x, f) = 1 for i = 1..n/2.
  Poly x_pow{0, 1};
  for (std::size_t i = 1; i <= n / 2; ++i) {
    x_pow = poly_powmod(x_pow, p, f, p);
    Poly h = x_pow;
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = static_cast<Coeff>((h[1] + p - 1) % p);
    const Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<Poly> irreducibles(std::uint32_t p, unsigned n, std::size_t count) {
  check_prime(p);
  if (n == 0) throw InvalidArgument("extension degree must be >= 1");
  std::vector<Poly> out;
  u64 limit = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (limit > std::numeric_limits<u64>::max() / p) {
      limit = std::numeric_limits<u64>::max();
      break;
    }
    limit *= p;
  }
  for (u64 code = 0; code < limit && out.size() < count; ++code) {
    Poly cand = decode_candidate(code, p, n);
    if (is_irreducible(p, cand)) out.push_back(std::move(cand));
  }
  return out;
}

Poly find_irreducible(std::uint32_t p, unsigned n) {
  auto found = irreducibles(p, n, 1);
  if (found.empty()) throw InternalError("no irreducible polynomial found");
  return found.front();
}

Poly parse_modulus(std::string_view text) {
  Poly out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    Coeff v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("bad modulus coefficient '" + std::string(tok) + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  if (out.size() < 2 || out.back() != 1) {
    throw InvalidArgument("modulus must be a monic polynomial of degree >= 1");
  }
  return out;
}

std::string format_modulus(const Poly& modulus) {
  std::ostringstream os;
  for (std::size_t i = 0; i < modulus.size(); ++i) {
    if (i) os << ',';
    os << modulus[i];
  }
  return os.str();
}

Field::Field(std::uint32_t p, Poly modulus) : p_(p), modulus_(std::move(modulus)) {
  check_prime(p_);
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw InvalidArgument("modulus must be monic of degree >= 1");
  }
  if (!is_irreducible(p_, modulus_)) {
    throw InvalidArgument("modulus " + format_modulus(modulus_) + " is reducible over Z_" +
                          std::to_string(p_));
  }
  n_ = static_cast<unsigned>(modulus_.size() - 1);
  q_ = 1;
  for (unsigned i = 0; i < n_; ++i) {
    if (q_ > kMaxFieldOrder / p_) throw InvalidArgument("field order too large to enumerate");
    q_ *= p_;
  }
}

Field Field::with_default_modulus(std::uint32_t p, unsigned n) {
  check_prime(p);
  if (n == 0) throw InvalidArgument("extension degree must be >= 1");
  u64 q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > kMaxFieldOrder / p) throw InvalidArgument("field order too large to enumerate");
    q *= p;
  }
  return Field(p, find_irreducible(p, n));
}

FieldElem Field::zero() const { return FieldElem{std::vector<Coeff>(n_, 0)}; }

FieldElem Field::one() const { return constant(1); }

FieldElem Field::constant(std::int64_t c) const {
  FieldElem r = zero();
  const std::int64_t m = c % static_cast<std::int64_t>(p_);
  r.coeffs[0] = static_cast<Coeff>(m < 0 ? m + p_ : m);
  return r;
}

bool Field::is_zero(const FieldElem& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](Coeff c) { return c == 0; });
}

void Field::check(const FieldElem& a) const {
  if (a.coeffs.size() != n_) {
    throw InvalidArgument("element has " + std::to_string(a.coeffs.size()) +
                          " coefficients, field degree is " + std::to_string(n_));
  }
  for (Coeff c : a.coeffs) {
    if (c >= p_) throw InvalidArgument("element coefficient not reduced mod p");
  }
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  FieldElem r = zero();
  for (unsigned i = 0; i < n_; ++i) {
    const Coeff s = a.coeffs[i] + b.coeffs[i];
    r.coeffs[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FieldElem Field::neg(const FieldElem& a) const {
  check(a);
  FieldElem r = zero();
  for (unsigned i = 0; i < n_; ++i) r.coeffs[i] = a.coeffs[i] ? p_ - a.coeffs[i] : 0;
  return r;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  if (n_ == 1) return FieldElem{{static_cast<Coeff>(u64{a.coeffs[0]} * b.coeffs[0] % p_)}};
  std::vector<u64> prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      prod[i + j] = (prod[i + j] + u64{a.coeffs[i]} * b.coeffs[j]) % p_;
    }
  }
  for (std::size_t k = prod.size() - 1; k >= n_; --k) {
    const u64 c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      const std::size_t t = k - n_ + j;
      prod[t] = (prod[t] + p_ - c * modulus_[j] % p_) % p_;
    }
  }
  FieldElem r = zero();
  for (unsigned i = 0; i < n_; ++i) r.coeffs[i] = static_cast<Coeff>(prod[i]);
  return r;
}

FieldElem Field::pow(const FieldElem& a, std::uint64_t e) const {
  check(a);
  FieldElem result = one();
  FieldElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

FieldElem Field::inv(const FieldElem& a) const {
  if (is_zero(a)) throw DomainError("zero has no multiplicative inverse");
  return pow(a, q_ - 2);
}

std::uint64_t Field::index_of(const FieldElem& a) const {
  check(a);
  u64 idx = 0;
  for (unsigned i = n_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
  return idx;
}

FieldElem Field::elem_of_index(std::uint64_t i) const {
  if (i >= q_) {
    throw InvalidArgument("index " + std::to_string(i) + " out of range for q=" +
                          std::to_string(q_));
  }
  FieldElem r = zero();
  for (unsigned k = 0; k < n_; ++k) {
    r.coeffs[k] = static_cast<Coeff>(i % p_);
    i /= p_;
  }
  return r;
}

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (u64 i = 0; i < q_; ++i) out.push_back(elem_of_index(i));
  return out;
}

}  // namespace diffspec::ff
