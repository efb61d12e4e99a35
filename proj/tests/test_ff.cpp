#include <doctest.h>

#include <random>
#include <set>

#include "diffspec/error.hpp"
#include "diffspec/ff.hpp"
#include "oracles.hpp"

using namespace diffspec;
using ff::Field;
using ff::FieldElem;
using ff::Poly;

namespace {

std::vector<oracle::i64> widen(const Poly& p) { return {p.begin(), p.end()}; }

}  // namespace

TEST_CASE("is_prime") {
  CHECK_FALSE(ff::is_prime(0));
  CHECK_FALSE(ff::is_prime(1));
  CHECK(ff::is_prime(2));
  CHECK(ff::is_prime(3));
  CHECK_FALSE(ff::is_prime(9));
  CHECK(ff::is_prime(1039));
  CHECK_FALSE(ff::is_prime(1041));
  CHECK(ff::is_prime(4294967291ULL));
}

TEST_CASE("irreducibility on known polynomials") {
  CHECK(ff::is_irreducible(3, {1, 0, 1}));      // x^2 + 1 over Z_3
  CHECK_FALSE(ff::is_irreducible(5, {1, 0, 1}));  // x^2 + 1 = (x-2)(x+2) over Z_5
  CHECK(ff::is_irreducible(7, {2, 0, 0, 1}));   // x^3 + 2 over Z_7
  CHECK_FALSE(ff::is_irreducible(7, {1, 0, 0, 1}));  // x^3 + 1 has root -1
  CHECK(ff::is_irreducible(3, {1, 1}));
  // (x^2+1)^2 has no roots over Z_3 but is reducible.
  CHECK_FALSE(ff::is_irreducible(3, {1, 0, 2, 0, 1}));
  CHECK_THROWS_AS(ff::is_irreducible(3, {1, 0, 2}), InvalidArgument);
  CHECK_THROWS_AS(ff::is_irreducible(3, {1}), InvalidArgument);
}

TEST_CASE("find_irreducible examples") {
  CHECK(ff::find_irreducible(7, 3) == Poly{2, 0, 0, 1});
  CHECK(ff::find_irreducible(3, 2) == Poly{1, 0, 1});
  CHECK(ff::find_irreducible(5, 1) == Poly{0, 1});
  CHECK_THROWS_AS(ff::find_irreducible(4, 2), InvalidArgument);
  CHECK_THROWS_AS(ff::find_irreducible(2, 2), InvalidArgument);
  CHECK_THROWS_AS(ff::find_irreducible(3, 0), InvalidArgument);
}

TEST_CASE("find_irreducible agrees with trial division") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    for (unsigned n = 1; n <= (p <= 5 ? 5u : 3u); ++n) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(widen(ff::find_irreducible(p, n)) == oracle::least_irreducible(p, n));
    }
  }
}

TEST_CASE("is_irreducible agrees with trial division on every monic polynomial") {
  for (std::uint32_t p : {3u, 5u}) {
    for (unsigned n = 1; n <= 4; ++n) {
      oracle::i64 count = 1;
      for (unsigned i = 0; i < n; ++i) count *= p;
      for (oracle::i64 code = 0; code < count; ++code) {
        Poly f(n + 1, 0);
        oracle::i64 c = code;
        for (unsigned i = 0; i < n; ++i) {
          f[i] = static_cast<ff::Coeff>(c % p);
          c /= p;
        }
        f[n] = 1;
        CHECK(ff::is_irreducible(p, f) == oracle::trial_irreducible(p, widen(f)));
      }
    }
  }
}

TEST_CASE("irreducibles returns distinct moduli in encoding order") {
  const auto list = ff::irreducibles(3, 3, 4);
  REQUIRE(list.size() == 4);
  CHECK(list[0] == ff::find_irreducible(3, 3));
  for (const auto& m : list) CHECK(ff::is_irreducible(3, m));
  CHECK(std::set<Poly>(list.begin(), list.end()).size() == 4);
  // There are exactly 8 monic irreducible cubics over Z_3.
  CHECK(ff::irreducibles(3, 3, 100).size() == 8);
}

TEST_CASE("modulus text round trip") {
  CHECK(ff::parse_modulus("2,0,0,1") == Poly{2, 0, 0, 1});
  CHECK(ff::format_modulus({2, 0, 0, 1}) == "2,0,0,1");
  CHECK(ff::parse_modulus(" 1, 0 ,1 ") == Poly{1, 0, 1});
  CHECK_THROWS_AS(ff::parse_modulus(""), InvalidArgument);
  CHECK_THROWS_AS(ff::parse_modulus("1,,1"), InvalidArgument);
  CHECK_THROWS_AS(ff::parse_modulus("1,x"), InvalidArgument);
  CHECK_THROWS_AS(ff::parse_modulus("1,-1"), InvalidArgument);
}

TEST_CASE("Field construction rejects bad input") {
  CHECK_THROWS_AS(Field(9, {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Field(2, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(Field(5, {1, 0, 1}), InvalidArgument);  // reducible
  CHECK_THROWS_AS(Field(3, {1, 0, 2}), InvalidArgument);  // not monic
  CHECK_THROWS_AS(Field(3, {1, 0, 5}), InvalidArgument);
  CHECK_NOTHROW(Field(3, {1, 0, 1}));
}

TEST_CASE("prime field arithmetic matches modular integers") {
  const oracle::i64 p = 11;
  const Field f = Field::with_default_modulus(p, 1);
  CHECK(f.q() == 11);
  for (oracle::i64 a = 0; a < p; ++a) {
    for (oracle::i64 b = 0; b < p; ++b) {
      const auto ea = f.elem_of_index(a), eb = f.elem_of_index(b);
      CHECK(f.index_of(f.add(ea, eb)) == static_cast<std::uint64_t>((a + b) % p));
      CHECK(f.index_of(f.sub(ea, eb)) == static_cast<std::uint64_t>(oracle::mod(a - b, p)));
      CHECK(f.index_of(f.mul(ea, eb)) == static_cast<std::uint64_t>(a * b % p));
    }
    if (a != 0) {
      CHECK(f.index_of(f.inv(f.elem_of_index(a))) ==
            static_cast<std::uint64_t>(oracle::powmod(a, p - 2, p)));
    }
  }
  CHECK(f.index_of(f.constant(-1)) == 10);
  CHECK(f.index_of(f.constant(25)) == 3);
}

TEST_CASE("F_9 = Z_3[x]/(x^2+1) worked example") {
  const Field f(3, {1, 0, 1});
  const FieldElem x{{0, 1}};
  CHECK(f.mul(x, x) == f.constant(-1));
  CHECK(f.index_of(x) == 3);
  CHECK(f.index_of(FieldElem{{2, 2}}) == 8);
  // (1 + x)^2 = 2x
  CHECK(f.mul(FieldElem{{1, 1}}, FieldElem{{1, 1}}) == FieldElem{{0, 2}});
  // (1 + x)(2 + x) = 1 + 0x
  CHECK(f.mul(FieldElem{{1, 1}}, FieldElem{{2, 1}}) == f.one());
  CHECK(f.inv(FieldElem{{1, 1}}) == FieldElem{{2, 1}});
}

TEST_CASE("Field error paths") {
  const Field f(3, {1, 0, 1});
  CHECK_THROWS_AS(f.inv(f.zero()), DomainError);
  CHECK_THROWS_AS(f.elem_of_index(9), InvalidArgument);
  CHECK_THROWS_AS(f.check(FieldElem{{1}}), InvalidArgument);
  CHECK_THROWS_AS(f.check(FieldElem{{1, 3}}), InvalidArgument);
  CHECK_THROWS_AS(f.add(FieldElem{{1}}, f.one()), InvalidArgument);
  CHECK(f.pow(f.zero(), 0) == f.one());
  CHECK(f.pow(f.zero(), 5) == f.zero());
}

TEST_CASE("field axioms hold exhaustively for small orders") {
  const std::vector<std::pair<std::uint32_t, unsigned>> cases = {
      {3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}};
  for (auto [p, n] : cases) {
    const Field f = Field::with_default_modulus(p, n);
    CAPTURE(f.q());
    const auto els = f.elements();
    REQUIRE(els.size() == f.q());
    for (const auto& a : els) {
      CHECK(f.add(a, f.zero()) == a);
      CHECK(f.mul(a, f.one()) == a);
      CHECK(f.is_zero(f.add(a, f.neg(a))));
      if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
      for (const auto& b : els) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
      }
    }
    // Associativity and distributivity on all triples would be q^3 work;
    // q <= 49 keeps that under 120k products.
    for (const auto& a : els) {
      for (const auto& b : els) {
        for (const auto& c : els) {
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("index map is a bijection onto [0, q)") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 4}, {5, 3}, {7, 3}}) {
    const Field f = Field::with_default_modulus(p, n);
    std::set<std::vector<ff::Coeff>> seen;
    for (std::uint64_t i = 0; i < f.q(); ++i) {
      const auto e = f.elem_of_index(i);
      CHECK(f.index_of(e) == i);
      seen.insert(e.coeffs);
    }
    CHECK(seen.size() == f.q());
    for (std::uint64_t i = 0; i < p; ++i) CHECK(f.elem_of_index(i) == f.constant(i));
  }
}

TEST_CASE("Frobenius and multiplicative order") {
  std::mt19937_64 rng(12345);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {3, 5}, {7, 3}, {11, 3}, {7, 4}, {31, 2}}) {
    const Field f = Field::with_default_modulus(p, n);
    CAPTURE(f.q());
    std::uniform_int_distribution<std::uint64_t> pick(0, f.q() - 1);
    for (int k = 0; k < 200; ++k) {
      const auto a = f.elem_of_index(pick(rng));
      CHECK(f.pow(a, f.q()) == a);
      if (!f.is_zero(a)) CHECK(f.pow(a, f.q() - 1) == f.one());
      const auto b = f.elem_of_index(pick(rng));
      // (a + b)^p = a^p + b^p
      CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
    }
  }
}

TEST_CASE("F_{p^n} has a primitive element") {
  const Field f = Field::with_default_modulus(3, 3);
  bool found = false;
  for (std::uint64_t i = 1; i < f.q() && !found; ++i) {
    const auto g = f.elem_of_index(i);
    std::set<std::uint64_t> powers;
    auto x = f.one();
    for (std::uint64_t k = 0; k + 1 < f.q(); ++k) {
      powers.insert(f.index_of(x));
      x = f.mul(x, g);
    }
    found = powers.size() == f.q() - 1;
  }
  CHECK(found);
}
