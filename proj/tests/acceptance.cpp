// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock budgets.
// Usage: acceptance <path-to-diffspec-cli>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "diffspec/charsum.hpp"
#include "diffspec/family.hpp"
#include "diffspec/sbox.hpp"
#include "diffspec/verify.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace diffspec;
using ff::Field;
using sbox::Spectrum;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string cli_path;

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  status = ::pclose(pipe);
  return out;
}

Spectrum spec(std::uint64_t q, std::initializer_list<std::pair<std::uint32_t, std::uint64_t>> l) {
  Spectrum s;
  s.q = q;
  for (auto [k, v] : l) s.add(k, v);
  return s;
}

std::vector<std::pair<std::uint32_t, unsigned>> prime_powers(std::uint64_t max_q, bool only_3_mod_4) {
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  for (std::uint32_t p = 3; p <= max_q; p += 2) {
    if (!ff::is_prime(p)) continue;
    std::uint64_t q = p;
    for (unsigned n = 1; q <= max_q; ++n, q *= p) {
      if (!only_3_mod_4 || q % 4 == 3) out.emplace_back(p, n);
    }
  }
  return out;
}

std::string str(const Integer& v) { return v.str(); }

Outcome listed_spectrum(std::uint32_t p, unsigned n, const Spectrum& expected) {
  Outcome o;
  const Field f = Field::with_default_modulus(p, n);
  const Spectrum brute = sbox::spectrum_of(family::build_f1(f));
  if (!(brute == expected)) o.fail("brute-force spectrum differs from the listed one");
  if (!(family::closed_spectrum(p, n) == expected)) o.fail("closed spectrum differs from the listed one");
  return o;
}

// 1
Outcome lambda_table() {
  Outcome o;
  int status = 0;
  const std::string out = run_capture("\"" + cli_path + "\" lambda-table --max 1039", status);
  if (status != 0) {
    o.fail("CLI exit status " + std::to_string(status));
    return o;
  }
  std::istringstream in(out);
  std::string line;
  std::getline(in, line);
  if (line != "p,lambda") o.fail("bad header '" + line + "'");
  std::size_t i = 0;
  const auto& ref = oracle::reference_lambda_table();
  while (std::getline(in, line)) {
    if (i >= ref.size()) {
      o.fail("extra row " + line);
      break;
    }
    const std::string want = std::to_string(ref[i].first) + "," + std::to_string(ref[i].second);
    if (line != want) o.fail("row " + std::to_string(i) + ": got " + line + ", want " + want);
    ++i;
  }
  if (i != ref.size()) o.fail("got " + std::to_string(i) + " rows, want 90");
  o.detail = o.ok ? "90/90 rows" : o.detail;
  return o;
}

// 5
Outcome lambda_recursion() {
  Outcome o;
  std::size_t count = 0;
  for (auto [p, n] : prime_powers(2401, false)) {
    const auto e = charsum::lambda_extend(p, n).lambda;
    const auto d = charsum::lambda_direct(p, n).lambda;
    if (e != d) o.fail(std::to_string(p) + "^" + std::to_string(n) + ": " + str(e) + " vs " + str(d));
    ++count;
  }
  if (o.ok) o.detail = std::to_string(count) + " fields";
  return o;
}

// 6
Outcome identities() {
  Outcome o;
  std::size_t count = 0;
  for (auto [p, n] : prime_powers(2000, true)) {
    const Field f = Field::with_default_modulus(p, n);
    const Integer lambda = charsum::lambda_direct(f).lambda;
    for (const auto& v : charsum::half_identities(f, lambda)) {
      if (Integer(v.computed) != v.expected) {
        o.fail(v.name + " at q=" + std::to_string(f.q()));
      }
    }
    ++count;
  }
  if (o.ok) o.detail = std::to_string(count) + " fields x 5 identities";
  return o;
}

// 7
Outcome moments() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::size_t tables = 0;
  auto check = [&](const sbox::FunctionTable& t, bool with_brute) {
    const auto d = sbox::ddt_compute(t);
    const auto s = sbox::spectrum_from_ddt(d);
    const auto m = sbox::moment_check(s, t.q());
    if (!m.ok) o.fail("first moments at q=" + std::to_string(t.q()));
    if (with_brute) {
      const Integer brute = sbox::n4_brute(t, 81);
      if (m.sum2 != brute || m.sum2 != Integer(sbox::n4_from_ddt(d))) {
        o.fail("second moment at q=" + std::to_string(t.q()));
      }
    }
    ++tables;
  };
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {7, 1}, {3, 2}, {11, 1}, {19, 1}, {23, 1}, {3, 3}}) {
    const Field f = Field::with_default_modulus(p, n);
    if (f.q() % 4 == 3) check(family::build_f1(f), true);
    for (int k = 0; k < 100; ++k) check(testutil::random_table(f, rng), true);
  }
  // The remaining q <= 81 for the N4 three-way agreement.
  for (auto [p, n] : prime_powers(81, false)) {
    const Field f = Field::with_default_modulus(p, n);
    if (f.q() % 4 == 3) check(family::build_f1(f), true);
    for (int k = 0; k < 3; ++k) check(testutil::random_table(f, rng), true);
  }
  if (o.ok) o.detail = std::to_string(tables) + " tables";
  return o;
}

// 8
Outcome system_counters() {
  Outcome o;
  std::size_t count = 0;
  for (auto [p, n] : prime_powers(343, true)) {
    const Field f = Field::with_default_modulus(p, n);
    const auto a = family::count_triples_all_square(f);
    const auto b = family::count_triples_all_nonsquare(f);
    const auto c = family::count_quads_all_nonsquare(f, 343);
    const std::string q = std::to_string(f.q());
    if (!a.ok()) o.fail("all-square triples at q=" + q);
    if (!b.ok()) o.fail("all-nonsquare triples at q=" + q);
    if (!c.ok()) o.fail("all-nonsquare quadruples at q=" + q);
    ++count;
  }
  if (o.ok) o.detail = std::to_string(count) + " fields";
  return o;
}

// 9
Outcome uniformity_bounds() {
  Outcome o;
  std::size_t count = 0;
  for (auto [p, n] : prime_powers(343, true)) {
    const Field f = Field::with_default_modulus(p, n);
    const auto d = sbox::ddt_compute(family::build_f1(f));
    const std::uint32_t q = static_cast<std::uint32_t>(f.q());
    const std::uint32_t want = (q + 1) / 4;
    const std::string tag = " at q=" + std::to_string(q);
    if (sbox::uniformity(d) != want) o.fail("uniformity" + tag);
    if (Integer(want) != family::closed_uniformity(p, n)) o.fail("closed uniformity" + tag);
    for (std::uint32_t a = 1; a < q; ++a) {
      if (d.at(a, 0) != want) o.fail("delta(a,0)" + tag);
      for (std::uint32_t b = 1; b < q; ++b) {
        if (d.at(a, b) > 2) o.fail("delta(a,b) > 2" + tag);
      }
    }
    ++count;
  }
  if (o.ok) o.detail = std::to_string(count) + " fields";
  return o;
}

// 10
Outcome decomposition() {
  Outcome o;
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {3, 1}, {7, 1}, {11, 1}, {19, 1}, {23, 1}, {3, 3}}) {
    const auto d = family::n4_decomposition(Field::with_default_modulus(p, n));
    const std::string tag = " at " + std::to_string(p) + "^" + std::to_string(n);
    if (d.class_sum() != Integer(d.n4_brute)) o.fail("classes do not sum to N4" + tag);
    if (d.n4_closed != Integer(d.n4_brute)) o.fail("closed N4" + tag);
    for (unsigned i = 0; i < 16; ++i) {
      if (!d.patterns[i].ok()) o.fail("pattern " + family::SignPattern::from_index(i).str() + tag);
    }
    for (unsigned z = 0; z < 4; ++z) {
      if (!d.zero_classes[z].ok()) o.fail(std::to_string(z + 1) + "-zero class" + tag);
    }
  }
  return o;
}

// 11
Outcome special_cases() {
  Outcome o;
  const Field f3 = Field::with_default_modulus(3, 1);
  const auto d3 = sbox::ddt_compute(family::build_f1(f3));
  if (!(sbox::spectrum_from_ddt(d3) == spec(3, {{0, 2}, {1, 6}, {3, 1}}))) o.fail("q=3 spectrum");
  if (sbox::uniformity(d3) != 1) o.fail("q=3 is not PN");

  const Field f7 = Field::with_default_modulus(7, 1);
  if (!(sbox::spectrum_of(family::build_f1(f7)) == spec(7, {{0, 18}, {1, 18}, {2, 12}, {7, 1}}))) {
    o.fail("q=7 spectrum");
  }
  const auto report = verify::run(7, 1, verify::Caps{});
  const auto* listing = report.find("literature_q7_listing");
  if (!listing || listing->status != verify::Status::flagged) o.fail("q=7 listing not flagged");
  if (!report.ok()) o.fail("q=7 verify report not ok");

  for (auto [p, n] : prime_powers(343, true)) {
    const Field f = Field::with_default_modulus(p, n);
    if (f.q() < 11) continue;
    const auto r = sbox::is_locally_apn(sbox::ddt_compute(family::build_f1(f)), p);
    const std::string tag = " at q=" + std::to_string(f.q());
    if (n > 1 && r.verdict != sbox::LocalApn::yes) o.fail("not locally-APN" + tag);
    if (n == 1 && (r.verdict != sbox::LocalApn::vacuous || r.max_nonzero != 2)) {
      o.fail("n=1 verdict" + tag);
    }
  }
  return o;
}

// 12
Outcome isomorphism() {
  Outcome o;
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {3, 3}, {3, 5}, {7, 3}, {11, 3}}) {
    const auto mods = ff::irreducibles(p, n, 2);
    if (mods.size() != 2 || mods[0] == mods[1]) {
      o.fail("no second modulus");
      continue;
    }
    const Field a(p, mods[0]), b(p, mods[1]);
    const std::string tag = " for " + std::to_string(p) + "^" + std::to_string(n);
    if (charsum::lambda_direct(a).lambda != charsum::lambda_direct(b).lambda) o.fail("lambda" + tag);
    if (!(sbox::spectrum_of(family::build_f1(a)) == sbox::spectrum_of(family::build_f1(b)))) {
      o.fail("spectrum" + tag);
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 = no budget
  std::function<Outcome()> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <diffspec-cli>\n";
    return 2;
  }
  cli_path = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "lambda table for p <= 1039 via CLI", 5, lambda_table},
      {2, "q=243 spectrum, brute force and closed form", 5,
       [] { return listed_spectrum(3, 5, spec(243, {{0, 22022}, {1, 29524}, {2, 7260}, {61, 242}, {243, 1}})); }},
      {3, "q=343 spectrum, brute force and closed form", 10,
       [] { return listed_spectrum(7, 3, spec(343, {{0, 44118}, {1, 58482}, {2, 14706}, {86, 342}, {343, 1}})); }},
      {4, "q=1331 spectrum, brute force and closed form", 60,
       [] {
         return listed_spectrum(11, 3,
                              spec(1331, {{0, 645050}, {1, 923020}, {2, 202160}, {333, 1330}, {1331, 1}}));
       }},
      {5, "lambda recursion equals direct sum, p^n <= 2401", 0, lambda_recursion},
      {6, "five character-sum identities, q = 3 mod 4, q <= 2000", 0, identities},
      {7, "moment identities and N4 three ways", 0, moments},
      {8, "equation-system counters equal closed forms, q <= 343", 60, system_counters},
      {9, "uniformity (q+1)/4, delta(a,0) and delta <= 2 on (F*)^2, q <= 343", 0, uniformity_bounds},
      {10, "N4 decomposition into 16 sign and 4 zero classes", 0, decomposition},
      {11, "special cases q=3, q=7 and locally-APN", 0, special_cases},
      {12, "invariance under a second irreducible modulus", 0, isomorphism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << ")";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
    if (!o.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
