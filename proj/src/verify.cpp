#include "diffspec/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <functional>

#include "diffspec/charsum.hpp"
#include "diffspec/error.hpp"
#include "diffspec/family.hpp"
#include "diffspec/io.hpp"
#include "diffspec/sbox.hpp"

namespace diffspec::verify {

using nlohmann::ordered_json;

namespace {

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::uint64_t v = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, v);
  if (ec != std::errc{} || ptr != end) {
    throw InvalidArgument(std::string(name) + " must be a nonnegative integer");
  }
  return v;
}

class Builder {
 public:
  explicit Builder(Report& r) : report_(r) {}

  void compare(std::string name, ordered_json closed, ordered_json oracle, std::string note = {}) {
    const Status s = closed == oracle ? Status::pass : Status::fail;
    add(std::move(name), std::move(closed), std::move(oracle), s, std::move(note));
  }
  void add(std::string name, ordered_json closed, ordered_json oracle, Status s,
           std::string note = {}) {
    report_.checks.push_back({std::move(name), std::move(closed), std::move(oracle), s,
                              std::move(note)});
  }
  void skip(std::string name, std::string why) {
    add(std::move(name), nullptr, nullptr, Status::skipped, std::move(why));
  }
  /// Runs `body` if q <= cap, otherwise records each name as skipped.
  void gated(std::uint64_t q, std::uint64_t cap, const char* cap_name,
             std::initializer_list<std::string> names, const std::function<void()>& body) {
    if (q <= cap) {
      body();
      return;
    }
    for (const auto& nm : names) {
      skip(nm, "q=" + std::to_string(q) + " above " + cap_name + " cap " + std::to_string(cap));
    }
  }

 private:
  Report& report_;
};

ordered_json spectrum_json(const sbox::Spectrum& s) { return io::spectrum_omega_json(s); }

std::uint64_t checked_order(std::uint32_t p, unsigned n) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) return 0;
    q *= p;
  }
  return q;
}

void family_checks(Builder& b, const ff::Field& field, const Caps& caps) {
  const std::uint32_t p = field.p();
  const unsigned n = field.n();
  const std::uint64_t q = field.q();

  b.gated(q, caps.q2, "Q2",
          {"uniformity", "delta_a0", "delta_nonzero_max", "spectrum", "moments", "n4_from_ddt",
           "locally_apn", "fminus1", "triples_all_square", "triples_all_nonsquare"},
          [&] {
            const auto f1 = family::build_f1(field);
            const auto ddt = sbox::ddt_compute(f1);
            const auto closed_u = io::integer_json(family::closed_uniformity(p, n));
            b.compare("uniformity", closed_u, sbox::uniformity(ddt));

            std::uint32_t lo = q, hi = 0;
            for (std::uint32_t a = 1; a < q; ++a) {
              lo = std::min(lo, ddt.at(a, 0));
              hi = std::max(hi, ddt.at(a, 0));
            }
            b.compare("delta_a0", ordered_json{{"min", closed_u}, {"max", closed_u}},
                      ordered_json{{"min", lo}, {"max", hi}});

            const auto apn = sbox::is_locally_apn(ddt, p);
            b.add("delta_nonzero_max", 2, apn.max_nonzero,
                  apn.max_nonzero <= 2 ? Status::pass : Status::fail, "bound on (F*)^2");

            const auto brute = sbox::spectrum_from_ddt(ddt);
            const auto closed = family::closed_spectrum(p, n);
            b.compare("spectrum", spectrum_json(closed), spectrum_json(brute));

            const auto m = sbox::moment_check(brute, q);
            const auto qq = io::integer_json(Integer(q) * q);
            b.add("moments", ordered_json{{"sum", qq}, {"weighted_sum", qq}},
                  ordered_json{{"sum", io::integer_json(m.sum0)},
                               {"weighted_sum", io::integer_json(m.sum1)}},
                  m.ok ? Status::pass : Status::fail);
            b.compare("n4_from_ddt", io::integer_json(family::closed_n4(p, n)),
                      sbox::n4_from_ddt(ddt));

            const std::string expected =
                n == 1 ? "vacuous" : (q >= 11 ? "true" : "false");
            b.compare("locally_apn", expected, sbox::to_string(apn.verdict),
                      "max outside F_p = " + std::to_string(apn.max_outside_prime_field));

            b.compare("fminus1", true, family::fminus1_check(field));

            const auto t1 = family::count_triples_all_square(field);
            b.compare("triples_all_square", io::integer_json(t1.closed), t1.brute);
            const auto t2 = family::count_triples_all_nonsquare(field);
            b.compare("triples_all_nonsquare", io::integer_json(t2.closed), t2.brute);

            if (q == 7) {
              // Published listing for q = 7 swaps omega_1 and omega_2.
              const ordered_json listed = {{"0", 18}, {"1", 12}, {"2", 18}, {"7", 1}};
              b.add("literature_q7_listing", listed, spectrum_json(brute), Status::flagged,
                    "listed [18,12,18,1] gives sum i*w_i = 55 != 49; computed and closed form agree "
                    "on [18,18,12,1]");
            }
          });

  std::vector<std::string> cubic_names = {"n4_brute", "quads_all_nonsquare", "n4_decomposition"};
  for (unsigned i = 0; i < 16; ++i) {
    cubic_names.push_back("pattern_" + family::SignPattern::from_index(i).str());
  }
  for (unsigned z = 1; z <= 4; ++z) cubic_names.push_back("zero_class_" + std::to_string(z));

  if (q <= caps.q3) {
    const auto closed_n4 = io::integer_json(family::closed_n4(p, n));
    const auto f1 = family::build_f1(field);
    b.compare("n4_brute", closed_n4, sbox::n4_brute(f1, caps.q3));
    const auto nsq = family::count_quads_all_nonsquare(field, caps.q3);
    b.compare("quads_all_nonsquare", io::integer_json(nsq.closed), nsq.brute);
    const auto d = family::n4_decomposition(field, caps.q3);
    b.compare("n4_decomposition", io::integer_json(d.class_sum()), d.n4_brute,
              "16 sign classes + 4 zero classes vs direct N4");
    for (unsigned i = 0; i < 16; ++i) {
      b.compare("pattern_" + family::SignPattern::from_index(i).str(),
                io::integer_json(d.patterns[i].closed), d.patterns[i].brute);
    }
    for (unsigned z = 1; z <= 4; ++z) {
      b.compare("zero_class_" + std::to_string(z), io::integer_json(d.zero_classes[z - 1].closed),
                d.zero_classes[z - 1].brute);
    }
  } else {
    for (const auto& nm : cubic_names) {
      b.skip(nm, "q=" + std::to_string(q) + " above Q3 cap " + std::to_string(caps.q3));
    }
  }
}

}  // namespace

Caps Caps::from_env() {
  Caps c;
  c.q1 = env_cap("DIFFSPEC_CAP_Q1", c.q1);
  c.q2 = env_cap("DIFFSPEC_CAP_Q2", c.q2);
  c.q3 = env_cap("DIFFSPEC_CAP_Q3", c.q3);
  return c;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
    case Status::flagged:
      return "flagged";
  }
  return "?";
}

bool Report::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Status::fail; });
}

const Check* Report::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

ordered_json Report::to_json() const {
  ordered_json j;
  j["p"] = p;
  j["n"] = n;
  j["q"] = q;
  j["modulus"] = modulus;
  j["ok"] = ok();
  auto arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["closed"] = c.closed;
    e["oracle"] = c.oracle;
    e["status"] = to_string(c.status);
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j;
}

Report run(std::uint32_t p, unsigned n, const Caps& caps, const std::optional<ff::Poly>& modulus) {
  if (p < 3 || !ff::is_prime(p)) throw InvalidArgument("p must be an odd prime");
  if (n == 0) throw InvalidArgument("n must be >= 1");
  const std::uint64_t q = checked_order(p, n);
  if (q == 0 || q > caps.q1) {
    throw CapExceeded("verify needs q <= " + std::to_string(caps.q1));
  }

  const ff::Field field = modulus ? ff::Field(p, *modulus) : ff::Field::with_default_modulus(p, n);
  if (field.n() != n) throw InvalidArgument("modulus degree does not match n");

  Report r;
  r.p = p;
  r.n = n;
  r.q = q;
  r.modulus = ff::format_modulus(field.modulus());
  Builder b(r);

  const auto lambda = charsum::lambda_extend(p, n).lambda;
  const auto lambda_j = io::integer_json(lambda);
  b.compare("lambda_extend_vs_direct", lambda_j,
            io::integer_json(charsum::lambda_direct(field).lambda));
  b.add("lambda_weil_bound", io::integer_json(4 * Integer(q)), io::integer_json(lambda * lambda),
        lambda * lambda <= 4 * Integer(q) ? Status::pass : Status::fail, "lambda^2 <= 4q");
  b.compare("lambda_point_count", io::integer_json(Integer(q) + 1 + lambda),
            io::integer_json(Integer(charsum::lambda_curve_affine_points(field)) + 1),
            "projective points on y^2 = x^3 - 2x^2 - x");

  if (q % 4 != 3) {
    b.skip("half_identities", "q is not 3 mod 4");
    return r;
  }

  for (const auto& id : charsum::half_identities(field, lambda)) {
    b.compare("identity " + id.name, io::integer_json(id.expected), id.computed);
  }
  b.compare("spectrum_by_residue", spectrum_json(family::closed_spectrum(p, n)),
            spectrum_json(family::closed_spectrum_by_residue(p, n)));

  family_checks(b, field, caps);
  return r;
}

}  // namespace diffspec::verify
