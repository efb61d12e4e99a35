// diffspec: differential spectra over F_{p^n}.
//
// Exit codes: 0 ok, 2 invalid input, 3 verification mismatch, 4 cap exceeded, 5 I/O.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "diffspec/charsum.hpp"
#include "diffspec/error.hpp"
#include "diffspec/family.hpp"
#include "diffspec/io.hpp"
#include "diffspec/sbox.hpp"
#include "diffspec/verify.hpp"

namespace {

using namespace diffspec;

constexpr int kExitInvalid = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitCap = 4;
constexpr int kExitIo = 5;

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldArgs {
  std::uint32_t p = 0;
  unsigned n = 1;
  std::string modulus;
  std::int64_t u = 1;
};

void add_field_options(CLI::App* cmd, FieldArgs& a, bool with_u) {
  cmd->add_option("--p", a.p, "odd prime characteristic")->required();
  cmd->add_option("--n", a.n, "extension degree")->capture_default_str();
  cmd->add_option("--modulus", a.modulus, "irreducible modulus c0,c1,...,cn (default: least)");
  if (with_u) cmd->add_option("--u", a.u, "coefficient u of f_u, taken mod p")->capture_default_str();
}

void check_params(std::uint32_t p, unsigned n) {
  if (p < 3 || !ff::is_prime(p)) throw InvalidArgument("--p must be an odd prime");
  if (n == 0) throw InvalidArgument("--n must be >= 1");
}

// p^n, or 0 when it overflows 62 bits.
std::uint64_t order_of(std::uint32_t p, unsigned n) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) return 0;
    q *= p;
  }
  return q;
}

void require_cap(std::uint64_t q, std::uint64_t cap, const char* what) {
  if (q == 0 || q > cap) {
    throw CapExceeded(std::string(what) + ": q exceeds cap " + std::to_string(cap));
  }
}

ff::Field make_field(const FieldArgs& a) {
  if (a.modulus.empty()) return ff::Field::with_default_modulus(a.p, a.n);
  ff::Field f(a.p, ff::parse_modulus(a.modulus));
  if (f.n() != a.n) throw InvalidArgument("--modulus degree does not match --n");
  return f;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
};

sbox::Spectrum without_zero_row(sbox::Spectrum s) {
  // the a = 0 row is one q followed by q - 1 zeros
  const Integer q = s.q;
  s.omega[q] -= 1;
  s.omega[0] -= q - 1;
  std::erase_if(s.omega, [](const auto& kv) { return kv.second == 0; });
  return s;
}

int cmd_lambda(std::uint32_t p, unsigned n, const std::string& method,
               const verify::Caps& caps) {
  check_params(p, n);
  std::optional<Integer> closed, direct;
  if (method != "brute-force") closed = charsum::lambda_extend(p, n).lambda;
  if (method != "closed-form") {
    require_cap(order_of(p, n), caps.q1, "direct lambda sum");
    direct = charsum::lambda_direct(p, n).lambda;
  }
  if (closed && direct && *closed != *direct) {
    throw Mismatch("lambda mismatch: recursion " + closed->str() + ", direct " + direct->str());
  }
  std::cout << (closed ? *closed : *direct) << '\n';
  if (closed && direct) std::cerr << "recursion and direct sum agree\n";
  return 0;
}

int cmd_lambda_table(std::uint32_t max_p, const std::string& out_path) {
  Output out(out_path);
  io::write_lambda_table_csv(out.stream(), charsum::lambda_table(max_p));
  out.finish();
  return 0;
}

int cmd_spectrum(const FieldArgs& a, std::string method, const std::string& format,
                 bool exclude_zero_row, const std::string& out_path, const verify::Caps& caps) {
  check_params(a.p, a.n);
  const std::uint64_t q = order_of(a.p, a.n);
  if (method.empty()) method = (q != 0 && q <= caps.q2) ? "both" : "closed-form";

  std::optional<sbox::Spectrum> closed, brute;
  if (method != "brute-force") {
    const std::int64_t u = ((a.u % a.p) + a.p) % a.p;
    if (u != 1 && u != static_cast<std::int64_t>(a.p) - 1) {
      throw InvalidArgument("closed forms cover u = +1 and u = -1 only");
    }
    closed = family::closed_spectrum(a.p, a.n);
    if (exclude_zero_row) closed = without_zero_row(*closed);
  }
  if (method != "closed-form") {
    require_cap(q, caps.q2, "brute-force spectrum");
    const ff::Field field = make_field(a);
    const auto f = family::build_fu(field, field.constant(a.u));
    brute = sbox::spectrum_of(f, !exclude_zero_row);
  }
  if (closed && brute && *closed != *brute) {
    std::ostringstream os;
    os << "spectrum mismatch\n  closed: ";
    io::write_spectrum_json(os, *closed);
    os << "  brute:  ";
    io::write_spectrum_json(os, *brute);
    throw Mismatch(os.str());
  }
  Output out(out_path);
  const auto& s = brute ? *brute : *closed;
  if (format == "csv") io::write_spectrum_csv(out.stream(), s);
  else io::write_spectrum_json(out.stream(), s);
  out.finish();
  if (closed && brute) std::cerr << "closed form and brute force agree\n";
  return 0;
}

int cmd_ddt(const FieldArgs& a, const std::string& out_path, bool header,
            const verify::Caps& caps) {
  check_params(a.p, a.n);
  require_cap(order_of(a.p, a.n), caps.q2, "DDT");
  const ff::Field field = make_field(a);
  const auto ddt = sbox::ddt_compute(family::build_fu(field, field.constant(a.u)));
  Output out(out_path);
  io::write_ddt_csv(out.stream(), ddt, header);
  out.finish();
  return 0;
}

int cmd_table(const FieldArgs& a, const std::string& out_path, const verify::Caps& caps) {
  check_params(a.p, a.n);
  require_cap(order_of(a.p, a.n), caps.q2, "function table");
  const ff::Field field = make_field(a);
  Output out(out_path);
  out.stream() << io::function_table_to_json(family::build_fu(field, field.constant(a.u))).dump()
               << '\n';
  out.finish();
  return 0;
}

int cmd_verify(const FieldArgs& a, const std::string& out_path, const verify::Caps& caps) {
  check_params(a.p, a.n);
  std::optional<ff::Poly> modulus;
  if (!a.modulus.empty()) modulus = ff::parse_modulus(a.modulus);
  const auto report = verify::run(a.p, a.n, caps, modulus);
  Output out(out_path);
  out.stream() << report.to_json().dump(2) << '\n';
  out.finish();
  return report.ok() ? 0 : kExitMismatch;
}

int cmd_audit(const std::string& in_path, const std::string& out_path, const verify::Caps& caps) {
  std::ifstream in(in_path);
  if (!in) throw IoError("cannot open " + in_path);
  const auto f = io::read_function_table(in);
  require_cap(f.q(), caps.q2, "audit");

  const auto ddt = sbox::ddt_compute(f);
  const auto spectrum = sbox::spectrum_from_ddt(ddt);
  const auto apn = sbox::is_locally_apn(ddt, f.field().p());
  const auto moments = sbox::moment_check(spectrum, Integer(f.q()));
  const std::uint32_t uni = sbox::uniformity(ddt);

  nlohmann::ordered_json j;
  j["p"] = f.field().p();
  j["n"] = f.field().n();
  j["q"] = f.q();
  j["uniformity"] = uni;
  j["class"] = uni == 1 ? "PN" : uni == 2 ? "APN" : "differentially " + std::to_string(uni) + "-uniform";
  j["spectrum"] = io::spectrum_omega_json(spectrum);
  j["locally_apn"] = {{"verdict", sbox::to_string(apn.verdict)},
                      {"max_outside_prime_field", apn.max_outside_prime_field},
                      {"max_nonzero", apn.max_nonzero}};
  j["moments"] = {{"sum", io::integer_json(moments.sum0)},
                  {"weighted_sum", io::integer_json(moments.sum1)},
                  {"ok", moments.ok}};
  j["n4"] = sbox::n4_from_ddt(ddt);
  if (f.q() <= caps.q3) j["n4_brute"] = sbox::n4_brute(f, caps.q3);

  Output out(out_path);
  out.stream() << j.dump(2) << '\n';
  out.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential spectra of functions over F_{p^n}"};
  app.require_subcommand(1);

  std::string out_path, method, format = "json", input;
  std::uint32_t lambda_p = 0, max_p = 0;
  unsigned lambda_n = 1;
  bool exclude_zero_row = false, header = false;
  FieldArgs fa;

  const CLI::IsMember methods({"closed-form", "brute-force", "both"});

  auto* lam = app.add_subcommand("lambda", "print lambda_{p,n}");
  lam->add_option("--p", lambda_p, "odd prime")->required();
  lam->add_option("--n", lambda_n, "extension degree")->capture_default_str();
  lam->add_option("--method", method, "closed-form (recursion), brute-force (direct sum), both")
      ->check(methods);

  auto* table = app.add_subcommand("lambda-table", "CSV of lambda_{p,1} for p = 3 mod 4");
  table->add_option("--max", max_p, "largest prime")->required();
  table->add_option("--out", out_path, "output file (default stdout)");

  auto* spec = app.add_subcommand("spectrum", "differential spectrum of f_u as JSON");
  add_field_options(spec, fa, true);
  spec->add_option("--method", method, "closed-form, brute-force or both")->check(methods);
  spec->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  spec->add_flag("--exclude-zero-row", exclude_zero_row, "leave out the a = 0 row");
  spec->add_option("--out", out_path, "output file (default stdout)");

  auto* ddt = app.add_subcommand("ddt", "difference distribution table of f_u as CSV");
  add_field_options(ddt, fa, true);
  ddt->add_option("--out", out_path, "output file (default stdout)");
  ddt->add_flag("--header", header, "emit a header row and a leading a column");

  auto* tab = app.add_subcommand("table", "function table of f_u as JSON");
  add_field_options(tab, fa, true);
  tab->add_option("--out", out_path, "output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "cross-check every closed form for (p, n)");
  add_field_options(ver, fa, false);
  ver->add_option("--out", out_path, "output file (default stdout)");

  auto* aud = app.add_subcommand("audit", "analyse an arbitrary function table JSON file");
  aud->add_option("input", input, "function table JSON")->required();
  aud->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInvalid;
  }

  try {
    const auto caps = verify::Caps::from_env();
    if (*lam) return cmd_lambda(lambda_p, lambda_n, method.empty() ? "closed-form" : method, caps);
    if (*table) return cmd_lambda_table(max_p, out_path);
    if (*spec) return cmd_spectrum(fa, method, format, exclude_zero_row, out_path, caps);
    if (*ddt) return cmd_ddt(fa, out_path, header, caps);
    if (*tab) return cmd_table(fa, out_path, caps);
    if (*ver) return cmd_verify(fa, out_path, caps);
    if (*aud) return cmd_audit(input, out_path, caps);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Mismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
