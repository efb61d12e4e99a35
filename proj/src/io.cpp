#include "diffspec/io.hpp"

#include <istream>
#include <limits>
#include <ostream>

#include "diffspec/error.hpp"

namespace diffspec::io {

using nlohmann::json;

sbox::FunctionTable function_table_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InvalidArgument("function table must be a JSON object");
    for (const char* key : {"p", "n", "modulus", "table"}) {
      if (!j.contains(key)) throw InvalidArgument(std::string("missing key '") + key + "'");
    }
    const auto p = j.at("p").get<std::int64_t>();
    const auto n = j.at("n").get<std::int64_t>();
    if (p < 3 || p > std::numeric_limits<std::uint32_t>::max()) {
      throw InvalidArgument("p out of range");
    }
    if (n < 1) throw InvalidArgument("n must be >= 1");
    ff::Poly modulus;
    for (const auto& c : j.at("modulus")) {
      const auto v = c.get<std::int64_t>();
      if (v < 0 || v >= p) throw InvalidArgument("modulus coefficient out of range");
      modulus.push_back(static_cast<ff::Coeff>(v));
    }
    if (modulus.size() != static_cast<std::size_t>(n) + 1) {
      throw InvalidArgument("modulus must have n+1 coefficients");
    }
    ff::Field field(static_cast<std::uint32_t>(p), std::move(modulus));
    std::vector<std::uint32_t> table;
    table.reserve(field.q());
    for (const auto& t : j.at("table")) {
      const auto v = t.get<std::int64_t>();
      if (v < 0 || static_cast<std::uint64_t>(v) >= field.q()) {
        throw InvalidArgument("table entry " + std::to_string(v) + " out of range");
      }
      table.push_back(static_cast<std::uint32_t>(v));
    }
    return sbox::FunctionTable(std::move(field), std::move(table));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed function table: ") + e.what());
  }
}

sbox::FunctionTable read_function_table(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("not valid JSON: ") + e.what());
  }
  return function_table_from_json(j);
}

json function_table_to_json(const sbox::FunctionTable& f) {
  const auto values = f.values();
  return json{{"p", f.field().p()},
              {"n", f.field().n()},
              {"modulus", f.field().modulus()},
              {"table", std::vector<std::uint32_t>(values.begin(), values.end())}};
}

void write_spectrum_json(std::ostream& out, const sbox::Spectrum& s) {
  out << "{\"q\":" << s.q << ",\"omega\":{";
  bool first = true;
  for (const auto& [i, w] : s.omega) {
    if (!first) out << ',';
    first = false;
    out << '"' << i << "\":" << w;
  }
  out << "}}\n";
}

void write_spectrum_csv(std::ostream& out, const sbox::Spectrum& s) {
  out << "i,omega\n";
  for (const auto& [i, w] : s.omega) out << i << ',' << w << '\n';
}

void write_ddt_csv(std::ostream& out, const sbox::Ddt& ddt, bool header) {
  const std::uint32_t q = ddt.q();
  if (header) {
    out << "a\\b";
    for (std::uint32_t b = 0; b < q; ++b) out << ',' << b;
    out << '\n';
  }
  std::string line;
  for (std::uint32_t a = 0; a < q; ++a) {
    line.clear();
    if (header) line += std::to_string(a) + ',';
    const auto row = ddt.row(a);
    for (std::uint32_t b = 0; b < q; ++b) {
      if (b) line += ',';
      line += std::to_string(row[b]);
    }
    line += '\n';
    out << line;
  }
}

void write_lambda_table_csv(std::ostream& out, const std::vector<charsum::LambdaEntry>& rows) {
  out << "p,lambda\n";
  for (const auto& r : rows) out << r.p << ',' << r.lambda << '\n';
}

nlohmann::ordered_json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

nlohmann::ordered_json spectrum_omega_json(const sbox::Spectrum& s) {
  auto omega = nlohmann::ordered_json::object();
  for (const auto& [i, w] : s.omega) omega[i.str()] = integer_json(w);
  return omega;
}

}  // namespace diffspec::io
