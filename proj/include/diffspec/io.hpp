#pragma once

// File formats.
//   FunctionTable JSON: {"p":P,"n":N,"modulus":[c0,...,cn],"table":[t0,...,t_{q-1}]}
//   Spectrum JSON:      {"q":Q,"omega":{"0":w0,"1":w1,...}}, keys ascending, zeros omitted
//   DDT CSV:            q rows of q integers, row a ascending, optional header
//   lambda table CSV:   header "p,lambda"
// Table entries and b-columns are element indices in the base-p encoding, so
// the prime subfield is indices 0..p-1.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffspec/charsum.hpp"
#include "diffspec/integer.hpp"
#include "diffspec/sbox.hpp"

namespace diffspec::io {

/// Throws InvalidArgument on malformed input, wrong length, out-of-range
/// entries or a reducible modulus.
sbox::FunctionTable read_function_table(std::istream& in);
sbox::FunctionTable function_table_from_json(const nlohmann::json& j);
nlohmann::json function_table_to_json(const sbox::FunctionTable& f);

/// Exact decimal output even when counts exceed 64 bits.
void write_spectrum_json(std::ostream& out, const sbox::Spectrum& s);
void write_spectrum_csv(std::ostream& out, const sbox::Spectrum& s);

void write_ddt_csv(std::ostream& out, const sbox::Ddt& ddt, bool header = false);
void write_lambda_table_csv(std::ostream& out, const std::vector<charsum::LambdaEntry>& rows);

/// A JSON number when the value fits in int64, otherwise its decimal string.
nlohmann::ordered_json integer_json(const Integer& v);
/// {"0": w0, ...} with integer_json values.
nlohmann::ordered_json spectrum_omega_json(const sbox::Spectrum& s);

}  // namespace diffspec::io
