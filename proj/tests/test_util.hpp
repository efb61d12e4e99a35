#pragma once

#include <random>
#include <vector>

#include "diffspec/sbox.hpp"

namespace testutil {

inline diffspec::sbox::FunctionTable random_table(const diffspec::ff::Field& field,
                                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(field.q() - 1));
  std::vector<std::uint32_t> t(field.q());
  for (auto& v : t) v = pick(rng);
  return {field, std::move(t)};
}

inline diffspec::sbox::FunctionTable identity_table(const diffspec::ff::Field& field) {
  std::vector<std::uint32_t> t(field.q());
  for (std::uint32_t i = 0; i < t.size(); ++i) t[i] = i;
  return {field, std::move(t)};
}

inline diffspec::sbox::Spectrum spectrum_of_map(std::uint64_t q,
                                                const std::map<std::uint32_t, std::uint64_t>& m) {
  diffspec::sbox::Spectrum s;
  s.q = q;
  for (auto [k, v] : m) s.add(k, v);
  return s;
}

}  // namespace testutil
