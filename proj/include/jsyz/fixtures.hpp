#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jsyz/arrangement.hpp"
#include "jsyz/pencil.hpp"

namespace jsyz {

/// A named example curve. Line arrangements whose lines need roots of unity
/// carry their lines over GF(p) with p = 1 mod k; f itself is always over Q.
struct Fixture {
  std::string name;
  std::string description;
  QPoly f;
  std::optional<LineArrangement<Rational>> arrangement;
  std::optional<LineArrangement<ModP>> split_arrangement;
  std::optional<PencilSpec<Rational>> pencil;
  std::optional<PencilProductSpec<Rational>> product;
};

/// Names accepted by fixture(), with the default parameter where one exists.
std::vector<std::string> fixture_names();

/// Builds the fixture "name" or "name:param", e.g. "ex12i:4" or "hesse".
/// Throws InputError for an unknown name or an out-of-range parameter.
Fixture fixture(const std::string& spec);

/// Smallest prime p > 2^30 with p = 1 mod k.
std::uint64_t prime_one_mod(std::uint64_t k);

/// An element of exact multiplicative order k in GF(p); requires k | p - 1.
ModP primitive_root_of_unity(std::uint64_t k, std::uint64_t p);

}  // namespace jsyz
