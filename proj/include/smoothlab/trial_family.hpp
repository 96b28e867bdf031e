#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smoothlab/funcrep.hpp"

namespace smoothlab {

constexpr std::uint64_t kDefaultSeed = 20240101;

// Monomial coefficients c_0..c_degree, uniform in [-1, 1). The mapping from
// the mt19937_64 stream is fixed here, so the coefficients do not depend on
// the standard library's distribution code.
std::vector<double> random_poly_coeffs(std::uint64_t seed, int degree);

// Named members: R0..R12, abs1.5, exp, quartic_weight, random10.
std::vector<std::string> trial_family_names();
FuncRep trial_function(const std::string& name, std::uint64_t seed = kDefaultSeed);
std::vector<FuncRep> trial_family(std::uint64_t seed = kDefaultSeed);

// A trial-family name, "poly:c0,c1,..." (monomial coefficients) or
// "const:c". Throws ValidationError on anything else.
FuncRep parse_function(const std::string& spec, std::uint64_t seed = kDefaultSeed);

}  // namespace smoothlab
