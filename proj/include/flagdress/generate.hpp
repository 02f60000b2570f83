#pragma once

// Seeded instance generators for sweeps and experiments. All weights are
// integers in [lo, hi].
//
// Uniform weights almost never satisfy the relations (even for n = 4 the
// valid fraction is tiny), so the sweep mixes three families to exercise
// both sides of every equivalence:
//   uniform         every weight uniform in [lo, hi]
//   tropical_minor  tropical minors of a random 0/1 matrix, each layer shifted
//                   by a random constant (always valid)
//   perturbed       a tropical_minor instance with one weight moved by ±1
//                   (often just barely invalid)

#include "flagdress/tropical.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace flagdress {

enum class WeightFamily { uniform, tropical_minor, perturbed };

std::string_view to_string(WeightFamily f);

// Throws DomainError on bad dims, lo > hi, or a range too narrow for the
// tropical minors (hi - lo < max dim).
FlagInstance sample_instance(int n, const std::vector<int>& dims, WeightFamily family, std::mt19937_64& rng,
                             int lo = -3, int hi = 3);

// Uniform weights only, no validation.
FlagInstance uniform_instance(int n, const std::vector<int>& dims, std::uint64_t seed, int lo = -3, int hi = 3);

// One draw from the mixture (family chosen uniformly).
FlagInstance mixed_instance(int n, const std::vector<int>& dims, std::uint64_t seed, int lo = -3, int hi = 3);

// Rejection sampling from the mixture until check_flag passes. `attempts`
// receives the number of draws. Throws GenerationError after `budget` draws.
FlagInstance valid_instance(int n, const std::vector<int>& dims, std::uint64_t seed, int budget = 1000,
                            int* attempts = nullptr, int lo = -3, int hi = 3);

// Tropicalized random_flag_matrix(n, dims, seed).
FlagInstance realizable_instance(int n, const std::vector<int>& dims, std::uint64_t seed);

} // namespace flagdress
