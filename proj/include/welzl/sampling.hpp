#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "welzl/setsystem.hpp"

namespace welzl {

using Rng = std::mt19937_64;

// Independent sub-stream seed: splitmix64 over (base, index). Boosted trials
// and unknown-c levels draw their engines from derive_seed(seed, i).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Uniform s-subset of {0, ..., n-1}, returned in increasing order.
// Reservoir sampling (Algorithm R) followed by a mark-array sweep; O(n).
// Throws std::invalid_argument if s > n.
std::vector<Id> uniform_sample(std::size_t n, std::size_t s, Rng& rng);

}  // namespace welzl
