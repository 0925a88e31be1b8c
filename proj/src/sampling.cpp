#include "welzl/sampling.hpp"

#include <stdexcept>
#include <string>

namespace welzl {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(base) ^ (index + 1) * 0xd1b54a32d192ed03ULL);
}

std::vector<Id> uniform_sample(std::size_t n, std::size_t s, Rng& rng) {
  if (s > n) {
    throw std::invalid_argument("uniform_sample: target " + std::to_string(s) +
                                " exceeds universe " + std::to_string(n));
  }
  std::vector<Id> reservoir;
  reservoir.reserve(s);
  for (std::size_t i = 0; i < s; ++i) reservoir.push_back(static_cast<Id>(i));
  for (std::size_t i = s; i < n && s > 0; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i);
    const std::size_t j = pick(rng);
    if (j < s) reservoir[j] = static_cast<Id>(i);
  }
  std::vector<bool> chosen(n, false);
  for (Id v : reservoir) chosen[v] = true;
  std::vector<Id> out;
  out.reserve(s);
  for (std::size_t i = 0; i < n; ++i) {
    if (chosen[i]) out.push_back(static_cast<Id>(i));
  }
  return out;
}

}  // namespace welzl
