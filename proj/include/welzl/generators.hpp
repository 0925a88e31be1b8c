#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "welzl/setsystem.hpp"

namespace welzl {

// All n+1 prefixes {0..t-1}, t = 0..n, over n points. Set t is the prefix of
// length t. Throws std::invalid_argument if n < 1.
SetSystem gen_prefix(std::size_t n);

// Open-neighborhood system of the rows x cols grid graph. Vertex (r, c) has
// id r * cols + c, and set v is N(v).
SetSystem gen_grid(std::size_t rows, std::size_t cols);

// Neighborhood system of a uniformly drawn simple `degree`-regular graph
// (configuration model, rejecting loops and multi-edges). Throws
// std::invalid_argument on infeasible parameters and std::runtime_error if
// no simple pairing is found within the retry budget.
SetSystem gen_bounded_degree(std::size_t n, std::size_t degree, std::uint64_t seed);

struct Point2 {
  double x = 0;
  double y = 0;
};

// Halfplane {p : cos(angle) * p.x + sin(angle) * p.y <= offset}.
struct Halfplane {
  double angle = 0;
  double offset = 0;

  bool contains(const Point2& p) const;
};

struct HalfplaneInstance {
  std::vector<Point2> points;
  std::vector<Halfplane> ranges;
};

// Points uniform in the unit square; each halfplane has a uniform angle and
// an offset uniform across the projection of the square onto its normal.
HalfplaneInstance sample_halfplanes(std::size_t n_points, std::size_t n_sets,
                                    std::uint64_t seed);

SetSystem halfplane_system(const HalfplaneInstance& instance);

SetSystem gen_halfplane(std::size_t n_points, std::size_t n_sets, std::uint64_t seed);

struct TwinExpansion {
  SetSystem system;
  std::vector<Id> origin;  // new element -> original element
};

// Replaces every element by 1..factor copies (uniform, independent) with the
// same memberships. Copies of one element get consecutive ids. factor == 1
// is the identity.
TwinExpansion expand_twins(const SetSystem& system, std::size_t factor, std::uint64_t seed);

SetSystem add_twins(const SetSystem& system, std::size_t factor, std::uint64_t seed);

// Family name plus integer parameters and seed; identical specs generate
// identical systems.
struct GenSpec {
  std::string family;
  std::vector<std::int64_t> params;
  std::uint64_t seed = 0;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

// Families: "prefix n", "grid rows cols", "regular n degree",
// "halfplane points sets". Throws std::invalid_argument otherwise.
SetSystem generate(const GenSpec& spec);

// Single-line description, e.g. "gen grid 64 64 seed=1".
std::string describe(const GenSpec& spec);

constexpr std::size_t kPrefixCliLimit = std::size_t{1} << 13;

}  // namespace welzl
