#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "welzl/setsystem.hpp"

namespace welzl {

// A graph is given by its neighborhood set system: element v and set v are the
// same vertex, and set v lists the open neighborhood N(v).
bool is_neighborhood_system(const SetSystem& graph);

struct Cover {
  std::vector<std::vector<Id>> clusters;  // sorted vertex lists
  std::vector<Id> anchors;                // center vertex per cluster, if known
  std::vector<Id> assignment;             // vertex -> cluster containing N[v]
};

// Anchor construction: anchor(u) is the order-first vertex of N[u]; the
// cluster of w is the union of N[u] over all u anchored at w, and u is
// assigned to its anchor's cluster. Each cluster lies within distance 2 of
// its anchor. Throws std::invalid_argument unless `graph` is a neighborhood
// system and `sequence` a permutation of its vertices.
Cover build_cover(const SetSystem& graph, std::span<const Id> sequence);

struct CoverAudit {
  bool coverage = false;
  // Largest distance in G between two members of one cluster. Clusters above
  // kExactDiameterLimit contribute 2 * eccentricity of their anchor, an upper
  // bound; diameter_exact is false when that happened.
  std::size_t max_weak_diameter = 0;
  bool diameter_exact = true;
  // Unreachable pairs make the diameter infinite.
  bool connected = true;
  std::size_t overlap = 0;
  double overlap_target = 0;

  bool diameter_ok(std::size_t limit = 4) const {
    return connected && max_weak_diameter <= limit;
  }
  double overlap_ratio() const { return overlap_target > 0 ? overlap / overlap_target : 0; }
};

constexpr std::size_t kExactDiameterLimit = 64;

// 1 + 12c^2 log2^2 n.
double cover_overlap_target(double c, std::size_t n);

CoverAudit audit_cover(const SetSystem& graph, const Cover& cover, double overlap_target);

}  // namespace welzl
