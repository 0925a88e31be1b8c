#include "welzl/cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "welzl/order.hpp"

namespace welzl {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Breadth-first search that stops once every target is reached. Returns the
// largest target distance, or kUnreached if some target is disconnected.
class BoundedBfs {
 public:
  explicit BoundedBfs(const SetSystem& graph)
      : graph_(graph), dist_(graph.num_elements(), kUnreached), target_(graph.num_elements(), 0) {}

  std::size_t farthest(Id source, std::span<const Id> targets) {
    ++stamp_;
    std::size_t remaining = 0;
    for (Id t : targets) {
      if (target_[t] != stamp_) ++remaining;
      target_[t] = stamp_;
    }
    std::size_t worst = 0;
    queue_.clear();
    queue_.push_back(source);
    dist_[source] = 0;
    for (std::size_t head = 0; head < queue_.size() && remaining > 0; ++head) {
      const Id v = queue_[head];
      if (target_[v] == stamp_) {
        --remaining;
        worst = std::max(worst, dist_[v]);
      }
      for (Id w : graph_.members(v)) {
        if (dist_[w] == kUnreached) {
          dist_[w] = dist_[v] + 1;
          queue_.push_back(w);
        }
      }
    }
    for (Id v : queue_) dist_[v] = kUnreached;
    return remaining == 0 ? worst : kUnreached;
  }

 private:
  const SetSystem& graph_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> target_;
  std::vector<Id> queue_;
  std::size_t stamp_ = 0;
};

}  // namespace

bool is_neighborhood_system(const SetSystem& graph) {
  if (graph.num_elements() != graph.num_sets()) return false;
  for (Id v = 0; v < graph.num_elements(); ++v) {
    const auto out = graph.members(v);
    const auto in = graph.sets_containing(v);
    if (!std::equal(out.begin(), out.end(), in.begin(), in.end())) return false;
    if (std::binary_search(out.begin(), out.end(), v)) return false;
  }
  return true;
}

Cover build_cover(const SetSystem& graph, std::span<const Id> sequence) {
  if (!is_neighborhood_system(graph)) {
    throw std::invalid_argument("build_cover: input is not a graph neighborhood system");
  }
  const std::size_t n = graph.num_elements();
  const std::vector<std::size_t> position = inverse_permutation(n, sequence);

  std::vector<Id> anchor(n);
  for (Id u = 0; u < n; ++u) {
    Id best = u;
    for (Id w : graph.members(u)) {
      if (position[w] < position[best]) best = w;
    }
    anchor[u] = best;
  }

  constexpr Id kNone = std::numeric_limits<Id>::max();
  std::vector<Id> cluster_of_anchor(n, kNone);
  Cover cover;
  for (Id u = 0; u < n; ++u) cluster_of_anchor[anchor[u]] = 0;
  // Clusters are numbered by increasing anchor id.
  for (Id w = 0; w < n; ++w) {
    if (cluster_of_anchor[w] == kNone) continue;
    cluster_of_anchor[w] = static_cast<Id>(cover.anchors.size());
    cover.anchors.push_back(w);
  }
  cover.clusters.resize(cover.anchors.size());
  cover.assignment.resize(n);
  std::vector<std::vector<Id>> anchored(cover.anchors.size());
  for (Id u = 0; u < n; ++u) {
    cover.assignment[u] = cluster_of_anchor[anchor[u]];
    anchored[cover.assignment[u]].push_back(u);
  }
  std::vector<bool> taken(n, false);
  for (std::size_t k = 0; k < cover.clusters.size(); ++k) {
    auto& cluster = cover.clusters[k];
    auto add = [&](Id x) {
      if (!taken[x]) {
        taken[x] = true;
        cluster.push_back(x);
      }
    };
    for (Id u : anchored[k]) {
      add(u);
      for (Id x : graph.members(u)) add(x);
    }
    for (Id x : cluster) taken[x] = false;
  }
  for (auto& cluster : cover.clusters) std::sort(cluster.begin(), cluster.end());
  return cover;
}

double cover_overlap_target(double c, std::size_t n) {
  const double lg = n <= 1 ? 0.0 : std::log2(static_cast<double>(n));
  return 1.0 + 12.0 * c * c * lg * lg;
}

CoverAudit audit_cover(const SetSystem& graph, const Cover& cover, double overlap_target) {
  const std::size_t n = graph.num_elements();
  if (cover.assignment.size() != n) {
    throw std::invalid_argument("audit_cover: assignment does not cover every vertex");
  }
  CoverAudit audit;
  audit.overlap_target = overlap_target;
  audit.coverage = true;

  // Coverage: bucket vertices by assigned cluster, mark each cluster once.
  std::vector<std::vector<Id>> assigned(cover.clusters.size());
  for (Id v = 0; v < n; ++v) {
    const Id k = cover.assignment[v];
    if (k >= cover.clusters.size()) {
      audit.coverage = false;
      continue;
    }
    assigned[k].push_back(v);
  }
  std::vector<bool> in_cluster(n, false);
  std::vector<std::size_t> memberships(n, 0);
  for (std::size_t k = 0; k < cover.clusters.size(); ++k) {
    const auto& cluster = cover.clusters[k];
    if (cluster.empty()) throw std::invalid_argument("audit_cover: empty cluster");
    for (Id x : cluster) {
      if (x >= n) throw std::invalid_argument("audit_cover: cluster vertex out of range");
      if (!in_cluster[x]) ++memberships[x];
      in_cluster[x] = true;
    }
    for (Id v : assigned[k]) {
      if (!in_cluster[v]) audit.coverage = false;
      for (Id x : graph.members(v)) {
        if (!in_cluster[x]) audit.coverage = false;
      }
    }
    for (Id x : cluster) in_cluster[x] = false;
  }
  for (std::size_t m : memberships) audit.overlap = std::max(audit.overlap, m);

  BoundedBfs bfs(graph);
  for (std::size_t k = 0; k < cover.clusters.size(); ++k) {
    const auto& cluster = cover.clusters[k];
    std::size_t diameter = 0;
    if (cluster.size() <= kExactDiameterLimit) {
      for (Id s : cluster) {
        const std::size_t far = bfs.farthest(s, cluster);
        if (far == kUnreached) {
          audit.connected = false;
          break;
        }
        diameter = std::max(diameter, far);
      }
    } else {
      const Id center = k < cover.anchors.size() ? cover.anchors[k] : cluster.front();
      const std::size_t far = bfs.farthest(center, cluster);
      if (far == kUnreached) {
        audit.connected = false;
      } else {
        diameter = 2 * far;
        audit.diameter_exact = false;
      }
    }
    audit.max_weak_diameter = std::max(audit.max_weak_diameter, diameter);
  }
  return audit;
}

}  // namespace welzl
