#include "peersel/assignment.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "peersel/rng.hpp"

namespace peersel {

namespace {

// Uniform cyclic permutation (single n-cycle) via Sattolo's algorithm.
// next[i] is the successor of agent i on the cycle.
std::vector<AgentId> random_cycle(int n, Rng& rng) {
  std::vector<AgentId> ring(static_cast<std::size_t>(n));
  std::iota(ring.begin(), ring.end(), 1);
  for (std::size_t i = ring.size() - 1; i > 0; --i) {
    std::swap(ring[i], ring[rng.below(i)]);  // j < i, never i itself
  }
  std::vector<AgentId> next(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t < n; ++t) next[ring[t]] = ring[(t + 1) % n];
  return next;
}

std::vector<std::vector<AgentId>> complete_reviews(int n) {
  std::vector<std::vector<AgentId>> out(static_cast<std::size_t>(n) + 1);
  for (AgentId i = 1; i <= n; ++i) {
    for (AgentId j = 1; j <= n; ++j) {
      if (j != i) out[i].push_back(j);
    }
  }
  return out;
}

}  // namespace

ReviewAssignment generate_assignment(int n, int m, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_assignment: need n >= 2");
  if (m < 1 || m >= n) {
    throw std::invalid_argument("generate_assignment: m must satisfy 1 <= m <= n-1");
  }
  if (m == n - 1) {
    // regularity forces the complete assignment
    return ReviewAssignment(n, m, complete_reviews(n));
  }

  Rng rng(derive_seed(seed, 0x41u));
  const int per_layer_cap = 500;
  for (;;) {  // full restart if the layered sampler corners itself
    std::vector<std::set<AgentId>> used(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<AgentId>> out(static_cast<std::size_t>(n) + 1);
    bool stuck = false;
    for (int layer = 0; layer < m && !stuck; ++layer) {
      int attempts = 0;
      for (;;) {
        if (++attempts > per_layer_cap) {
          stuck = true;
          break;
        }
        std::vector<AgentId> next = random_cycle(n, rng);
        bool clash = false;
        for (AgentId i = 1; i <= n && !clash; ++i) {
          clash = used[i].count(next[i]) > 0;
        }
        if (clash) continue;
        for (AgentId i = 1; i <= n; ++i) {
          used[i].insert(next[i]);
          out[i].push_back(next[i]);
        }
        break;
      }
    }
    if (!stuck) return ReviewAssignment(n, m, std::move(out));
  }
}

int cluster_of(AgentId i, int n, int clusters) {
  const int size = n / clusters;
  return (i - 1) / size;
}

ReviewAssignment generate_clustered_assignment(int n, int m, int clusters, std::uint64_t seed) {
  if (clusters < 2) throw std::invalid_argument("clustered assignment: need at least 2 clusters");
  if (n % clusters != 0) {
    throw std::invalid_argument("clustered assignment: n must be divisible by cluster count");
  }
  const int size = n / clusters;
  if (m < 1 || m > n - size) {
    throw std::invalid_argument("clustered assignment: m must satisfy 1 <= m <= n - n/clusters");
  }

  Rng rng(derive_seed(seed, 0x42u));
  const int per_layer_cap = 500;
  for (;;) {
    std::vector<std::set<AgentId>> used(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<AgentId>> out(static_cast<std::size_t>(n) + 1);
    bool stuck = false;
    // Layer l sends cluster g onto cluster g + delta; each layer is a
    // permutation of N, so both degrees stay regular.
    for (int layer = 0; layer < m && !stuck; ++layer) {
      const int delta = 1 + layer % (clusters - 1);
      for (int g = 0; g < clusters && !stuck; ++g) {
        const int target = (g + delta) % clusters;
        int attempts = 0;
        for (;;) {
          if (++attempts > per_layer_cap) {
            stuck = true;
            break;
          }
          std::vector<AgentId> image(static_cast<std::size_t>(size));
          std::iota(image.begin(), image.end(), target * size + 1);
          rng.shuffle(image);
          bool clash = false;
          for (int t = 0; t < size && !clash; ++t) {
            clash = used[g * size + 1 + t].count(image[t]) > 0;
          }
          if (clash) continue;
          for (int t = 0; t < size; ++t) {
            const AgentId reviewer = g * size + 1 + t;
            used[reviewer].insert(image[t]);
            out[reviewer].push_back(image[t]);
          }
          break;
        }
      }
    }
    if (!stuck) return ReviewAssignment(n, m, std::move(out));
  }
}

}  // namespace peersel
