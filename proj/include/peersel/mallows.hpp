#pragma once

#include <cstdint>
#include <vector>

#include "peersel/rng.hpp"
#include "peersel/types.hpp"

namespace peersel {

/// Mallows ranking distribution: P(r) proportional to phi^KT(base, r).
/// phi = 0 degenerates to the base ranking, phi = 1 is uniform.
struct MallowsParams {
  std::vector<AgentId> base;  // best to worst
  double phi = 0.0;
};

/// Number of discordant pairs between two orderings of the same set.
int kendall_tau(const std::vector<AgentId>& a, const std::vector<AgentId>& b);

/// Exact Mallows sampler (repeated insertion). Each item of the base order
/// is inserted so that displacing t already-placed items has weight phi^t.
std::vector<AgentId> mallows_sample(const MallowsParams& params, Rng& rng);

Ranking mallows_ranking(const Ranking& base, double phi, Rng& rng);

}  // namespace peersel
