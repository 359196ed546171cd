#pragma once

#include <cstdint>

#include "peersel/types.hpp"

namespace peersel {

/// Builds an m-regular review assignment by superposing m random cyclic
/// derangement layers, resampling a layer whenever it would duplicate an
/// existing review pair. Deterministic for fixed (n, m, seed).
ReviewAssignment generate_assignment(int n, int m, std::uint64_t seed);

/// Cluster of agent i when 1..n is split into `clusters` contiguous,
/// equal-sized blocks. 0-based.
int cluster_of(AgentId i, int n, int clusters);

/// m-regular assignment in which no agent reviews a member of its own
/// cluster (the shape the Partition mechanism requires). Requires
/// n % clusters == 0 and m <= n - n/clusters.
ReviewAssignment generate_clustered_assignment(int n, int m, int clusters, std::uint64_t seed);

}  // namespace peersel
