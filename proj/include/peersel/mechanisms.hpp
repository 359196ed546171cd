#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "peersel/types.hpp"

namespace peersel {

/// Outcome of a selection mechanism. `points` carries the aggregation the
/// mechanism used (nomination points, approval counts); `target` is the
/// intended winner count, which the realized set may miss.
struct SelectionResult {
  std::vector<AgentId> winners;  // ascending
  std::map<AgentId, double> points;
  int target = 0;
  std::vector<AgentId> flagged;  // retained without a score record (threshold filter)

  bool contains(AgentId i) const;
};

/// Quota the pipeline uses to binarize reviews for scoring: the nomination
/// share k*m/n, clamped to at least one approval per reviewer so beliefs
/// stay informative at small m.
double rbts_quota(int n, int k, int m);

/// PeerNomination: each reviewer gives one point to their top floor(k*m/n)
/// proposals and the fractional remainder to the next one; winners are the
/// proposals collecting at least m/2 points. Point arithmetic is exact
/// (integer units of 1/n), so the m/2 boundary is never lost to rounding.
/// Deterministic; the seed parameter only mirrors the common mechanism
/// signature.
SelectionResult peer_nomination(const Profile& profile, const ReviewAssignment& assignment,
                                int k, std::uint64_t seed = 0);

/// Partition baseline: agents sit in equal contiguous clusters and review
/// only other clusters; each cluster gets k/clusters slots (remainders
/// round-robin by cluster index) filled by external approval count, ties to
/// the lowest id.
SelectionResult partition_select(const Profile& profile, const ReviewAssignment& assignment,
                                 int k, int clusters, std::uint64_t seed);

/// Same rule on pre-binarized reviews.
SelectionResult partition_select_from_approvals(const ApprovalProfile& x,
                                                const ReviewAssignment& assignment, int k,
                                                int clusters);

}  // namespace peersel
