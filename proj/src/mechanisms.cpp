#include "peersel/mechanisms.hpp"

#include <algorithm>
#include <stdexcept>

#include "peersel/approvals.hpp"
#include "peersel/assignment.hpp"

namespace peersel {

bool SelectionResult::contains(AgentId i) const {
  return std::binary_search(winners.begin(), winners.end(), i);
}

double rbts_quota(int n, int k, int m) {
  return std::max(1.0, static_cast<double>(k) * m / n);
}

SelectionResult peer_nomination(const Profile& profile, const ReviewAssignment& assignment,
                                int k, std::uint64_t /*seed*/) {
  const int n = assignment.n();
  const int m = assignment.m();
  if (k <= 0 || k >= n) {
    throw std::invalid_argument("peer_nomination: k must satisfy 0 < k < n");
  }

  // quota = k*m/n points per reviewer, tracked in units of 1/n
  const long long full = static_cast<long long>(k) * m / n;
  const long long frac_units = static_cast<long long>(k) * m % n;

  std::vector<long long> units(static_cast<std::size_t>(n) + 1, 0);
  for (AgentId j = 1; j <= n; ++j) {
    const Ranking& ranking = profile.of(j);
    const auto bundle = assignment.reviews(j);
    for (AgentId i : bundle) {
      const int r = local_rank(ranking, bundle, i);
      if (r <= full) {
        units[i] += n;
      } else if (r == full + 1) {
        units[i] += frac_units;
      }
    }
  }

  SelectionResult result;
  result.target = k;
  for (AgentId i = 1; i <= n; ++i) {
    result.points[i] = static_cast<double>(units[i]) / n;
    if (2 * units[i] >= static_cast<long long>(m) * n) {
      result.winners.push_back(i);
    }
  }
  return result;
}

SelectionResult partition_select_from_approvals(const ApprovalProfile& x,
                                                const ReviewAssignment& assignment, int k,
                                                int clusters) {
  const int n = assignment.n();
  if (k <= 0 || k >= n) throw std::invalid_argument("partition: k must satisfy 0 < k < n");
  if (clusters < 2 || n % clusters != 0) {
    throw std::invalid_argument("partition: cluster structure incompatible with n");
  }
  const int size = n / clusters;
  for (AgentId j = 1; j <= n; ++j) {
    for (AgentId i : assignment.reviews(j)) {
      if (cluster_of(i, n, clusters) == cluster_of(j, n, clusters)) {
        throw std::invalid_argument("partition: assignment lets an agent review its own cluster");
      }
    }
  }

  std::vector<int> score(static_cast<std::size_t>(n) + 1, 0);
  for (AgentId i = 1; i <= n; ++i) {
    for (AgentId j : assignment.board(i)) score[i] += x.x(i, j);
  }

  SelectionResult result;
  result.target = k;
  for (AgentId i = 1; i <= n; ++i) result.points[i] = score[i];

  for (int g = 0; g < clusters; ++g) {
    int slots = k / clusters + (g < k % clusters ? 1 : 0);
    if (slots > size) {
      throw std::invalid_argument("partition: cluster too small for its slot allocation");
    }
    std::vector<AgentId> members(static_cast<std::size_t>(size));
    for (int t = 0; t < size; ++t) members[t] = g * size + 1 + t;
    std::stable_sort(members.begin(), members.end(), [&](AgentId a, AgentId b) {
      if (score[a] != score[b]) return score[a] > score[b];
      return a < b;
    });
    for (int t = 0; t < slots; ++t) result.winners.push_back(members[t]);
  }
  std::sort(result.winners.begin(), result.winners.end());
  return result;
}

SelectionResult partition_select(const Profile& profile, const ReviewAssignment& assignment,
                                 int k, int clusters, std::uint64_t seed) {
  const ApprovalProfile x = binarize_approvals(
      profile, assignment, rbts_quota(assignment.n(), k, assignment.m()), seed);
  return partition_select_from_approvals(x, assignment, k, clusters);
}

}  // namespace peersel
