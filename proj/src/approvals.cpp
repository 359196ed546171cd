#include "peersel/approvals.hpp"

#include <cmath>
#include <stdexcept>

#include "peersel/rng.hpp"

namespace peersel {

namespace {
constexpr std::uint64_t kBoundaryTag = 0x62u;
}

ApprovalProfile binarize_approvals(const Profile& profile, const ReviewAssignment& assignment,
                                   double q, std::uint64_t seed) {
  const int m = assignment.m();
  if (!(q > 0.0) || !(q < m)) {
    throw std::invalid_argument("binarize_approvals: quota must lie in (0, m)");
  }
  const int full = static_cast<int>(std::floor(q));
  const double frac = q - full;

  ApprovalProfile x(assignment.n(), q);
  for (AgentId j = 1; j <= assignment.n(); ++j) {
    const Ranking& ranking = profile.of(j);
    const auto bundle = assignment.reviews(j);
    for (AgentId i : bundle) {
      const int r = local_rank(ranking, bundle, i);
      bool approve = r <= full;
      if (!approve && frac > 0.0 && r == full + 1) {
        Rng coin(derive_seed(seed, kBoundaryTag, static_cast<std::uint64_t>(j),
                             static_cast<std::uint64_t>(i)));
        approve = coin.bernoulli(frac);
      }
      x.set(i, j, approve);
    }
  }
  return x;
}

BeliefProfile beliefs_from_predicted_profile(const PredictionSet& predictions,
                                             const ReviewAssignment& assignment, double q) {
  const int m = assignment.m();
  if (!(q > 0.0) || !(q < m)) {
    throw std::invalid_argument("beliefs: quota must lie in (0, m)");
  }
  const int full = static_cast<int>(std::floor(q));

  BeliefProfile y(assignment.n());
  for (AgentId i = 1; i <= assignment.n(); ++i) {
    const PredictedProfile& view = predictions.at(static_cast<std::size_t>(i) - 1);
    for (AgentId proposal : assignment.reviews(i)) {
      int approvals = 0;
      for (AgentId s : assignment.board(proposal)) {
        if (!view.has(s)) {
          throw std::invalid_argument("beliefs: agent " + std::to_string(i) +
                                      " lacks a predicted ranking for reviewer " +
                                      std::to_string(s));
        }
        const int r = local_rank(view.of(s), assignment.reviews(s), proposal);
        if (r <= full) ++approvals;
      }
      y.set(proposal, i, static_cast<double>(approvals) / m);
    }
  }
  return y;
}

}  // namespace peersel
