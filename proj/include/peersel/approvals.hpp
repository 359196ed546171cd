#pragma once

#include <cstdint>

#include "peersel/types.hpp"

namespace peersel {

/// Turns rankings into binary reviews under quota q in (0, m): a reviewer
/// approves the proposals ranked floor(q) or better within their bundle.
/// For non-integer q the proposal at rank floor(q)+1 is approved with
/// probability q - floor(q); the coin is keyed per (reviewer, proposal), so
/// improving a proposal's rank can only turn a 0 into a 1 under a fixed seed.
ApprovalProfile binarize_approvals(const Profile& profile, const ReviewAssignment& assignment,
                                   double q, std::uint64_t seed);

/// Belief of each reviewer about the approval rates of the proposals they
/// review: the fraction of the proposal's board the reviewer expects to
/// approve it, computed from the reviewer's predicted profile with the
/// deterministic quota floor(q).
BeliefProfile beliefs_from_predicted_profile(const PredictionSet& predictions,
                                             const ReviewAssignment& assignment, double q);

}  // namespace peersel
