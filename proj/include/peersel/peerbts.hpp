#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "peersel/rbts.hpp"
#include "peersel/types.hpp"

namespace peersel {

/// Target count the quality mechanism runs with inside the hybrid: the
/// reduced k-d (default, leaves room for the lottery) or the full k.
enum class QuotaBasis { KMinusD, K };

const char* to_string(QuotaBasis basis);
QuotaBasis quota_basis_from_string(const std::string& name);

enum class Provenance { FromF, FromH, Both };

struct PeerBtsResult {
  SelectionResult quality;                   // S_f
  std::vector<AgentId> lottery_winners;      // S_h, ascending
  std::vector<AgentId> winners;              // S_f union S_h, ascending
  std::map<AgentId, Provenance> provenance;
  ScoreTable scores;                         // empty when d == 0 and m < 3
  std::vector<SubLottery> lotteries;
  std::vector<AgentId> bag;
};

/// The hybrid mechanism: PeerNomination selects S_f with target k-d, the
/// RBTS lottery draws d reward slots, winners are the union. Overlap and
/// NULL draws may leave fewer than k winners; that inexactness is the price
/// of keeping the two halves from interfering. d = 0 degenerates to
/// PeerNomination alone.
PeerBtsResult peerbts_select(const Profile& profile, const ApprovalProfile& x,
                             const BeliefProfile& y, const ReviewAssignment& assignment,
                             int k, int d, double eps, std::uint64_t seed,
                             QuotaBasis basis = QuotaBasis::KMinusD);

/// Hybrid selection for ingested review data, where only binary approvals
/// exist: the quality half counts each approval as a full nomination point
/// (threshold m/2), matching PeerNomination under an integer quota.
PeerBtsResult select_from_reviews(const ApprovalProfile& x, const BeliefProfile& y,
                                  const ReviewAssignment& assignment, int k, int d,
                                  double eps, std::uint64_t seed);

/// The deliberately broken combiner: top k-d of the quality ranking topped
/// up with the best d of the reward ranking that are not already selected.
/// Exact, but manipulable: promoting an agent in one ranking can knock them
/// out of the other's top-up. Kept as a counterexample and audit target.
std::vector<AgentId> naive_topup_select(const Ranking& f_ranking, const Ranking& h_ranking,
                                        int k, int d);

}  // namespace peersel
