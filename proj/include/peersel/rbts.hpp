#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "peersel/mechanisms.hpp"
#include "peersel/types.hpp"

namespace peersel {

using ScoringRule = double (*)(double prediction, double outcome);

/// Binary quadratic (Brier-style) rule: 1 - (p - outcome)^2, strictly
/// proper, range [0,1].
double quadratic_score(double p, double outcome);

/// Seeded random ordering of a proposal's board; positions feed the
/// reference/peer scheme (k = j+1 mod m, l = j+2 mod m). Fixed per
/// (instance, seed) so the pairing is not exploitable metadata.
struct BoardOrder {
  AgentId proposal = 0;
  std::vector<AgentId> order;
};

BoardOrder make_board_order(const ReviewAssignment& assignment, AgentId proposal,
                            std::uint64_t seed);

/// Robust Bayesian Truth Serum scores for one board, aligned with the board
/// order. Reviewer at position j is scored against reference k = j+1 mod m
/// and peer l = j+2 mod m: the information score compares the reference's
/// prediction shifted by delta = min(y_k, 1-y_k) toward the reviewer's own
/// report against the peer's report, and the prediction score compares the
/// reviewer's own prediction against the peer's report. Requires m >= 3.
std::vector<double> rbts_scores(AgentId proposal, const BoardOrder& order,
                                const ApprovalProfile& x, const BeliefProfile& y,
                                ScoringRule rule = quadratic_score);

/// Scores for every (proposal, reviewer) pair, each in [0, 2].
class ScoreTable {
 public:
  ScoreTable() = default;
  explicit ScoreTable(int n) : rows_(static_cast<std::size_t>(n) + 1) {}

  int n() const { return static_cast<int>(rows_.size()) - 1; }
  void set(AgentId proposal, AgentId reviewer, double score);
  double score(AgentId proposal, AgentId reviewer) const;
  bool has(AgentId proposal, AgentId reviewer) const;
  const std::vector<std::pair<AgentId, double>>& row(AgentId proposal) const;

  /// Mean score each agent earned as a reviewer; agents with no record are
  /// absent from the map.
  std::map<AgentId, double> per_agent_average() const;

 private:
  std::vector<std::vector<std::pair<AgentId, double>>> rows_;
};

ScoreTable score_all_boards(const ReviewAssignment& assignment, const ApprovalProfile& x,
                            const BeliefProfile& y, std::uint64_t seed,
                            ScoringRule rule = quadratic_score);

/// Per-proposal win distribution: each board member holds share
/// (score/2)^eps / m, and a NULL outcome absorbs the residual mass.
struct SubLottery {
  AgentId proposal = 0;
  std::vector<std::pair<AgentId, double>> share;
  double null_mass = 1.0;
};

SubLottery make_sub_lottery(AgentId proposal, const ScoreTable& scores,
                            const ReviewAssignment& assignment, double eps);
std::vector<SubLottery> make_sub_lotteries(const ScoreTable& scores,
                                           const ReviewAssignment& assignment, double eps);

/// Result of the pooled draw. `bag` holds one winner per proposal in
/// proposal order (kNullEntry for a NULL win); `selected` is the distinct
/// agents among the d drawn entries, ascending.
struct LotteryOutcome {
  std::vector<AgentId> bag;
  std::vector<AgentId> selected;
};

constexpr AgentId kNullEntry = 0;

/// Samples each sub-lottery, then draws d bag entries uniformly without
/// replacement. NULL entries and duplicates yield no extra winner, so the
/// selected set may be smaller than d.
LotteryOutcome rbts_lottery(const ScoreTable& scores, const ReviewAssignment& assignment,
                            int d, double eps, std::uint64_t seed);

/// Appendix-style deterministic filter: drops winners whose mean reviewer
/// score falls below the population mean of per-agent means. Winners with
/// no reviewing record are kept and flagged.
SelectionResult threshold_filter(const SelectionResult& selection, const ScoreTable& scores);

}  // namespace peersel
