#include "peersel/rbts.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "peersel/rng.hpp"

namespace peersel {

namespace {
constexpr std::uint64_t kOrderTag = 0x6fu;
constexpr std::uint64_t kSubLotteryTag = 0x73u;
constexpr std::uint64_t kDrawTag = 0x64u;
}  // namespace

double quadratic_score(double p, double outcome) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("quadratic_score: prediction outside [0,1]");
  const double e = p - outcome;
  return 1.0 - e * e;
}

BoardOrder make_board_order(const ReviewAssignment& assignment, AgentId proposal,
                            std::uint64_t seed) {
  BoardOrder order;
  order.proposal = proposal;
  auto board = assignment.board(proposal);
  order.order.assign(board.begin(), board.end());
  Rng rng(derive_seed(seed, kOrderTag, static_cast<std::uint64_t>(proposal)));
  rng.shuffle(order.order);
  return order;
}

std::vector<double> rbts_scores(AgentId proposal, const BoardOrder& order,
                                const ApprovalProfile& x, const BeliefProfile& y,
                                ScoringRule rule) {
  const int m = static_cast<int>(order.order.size());
  if (m < 3) throw std::invalid_argument("rbts_scores: board size must be at least 3");

  std::vector<double> scores(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const AgentId reviewer = order.order[j];
    const AgentId reference = order.order[(j + 1) % m];
    const AgentId peer = order.order[(j + 2) % m];

    const double y_ref = y.y(proposal, reference);
    const double delta = std::min(y_ref, 1.0 - y_ref);
    const double shadow = x.x(proposal, reviewer) == 1 ? y_ref + delta : y_ref - delta;
    const double peer_report = x.x(proposal, peer);

    scores[j] = rule(shadow, peer_report) + rule(y.y(proposal, reviewer), peer_report);
  }
  return scores;
}

void ScoreTable::set(AgentId proposal, AgentId reviewer, double score) {
  auto& row = rows_.at(proposal);
  for (auto& e : row) {
    if (e.first == reviewer) {
      e.second = score;
      return;
    }
  }
  row.emplace_back(reviewer, score);
}

double ScoreTable::score(AgentId proposal, AgentId reviewer) const {
  for (const auto& e : rows_.at(proposal)) {
    if (e.first == reviewer) return e.second;
  }
  throw std::out_of_range("score table: no score for proposal " + std::to_string(proposal) +
                          ", reviewer " + std::to_string(reviewer));
}

bool ScoreTable::has(AgentId proposal, AgentId reviewer) const {
  if (proposal < 1 || proposal > n()) return false;
  for (const auto& e : rows_[proposal]) {
    if (e.first == reviewer) return true;
  }
  return false;
}

const std::vector<std::pair<AgentId, double>>& ScoreTable::row(AgentId proposal) const {
  return rows_.at(proposal);
}

std::map<AgentId, double> ScoreTable::per_agent_average() const {
  std::map<AgentId, std::pair<double, int>> acc;
  for (int proposal = 1; proposal <= n(); ++proposal) {
    for (const auto& [reviewer, score] : rows_[proposal]) {
      auto& a = acc[reviewer];
      a.first += score;
      a.second += 1;
    }
  }
  std::map<AgentId, double> avg;
  for (const auto& [agent, a] : acc) avg[agent] = a.first / a.second;
  return avg;
}

ScoreTable score_all_boards(const ReviewAssignment& assignment, const ApprovalProfile& x,
                            const BeliefProfile& y, std::uint64_t seed, ScoringRule rule) {
  ScoreTable table(assignment.n());
  for (AgentId proposal = 1; proposal <= assignment.n(); ++proposal) {
    const BoardOrder order = make_board_order(assignment, proposal, seed);
    const std::vector<double> scores = rbts_scores(proposal, order, x, y, rule);
    for (std::size_t j = 0; j < order.order.size(); ++j) {
      table.set(proposal, order.order[j], scores[j]);
    }
  }
  return table;
}

SubLottery make_sub_lottery(AgentId proposal, const ScoreTable& scores,
                            const ReviewAssignment& assignment, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("sub-lottery: eps must be positive");
  const int m = assignment.m();
  SubLottery lottery;
  lottery.proposal = proposal;
  double total = 0.0;
  for (AgentId reviewer : assignment.board(proposal)) {
    const double s = scores.score(proposal, reviewer);
    const double share = std::pow(s / 2.0, eps) / m;  // == 1/m exactly at s = 2
    lottery.share.emplace_back(reviewer, share);
    total += share;
  }
  lottery.null_mass = std::max(0.0, 1.0 - total);
  return lottery;
}

std::vector<SubLottery> make_sub_lotteries(const ScoreTable& scores,
                                           const ReviewAssignment& assignment, double eps) {
  std::vector<SubLottery> lotteries;
  lotteries.reserve(static_cast<std::size_t>(assignment.n()));
  for (AgentId proposal = 1; proposal <= assignment.n(); ++proposal) {
    lotteries.push_back(make_sub_lottery(proposal, scores, assignment, eps));
  }
  return lotteries;
}

LotteryOutcome rbts_lottery(const ScoreTable& scores, const ReviewAssignment& assignment,
                            int d, double eps, std::uint64_t seed) {
  const int n = assignment.n();
  if (d < 1 || d > n) throw std::invalid_argument("rbts_lottery: d must satisfy 1 <= d <= n");

  LotteryOutcome outcome;
  outcome.bag.reserve(static_cast<std::size_t>(n));
  for (AgentId proposal = 1; proposal <= n; ++proposal) {
    const SubLottery lottery = make_sub_lottery(proposal, scores, assignment, eps);
    Rng rng(derive_seed(seed, kSubLotteryTag, static_cast<std::uint64_t>(proposal)));
    const double u = rng.uniform();
    double acc = 0.0;
    AgentId winner = kNullEntry;  // residual mass falls to NULL
    for (const auto& [reviewer, share] : lottery.share) {
      acc += share;
      if (u < acc) {
        winner = reviewer;
        break;
      }
    }
    outcome.bag.push_back(winner);
  }

  // draw d bag entries without replacement
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(derive_seed(seed, kDrawTag));
  rng.shuffle(idx);
  for (int t = 0; t < d; ++t) {
    const AgentId entry = outcome.bag[idx[t]];
    if (entry != kNullEntry) outcome.selected.push_back(entry);
  }
  std::sort(outcome.selected.begin(), outcome.selected.end());
  outcome.selected.erase(std::unique(outcome.selected.begin(), outcome.selected.end()),
                         outcome.selected.end());
  return outcome;
}

SelectionResult threshold_filter(const SelectionResult& selection, const ScoreTable& scores) {
  const std::map<AgentId, double> averages = scores.per_agent_average();
  if (averages.empty()) throw std::invalid_argument("threshold_filter: empty score table");

  double t = 0.0;
  for (const auto& [agent, avg] : averages) t += avg;
  t /= static_cast<double>(averages.size());

  SelectionResult filtered;
  filtered.target = selection.target;
  filtered.points = selection.points;
  for (AgentId w : selection.winners) {
    auto it = averages.find(w);
    if (it == averages.end()) {
      filtered.winners.push_back(w);  // no reviewing record: keep, but flag
      filtered.flagged.push_back(w);
    } else if (it->second >= t) {
      filtered.winners.push_back(w);
    }
  }
  return filtered;
}

}  // namespace peersel
