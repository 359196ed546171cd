#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

namespace peersel {

/// Agents are identified by dense 1-based ids. In simulation the id doubles
/// as the ground-truth quality rank: agent 1 is the best.
using AgentId = int;

/// Strict total order over a set of agents, best first. rank_of() is
/// 1-based and bijective onto 1..size().
class Ranking {
 public:
  Ranking() = default;
  explicit Ranking(std::vector<AgentId> best_to_worst);

  int size() const { return static_cast<int>(order_.size()); }
  bool empty() const { return order_.empty(); }
  const std::vector<AgentId>& order() const { return order_; }

  int rank_of(AgentId a) const;
  bool contains(AgentId a) const;
  AgentId at_rank(int r) const;  // 1-based

  bool operator==(const Ranking& other) const { return order_ == other.order_; }

 private:
  std::vector<AgentId> order_;
  std::vector<std::int32_t> rank_;  // id -> 1-based rank, 0 = absent
};

/// Rank of `target` within `bundle` under ranking `r`, 1-based. All bundle
/// members must be ranked by `r`.
int local_rank(const Ranking& r, std::span<const AgentId> bundle, AgentId target);

/// One ranking per agent. An agent never appears in its own ranking.
class Profile {
 public:
  Profile() = default;
  explicit Profile(int n) : rankings_(static_cast<std::size_t>(n) + 1) {}

  int n() const { return static_cast<int>(rankings_.size()) - 1; }
  const Ranking& of(AgentId i) const;
  void set(AgentId i, Ranking r);

 private:
  std::vector<Ranking> rankings_;  // index 0 unused
};

/// m-regular review assignment: A(i) = the m proposals agent i reviews,
/// board(i) = the m reviewers of proposal i (the inverse relation).
class ReviewAssignment {
 public:
  ReviewAssignment(int n, int m, std::vector<std::vector<AgentId>> reviews_by_agent);

  int n() const { return n_; }
  int m() const { return m_; }
  std::span<const AgentId> reviews(AgentId i) const;  // A(i)
  std::span<const AgentId> board(AgentId proposal) const;  // A^{-1}(proposal)
  bool assigned(AgentId reviewer, AgentId proposal) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<AgentId>> out_;  // [agent] -> A(agent)
  std::vector<std::vector<AgentId>> in_;   // [proposal] -> board
};

/// Binary reviews x(proposal, reviewer), defined exactly on assignment pairs.
class ApprovalProfile {
 public:
  ApprovalProfile() = default;
  ApprovalProfile(int n, double quota)
      : quota_(quota), rows_(static_cast<std::size_t>(n) + 1) {}

  int n() const { return static_cast<int>(rows_.size()) - 1; }
  double quota() const { return quota_; }
  void set(AgentId proposal, AgentId reviewer, bool approve);
  int x(AgentId proposal, AgentId reviewer) const;
  bool has(AgentId proposal, AgentId reviewer) const;
  const std::vector<std::pair<AgentId, std::uint8_t>>& row(AgentId proposal) const;

 private:
  double quota_ = std::nan("");  // unknown for ingested data
  std::vector<std::vector<std::pair<AgentId, std::uint8_t>>> rows_;
};

/// Predicted approval rates y(proposal, reviewer) in [0,1], same shape as
/// the approval profile.
class BeliefProfile {
 public:
  BeliefProfile() = default;
  explicit BeliefProfile(int n) : rows_(static_cast<std::size_t>(n) + 1) {}

  int n() const { return static_cast<int>(rows_.size()) - 1; }
  void set(AgentId proposal, AgentId reviewer, double value);
  double y(AgentId proposal, AgentId reviewer) const;
  bool has(AgentId proposal, AgentId reviewer) const;
  const std::vector<std::pair<AgentId, double>>& row(AgentId proposal) const;

 private:
  std::vector<std::vector<std::pair<AgentId, double>>> rows_;
};

/// Agent's model of how every reviewer ranks. The owner's own ranking is
/// kept exactly; other entries may be filled lazily (only the reviewers the
/// owner actually needs to predict for).
class PredictedProfile {
 public:
  PredictedProfile() = default;
  explicit PredictedProfile(AgentId owner) : owner_(owner) {}

  AgentId owner() const { return owner_; }
  bool has(AgentId reviewer) const { return view_.count(reviewer) > 0; }
  const Ranking& of(AgentId reviewer) const;
  void set(AgentId reviewer, Ranking r) { view_[reviewer] = std::move(r); }

 private:
  AgentId owner_ = 0;
  std::unordered_map<AgentId, Ranking> view_;
};

using PredictionSet = std::vector<PredictedProfile>;  // index agent-1

}  // namespace peersel
