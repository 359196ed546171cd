#include "peersel/types.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace peersel {

Ranking::Ranking(std::vector<AgentId> best_to_worst) : order_(std::move(best_to_worst)) {
  AgentId max_id = 0;
  for (AgentId a : order_) {
    if (a < 1) throw std::invalid_argument("ranking: agent ids are 1-based");
    max_id = std::max(max_id, a);
  }
  rank_.assign(static_cast<std::size_t>(max_id) + 1, 0);
  for (std::size_t pos = 0; pos < order_.size(); ++pos) {
    AgentId a = order_[pos];
    if (rank_[a] != 0) {
      throw std::invalid_argument("ranking: agent " + std::to_string(a) + " repeated");
    }
    rank_[a] = static_cast<std::int32_t>(pos) + 1;
  }
}

int Ranking::rank_of(AgentId a) const {
  if (a < 1 || a >= static_cast<AgentId>(rank_.size()) || rank_[a] == 0) {
    throw std::out_of_range("ranking: agent " + std::to_string(a) + " not ranked");
  }
  return rank_[a];
}

bool Ranking::contains(AgentId a) const {
  return a >= 1 && a < static_cast<AgentId>(rank_.size()) && rank_[a] != 0;
}

AgentId Ranking::at_rank(int r) const {
  if (r < 1 || r > size()) throw std::out_of_range("ranking: rank out of range");
  return order_[static_cast<std::size_t>(r) - 1];
}

int local_rank(const Ranking& r, std::span<const AgentId> bundle, AgentId target) {
  const int target_rank = r.rank_of(target);
  int better = 0;
  for (AgentId b : bundle) {
    if (r.rank_of(b) < target_rank) ++better;
  }
  return better + 1;
}

const Ranking& Profile::of(AgentId i) const {
  if (i < 1 || i > n()) throw std::out_of_range("profile: agent id out of range");
  return rankings_[i];
}

void Profile::set(AgentId i, Ranking r) {
  if (i < 1 || i > n()) throw std::out_of_range("profile: agent id out of range");
  if (r.contains(i)) throw std::invalid_argument("profile: agent ranks itself");
  rankings_[i] = std::move(r);
}

ReviewAssignment::ReviewAssignment(int n, int m,
                                   std::vector<std::vector<AgentId>> reviews_by_agent)
    : n_(n), m_(m), out_(std::move(reviews_by_agent)) {
  if (n < 2) throw std::invalid_argument("assignment: need at least 2 agents");
  if (m < 1 || m > n - 1) throw std::invalid_argument("assignment: m must be in [1, n-1]");
  if (static_cast<int>(out_.size()) != n + 1) {
    throw std::invalid_argument("assignment: reviews vector must have n+1 entries (index 0 unused)");
  }
  in_.assign(static_cast<std::size_t>(n) + 1, {});
  for (AgentId i = 1; i <= n; ++i) {
    if (static_cast<int>(out_[i].size()) != m) {
      throw std::invalid_argument("assignment: |A(i)| != m for agent " + std::to_string(i));
    }
    std::vector<AgentId> sorted = out_[i];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t t = 0; t < sorted.size(); ++t) {
      AgentId j = sorted[t];
      if (j < 1 || j > n) throw std::invalid_argument("assignment: review target out of range");
      if (j == i) throw std::invalid_argument("assignment: agent reviews itself");
      if (t > 0 && sorted[t - 1] == j) {
        throw std::invalid_argument("assignment: duplicate review pair");
      }
    }
    out_[i] = std::move(sorted);
    for (AgentId j : out_[i]) in_[j].push_back(i);
  }
  for (AgentId j = 1; j <= n; ++j) {
    if (static_cast<int>(in_[j].size()) != m) {
      throw std::invalid_argument("assignment: board of proposal " + std::to_string(j) +
                                  " has size " + std::to_string(in_[j].size()) + ", expected m");
    }
    std::sort(in_[j].begin(), in_[j].end());
  }
}

std::span<const AgentId> ReviewAssignment::reviews(AgentId i) const {
  if (i < 1 || i > n_) throw std::out_of_range("assignment: agent id out of range");
  return out_[i];
}

std::span<const AgentId> ReviewAssignment::board(AgentId proposal) const {
  if (proposal < 1 || proposal > n_) throw std::out_of_range("assignment: proposal id out of range");
  return in_[proposal];
}

bool ReviewAssignment::assigned(AgentId reviewer, AgentId proposal) const {
  if (reviewer < 1 || reviewer > n_ || proposal < 1 || proposal > n_) return false;
  return std::binary_search(out_[reviewer].begin(), out_[reviewer].end(), proposal);
}

namespace {

template <typename V>
const std::pair<AgentId, V>* find_entry(const std::vector<std::pair<AgentId, V>>& row,
                                        AgentId reviewer) {
  for (const auto& e : row) {
    if (e.first == reviewer) return &e;
  }
  return nullptr;
}

}  // namespace

void ApprovalProfile::set(AgentId proposal, AgentId reviewer, bool approve) {
  auto& row = rows_.at(proposal);
  for (auto& e : row) {
    if (e.first == reviewer) {
      e.second = approve ? 1 : 0;
      return;
    }
  }
  row.emplace_back(reviewer, approve ? 1 : 0);
}

int ApprovalProfile::x(AgentId proposal, AgentId reviewer) const {
  const auto* e = find_entry(rows_.at(proposal), reviewer);
  if (!e) {
    throw std::out_of_range("approvals: no review of " + std::to_string(proposal) +
                            " by " + std::to_string(reviewer));
  }
  return e->second;
}

bool ApprovalProfile::has(AgentId proposal, AgentId reviewer) const {
  return proposal >= 1 && proposal <= n() && find_entry(rows_[proposal], reviewer) != nullptr;
}

const std::vector<std::pair<AgentId, std::uint8_t>>& ApprovalProfile::row(AgentId proposal) const {
  return rows_.at(proposal);
}

void BeliefProfile::set(AgentId proposal, AgentId reviewer, double value) {
  if (value < 0.0 || value > 1.0) {
    throw std::invalid_argument("beliefs: prediction outside [0,1]");
  }
  auto& row = rows_.at(proposal);
  for (auto& e : row) {
    if (e.first == reviewer) {
      e.second = value;
      return;
    }
  }
  row.emplace_back(reviewer, value);
}

double BeliefProfile::y(AgentId proposal, AgentId reviewer) const {
  const auto* e = find_entry(rows_.at(proposal), reviewer);
  if (!e) {
    throw std::out_of_range("beliefs: no prediction for " + std::to_string(proposal) +
                            " by " + std::to_string(reviewer));
  }
  return e->second;
}

bool BeliefProfile::has(AgentId proposal, AgentId reviewer) const {
  return proposal >= 1 && proposal <= n() && find_entry(rows_[proposal], reviewer) != nullptr;
}

const std::vector<std::pair<AgentId, double>>& BeliefProfile::row(AgentId proposal) const {
  return rows_.at(proposal);
}

const Ranking& PredictedProfile::of(AgentId reviewer) const {
  auto it = view_.find(reviewer);
  if (it == view_.end()) {
    throw std::out_of_range("predicted profile of agent " + std::to_string(owner_) +
                            ": no prediction for reviewer " + std::to_string(reviewer));
  }
  return it->second;
}

}  // namespace peersel
