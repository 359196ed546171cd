#include "peersel/sampling.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace peersel {

namespace {
constexpr std::uint64_t kGroundTag = 0x67u;
constexpr std::uint64_t kPredictionTag = 0x70u;
}  // namespace

const char* to_string(PredictionModelKind kind) {
  switch (kind) {
    case PredictionModelKind::Clairvoyant: return "clairvoyant";
    case PredictionModelKind::Random: return "random";
    case PredictionModelKind::Divided: return "divided";
    case PredictionModelKind::Deciles: return "deciles";
  }
  return "?";
}

PredictionModelKind prediction_model_from_string(const std::string& name) {
  if (name == "clairvoyant") return PredictionModelKind::Clairvoyant;
  if (name == "random") return PredictionModelKind::Random;
  if (name == "divided") return PredictionModelKind::Divided;
  if (name == "deciles") return PredictionModelKind::Deciles;
  throw std::invalid_argument("unknown prediction model: " + name);
}

double dispersion_for(PredictionModelKind kind, AgentId i, int n) {
  switch (kind) {
    case PredictionModelKind::Clairvoyant:
      return 0.0;
    case PredictionModelKind::Random:
      return 1.0;
    case PredictionModelKind::Divided:
      return (2 * i < n) ? 0.0 : 1.0;
    case PredictionModelKind::Deciles: {
      const int decile = static_cast<int>((static_cast<long long>(i) - 1) * 10 / n) + 1;
      return decile / 10.0;
    }
  }
  throw std::invalid_argument("dispersion_for: bad model");
}

Profile generate_ground_profiles(int n, double phi, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("ground profiles: need n >= 2");
  std::vector<AgentId> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 1);

  Profile profile(n);
  for (AgentId i = 1; i <= n; ++i) {
    Rng rng(derive_seed(seed, kGroundTag, static_cast<std::uint64_t>(i)));
    std::vector<AgentId> order = mallows_sample({identity, phi}, rng);
    std::erase(order, i);
    profile.set(i, Ranking(std::move(order)));
  }
  return profile;
}

PredictionSet generate_predictions(PredictionModelKind kind, const Profile& profile,
                                   std::uint64_t seed, const ReviewAssignment* needed) {
  const int n = profile.n();
  PredictionSet predictions;
  predictions.reserve(static_cast<std::size_t>(n));

  for (AgentId i = 1; i <= n; ++i) {
    PredictedProfile view(i);
    view.set(i, profile.of(i));  // own ranking is known exactly

    std::set<AgentId> reviewers;
    if (needed != nullptr) {
      for (AgentId proposal : needed->reviews(i)) {
        for (AgentId s : needed->board(proposal)) reviewers.insert(s);
      }
      reviewers.erase(i);
    } else {
      for (AgentId s = 1; s <= n; ++s) {
        if (s != i) reviewers.insert(s);
      }
    }

    const double phi_star = dispersion_for(kind, i, n);
    for (AgentId s : reviewers) {
      Rng rng(derive_seed(seed, kPredictionTag, static_cast<std::uint64_t>(i),
                          static_cast<std::uint64_t>(s)));
      view.set(s, mallows_ranking(profile.of(s), phi_star, rng));
    }
    predictions.push_back(std::move(view));
  }
  return predictions;
}

}  // namespace peersel
