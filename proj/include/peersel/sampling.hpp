#pragma once

#include <cstdint>
#include <string>

#include "peersel/mallows.hpp"
#include "peersel/types.hpp"

namespace peersel {

/// Population models for prediction skill. Each model fixes a per-agent
/// dispersion used to corrupt the true profile into that agent's view of it.
enum class PredictionModelKind { Clairvoyant, Random, Divided, Deciles };

const char* to_string(PredictionModelKind kind);
PredictionModelKind prediction_model_from_string(const std::string& name);

/// Dispersion phi*_i under `kind`: Clairvoyant 0, Random 1, Divided 0 for
/// i < n/2 and 1 otherwise, Deciles decile(i)/10.
double dispersion_for(PredictionModelKind kind, AgentId i, int n);

/// True profile: base ranking is the identity (agent 1 best); each agent's
/// ranking is an independent Mallows draw with the agent itself removed.
Profile generate_ground_profiles(int n, double phi, std::uint64_t seed);

/// Per-agent predicted profiles: the owner's own ranking is kept exactly,
/// every other reviewer's ranking is an independent Mallows draw around the
/// true one with dispersion phi*_owner. When `needed` is given, only the
/// reviewers the owner must predict for (the boards of its review bundle)
/// are filled; the draws are keyed per (owner, reviewer), so lazy and eager
/// generation agree.
PredictionSet generate_predictions(PredictionModelKind kind, const Profile& profile,
                                   std::uint64_t seed,
                                   const ReviewAssignment* needed = nullptr);

}  // namespace peersel
