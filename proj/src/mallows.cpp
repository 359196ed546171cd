#include "peersel/mallows.hpp"

#include <stdexcept>
#include <unordered_map>

namespace peersel {

int kendall_tau(const std::vector<AgentId>& a, const std::vector<AgentId>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("kendall_tau: size mismatch");
  std::unordered_map<AgentId, int> pos_b;
  pos_b.reserve(b.size());
  for (std::size_t t = 0; t < b.size(); ++t) pos_b[b[t]] = static_cast<int>(t);
  int discordant = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    auto pi = pos_b.find(a[i]);
    if (pi == pos_b.end()) throw std::invalid_argument("kendall_tau: domain mismatch");
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (pos_b.at(a[j]) < pi->second) ++discordant;
    }
  }
  return discordant;
}

std::vector<AgentId> mallows_sample(const MallowsParams& params, Rng& rng) {
  const double phi = params.phi;
  if (phi < 0.0 || phi > 1.0) throw std::invalid_argument("mallows: phi must be in [0,1]");

  std::vector<AgentId> out;
  out.reserve(params.base.size());
  std::vector<double> weight;  // weight[t] = phi^t, demand-grown
  weight.push_back(1.0);
  double total = 0.0;  // running sum of weights 0..i

  for (std::size_t i = 0; i < params.base.size(); ++i) {
    if (weight.size() <= i) weight.push_back(weight.back() * phi);
    total = (i == 0) ? 1.0 : total + weight[i];
    // t = number of already-placed items the new one displaces
    std::size_t t = i;
    if (phi > 0.0) {
      const double u = rng.uniform() * total;
      double acc = 0.0;
      for (t = 0; t < i; ++t) {
        acc += weight[t];
        if (u < acc) break;
      }
    } else {
      t = 0;  // phi = 0: never displace, reproduce the base order
    }
    out.insert(out.end() - static_cast<std::ptrdiff_t>(t), params.base[i]);
  }
  return out;
}

Ranking mallows_ranking(const Ranking& base, double phi, Rng& rng) {
  if (phi == 0.0) return base;
  return Ranking(mallows_sample({base.order(), phi}, rng));
}

}  // namespace peersel
