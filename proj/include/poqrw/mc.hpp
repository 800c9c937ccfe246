#pragma once

// Quantum-trajectory sampling of the walk. Each step measures the Kraus family
// D0 = sqrt(q) L, D1 = sqrt(p) L^1, D2 = sqrt(p) L^2 on a pure state; after t
// steps the position is measured.
//
// Random streams: trajectory i of a run with seed s draws from
// std::mt19937_64 seeded with substream_seed(s, i), where substream_seed is the
// SplitMix64 finalizer applied to s + (i + 1) * 0x9E3779B97F4A7C15. Uniform
// variates are (engine() >> 11) * 2^-53.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "poqrw/evolve.hpp"
#include "poqrw/model.hpp"

namespace poqrw {

struct TrajectoryConfig {
  std::int64_t samples = 1;
  int t = 0;
  std::uint64_t seed = 0;
};

struct EmpiricalDist {
  int t = 0;
  std::int64_t samples = 0;
  std::vector<std::int64_t> counts;  // counts[x + t]

  std::int64_t count(int x) const {
    return std::abs(x) > t ? 0 : counts[static_cast<std::size_t>(x + t)];
  }
  double freq(int x) const { return double(count(x)) / double(samples); }
};

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double uniform01(std::mt19937_64& rng);

/// One trajectory; returns the measured final position.
int sample_path(const WalkSpec& spec, int t, std::mt19937_64& rng);

/// The three outcome probabilities ||D_j psi||^2 for a coin-by-position
/// amplitude array psi (n x positions). Sums to 1 for normalized psi.
std::array<double, 3> outcome_probabilities(const WalkSpec& spec, const CMatrix& psi);

struct Estimate {
  EmpiricalDist empirical;
  Distribution exact;
  double tv_distance = 0;
};

/// Runs config.samples independent trajectories and compares against the exact
/// distribution from evolve().
Estimate estimate(const WalkSpec& spec, const TrajectoryConfig& config);

EmpiricalDist sample_distribution(const WalkSpec& spec, const TrajectoryConfig& config);

double tv_distance(const EmpiricalDist& empirical, const Distribution& exact);

}  // namespace poqrw
