#include "poqrw/mc.hpp"

#include <cmath>
#include <thread>

namespace poqrw {
namespace {

constexpr double kProbabilityTol = 1e-8;

// Rows < n1 move to x + 1, the others to x - 1. psi is n x (2t + 1).
CMatrix shifted(const CMatrix& phi, int n1) {
  CMatrix out = CMatrix::Zero(phi.rows(), phi.cols());
  const Eigen::Index cols = phi.cols() - 1;
  out.topRightCorner(n1, cols) = phi.topLeftCorner(n1, cols);
  out.bottomLeftCorner(phi.rows() - n1, cols) = phi.bottomRightCorner(phi.rows() - n1, cols);
  return out;
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

std::array<double, 3> outcome_probabilities(const WalkSpec& spec, const CMatrix& psi) {
  const CMatrix phi = spec.unitary * psi;
  const double right = phi.topRows(spec.n1).squaredNorm();
  const double left = phi.bottomRows(spec.n2()).squaredNorm();
  return {spec.q() * (right + left), spec.p * right, spec.p * left};
}

int sample_path(const WalkSpec& spec, int t, std::mt19937_64& rng) {
  require_valid(spec);
  if (t < 0) throw ArgumentError("sample_path: t must be >= 0");
  const int n = spec.n;
  const int n1 = spec.n1;
  CMatrix psi = CMatrix::Zero(n, 2 * t + 1);
  psi.col(t) = spec.phi0;

  for (int s = 0; s < t; ++s) {
    CMatrix phi = spec.unitary * psi;
    const double right = phi.topRows(n1).squaredNorm();
    const double left = phi.bottomRows(n - n1).squaredNorm();
    const double total = spec.q() * (right + left) + spec.p * (right + left);
    if (std::abs(total - 1.0) > kProbabilityTol) {
      throw NumericError("sample_path: outcome probabilities sum to " + std::to_string(total));
    }
    const double u = uniform01(rng);
    if (u < spec.q()) {
      // D0: coherent step, norm preserved.
    } else if (left <= 0 || (right > 0 && u < spec.q() + spec.p * right)) {
      phi.bottomRows(n - n1).setZero();
      phi /= std::sqrt(right);
    } else {
      phi.topRows(n1).setZero();
      phi /= std::sqrt(left);
    }
    psi = shifted(phi, n1);
  }

  const Eigen::VectorXd weights = psi.colwise().squaredNorm().transpose();
  const double u = uniform01(rng) * weights.sum();
  double acc = 0;
  Eigen::Index last = 0;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (weights(i) <= 0) continue;
    last = i;
    acc += weights(i);
    if (u < acc) return static_cast<int>(i) - t;
  }
  return static_cast<int>(last) - t;
}

EmpiricalDist sample_distribution(const WalkSpec& spec, const TrajectoryConfig& config) {
  require_valid(spec);
  if (config.samples < 1) throw ArgumentError("estimate: samples must be >= 1");
  if (config.t < 0) throw ArgumentError("estimate: t must be >= 0");

  // Trajectories are split into contiguous chunks; each trajectory owns its
  // substream, so the counts do not depend on the number of threads.
  const unsigned threads =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16u));
  const std::size_t width = static_cast<std::size_t>(2 * config.t + 1);
  std::vector<std::vector<std::int64_t>> partial(threads, std::vector<std::int64_t>(width, 0));
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          const std::int64_t begin = config.samples * w / threads;
          const std::int64_t end = config.samples * (w + 1) / threads;
          for (std::int64_t i = begin; i < end; ++i) {
            std::mt19937_64 rng(substream_seed(config.seed, static_cast<std::uint64_t>(i)));
            const int x = sample_path(spec, config.t, rng);
            ++partial[w][static_cast<std::size_t>(x + config.t)];
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  EmpiricalDist out;
  out.t = config.t;
  out.samples = config.samples;
  out.counts.assign(width, 0);
  for (const auto& part : partial)
    for (std::size_t i = 0; i < width; ++i) out.counts[i] += part[i];
  return out;
}

double tv_distance(const EmpiricalDist& empirical, const Distribution& exact) {
  const int lo = std::min(-empirical.t, exact.min_x);
  const int hi = std::max(empirical.t, exact.max_x());
  double tv = 0;
  for (int x = lo; x <= hi; ++x) tv += std::abs(empirical.freq(x) - exact(x));
  return 0.5 * tv;
}

Estimate estimate(const WalkSpec& spec, const TrajectoryConfig& config) {
  Estimate e;
  e.empirical = sample_distribution(spec, config);
  e.exact = distribution(evolve(spec, config.t, spec.p == 1.0 ? Storage::diagonal : Storage::full));
  e.tv_distance = tv_distance(e.empirical, e.exact);
  return e;
}

}  // namespace poqrw
