#include "poqrw/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "poqrw/limits.hpp"

namespace poqrw {
namespace {

using Index = Eigen::Index;
using StridedMap = Eigen::Map<CMatrix, 0, Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>>;

// View of the entries ((x, r), (x', c)) of a full state for fixed coin indices
// (r, c), indexed by window positions (x + R, x' + R).
StridedMap coin_slice(CMatrix& m, int n, int r, int c) {
  const Index positions = m.rows() / n;
  return StridedMap(m.data() + r + c * m.rows(), positions, positions,
                    Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>(m.rows() * n, n));
}

int shift_of(int coin, int n1) { return coin < n1 ? 1 : -1; }

}  // namespace

DensityState::DensityState(int n, int radius, Storage storage)
    : n_(n), radius_(radius), storage_(storage) {
  if (radius < 0) throw ArgumentError("DensityState: radius must be >= 0");
  const Index positions = 2 * radius + 1;
  if (storage == Storage::full) {
    full_ = CMatrix::Zero(positions * n, positions * n);
  } else {
    diag_.assign(static_cast<std::size_t>(positions), CMatrix::Zero(n, n));
  }
}

CMatrix DensityState::block(int x, int xp) const {
  if (std::abs(x) > radius_ || std::abs(xp) > radius_) return CMatrix::Zero(n_, n_);
  if (storage_ == Storage::diagonal) {
    return x == xp ? diag_[static_cast<std::size_t>(x + radius_)] : CMatrix::Zero(n_, n_);
  }
  return full_.block((x + radius_) * n_, (xp + radius_) * n_, n_, n_);
}

void DensityState::set_block(int x, int xp, const CMatrix& value) {
  if (std::abs(x) > radius_ || std::abs(xp) > radius_) {
    throw SizeError("set_block: position outside the window");
  }
  if (storage_ == Storage::diagonal) {
    if (x != xp) throw ArgumentError("set_block: diagonal storage holds x = x' only");
    diag_[static_cast<std::size_t>(x + radius_)] = value;
  } else {
    full_.block((x + radius_) * n_, (xp + radius_) * n_, n_, n_) = value;
  }
}

cplx DensityState::trace() const {
  if (storage_ == Storage::full) return full_.trace();
  cplx tr = 0;
  for (const auto& b : diag_) tr += b.trace();
  return tr;
}

double DensityState::hermiticity_error() const {
  if (storage_ == Storage::full) return (full_ - full_.adjoint()).cwiseAbs().maxCoeff();
  double e = 0;
  for (const auto& b : diag_) e = std::max(e, (b - b.adjoint()).cwiseAbs().maxCoeff());
  return e;
}

double DensityState::min_diagonal_eigenvalue() const {
  double lo = 0;
  bool first = true;
  for (int x = -radius_; x <= radius_; ++x) {
    const CMatrix b = block(x, x);
    const CMatrix h = (b + b.adjoint()) / 2.0;
    const double e = Eigen::SelfAdjointEigenSolver<CMatrix>(h, Eigen::EigenvaluesOnly)
                         .eigenvalues()
                         .minCoeff();
    lo = first ? e : std::min(lo, e);
    first = false;
  }
  return lo;
}

double DensityState::max_offdiagonal() const {
  if (storage_ == Storage::diagonal) return 0;
  double worst = 0;
  for (int x = -radius_; x <= radius_; ++x)
    for (int xp = -radius_; xp <= radius_; ++xp)
      if (x != xp) worst = std::max(worst, block(x, xp).cwiseAbs().maxCoeff());
  return worst;
}

DensityState init_state(const WalkSpec& spec, int radius, Storage storage) {
  require_valid(spec);
  DensityState s(spec.n, radius, storage);
  s.set_block(0, 0, spec.phi0 * spec.phi0.adjoint());
  return s;
}

DensityState step(const DensityState& state, const WalkSpec& spec) {
  require_valid(spec);
  if (spec.n != state.n()) throw DimensionError("step: coin dimension mismatch");
  if (state.t() + 1 > state.radius()) {
    throw SizeError("step: support would reach |x| = " + std::to_string(state.t() + 1) +
                    " beyond radius " + std::to_string(state.radius()) +
                    "; construct the state with a larger radius");
  }
  if (state.storage() == Storage::diagonal && spec.p != 1.0) {
    throw ArgumentError("step: diagonal storage is exact only for p = 1");
  }

  const int n = spec.n;
  const int n1 = spec.n1;
  const int radius = state.radius();
  const int reach = state.t();  // current support is |x| <= reach
  const CMatrix& u = spec.unitary;
  const CMatrix u_adj = u.adjoint();

  // rho'[(x,r),(x',c)] = w(r,c) * (U rho U^+)_{x - s_r, x' - s_c}[r, c], with
  // w = 1 when r and c are in the same block and q otherwise.
  DensityState next(n, radius, state.storage());
  next.t_ = state.t() + 1;

  if (state.storage() == Storage::diagonal) {
    for (int x = -reach; x <= reach; ++x) {
      const CMatrix w = u * state.diag_[static_cast<std::size_t>(x + radius)] * u_adj;
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          if ((r < n1) != (c < n1)) continue;
          next.diag_[static_cast<std::size_t>(x + shift_of(r, n1) + radius)](r, c) += w(r, c);
        }
      }
    }
    return next;
  }

  const Index lo = radius - reach;       // first live position index
  const Index live = 2 * reach + 1;      // live positions
  CMatrix w = state.full_;
  for (Index i = lo; i < lo + live; ++i) {
    w.block(i * n, lo * n, n, live * n) = u * state.full_.block(i * n, lo * n, n, live * n);
  }
  for (Index j = lo; j < lo + live; ++j) {
    w.block(lo * n, j * n, live * n, n) = w.block(lo * n, j * n, live * n, n) * u_adj;
  }

  const double q = spec.q();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double weight = (r < n1) == (c < n1) ? 1.0 : q;
      const int sr = shift_of(r, n1);
      const int sc = shift_of(c, n1);
      auto src = coin_slice(w, n, r, c);
      auto dst = coin_slice(next.full_, n, r, c);
      dst.block(lo + sr, lo + sc, live, live) = weight * src.block(lo, lo, live, live);
    }
  }
  return next;
}

DensityState evolve(const WalkSpec& spec, int t, Storage storage) {
  if (t < 0) throw ArgumentError("evolve: t must be >= 0");
  DensityState s = init_state(spec, t, storage);
  for (int i = 0; i < t; ++i) s = step(s, spec);
  return s;
}

double Distribution::total() const {
  double s = 0;
  for (double p : probs) s += p;
  return s;
}

Distribution distribution(const DensityState& state) {
  Distribution d;
  d.t = state.t();
  d.min_x = -state.radius();
  d.probs.reserve(static_cast<std::size_t>(2 * state.radius() + 1));
  for (int x = -state.radius(); x <= state.radius(); ++x) {
    d.probs.push_back(state.block(x, x).trace().real());
  }
  return d;
}

Moments moments(const Distribution& dist) {
  double total = 0, first = 0;
  for (std::size_t i = 0; i < dist.probs.size(); ++i) {
    const double x = dist.min_x + static_cast<double>(i);
    total += dist.probs[i];
    first += x * dist.probs[i];
  }
  Moments m;
  m.mean = first / total;
  double second = 0;
  for (std::size_t i = 0; i < dist.probs.size(); ++i) {
    const double dx = dist.min_x + static_cast<double>(i) - m.mean;
    second += dx * dx * dist.probs[i];
  }
  m.variance = second / total;
  return m;
}

cplx position_charfn(const Distribution& dist, double nu) {
  cplx acc = 0;
  for (std::size_t i = 0; i < dist.probs.size(); ++i) {
    acc += std::polar(dist.probs[i], nu * (dist.min_x + static_cast<double>(i)));
  }
  return acc;
}

cplx fourier_charfn(const WalkSpec& spec, int t, double nu, int kgrid_size) {
  require_valid(spec);
  if (kgrid_size < 2) throw ArgumentError("fourier_charfn: kgrid_size must be >= 2");
  if (t < 0) throw ArgumentError("fourier_charfn: t must be >= 0");
  const int n = spec.n;
  const CVector rho0 = rowvec(CMatrix(spec.phi0 * spec.phi0.adjoint()));
  cplx acc = 0;
  for (int j = 0; j < kgrid_size; ++j) {
    const double k = 2.0 * std::numbers::pi * j / kgrid_size;
    const CMatrix l = superop_matrix(spec, k, nu, Basis::standard).m;
    CVector v = rho0;
    for (int s = 0; s < t; ++s) v = l * v;
    for (int i = 0; i < n; ++i) acc += v(i * n + i);
  }
  return acc / double(kgrid_size);
}

CltReport clt_check(const WalkSpec& spec, int t, const std::vector<double>& nu_grid,
                    int kgrid_size, int mixture_kgrid) {
  if (t < 1) throw ArgumentError("clt_check: t must be >= 1");
  const int grid = std::max(kgrid_size, 2 * t + 2);
  const auto law = mixture_law(spec, mixture_kgrid);
  const cplx z0p = z0_derivatives(spec, 0.0).first;
  const double root_t = std::sqrt(double(t));

  CltReport r;
  r.t = t;
  for (double nu : nu_grid) {
    const cplx phat = fourier_charfn(spec, t, nu / root_t, grid);
    const cplx scaled = phat * std::exp(z0p * nu * root_t);
    const cplx limit = mixture_charfn(law, nu);
    r.nu.push_back(nu);
    r.rescaled.push_back(scaled);
    r.mixture.push_back(limit);
    r.max_deviation = std::max(r.max_deviation, std::abs(scaled - limit));
  }
  return r;
}

}  // namespace poqrw
