#include "poqrw/limits.hpp"

#include <cmath>
#include <numbers>

#include "poqrw/spectral.hpp"

namespace poqrw {
namespace {

constexpr double kDegenerateGz = 1e-10;
constexpr double kMaxImagSigma2 = 1e-6;

void require_decoherent(const WalkSpec& spec) {
  require_valid(spec);
  if (spec.p <= 0) {
    throw DegeneracyError(
        "p = 0 gives a coherent walk: the eigenvalue condition fails and the walk is ballistic, "
        "not diffusive");
  }
}

class DetFunction {
 public:
  DetFunction(const WalkSpec& spec, double k) : spec_(spec), k_(k) {}

  cplx operator()(cplx z, double nu) const {
    const CMatrix& l = at(nu);
    return det(CMatrix(CMatrix::Identity(l.rows(), l.cols()) - z * l));
  }

  const CMatrix& at(double nu) const {
    if (!cached_ || nu != cached_nu_) {
      cached_l_ = superop_matrix(spec_, k_, nu, Basis::standard).m;
      cached_nu_ = nu;
      cached_ = true;
    }
    return cached_l_;
  }

 private:
  const WalkSpec& spec_;
  double k_;
  mutable bool cached_ = false;
  mutable double cached_nu_ = 0;
  mutable CMatrix cached_l_;
};

struct Partials {
  cplx g_z, g_nu, g_zz, g_znu, g_nunu;
};

Partials central_partials(const DetFunction& g, double h) {
  const cplx z0(1, 0);
  const cplx g00 = g(z0, 0);
  const cplx gzp = g(z0 + h, 0), gzm = g(z0 - h, 0);
  const cplx gnp = g(z0, h), gnm = g(z0, -h);
  const cplx gpp = g(z0 + h, h), gpm = g(z0 + h, -h);
  const cplx gmp = g(z0 - h, h), gmm = g(z0 - h, -h);
  Partials d;
  d.g_z = (gzp - gzm) / (2 * h);
  d.g_nu = (gnp - gnm) / (2 * h);
  d.g_zz = (gzp - 2.0 * g00 + gzm) / (h * h);
  d.g_nunu = (gnp - 2.0 * g00 + gnm) / (h * h);
  d.g_znu = (gpp - gpm - gmp + gmm) / (4 * h * h);
  return d;
}

cplx richardson(cplx coarse, cplx fine) { return (4.0 * fine - coarse) / 3.0; }

}  // namespace

GDerivatives g_derivs(const WalkSpec& spec, double k, const DerivativeOptions& opts) {
  require_decoherent(spec);
  if (!(opts.step > 0)) throw ArgumentError("g_derivs: step must be positive");
  const DetFunction g(spec, k);

  Partials d = central_partials(g, opts.step);
  if (opts.richardson) {
    const Partials f = central_partials(g, opts.step / 2);
    d.g_z = richardson(d.g_z, f.g_z);
    d.g_nu = richardson(d.g_nu, f.g_nu);
    d.g_zz = richardson(d.g_zz, f.g_zz);
    d.g_znu = richardson(d.g_znu, f.g_znu);
    d.g_nunu = richardson(d.g_nunu, f.g_nunu);
  }

  GDerivatives out{g(1.0, 0), d.g_z, d.g_nu, d.g_zz, d.g_znu, d.g_nunu, {}};
  const CMatrix lg = superop_matrix(spec, k, 0.0, Basis::gellmann).m;
  const Eigen::Index m = lg.rows() - 1;
  out.g_z_block = -det(CMatrix(CMatrix::Identity(m, m) - lg.bottomRightCorner(m, m)));

  if (std::abs(out.g_z_block) <= kDegenerateGz || std::abs(out.g_z) <= kDegenerateGz) {
    throw DegeneracyError("g_z(1, 0) vanishes at k = " + std::to_string(k) +
                          ": eigenvalue 1 of L_kk is not simple (eigenvalue condition fails)");
  }
  return out;
}

Z0Derivatives z0_derivatives(const WalkSpec& spec, double k, const DerivativeOptions& opts) {
  const auto d = g_derivs(spec, k, opts);
  Z0Derivatives z;
  z.first = -d.g_nu / d.g_z;
  z.second = -(d.g_nunu + 2.0 * d.g_znu * z.first + d.g_zz * z.first * z.first) / d.g_z;
  return z;
}

cplx track_root(const WalkSpec& spec, double k, double nu, double* residual) {
  constexpr int kMaxIter = 100;
  constexpr double kMaxStep = 0.1;
  const CMatrix l = superop_matrix(spec, k, nu, Basis::standard).m;
  const CMatrix id = CMatrix::Identity(l.rows(), l.cols());
  cplx z(1, 0);
  for (int it = 0; it < kMaxIter; ++it) {
    // f(z) = det(I - zL), f'(z) / f(z) = -tr((I - zL)^{-1} L)
    const auto lu = CMatrix(id - z * l).partialPivLu();
    const cplx tr = lu.solve(l).trace();
    if (!std::isfinite(tr.real()) || !std::isfinite(tr.imag()) || std::abs(tr) > 1e300) {
      // I - zL is numerically singular: z is a root.
      if (residual) *residual = std::abs(lu.determinant());
      return z;
    }
    cplx step = -1.0 / tr;  // Newton step is f / f'
    if (std::abs(step) > kMaxStep) step *= kMaxStep / std::abs(step);
    z -= step;
    if (std::abs(step) <= 1e-15 * std::abs(z)) {
      if (residual) *residual = std::abs(det(CMatrix(id - z * l)));
      return z;
    }
  }
  throw NumericError("track_root: Newton did not converge in 100 iterations at nu = " +
                     std::to_string(nu));
}

Z0Derivatives root_track_oracle(const WalkSpec& spec, double k, double h) {
  require_decoherent(spec);
  if (!(h > 0)) throw ArgumentError("root_track_oracle: step must be positive");
  const cplx zm2 = track_root(spec, k, -2 * h);
  const cplx zm1 = track_root(spec, k, -h);
  const cplx z0 = track_root(spec, k, 0);
  const cplx zp1 = track_root(spec, k, h);
  const cplx zp2 = track_root(spec, k, 2 * h);
  Z0Derivatives d;
  d.first = (zm2 - 8.0 * zm1 + 8.0 * zp1 - zp2) / (12 * h);
  d.second = (-zm2 + 16.0 * zm1 - 30.0 * z0 + 16.0 * zp1 - zp2) / (12 * h * h);
  return d;
}

namespace {

double project_sigma2(cplx raw, double k) {
  if (std::abs(raw.imag()) > kMaxImagSigma2) {
    throw NumericError("sigma2: imaginary residue " + std::to_string(raw.imag()) + " at k = " +
                       std::to_string(k));
  }
  return raw.real();
}

}  // namespace

LimitReport limit_report(const WalkSpec& spec, double k, const DerivativeOptions& opts) {
  const auto z = z0_derivatives(spec, k, opts);
  const auto o = root_track_oracle(spec, k);
  LimitReport r;
  r.k = k;
  r.z0_prime = z.first;
  r.z0_doubleprime = z.second;
  r.sigma2 = project_sigma2(z.second - z.first * z.first, k);
  r.method = LimitMethod::implicit_derivative;
  r.oracle_z0_prime = o.first;
  r.oracle_z0_doubleprime = o.second;
  r.oracle_sigma2 = project_sigma2(o.second - o.first * o.first, k);
  return r;
}

double sigma2(const WalkSpec& spec, double k, const DerivativeOptions& opts) {
  const auto z = z0_derivatives(spec, k, opts);
  return project_sigma2(z.second - z.first * z.first, k);
}

MixtureLaw mixture_law(const WalkSpec& spec, int kgrid_size) {
  if (kgrid_size < 1) throw ArgumentError("mixture_law: kgrid_size must be >= 1");
  MixtureLaw law;
  law.drift = double(spec.n1 - spec.n2()) / spec.n;
  for (int j = 0; j < kgrid_size; ++j) {
    const double k = 2.0 * std::numbers::pi * j / kgrid_size;
    law.kgrid.push_back(k);
    law.sigma2_of_k.push_back(sigma2(spec, k));
  }
  return law;
}

cplx mixture_charfn(const MixtureLaw& law, double nu) {
  double acc = 0;
  for (double s2 : law.sigma2_of_k) acc += std::exp(-0.5 * s2 * nu * nu);
  return {acc / double(law.sigma2_of_k.size()), 0.0};
}

cplx mixture_charfn(const WalkSpec& spec, int kgrid_size, double nu) {
  return mixture_charfn(mixture_law(spec, kgrid_size), nu);
}

DriftReport drift(const WalkSpec& spec) {
  require_valid(spec);
  DriftReport r;
  r.drift = double(spec.n1 - spec.n2()) / spec.n;
  if (spec.p > 0 && eig_condition(spec, 0.0).condition_holds) {
    r.z0_prime = z0_derivatives(spec, 0.0).first;
    r.cross_checked = true;
    if (std::abs(-r.z0_prime.imag() - r.drift) > 1e-6 || std::abs(r.z0_prime.real()) > 1e-6) {
      throw ConsistencyError("drift: -Im z0'(0) = " + std::to_string(-r.z0_prime.imag()) +
                             " disagrees with (n1 - n2)/n = " + std::to_string(r.drift));
    }
  }
  return r;
}

}  // namespace poqrw
