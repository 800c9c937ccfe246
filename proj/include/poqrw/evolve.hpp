#pragma once

// Exact finite-time dynamics of the walk on the lattice window [-R, R].

#include <cstdint>
#include <vector>

#include "poqrw/model.hpp"

namespace poqrw {

enum class Storage {
  full,      // every block rho_{x,x'}
  diagonal,  // blocks rho_{x,x} only; exact for p = 1 from a diagonal start
};

/// Density operator sum |x><x'| (x) rho_{x,x'} restricted to |x|, |x'| <= radius.
class DensityState {
 public:
  DensityState(int n, int radius, Storage storage);

  int n() const { return n_; }
  int radius() const { return radius_; }
  int t() const { return t_; }
  Storage storage() const { return storage_; }

  /// rho_{x,x'}; zero outside the window and, in diagonal storage, off the diagonal.
  CMatrix block(int x, int xp) const;
  void set_block(int x, int xp, const CMatrix& value);

  /// Sum over x of Tr rho_{x,x}.
  cplx trace() const;
  /// max |rho_{x',x} - rho_{x,x'}^dagger|.
  double hermiticity_error() const;
  /// Smallest eigenvalue over the diagonal blocks.
  double min_diagonal_eigenvalue() const;
  /// Largest entry modulus over blocks with x != x'.
  double max_offdiagonal() const;

  // Raw storage; full: (2R+1)n square matrix, diagonal: (2R+1) blocks.
  const CMatrix& full() const { return full_; }
  const std::vector<CMatrix>& diagonal() const { return diag_; }

 private:
  friend DensityState step(const DensityState&, const WalkSpec&);

  int n_;
  int radius_;
  int t_ = 0;
  Storage storage_;
  CMatrix full_;
  std::vector<CMatrix> diag_;
};

/// |0><0| (x) |phi0><phi0| at t = 0.
DensityState init_state(const WalkSpec& spec, int radius, Storage storage = Storage::full);

/// One application of M_p. Throws SizeError when the support would leave the
/// window and ArgumentError for diagonal storage with p < 1.
DensityState step(const DensityState& state, const WalkSpec& spec);

/// init_state followed by t steps with radius t.
DensityState evolve(const WalkSpec& spec, int t, Storage storage = Storage::full);

struct Distribution {
  int t = 0;
  int min_x = 0;
  std::vector<double> probs;  // probs[i] = p(min_x + i)

  int max_x() const { return min_x + static_cast<int>(probs.size()) - 1; }
  double operator()(int x) const {
    const int i = x - min_x;
    return i < 0 || i >= static_cast<int>(probs.size()) ? 0.0 : probs[static_cast<std::size_t>(i)];
  }
  double total() const;
};

/// p(x) = Tr rho_{x,x} over the window.
Distribution distribution(const DensityState& state);

struct Moments {
  double mean = 0;
  double variance = 0;
};

Moments moments(const Distribution& dist);

/// sum_x e^{i nu x} p(x).
cplx position_charfn(const Distribution& dist, double nu);

/// Uniform-grid mean over k of Tr(L_{k,k+nu}^t |phi0><phi0|). Exact for
/// kgrid_size >= 2t + 2.
cplx fourier_charfn(const WalkSpec& spec, int t, double nu, int kgrid_size);

struct CltReport {
  int t = 0;
  std::vector<double> nu;
  std::vector<cplx> rescaled;   // P(nu / sqrt t, t) exp(z0'(0) nu sqrt t)
  std::vector<cplx> mixture;    // limit characteristic function
  double max_deviation = 0;
};

/// Compares the finite-t characteristic function on the diffusive scale with
/// the Gaussian-mixture limit. kgrid_size drives the Fourier evolution and is
/// raised to 2t + 2 if smaller; mixture_kgrid drives the k-average of the limit.
CltReport clt_check(const WalkSpec& spec, int t, const std::vector<double>& nu_grid,
                    int kgrid_size, int mixture_kgrid = 64);

}  // namespace poqrw
