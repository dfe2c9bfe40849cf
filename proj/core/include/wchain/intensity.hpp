#pragma once

#include <complex>
#include <span>
#include <vector>

#include "wchain/geometry.hpp"
#include "wchain/state.hpp"

namespace wchain {

// <s+_i s-_j> for all atom pairs. Hermitian and positive semidefinite by
// construction (Gram matrix of the lowered states); diagonal entries are
// the excited-state populations in [0, 1].
class CorrelationMatrix {
 public:
  explicit CorrelationMatrix(const PureState& state);

  int n_atoms() const noexcept { return n_; }
  std::complex<double> at(int i, int j) const;  // 1-based

 private:
  int n_;
  std::vector<std::complex<double>> values_;  // row-major
};

// <s+_i s-_j> = <s-_i psi | s-_j psi>.
std::complex<double> correlation(const PureState& state, int i, int j);

// <s+_j>; vanishes identically for fixed-excitation states.
std::complex<double> dipole_expectation(const PureState& state, int atom);

// I(theta) = sum_ij <s+_i s-_j> e^{i(phi_i - phi_j)}, in units of a single
// excited atom's emission. Evaluated over the correlation route and
// verified against ||apply_detection(state)||^2; a discrepancy beyond
// 1e-10 (or an imaginary part beyond 1e-12) throws ConsistencyError.
double intensity(const PureState& state, const ChainGeometry& geom,
                 const DetectionDirection& dir);

// Correlation-route evaluation against a prebuilt matrix. No
// amplitude-route cross-check; grid evaluators spot-check separately.
double intensity_from_correlations(const CorrelationMatrix& corr, const ChainGeometry& geom,
                                   const DetectionDirection& dir);

// intensity() on a grid of angles. The correlation matrix is built once;
// the amplitude-route cross-check runs on a deterministic subset of
// samples (every sample for small grids).
std::vector<double> intensity_profile(const PureState& state, const ChainGeometry& geom,
                                      std::span<const double> thetas);

// Closed form for the symmetric state with n_excited excitations on N atoms:
//   ne(ne-1)/(N-1) + ne*ng/(N(N-1)) * sin^2(N phi/2) / sin^2(phi/2)
// with phi = kd sin(theta). The removable singularity at phi = 2 pi m is
// evaluated through the explicit N-term coherent sum (limit N^2).
// Requires N >= 2 and 1 <= n_excited <= N.
double w_intensity_closed(int n_excited, int n_atoms, const ChainGeometry& geom,
                          const DetectionDirection& dir);

// Peak intensity of the symmetric state: ne * (ng + 1).
double w_max_intensity(int n_excited, int n_ground);

// Ratio of the symmetric-state peak to the separable-state value: ng + 1.
double w_enhancement(int n_excited, int n_ground);

// Fringe visibility of the symmetric-state pattern:
//   1 / (1 + 2(ne - 1)/(N ng)),  requires 1 <= ne < N.
// Exactly 1 for ne = 1.
double w_visibility_closed(int n_excited, int n_atoms);

// Angular width of the principal fringe: 2 pi / (N kd).
double fringe_width(int n_atoms, const ChainGeometry& geom);

// Collective emission rate (N/2 + m)(N/2 - m + 1) of the symmetric
// angular-momentum state with projection m; N/2 + m must be an integer
// in [0, N].
double dicke_radiation_rate(int n_atoms, double m);

// Uniform correlation entries of the symmetric state: population ne/N on
// the diagonal, coherence ne*ng/(N(N-1)) off the diagonal. Requires N >= 2.
struct WCorrelationConstants {
  double population;
  double coherence;
};
WCorrelationConstants w_correlation_constants(int n_excited, int n_atoms);

// sum_ij <s+_i s-_j>; equals ne(ng + 1) for symmetric states and ne for
// separable ones.
double correlation_sum(const PureState& state);

// Reference form for uncorrelated atoms with prescribed populations
// p_i = <s+_i s-_i> and dipoles d_i = <s+_i>:
//   sum_i p_i + sum_{i != j} d_i conj(d_j) e^{i(phi_i - phi_j)}.
double coherent_drive_intensity(std::span<const double> populations,
                                std::span<const std::complex<double>> dipoles,
                                const ChainGeometry& geom, const DetectionDirection& dir);

}  // namespace wchain
