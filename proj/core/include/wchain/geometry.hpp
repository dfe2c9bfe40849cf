#pragma once

#include "wchain/state.hpp"

namespace wchain {

// Equidistant linear chain: N atoms with dimensionless spacing kd (optical
// phase per lattice step). kd <= 1 is accepted but lies outside the regime
// where dipole-dipole interaction is negligible; scan outputs flag it.
class ChainGeometry {
 public:
  ChainGeometry(int n_atoms, double kd);

  int n_atoms() const noexcept { return n_atoms_; }
  double kd() const noexcept { return kd_; }
  bool dipole_dipole_negligible() const noexcept { return kd_ > 1.0; }

 private:
  int n_atoms_;
  double kd_;
};

// Far-field detector direction; theta in radians, measured from the
// normal of the chain axis so theta = 0 sees all atoms in phase.
class DetectionDirection {
 public:
  explicit DetectionDirection(double theta);
  double theta() const noexcept { return theta_; }

 private:
  double theta_;
};

// Optical phase picked up by a photon emitted at atom j:
//   phi_j = j * kd * sin(theta).
// Odd in theta and mirror symmetric, phi_j(theta) = phi_j(pi - theta).
double detection_phase(int atom, const ChainGeometry& geom, const DetectionDirection& dir);

// s^-_j: terms with atom j excited map to the lowered configuration,
// terms with atom j in the ground state are annihilated.
Ket apply_lowering(const Ket& ket, int atom);
Ket apply_lowering(const PureState& state, int atom);

// sum_j e^{-i phi_j} s^-_j |psi>; the squared norm is the far-field
// intensity in units of a single excited atom's emission.
Ket apply_detection(const PureState& state, const ChainGeometry& geom,
                    const DetectionDirection& dir);

}  // namespace wchain
