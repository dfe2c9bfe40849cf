#include "wchain/geometry.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace wchain {

ChainGeometry::ChainGeometry(int n_atoms, double kd) : n_atoms_(n_atoms), kd_(kd) {
  if (n_atoms < 1 || n_atoms > kMaxAtoms) {
    throw std::invalid_argument("chain length must be in [1, " + std::to_string(kMaxAtoms) + "]");
  }
  if (!std::isfinite(kd) || kd <= 0.0) {
    throw std::invalid_argument("kd must be finite and positive");
  }
}

DetectionDirection::DetectionDirection(double theta) : theta_(theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("theta must be finite");
  }
}

double detection_phase(int atom, const ChainGeometry& geom, const DetectionDirection& dir) {
  if (atom < 1 || atom > geom.n_atoms()) {
    throw std::out_of_range("atom index must be in [1, N]");
  }
  return atom * geom.kd() * std::sin(dir.theta());
}

Ket apply_lowering(const Ket& ket, int atom) {
  if (atom < 1 || atom > ket.n_atoms()) {
    throw std::out_of_range("atom index must be in [1, N]");
  }
  Ket out(ket.n_atoms());
  for (const auto& [config, amp] : ket.terms()) {
    if (config.excited(atom)) out.add(config.with_ground(atom), amp);
  }
  return out;
}

Ket apply_lowering(const PureState& state, int atom) { return apply_lowering(state.ket(), atom); }

Ket apply_detection(const PureState& state, const ChainGeometry& geom,
                    const DetectionDirection& dir) {
  if (state.n_atoms() != geom.n_atoms()) {
    throw std::invalid_argument("state and geometry disagree on the chain length");
  }
  Ket out(state.n_atoms());
  for (int j = 1; j <= geom.n_atoms(); ++j) {
    const std::complex<double> factor =
        std::exp(std::complex<double>(0.0, -detection_phase(j, geom, dir)));
    for (const auto& [config, amp] : state.terms()) {
      if (config.excited(j)) out.add(config.with_ground(j), factor * amp);
    }
  }
  return out;
}

}  // namespace wchain
