#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wchain/geometry.hpp"
#include "wchain/rational.hpp"
#include "wchain/state.hpp"

namespace wchain {

// One emission alternative: a unit-coefficient copy of a source term emits
// from one excited atom. A term with integer coefficient c expands into
// |c| copies carrying sign(c), so -2|gee> contributes two unit-sign copies
// per excited atom. The photon phase index equals the emitter.
struct QuantumPath {
  BasisConfig source;
  int unit_sign;    // +1 or -1
  int copy_index;   // 0 .. |c|-1 within the source term
  int emitter;      // 1-based atom index
  BasisConfig final_config;

  int phase_index() const noexcept { return emitter; }
};

// Counting summary of the interference structure at theta = 0.
//
// Ordered pairs of paths that share a final state but come from distinct
// (source term, emitter) origins interfere; the pair sign is the product
// of unit signs. Per final state qp records the net signed pair sum,
// which equals the raw pair count whenever a state's pairs share one sign
// (every symmetric state and the worked anti-symmetric examples). Pairs
// among duplicate copies of one origin carry no angle dependence and fold
// into `offset` together with the diagonal, which is why offset always
// equals the common excitation count. qp values are exact per-final-state
// class averages and integral in every homogeneous case.
struct PathLedger {
  Rational qp_constructive;
  std::int64_t f_constructive = 0;
  Rational qp_destructive;
  std::int64_t f_destructive = 0;
  Rational norm_sq;  // 1 / sum of squared coefficients
  Rational offset;
  std::int64_t path_count = 0;
  std::int64_t final_state_count = 0;
  // Final states whose signed pair sum cancels to zero while pairs exist;
  // they contribute nothing at theta = 0 but are not silently dropped.
  std::int64_t residual_final_states = 0;
};

// All unit-coefficient emission paths of an integer superposition. Nonzero
// terms must share one excitation count, otherwise UnsupportedStateError;
// a fully ground state has no paths.
std::vector<QuantumPath> enumerate_paths(const RawStateSpec& spec);

// Partition keyed by final configuration.
std::map<BasisConfig, std::vector<QuantumPath>> group_by_final(
    const std::vector<QuantumPath>& paths);

PathLedger build_ledger(const RawStateSpec& spec);

// offset + (qp_c * f_c - qp_d * f_d) * norm_sq: the exact theta = 0
// intensity, i.e. the maximum for all-constructive states and the minimum
// for the worked anti-symmetric ones.
Rational ledger_extremum(const PathLedger& ledger);

// Paths converging on one final state of the symmetric state: ng + 1.
std::int64_t single_paths_per_final(int n_excited, int n_atoms);

// Intensity assembled path by path:
//   norm_sq * sum_f |sum_{p in f} sign_p e^{-i phi(emitter_p)}|^2.
// Agrees with intensity() at every angle.
double intensity_via_paths(const RawStateSpec& spec, const ChainGeometry& geom,
                           const DetectionDirection& dir);

}  // namespace wchain
