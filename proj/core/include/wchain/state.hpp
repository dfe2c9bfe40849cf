#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wchain/basis.hpp"

namespace wchain {

using Amplitude = std::complex<double>;

// Superposition over same-length configurations. Not necessarily
// normalized; the zero vector is a valid Ket. Amplitudes that cancel to
// exactly zero are dropped, so iteration only ever sees nonzero terms.
class Ket {
 public:
  explicit Ket(int n_atoms);

  int n_atoms() const noexcept { return n_atoms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<BasisConfig, Amplitude>& terms() const noexcept { return terms_; }

  void add(const BasisConfig& config, Amplitude amplitude);
  double norm_sq() const;

  // <this|rhs>; amplitudes of *this are conjugated.
  Amplitude inner(const Ket& rhs) const;

  Ket& operator*=(Amplitude factor);
  Ket& operator+=(const Ket& rhs);

 private:
  int n_atoms_;
  std::map<BasisConfig, Amplitude> terms_;
};

// Normalized superposition; construction enforces |norm_sq - 1| <= 1e-12.
class PureState {
 public:
  explicit PureState(Ket ket);

  int n_atoms() const noexcept { return ket_.n_atoms(); }
  const Ket& ket() const noexcept { return ket_; }
  const std::map<BasisConfig, Amplitude>& terms() const noexcept { return ket_.terms(); }

 private:
  Ket ket_;
};

struct SpecTerm {
  std::int64_t coefficient;
  BasisConfig config;
};

// Integer-coefficient superposition before normalization, e.g.
// {+1 ege, +1 eeg, -2 gee}. Configurations must share one length and be
// distinct (duplicates must be pre-summed); zero coefficients are allowed
// and ignored downstream.
class RawStateSpec {
 public:
  explicit RawStateSpec(std::vector<SpecTerm> terms);

  // Text format: one `<signed-int> <config>` per line; blank lines and
  // `#` comments are ignored.
  static RawStateSpec parse(std::istream& in);
  static RawStateSpec parse(std::string_view text);

  const std::vector<SpecTerm>& terms() const noexcept { return terms_; }
  int n_atoms() const noexcept { return n_atoms_; }
  std::int64_t coefficient_norm_sq() const noexcept { return norm_sq_; }

  // Stable content-derived label: nonzero terms sorted by configuration,
  // rendered as e.g. "+1eeg+1ege-2gee".
  std::string descriptor() const;

 private:
  std::vector<SpecTerm> terms_;
  int n_atoms_ = 0;
  std::int64_t norm_sq_ = 0;
};

// |e..eg..g>: atoms 1..n_excited excited, the rest ground, amplitude 1.
PureState make_separable(int n_excited, int n_ground);

// Equal-weight superposition of all C(N, n_excited) configurations with
// exactly n_excited excitations.
PureState make_symmetric_w(int n_excited, int n_atoms);

// Amplitudes coefficient / sqrt(sum of squared coefficients).
PureState make_from_spec(const RawStateSpec& spec);

// Scales an arbitrary nonzero ket to unit norm.
PureState normalized(Ket ket);

// The common excitation count if every term shares one, otherwise empty.
std::optional<int> uniform_excitation(const PureState& state);

}  // namespace wchain
