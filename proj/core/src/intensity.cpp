#include "wchain/intensity.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wchain/errors.hpp"

namespace wchain {

namespace {

constexpr double kRouteTolerance = 1e-10;
constexpr double kRealTolerance = 1e-12;

std::vector<Ket> lowered_states(const PureState& state) {
  std::vector<Ket> low;
  low.reserve(static_cast<std::size_t>(state.n_atoms()));
  for (int j = 1; j <= state.n_atoms(); ++j) low.push_back(apply_lowering(state, j));
  return low;
}

}  // namespace

CorrelationMatrix::CorrelationMatrix(const PureState& state) : n_(state.n_atoms()) {
  values_.assign(static_cast<std::size_t>(n_) * n_, {});
  const auto low = lowered_states(state);
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      const auto v = low[static_cast<std::size_t>(i)].inner(low[static_cast<std::size_t>(j)]);
      values_[static_cast<std::size_t>(i) * n_ + j] = v;
      values_[static_cast<std::size_t>(j) * n_ + i] = std::conj(v);
    }
  }
}

std::complex<double> CorrelationMatrix::at(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::out_of_range("atom index must be in [1, N]");
  }
  return values_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

std::complex<double> correlation(const PureState& state, int i, int j) {
  return apply_lowering(state, i).inner(apply_lowering(state, j));
}

std::complex<double> dipole_expectation(const PureState& state, int atom) {
  return apply_lowering(state, atom).inner(state.ket());
}

double intensity_from_correlations(const CorrelationMatrix& corr, const ChainGeometry& geom,
                                   const DetectionDirection& dir) {
  if (corr.n_atoms() != geom.n_atoms()) {
    throw std::invalid_argument("correlation matrix and geometry disagree on the chain length");
  }
  const int n = geom.n_atoms();
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    z[static_cast<std::size_t>(j - 1)] =
        std::exp(std::complex<double>(0.0, detection_phase(j, geom, dir)));
  }
  std::complex<double> acc{};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      acc += corr.at(i, j) * z[static_cast<std::size_t>(i - 1)] *
             std::conj(z[static_cast<std::size_t>(j - 1)]);
    }
  }
  if (std::abs(acc.imag()) > kRealTolerance) {
    std::ostringstream msg;
    msg << "intensity has imaginary part " << acc.imag();
    throw ConsistencyError(msg.str());
  }
  return acc.real();
}

namespace {

void check_routes(double correlation_route, double amplitude_route) {
  if (std::abs(correlation_route - amplitude_route) > kRouteTolerance) {
    std::ostringstream msg;
    msg << "correlation route " << correlation_route << " and amplitude route "
        << amplitude_route << " disagree";
    throw ConsistencyError(msg.str());
  }
}

}  // namespace

double intensity(const PureState& state, const ChainGeometry& geom,
                 const DetectionDirection& dir) {
  const CorrelationMatrix corr(state);
  const double via_correlations = intensity_from_correlations(corr, geom, dir);
  const double via_amplitudes = apply_detection(state, geom, dir).norm_sq();
  check_routes(via_correlations, via_amplitudes);
  return via_correlations;
}

std::vector<double> intensity_profile(const PureState& state, const ChainGeometry& geom,
                                      std::span<const double> thetas) {
  const CorrelationMatrix corr(state);
  std::vector<double> out(thetas.size());
  const std::size_t stride = thetas.size() <= 128 ? 1 : thetas.size() / 64;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const DetectionDirection dir(thetas[i]);
    out[i] = intensity_from_correlations(corr, geom, dir);
    if (i % stride == 0 || i + 1 == thetas.size()) {
      check_routes(out[i], apply_detection(state, geom, dir).norm_sq());
    }
  }
  return out;
}

double w_intensity_closed(int n_excited, int n_atoms, const ChainGeometry& geom,
                          const DetectionDirection& dir) {
  if (n_atoms < 2) {
    throw std::invalid_argument("closed form requires at least two atoms");
  }
  if (n_excited < 1 || n_excited > n_atoms) {
    throw std::invalid_argument("closed form requires 1 <= n_excited <= n_atoms");
  }
  const double ne = n_excited;
  const double N = n_atoms;
  const double ng = N - ne;
  const double phi = geom.kd() * std::sin(dir.theta());
  const double s = std::sin(0.5 * phi);
  double grating;
  if (std::abs(s) < 1e-9) {
    // Removable singularity at phi = 2 pi m: evaluate the coherent sum.
    std::complex<double> acc{};
    for (int j = 1; j <= n_atoms; ++j) acc += std::exp(std::complex<double>(0.0, j * phi));
    grating = std::norm(acc);
  } else {
    const double t = std::sin(0.5 * N * phi) / s;
    grating = t * t;
  }
  return ne * (ne - 1.0) / (N - 1.0) + ne * ng / (N * (N - 1.0)) * grating;
}

double w_max_intensity(int n_excited, int n_ground) {
  if (n_excited < 1 || n_ground < 0) {
    throw std::invalid_argument("peak intensity requires n_excited >= 1 and n_ground >= 0");
  }
  return static_cast<double>(n_excited) * (n_ground + 1.0);
}

double w_enhancement(int n_excited, int n_ground) {
  return w_max_intensity(n_excited, n_ground) / n_excited;
}

double w_visibility_closed(int n_excited, int n_atoms) {
  if (n_excited < 1 || n_excited >= n_atoms) {
    throw std::invalid_argument("visibility requires 1 <= n_excited < n_atoms");
  }
  const double ng = n_atoms - n_excited;
  return 1.0 / (1.0 + 2.0 * (n_excited - 1) / (n_atoms * ng));
}

double fringe_width(int n_atoms, const ChainGeometry& geom) {
  if (n_atoms < 1) {
    throw std::invalid_argument("fringe width requires at least one atom");
  }
  return 2.0 * std::numbers::pi / (n_atoms * geom.kd());
}

double dicke_radiation_rate(int n_atoms, double m) {
  if (n_atoms < 1) {
    throw std::invalid_argument("rate requires at least one atom");
  }
  const double half = 0.5 * n_atoms;
  const double t = half + m;
  if (!std::isfinite(m) || std::abs(t - std::round(t)) > 1e-9 || t < -1e-9 ||
      t > n_atoms + 1e-9) {
    throw std::invalid_argument("projection m must make N/2 + m an integer in [0, N]");
  }
  return (half + m) * (half - m + 1.0);
}

WCorrelationConstants w_correlation_constants(int n_excited, int n_atoms) {
  if (n_atoms < 2) {
    throw std::invalid_argument("correlation constants require at least two atoms");
  }
  if (n_excited < 1 || n_excited > n_atoms) {
    throw std::invalid_argument("correlation constants require 1 <= n_excited <= n_atoms");
  }
  const double ne = n_excited;
  const double N = n_atoms;
  return {ne / N, ne * (N - ne) / (N * (N - 1.0))};
}

double correlation_sum(const PureState& state) {
  const auto low = lowered_states(state);
  std::complex<double> acc{};
  for (const auto& a : low) {
    for (const auto& b : low) acc += a.inner(b);
  }
  if (std::abs(acc.imag()) > kRealTolerance) {
    throw ConsistencyError("correlation sum has a non-vanishing imaginary part");
  }
  return acc.real();
}

double coherent_drive_intensity(std::span<const double> populations,
                                std::span<const std::complex<double>> dipoles,
                                const ChainGeometry& geom, const DetectionDirection& dir) {
  const std::size_t n = static_cast<std::size_t>(geom.n_atoms());
  if (populations.size() != n || dipoles.size() != n) {
    throw std::invalid_argument("populations and dipoles must have one entry per atom");
  }
  double acc = 0.0;
  for (double p : populations) acc += p;
  std::complex<double> cross{};
  for (int i = 1; i <= geom.n_atoms(); ++i) {
    for (int j = 1; j <= geom.n_atoms(); ++j) {
      if (i == j) continue;
      const double delta = detection_phase(i, geom, dir) - detection_phase(j, geom, dir);
      cross += dipoles[static_cast<std::size_t>(i - 1)] *
               std::conj(dipoles[static_cast<std::size_t>(j - 1)]) *
               std::exp(std::complex<double>(0.0, delta));
    }
  }
  if (std::abs(cross.imag()) > kRealTolerance) {
    throw ConsistencyError("dipole cross term has a non-vanishing imaginary part");
  }
  return acc + cross.real();
}

}  // namespace wchain
