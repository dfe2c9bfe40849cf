#include "wchain/paths.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "wchain/errors.hpp"
#include "wchain/rational.hpp"

namespace wchain {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (const auto g = std::gcd(std::abs(num_), den_); g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& rhs) {
  return *this = Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  return *this = Rational(num_ * rhs.num_, den_ * rhs.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (!r.is_integer()) os << '/' << r.den();
  return os;
}

std::vector<QuantumPath> enumerate_paths(const RawStateSpec& spec) {
  std::optional<int> n_excited;
  for (const auto& t : spec.terms()) {
    if (t.coefficient == 0) continue;
    const int c = t.config.excitation_count();
    if (!n_excited) {
      n_excited = c;
    } else if (*n_excited != c) {
      throw UnsupportedStateError(
          "path counting requires one common excitation count; spec mixes " +
          std::to_string(*n_excited) + " and " + std::to_string(c));
    }
  }
  std::vector<QuantumPath> paths;
  if (!n_excited || *n_excited == 0) return paths;
  for (const auto& t : spec.terms()) {
    if (t.coefficient == 0) continue;
    const int sign = t.coefficient > 0 ? 1 : -1;
    const std::int64_t copies = std::abs(t.coefficient);
    for (std::int64_t copy = 0; copy < copies; ++copy) {
      for (int atom = 1; atom <= spec.n_atoms(); ++atom) {
        if (!t.config.excited(atom)) continue;
        paths.push_back({t.config, sign, static_cast<int>(copy), atom,
                         t.config.with_ground(atom)});
      }
    }
  }
  return paths;
}

std::map<BasisConfig, std::vector<QuantumPath>> group_by_final(
    const std::vector<QuantumPath>& paths) {
  std::map<BasisConfig, std::vector<QuantumPath>> groups;
  for (const auto& p : paths) groups[p.final_config].push_back(p);
  return groups;
}

PathLedger build_ledger(const RawStateSpec& spec) {
  const auto paths = enumerate_paths(spec);
  const auto groups = group_by_final(paths);

  PathLedger ledger;
  ledger.norm_sq = Rational(1, spec.coefficient_norm_sq());
  ledger.path_count = static_cast<std::int64_t>(paths.size());
  ledger.final_state_count = static_cast<std::int64_t>(groups.size());

  std::int64_t offset_pairs = 0;       // same-origin ordered pairs, diagonal included
  std::int64_t constructive_total = 0;  // sum of positive per-state nets
  std::int64_t destructive_total = 0;   // magnitude of negative per-state nets
  for (const auto& [final_config, group] : groups) {
    // Copies of one (source term, emitter) origin share a sign, so a group
    // is summarized by per-origin copy counts and signs.
    std::map<std::pair<std::uint32_t, int>, std::pair<std::int64_t, int>> origins;
    for (const auto& p : group) {
      auto& [copies, sign] = origins[{p.source.mask(), p.emitter}];
      ++copies;
      sign = p.unit_sign;
    }
    std::int64_t signed_sum = 0;
    std::int64_t total = 0;
    std::int64_t same_origin = 0;
    for (const auto& [origin, entry] : origins) {
      const auto& [copies, sign] = entry;
      signed_sum += copies * sign;
      total += copies;
      same_origin += copies * copies;
    }
    offset_pairs += same_origin;
    const std::int64_t net = signed_sum * signed_sum - same_origin;
    const bool pairs_exist = total * total - same_origin > 0;
    if (net > 0) {
      constructive_total += net;
      ++ledger.f_constructive;
    } else if (net < 0) {
      destructive_total += -net;
      ++ledger.f_destructive;
    } else if (pairs_exist) {
      ++ledger.residual_final_states;
    }
  }

  ledger.offset = Rational(offset_pairs) * ledger.norm_sq;
  ledger.qp_constructive = ledger.f_constructive > 0
                               ? Rational(constructive_total, ledger.f_constructive)
                               : Rational(0);
  ledger.qp_destructive = ledger.f_destructive > 0
                              ? Rational(destructive_total, ledger.f_destructive)
                              : Rational(0);
  return ledger;
}

Rational ledger_extremum(const PathLedger& ledger) {
  const Rational interference = ledger.qp_constructive * Rational(ledger.f_constructive) -
                                ledger.qp_destructive * Rational(ledger.f_destructive);
  return ledger.offset + interference * ledger.norm_sq;
}

std::int64_t single_paths_per_final(int n_excited, int n_atoms) {
  if (n_excited < 1 || n_excited > n_atoms) {
    throw std::invalid_argument("path count requires 1 <= n_excited <= n_atoms");
  }
  return n_atoms - n_excited + 1;
}

double intensity_via_paths(const RawStateSpec& spec, const ChainGeometry& geom,
                           const DetectionDirection& dir) {
  if (spec.n_atoms() != geom.n_atoms()) {
    throw std::invalid_argument("spec and geometry disagree on the chain length");
  }
  const auto groups = group_by_final(enumerate_paths(spec));
  double acc = 0.0;
  for (const auto& [final_config, group] : groups) {
    std::complex<double> amp{};
    for (const auto& p : group) {
      amp += static_cast<double>(p.unit_sign) *
             std::exp(std::complex<double>(0.0, -detection_phase(p.phase_index(), geom, dir)));
    }
    acc += std::norm(amp);
  }
  return acc / static_cast<double>(spec.coefficient_norm_sq());
}

}  // namespace wchain
