#pragma once

// Brute-force reference model used only by the tests. It stores the full
// 2^N amplitude vector and applies operators by bit arithmetic, sharing no
// code path with the library under test.

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

struct Dense {
  int n = 0;
  std::vector<cd> amp;  // index bit (j-1) set = atom j excited
};

inline Dense from_terms(int n, const std::vector<std::pair<std::string, cd>>& terms) {
  Dense d{n, std::vector<cd>(std::size_t{1} << n, cd{})};
  for (const auto& [ket, a] : terms) {
    std::uint32_t m = 0;
    for (int j = 0; j < n; ++j) {
      if (ket[static_cast<std::size_t>(j)] == 'e') m |= 1u << j;
    }
    d.amp[m] += a;
  }
  return d;
}

inline void normalize(Dense& d) {
  double s = 0.0;
  for (const auto& a : d.amp) s += std::norm(a);
  const double inv = 1.0 / std::sqrt(s);
  for (auto& a : d.amp) a *= inv;
}

// || sum_j e^{-i (j + index_offset) kd sin(theta)} s^-_j |psi> ||^2.
// index_offset lets tests confirm that observables are index-shift
// invariant.
inline double intensity(const Dense& d, double kd, double theta, int index_offset = 0) {
  std::vector<cd> out(d.amp.size(), cd{});
  for (int j = 1; j <= d.n; ++j) {
    const cd ph = std::exp(cd(0.0, -(j + index_offset) * kd * std::sin(theta)));
    const std::uint32_t bit = 1u << (j - 1);
    for (std::uint32_t m = 0; m < d.amp.size(); ++m) {
      if (m & bit) out[m & ~bit] += ph * d.amp[m];
    }
  }
  double s = 0.0;
  for (const auto& a : out) s += std::norm(a);
  return s;
}

// <s+_i s-_j> by raw enumeration: sum over basis states with i ground and
// j excited of conj(amp[m with i excited]) * amp[m with j excited].
inline cd correlation(const Dense& d, int i, int j) {
  const std::uint32_t bi = 1u << (i - 1);
  const std::uint32_t bj = 1u << (j - 1);
  cd acc{};
  for (std::uint32_t m = 0; m < d.amp.size(); ++m) {
    if (!(m & bj)) continue;
    const std::uint32_t lowered = m & ~bj;
    if (lowered & bi) continue;
    acc += std::conj(d.amp[lowered | bi]) * d.amp[m];
  }
  return acc;
}

}  // namespace oracle
