#include "wchain/basis.hpp"

#include <bit>
#include <stdexcept>

namespace wchain {

BasisConfig::BasisConfig(std::uint32_t excited_mask, int n_atoms)
    : n_atoms_(n_atoms), mask_(excited_mask) {
  if (n_atoms < 1 || n_atoms > kMaxAtoms) {
    throw std::invalid_argument("configuration length must be in [1, " +
                                std::to_string(kMaxAtoms) + "]");
  }
  if (n_atoms < 32 && (excited_mask >> n_atoms) != 0) {
    throw std::invalid_argument("excitation mask has bits beyond the chain length");
  }
}

BasisConfig BasisConfig::from_string(std::string_view ket) {
  if (ket.empty() || ket.size() > static_cast<std::size_t>(kMaxAtoms)) {
    throw std::invalid_argument("configuration string must have 1.." +
                                std::to_string(kMaxAtoms) + " symbols");
  }
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < ket.size(); ++i) {
    if (ket[i] == 'e') {
      mask |= 1u << i;
    } else if (ket[i] != 'g') {
      throw std::invalid_argument("configuration symbols must be 'e' or 'g', got '" +
                                  std::string(1, ket[i]) + "'");
    }
  }
  return {mask, static_cast<int>(ket.size())};
}

bool BasisConfig::excited(int atom) const {
  if (atom < 1 || atom > n_atoms_) {
    throw std::out_of_range("atom index must be in [1, N]");
  }
  return (mask_ >> (atom - 1)) & 1u;
}

int BasisConfig::excitation_count() const noexcept { return std::popcount(mask_); }

BasisConfig BasisConfig::with_ground(int atom) const {
  if (atom < 1 || atom > n_atoms_) {
    throw std::out_of_range("atom index must be in [1, N]");
  }
  return {mask_ & ~(1u << (atom - 1)), n_atoms_};
}

std::string BasisConfig::str() const {
  std::string s(static_cast<std::size_t>(n_atoms_), 'g');
  for (int j = 0; j < n_atoms_; ++j) {
    if ((mask_ >> j) & 1u) s[static_cast<std::size_t>(j)] = 'e';
  }
  return s;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r*(n-k+i) is divisible by i here
  }
  return r;
}

std::vector<BasisConfig> configurations_with_excitations(int n_atoms, int n_excited) {
  if (n_atoms < 1 || n_atoms > kMaxAtoms) {
    throw std::invalid_argument("chain length must be in [1, " + std::to_string(kMaxAtoms) + "]");
  }
  if (n_excited < 0 || n_excited > n_atoms) {
    throw std::invalid_argument("excitation count must be in [0, N]");
  }
  std::vector<BasisConfig> out;
  out.reserve(static_cast<std::size_t>(binomial(n_atoms, n_excited)));
  if (n_excited == 0) {
    out.emplace_back(0u, n_atoms);
    return out;
  }
  // Gosper's hack walks the masks with a fixed popcount in increasing order.
  std::uint32_t mask = (1u << n_excited) - 1u;
  const std::uint32_t limit = (n_atoms < 32) ? (1u << n_atoms) : 0xffffffffu;
  while (mask < limit) {
    out.emplace_back(mask, n_atoms);
    std::uint32_t low = mask & (~mask + 1u);
    std::uint32_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  return out;
}

}  // namespace wchain
