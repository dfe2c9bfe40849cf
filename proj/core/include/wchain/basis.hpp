#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wchain {

// Largest chain we represent; keeps configurations in a 32-bit mask and
// every binomial / path count comfortably inside int64.
inline constexpr int kMaxAtoms = 24;

// Which atoms of an N-atom chain are excited. Atom indices are 1-based;
// atom 1 is the leftmost symbol of the ket string, so "egg" has atom 1
// excited and atoms 2, 3 in the ground state.
class BasisConfig {
 public:
  BasisConfig(std::uint32_t excited_mask, int n_atoms);

  // Parses a ket string over {e, g}, e.g. "ege".
  static BasisConfig from_string(std::string_view ket);

  int n_atoms() const noexcept { return n_atoms_; }
  std::uint32_t mask() const noexcept { return mask_; }

  bool excited(int atom) const;  // 1-based
  int excitation_count() const noexcept;

  // Same configuration with `atom` forced to the ground state.
  BasisConfig with_ground(int atom) const;

  std::string str() const;

  friend auto operator<=>(const BasisConfig&, const BasisConfig&) = default;

 private:
  int n_atoms_;
  std::uint32_t mask_;
};

// Exact binomial coefficient; 0 outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

// All configurations of n_atoms with exactly n_excited excitations,
// ordered by mask value.
std::vector<BasisConfig> configurations_with_excitations(int n_atoms, int n_excited);

}  // namespace wchain
