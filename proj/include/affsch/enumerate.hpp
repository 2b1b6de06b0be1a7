#pragma once

// Brute-force F_q-point counts of affine Schubert cells and varieties, by
// exhausting t-stable complete flags in a finite window.

#include <cstdint>
#include <vector>

#include "affsch/affine_weyl.hpp"
#include "affsch/lattice.hpp"

namespace affsch {

inline constexpr Int kMaxEnumerationLength = 8;

/// Throws length_guard or field_guard outside ℓ <= 8, q in {2, 3}.
void check_enumeration_guard(const AffinePermutation& p, std::uint32_t q);

/// Window used by the enumeration: the tight sandwich window, extended upward
/// when the opposite filter needs E'_{n+k} to be visible.
Window enumeration_window(const AffinePermutation& p, bool opposite);

/// OpenMP kernel; splits the search over the candidates for Λ_1.
std::uint64_t enumerate_flag_points(const AffinePermutation& p, std::uint32_t q, SchubertMode mode,
                                    bool opposite = false);
/// Single-threaded reference for the same count.
std::uint64_t enumerate_flag_points_serial(const AffinePermutation& p, std::uint32_t q, SchubertMode mode,
                                           bool opposite = false);
/// The points themselves, sorted, in enumeration_window(p, opposite).
std::vector<LatticeFlag<PrimeField>> flag_point_set(const AffinePermutation& p, std::uint32_t q, SchubertMode mode,
                                                    bool opposite = false);

}  // namespace affsch
