#pragma once

// Bott-Samelson configuration varieties of a reduced word: letter s_i replaces
// the lattice in slot i+1 of the current periodic flag by a new one squeezed
// between its two neighbours. Points over F_q are enumerated exhaustively.

#include <cstdint>
#include <string>
#include <vector>

#include "affsch/affine_weyl.hpp"
#include "affsch/lattice.hpp"

namespace affsch {

inline constexpr Int kMaxBsLength = 8;

struct BSNode {
  std::string name;  // E3, L2, L3', ...
  int slot = 1;      // position 1..n in the periodic flag
  bool fixed = false;
};

/// t^{upper_t} nodes[upper] ⊃ t^{lower_t} nodes[lower] with quotient of dimension 1.
struct BSConstraint {
  int upper = 0, lower = 0;
  int upper_t = 0, lower_t = 0;
};

struct BSDiagram {
  ReducedWord word;
  std::vector<BSNode> nodes;              // nodes[0..n-1] are E_1..E_n
  std::vector<int> letter_nodes;          // node created by each letter
  std::vector<BSConstraint> constraints;  // the base chain first, then two per letter
  std::vector<int> final_nodes;           // node in slot m = 1..n after the last letter
  Window window;                          // holds every lattice of every point

  int n() const { return word.n; }
  std::size_t length() const { return word.letters.size(); }
  std::string describe(const BSConstraint& c) const;
};

/// Throws not_reduced unless the letter count equals the length of the evaluation.
BSDiagram build_bs(const ReducedWord& w);

/// A point: one lattice per letter, in letter order, all in d.window.
using BSPoint = std::vector<LatticeWindow<PrimeField>>;

/// OpenMP kernel over the first few levels of the fibration tower. With
/// opposite set, only points whose projection lies in the opposite cell count.
std::uint64_t count_bs_points(const BSDiagram& d, std::uint32_t q, bool opposite = false);
/// Single-threaded reference.
std::uint64_t count_bs_points_serial(const BSDiagram& d, std::uint32_t q, bool opposite = false);
/// Every F_q-point, in a deterministic order.
std::vector<BSPoint> bs_points(const BSDiagram& d, std::uint32_t q);

/// Throws bs_constraint if some codimension-one containment fails.
void check_bs_point(const BSPoint& point, const BSDiagram& d);

/// Final flag carried through sigma^{sigma_power}, restricted to the composition
/// (complete flag by default) and moved to the target window.
LatticeFlag<PrimeField> project_bs(const BSPoint& point, const BSDiagram& d, std::vector<int> composition,
                                   const Window& target);
/// As above with the complete flag in the enumeration window of the evaluated word.
LatticeFlag<PrimeField> project_bs(const BSPoint& point, const BSDiagram& d);

}  // namespace affsch
