#pragma once

// Loop wiring diagrams on a cylinder. Events run left to right: |k| shift
// events for sigma^k, then one crossing per letter of the greedy reduced word.
// Wire i enters at right endpoint i and leaves at left endpoint p(i) mod n.

#include <string>
#include <vector>

#include "affsch/affine_weyl.hpp"

namespace affsch {

struct Wire {
  int start = 0;    // right endpoint, in [1, n]
  int end = 0;      // left endpoint, in [1, n]
  Int winding = 0;  // number of times the wire wraps the cylinder
};

struct Crossing {
  int column = 0;  // event index, left to right
  int letter = 0;  // s_letter; letter 0 crosses the margin
  int upper = 0;   // wire on track letter (track n for letter 0) just right of the event
  int lower = 0;   // wire on the next track down (track 1 for letter 0)
};

struct WiringDiagram {
  int n = 0;
  Int sigma_power = 0;
  std::vector<Wire> wires;
  std::vector<Crossing> crossings;
  /// positions[b][i-1]: unwrapped height of wire i at boundary b (0 = left edge).
  std::vector<std::vector<Int>> positions;

  int event_count() const { return static_cast<int>(positions.size()) - 1; }
  ReducedWord word() const;
};

WiringDiagram build_diagram(const AffinePermutation& p);

enum class RenderFormat { ascii, svg };

std::string render(const WiringDiagram& d, RenderFormat format);

}  // namespace affsch
