// Serial reference versus OpenMP kernel for the two brute-force point counts.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "affsch/bott_samelson.hpp"
#include "affsch/circular.hpp"
#include "affsch/enumerate.hpp"

using namespace affsch;

namespace {

struct Timing {
  double seconds;
  std::uint64_t value;
};

Timing best_of(int reps, const std::function<std::uint64_t()>& fn) {
  Timing best{1e300, 0};
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t v = fn();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s < best.seconds) best = {s, v};
  }
  return best;
}

bool report(const std::string& name, const Timing& serial, const Timing& parallel) {
  const bool same = serial.value == parallel.value;
  std::printf("%-44s %12llu %10.4f %10.4f %8.2fx %s\n", name.c_str(), static_cast<unsigned long long>(serial.value),
              serial.seconds, parallel.seconds, serial.seconds / parallel.seconds, same ? "" : "MISMATCH");
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads=%d reps=%d (best of)\n", threads, reps);
  std::printf("%-44s %12s %10s %10s %9s\n", "case", "points", "serial s", "omp s", "speedup");

  bool ok = true;
  struct FlagCase {
    std::string window;
    int n;
    std::uint32_t q;
    SchubertMode mode;
  };
  for (const auto& c : std::vector<FlagCase>{{"[-2,2,6]", 3, 2, SchubertMode::variety},
                                             {"[-2,2,6]", 3, 3, SchubertMode::variety},
                                             {"[3,10,6,9,12]", 5, 2, SchubertMode::variety},
                                             {"[-3,0,7,6]", 4, 2, SchubertMode::variety},
                                             {"[6,-3,4,3]", 4, 2, SchubertMode::cell},
                                             {"[6,-3,4,3]", 4, 3, SchubertMode::variety}}) {
    const auto p = parse_window(c.window, c.n);
    const std::string name = "flags " + c.window + " q=" + std::to_string(c.q) +
                             (c.mode == SchubertMode::cell ? " cell" : " variety");
    ok &= report(name, best_of(reps, [&] { return enumerate_flag_points_serial(p, c.q, c.mode); }),
                 best_of(reps, [&] { return enumerate_flag_points(p, c.q, c.mode); }));
  }

  for (const auto& [name, word, q] : std::vector<std::tuple<std::string, ReducedWord, std::uint32_t>>{
           {"bs 2120 q=3", {3, 0, {2, 1, 2, 0}}, 3},
           {"bs cable(2,3,1) q=3", cable_word(2, 3, 1), 3},
           {"bs cable(2,4,1) q=2", cable_word(2, 4, 1), 2},
           {"bs cable(2,4,1) q=3", cable_word(2, 4, 1), 3}}) {
    const BSDiagram d = build_bs(word);
    ok &= report(name, best_of(reps, [&] { return count_bs_points_serial(d, q); }),
                 best_of(reps, [&] { return count_bs_points(d, q); }));
  }
  return ok ? 0 : 1;
}
