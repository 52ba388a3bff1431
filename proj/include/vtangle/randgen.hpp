#pragma once

#include <cstdint>

#include "vtangle/gauss.hpp"
#include "vtangle/term.hpp"

namespace vtangle {

// Deterministic splitmix64 stream for reproducible fuzzing.
struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return next() & 1; }
};

// Random valid Gauss code with at most `crossings` crossings, never holding
// more than `max_open` labels open at once (keeps compiled widths small),
// split over at most `max_components` components.
GaussCode random_gauss_code(SplitMix& rng, int crossings, int max_open,
                            int max_components);

// Random well-typed open term starting from `dom`, `slices` layers deep.
MorphismTerm random_term_from(const SeqObject& dom, SplitMix& rng, int slices);

// Random domain object: a few intervals, mostly single letters.
SeqObject random_object(SplitMix& rng, int max_intervals);

}  // namespace vtangle
