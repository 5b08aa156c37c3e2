#pragma once

#include <cstdint>
#include <random>

#include "ringlab/ring.hpp"

namespace ringlab {

using Rng = std::mt19937_64;

// Uniform draw in [0, n); n > 0.  Portable across standard libraries.
std::uint64_t draw(Rng& rng, std::uint64_t n);

// Random element: uniform over a finite ring; small entries for Z and EC(p).
// EC draws hit zero components and p-divisible tails often.
Element random_element(const Ring& ring, Rng& rng);
// Random unit (finite rings by rejection; Z: +-1; EC(p): nonzero components, unit tail).
Element random_unit(const Ring& ring, Rng& rng);

}  // namespace ringlab
