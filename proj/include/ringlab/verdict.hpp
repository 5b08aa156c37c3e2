#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Boolean answer with the data needed to re-check it.
struct Verdict {
  bool value = false;
  std::vector<Element> witness;  // counterwitness (false) or witness (true)
  std::string note;
  std::uint64_t scanned = 0;  // items examined by an exhaustive or sampled check
  bool sampled = false;
};

}  // namespace ringlab
