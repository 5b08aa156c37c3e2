#pragma once

#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Zn(2..64), F4, F8, F9, LocalNonChain2, Prod(Zn(4),Zn(3)), Prod(Zn(2),Zn(2)), Z, EC(2).
std::vector<Ring> builtin_corpus();
std::vector<Ring> finite_corpus();

}  // namespace ringlab
