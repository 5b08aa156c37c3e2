#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/bezout.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/sampling.hpp"

namespace ringlab {

struct RingOutcome {
  std::string ring;
  Outcome outcome = Outcome::Pass;
  std::string detail;
  std::vector<std::string> counterwitness;
  std::uint64_t checked = 0;
};

struct SuiteResult {
  std::string id;
  std::vector<RingOutcome> rings;
  Outcome overall() const;
};

// T1, LG, T21, SNF, P32, T34, CVNR, CLEN
const std::vector<std::string>& suite_ids();
// The corpus rings a suite runs on by default.
std::vector<Ring> suite_targets(const std::string& id);
SuiteResult verify_suite(const std::string& id, const std::vector<Ring>& rings, std::uint64_t seed = 0);

// [[2,4],[6,8]] followed by 99 matrices from mt19937_64(100), dims 1..3, entries in [-9, 9].
std::vector<Matrix> integer_matrix_corpus();
// Invariant factors over Z from gcds of k x k minors.
std::vector<BigInt> determinant_divisor_factors(const Matrix& A);
// Seeded random matrix over a ring, 1..3 x 1..3.
Matrix random_matrix(const Ring& ring, Rng& rng);

}  // namespace ringlab
