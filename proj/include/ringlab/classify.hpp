#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/sampling.hpp"
#include "ringlab/spectrum.hpp"
#include "ringlab/verdict.hpp"

namespace ringlab {

Verdict is_clean(const Ring& ring);

enum class Outcome { Pass, Fail, Inconclusive };
std::string outcome_name(Outcome o);

struct Theorem1Report {
  std::optional<bool> flag1;  // Gelfand and Max totally disconnected
  std::optional<bool> flag3;  // clean
  std::optional<bool> flag4;  // Gelfand and every 0_P idempotent-generated
  Outcome outcome = Outcome::Inconclusive;
  std::string detail;
};
Theorem1Report theorem1_equivalence(const Ring& ring);
// Flag 4 alone, with the sampled/exhaustive evidence.
Verdict zero_p_idempotent_generated(const Ring& ring);

// Polynomial in at most two variables: sum of coeff * X^e0 * Y^e1.
struct Term {
  std::vector<unsigned> exponents;
  Element coeff;
};
struct Polynomial {
  std::size_t vars = 1;
  std::vector<Term> terms;
};
Element evaluate(const Ring& ring, const Polynomial& f, const std::vector<Element>& x);
std::string format_polynomial(const Ring& ring, const Polynomial& f);

enum class LocalGlobal { Holds, Vacuous, Fails };
std::string local_global_name(LocalGlobal v);

struct LocalGlobalResult {
  LocalGlobal outcome = LocalGlobal::Fails;
  std::vector<Element> witness;       // x with f(x) a unit (Holds)
  std::optional<Element> factor;      // primitive idempotent with no local unit value (Vacuous)
};
LocalGlobalResult local_global_check(const Ring& ring, const Polynomial& f);
// Univariate polynomials of degree <= 2 (order <= 16) and 50 seeded bivariate
// quadratics (order <= 8).
std::vector<Polynomial> local_global_battery(const Ring& ring, std::uint64_t seed);

Verdict is_valuation_local(const Ring& ring);
Verdict is_arithmetic(const Ring& ring);
Verdict is_bezout(const Ring& ring);
Verdict is_von_neumann_regular(const Ring& ring);
std::uint64_t jacobson_nilpotency_index(const Ring& ring);

struct Theorem34Result {
  bool satisfied = false;
  std::optional<Element> factor;  // primitive idempotent of the violating local factor
  std::vector<Element> witness;   // (a, b) with neither dividing the other
};
Theorem34Result theorem34_classify(const Ring& ring);

enum class Tri { True, False, NotEvaluated };
std::string tri_name(Tri t);

struct FlagEntry {
  std::string name;
  Tri value = Tri::NotEvaluated;
  std::vector<std::string> witness;
  std::string note;
  std::uint64_t scanned = 0;
  bool sampled = false;
};

struct ClassificationReport {
  std::string ring;
  std::vector<FlagEntry> flags;  // fixed order
  std::optional<std::uint64_t> jacobson_index;

  const FlagEntry& flag(const std::string& name) const;
};

ClassificationReport classify(const Ring& ring);

}  // namespace ringlab
