#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/bezout.hpp"
#include "ringlab/spectrum.hpp"

namespace ringlab {

// R^g modulo the submodule spanned by the relation rows.
struct Presentation {
  std::size_t generators = 0;
  Matrix relations;  // rows of length `generators`
};

struct PresentationCaps {
  std::size_t max_generators = 6;
  std::size_t max_relations = 8;
  std::uint64_t max_free_size = 1u << 16;  // |R|^g
};

// A finitely presented module over a finite ring, materialized.  Elements are
// cosets numbered 0..size()-1 in the order of their least representative in
// R^g (mixed radix, first coordinate most significant); 0 is the zero coset.
class FiniteModule {
 public:
  const Ring& ring() const { return ring_; }
  const Presentation& presentation() const { return presentation_; }
  std::size_t generator_count() const { return presentation_.generators; }
  std::uint64_t size() const { return reps_.size(); }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t act(std::uint64_t r, std::uint32_t m) const;  // r is a ring element index
  std::uint32_t generator(std::size_t j) const;
  // Least representative in R^g.
  std::vector<std::uint64_t> representative(std::uint32_t m) const;
  std::uint32_t element_of(const std::vector<std::uint64_t>& v) const;
  std::string format(std::uint32_t m) const;

 private:
  friend FiniteModule present_module(const Ring&, const Presentation&, const PresentationCaps&);
  FiniteModule(Ring ring, Presentation p) : ring_(std::move(ring)), presentation_(std::move(p)) {}

  std::uint64_t encode(const std::vector<std::uint64_t>& v) const;
  std::vector<std::uint64_t> decode(std::uint64_t code) const;

  Ring ring_;
  Presentation presentation_;
  std::vector<std::uint32_t> coset_of_;  // indexed by encoded R^g vector
  std::vector<std::uint64_t> reps_;      // least encoded representative per coset
};

FiniteModule present_module(const Ring& ring, const Presentation& p, const PresentationCaps& caps = {});
FiniteModule present_module(const Ring& ring, const Matrix& relations, std::size_t generators);
// First line "g r", then r rows of g element literals.
Presentation parse_presentation(const Ring& ring, std::string_view text);
std::string format_presentation(const Ring& ring, const Presentation& p);

// Submodule of a finite module as a membership mask.
using ModuleMask = std::vector<char>;
ModuleMask submodule_generated(const FiniteModule& M, const std::vector<std::uint32_t>& gens);
std::vector<std::uint32_t> mask_members(const ModuleMask& mask);
// Re-presents a submodule, given by generators, as a module of its own.
FiniteModule present_submodule(const FiniteModule& M, const std::vector<std::uint32_t>& gens);

// Primitive idempotent e and residue field order |Re / Je| of each local factor.
struct LocalFactor {
  Element idempotent;
  std::uint64_t residue_order = 0;
};
std::vector<LocalFactor> local_factors(const Ring& ring);

std::uint64_t module_length(const FiniteModule& M);
std::uint64_t submodule_length(const FiniteModule& M, const ModuleMask& sub);

// An endomorphism, stored as the images of the generators.
using Endo = std::vector<std::uint32_t>;

std::uint32_t apply(const FiniteModule& M, const Endo& f, std::uint32_t m);
Endo compose(const FiniteModule& M, const Endo& f, const Endo& g);  // f after g
Endo add(const FiniteModule& M, const Endo& f, const Endo& g);
Endo sub(const FiniteModule& M, const Endo& f, const Endo& g);
Endo identity_endo(const FiniteModule& M);
Endo zero_endo(const FiniteModule& M);
Endo scalar_endo(const FiniteModule& M, std::uint64_t r);
// Relations are sent to zero, so the images define an R-linear map.
bool is_endomorphism(const FiniteModule& M, const Endo& f);
bool is_idempotent_endo(const FiniteModule& M, const Endo& f);
std::string format_endo(const FiniteModule& M, const Endo& f);

struct EndAlgebra {
  FiniteModule module;
  // A basis over F_p in prime characteristic; otherwise additive generators.
  std::vector<Endo> basis;
  std::uint64_t characteristic = 0;
  std::optional<std::uint64_t> dimension_over_prime_field;
  std::optional<std::uint64_t> order;  // |End| when known
};

struct EndOptions {
  std::uint64_t max_dimension = 24;
  std::uint64_t enumeration_cap = 1u << 20;
};

EndAlgebra endomorphism_basis(const FiniteModule& M, const EndOptions& opts = {});
// The two solvers behind endomorphism_basis, exposed for cross-checking.
// Commutant of the action over F_p (prime characteristic only).
EndAlgebra endomorphism_basis_prime_field(const FiniteModule& M, const EndOptions& opts = {});
// Integer kernel of the relation constraints (any characteristic).
EndAlgebra endomorphism_basis_lattice(const FiniteModule& M, const EndOptions& opts = {});

// Every element of the additive span of `gens`, or nullopt past the cap.
std::optional<std::vector<Endo>> enumerate_span(const FiniteModule& M, const std::vector<Endo>& gens,
                                                std::uint64_t cap);

struct IdempotentSearch {
  std::optional<Endo> idempotent;
  bool exhaustive = true;
  std::uint64_t examined = 0;
  std::string coverage;
};

// Searches the algebra for an idempotent other than 0 and id.
IdempotentSearch find_nontrivial_idempotent(const EndAlgebra& E, std::uint64_t seed = 0,
                                            const EndOptions& opts = {});

enum class Indecomposability { Indecomposable, Decomposable, ProbablyIndecomposable, Zero };
std::string indecomposability_name(Indecomposability v);

struct IndecomposableVerdict {
  Indecomposability value = Indecomposability::Indecomposable;
  std::optional<Endo> idempotent;
  std::uint64_t examined = 0;
  std::string coverage;
};
IndecomposableVerdict is_indecomposable(const FiniteModule& M, std::uint64_t seed = 0);

struct DecompositionResult {
  std::vector<Endo> idempotents;  // endomorphisms of the input module
  std::vector<FiniteModule> summands;
  std::vector<std::uint64_t> lengths;
  std::vector<std::vector<std::string>> supports;  // maximal ideal labels
  bool exhaustive = true;                          // every summand certified indecomposable
};
DecompositionResult decompose(const FiniteModule& M, std::uint64_t seed = 0);

std::vector<MaximalIdeal> support(const FiniteModule& M);

struct CyclicVerdict {
  bool value = false;
  std::optional<std::uint32_t> generator;
};
CyclicVerdict is_cyclic(const FiniteModule& M);
ModuleMask socle(const FiniteModule& M);
bool is_cocyclic(const FiniteModule& M);

// R^N modulo a*e_i - b*e_{i+1}.  R local, Ra and Rb meet in 0, Pa = Pb = 0.
FiniteModule lemma33_module(const Ring& ring, const Element& a, const Element& b, std::size_t N);

struct BatteryModule {
  std::string label;
  FiniteModule module;
};
// Cyclic R/(a) per principal ideal, 20 seeded two-generator modules with one
// relation, and the R^N / (a e_i - b e_{i+1}) truncations where they apply.
std::vector<BatteryModule> module_battery(const Ring& ring, std::uint64_t seed = 0);

}  // namespace ringlab
