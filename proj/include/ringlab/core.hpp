#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// a = unit + idempotent
struct CleanDecomposition {
  Element unit;
  Element idempotent;
};

// Raised by clean_decompose when no (unit, idempotent) pair sums to the
// element.  Carries the exhaustive-search evidence.
class NotClean : public DomainNegative {
 public:
  NotClean(std::string element, std::vector<std::string> idempotents_tried, std::string detail)
      : DomainNegative("NotClean: " + element + " (" + detail + ")"),
        element_(std::move(element)),
        idempotents_tried_(std::move(idempotents_tried)) {}

  const std::string& element() const { return element_; }
  const std::vector<std::string>& idempotents_tried() const { return idempotents_tried_; }

 private:
  std::string element_;
  std::vector<std::string> idempotents_tried_;
};

std::optional<Element> unit_inverse(const Ring& ring, const Element& a);
inline bool is_unit(const Ring& ring, const Element& a) { return unit_inverse(ring, a).has_value(); }
bool is_idempotent(const Ring& ring, const Element& a);
bool is_nilpotent(const Ring& ring, const Element& a);

// All idempotents in canonical order.  Finite rings and Integers only.
std::vector<Element> idempotents(const Ring& ring);

CleanDecomposition clean_decompose(const Ring& ring, const Element& a);

enum class RadicalKind { Nilradical, Jacobson };

struct RadicalSet {
  RadicalKind which;
  std::vector<Element> elements;    // canonical order
  std::vector<Element> generators;  // irredundant, regenerates `elements`
};

RadicalSet nilradical(const Ring& ring);
RadicalSet jacobson_radical(const Ring& ring);

// Least t (canonical order) with a = t*b, if any.
std::optional<Element> divide(const Ring& ring, const Element& a, const Element& b);

// ---------------------------------------------------------------------------
// Finite-ring subsets as membership masks indexed by element index.

using Mask = std::vector<char>;

Mask principal_ideal_mask(const Ring& ring, std::uint64_t a);
// Ideal generated by the given elements: closure under + and ring multiplication.
Mask ideal_mask(const Ring& ring, const std::vector<Element>& generators);
std::vector<Element> mask_elements(const Mask& mask);
// Greedy irredundant generating subset of an ideal given by its mask.
std::vector<Element> ideal_generators(const Ring& ring, const Mask& ideal);
// Unit flags for every element of a finite ring.
Mask unit_mask(const Ring& ring);

}  // namespace ringlab
