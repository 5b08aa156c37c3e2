#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/core.hpp"
#include "ringlab/verdict.hpp"

namespace ringlab {

// Ideal of a finite ring, materialized.
struct Ideal {
  std::vector<Element> generators;
  std::vector<Element> elements;  // canonical order
  Mask mask;

  bool contains(const Element& a) const { return mask[a.index()] != 0; }
  std::size_t size() const { return elements.size(); }
  bool operator==(const Ideal& o) const { return mask == o.mask; }
};

Ideal ideal_closure(const Ring& ring, const std::vector<Element>& generators);
Ideal ideal_from_mask(const Ring& ring, Mask mask);

// The minimal nonzero idempotents, in canonical order.
std::vector<Element> primitive_idempotents(const Ring& ring);

enum class Topology { FiniteDiscrete, OnePointCompactificationOfDiscrete, NotTotallyDisconnected };
std::string topology_name(Topology t);

// A maximal ideal.  Finite rings carry the materialized ideal and the
// primitive idempotent e with e not in P.  EC(p) points are P@k (x_k = 0)
// and P@inf (tail in pD_(p)).  Integers points are (q) for a prime q.
struct MaximalIdeal {
  enum class Kind { Finite, EcIndex, EcInfinity, IntegerPrime };
  Kind kind = Kind::Finite;
  std::string label;
  std::optional<Ideal> ideal;
  std::optional<Element> primitive_idempotent;
  std::uint64_t index = 0;  // EC point index, or the prime q
  std::uint64_t p = 0;      // EC prime

  bool contains(const Ring& ring, const Element& a) const;
  bool operator==(const MaximalIdeal& o) const { return label == o.label && kind == o.kind; }
};

struct MaxSpectrum {
  std::vector<MaximalIdeal> points;  // finite rings only
  Topology topology = Topology::FiniteDiscrete;
  std::string descriptor;
};

MaxSpectrum max_spectrum(const Ring& ring);

// Parses "P@k", "P@inf" (EC) or "(q)" (Integers); finite rings accept
// "P@k" as an index into max_spectrum(ring).points.
MaximalIdeal point(const Ring& ring, std::string_view label);
MaximalIdeal ec_point(const Ring& ring, std::uint64_t k);
MaximalIdeal ec_point_infinity(const Ring& ring);

// For every x outside P some y has xy - 1 in P (finite rings).
bool verify_maximal(const Ring& ring, const MaximalIdeal& m);

struct LocalizationKernel {
  MaximalIdeal point;
  std::optional<Ideal> kernel;  // finite rings
  std::optional<std::vector<Element>> idempotent_generators;
  std::string descriptor;  // EC(p)

  bool contains(const Ring& ring, const Element& a) const;
  // An idempotent e of the kernel with a*e = a, built from the generators.
  std::optional<Element> idempotent_witness(const Ring& ring, const Element& a) const;
};

LocalizationKernel localization_kernel(const Ring& ring, const MaximalIdeal& m);
// Brute-force {a : exists s not in P with sa = 0} (finite rings).
Mask localization_kernel_scan(const Ring& ring, const MaximalIdeal& m);

// The unique maximal ideal containing a prime ideal.
MaximalIdeal mu(const Ring& ring, const Ideal& prime);
MaximalIdeal mu(const Ring& ring, const MaximalIdeal& point);
MaximalIdeal mu(const Ring& ring, std::string_view label);

Verdict is_gelfand(const Ring& ring);
Verdict max_totally_disconnected(const Ring& ring);

struct ComponentBlock {
  std::vector<MaximalIdeal> points;
  Element indicator;
};
std::vector<ComponentBlock> connected_components_max(const Ring& ring);

}  // namespace ringlab
