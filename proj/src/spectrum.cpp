#include "ringlab/spectrum.hpp"

#include <algorithm>
#include <charconv>

namespace ringlab {

Ideal ideal_from_mask(const Ring& ring, Mask mask) {
  Ideal I;
  I.elements = mask_elements(mask);
  I.generators = ideal_generators(ring, mask);
  I.mask = std::move(mask);
  return I;
}

Ideal ideal_closure(const Ring& ring, const std::vector<Element>& generators) {
  Ideal I;
  I.mask = ideal_mask(ring, generators);
  I.elements = mask_elements(I.mask);
  I.generators = generators;
  return I;
}

std::vector<Element> primitive_idempotents(const Ring& ring) {
  require_enumerable(ring, "primitive idempotents");
  std::vector<Element> ids = idempotents(ring);
  std::vector<Element> out;
  for (const auto& e : ids) {
    if (ring.is_zero(e)) continue;
    bool minimal = true;
    for (const auto& f : ids) {
      if (ring.is_zero(f) || f == e) continue;
      if (ring.mul(f, e) == f) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

std::string topology_name(Topology t) {
  switch (t) {
    case Topology::FiniteDiscrete:
      return "finite-discrete";
    case Topology::OnePointCompactificationOfDiscrete:
      return "one-point-compactification-of-discrete";
    case Topology::NotTotallyDisconnected:
      return "not-totally-disconnected";
  }
  return {};
}

bool MaximalIdeal::contains(const Ring& ring, const Element& a) const {
  switch (kind) {
    case Kind::Finite:
      return ideal->contains(a);
    case Kind::EcIndex:
      return sequence_at(a.sequence(), index) == 0;
    case Kind::EcInfinity: {
      const Rational& t = a.sequence().tail;
      return t == 0 || p_valuation(t, p) >= 1;
    }
    case Kind::IntegerPrime:
      return a.integer() % index == 0;
  }
  (void)ring;
  return false;
}

MaxSpectrum max_spectrum(const Ring& ring) {
  MaxSpectrum spec;
  if (ring.kind() == RingKind::Integers) {
    spec.topology = Topology::NotTotallyDisconnected;
    spec.descriptor = "{(q) : q prime}";
    return spec;
  }
  if (ring.kind() == RingKind::EventuallyConstant) {
    spec.topology = Topology::OnePointCompactificationOfDiscrete;
    spec.descriptor = "{P@k : k >= 0} u {P@inf}; R/P@k = Q, R/P@inf = F_" + std::to_string(ring.modulus());
    return spec;
  }
  require_enumerable(ring, "max spectrum");
  RadicalSet J = jacobson_radical(ring);
  for (const auto& e : primitive_idempotents(ring)) {
    std::vector<Element> gens{ring.sub(ring.one(), e)};
    gens.insert(gens.end(), J.generators.begin(), J.generators.end());
    MaximalIdeal m;
    m.kind = MaximalIdeal::Kind::Finite;
    m.ideal = ideal_closure(ring, gens);
    m.primitive_idempotent = e;
    spec.points.push_back(std::move(m));
  }
  std::sort(spec.points.begin(), spec.points.end(), [&](const MaximalIdeal& a, const MaximalIdeal& b) {
    const auto& x = a.ideal->elements;
    const auto& y = b.ideal->elements;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](const Element& u, const Element& v) { return u.index() < v.index(); });
  });
  for (std::size_t k = 0; k < spec.points.size(); ++k) spec.points[k].label = "P@" + std::to_string(k);
  spec.topology = Topology::FiniteDiscrete;
  spec.descriptor = std::to_string(spec.points.size()) + " point(s)";
  return spec;
}

MaximalIdeal ec_point(const Ring& ring, std::uint64_t k) {
  if (ring.kind() != RingKind::EventuallyConstant) throw UnsupportedRing("ec_point requires EC(p)");
  MaximalIdeal m;
  m.kind = MaximalIdeal::Kind::EcIndex;
  m.index = k;
  m.p = ring.modulus();
  m.label = "P@" + std::to_string(k);
  return m;
}

MaximalIdeal ec_point_infinity(const Ring& ring) {
  if (ring.kind() != RingKind::EventuallyConstant) throw UnsupportedRing("ec_point_infinity requires EC(p)");
  MaximalIdeal m;
  m.kind = MaximalIdeal::Kind::EcInfinity;
  m.p = ring.modulus();
  m.label = "P@inf";
  return m;
}

namespace {

std::uint64_t parse_index(std::string_view s, std::string_view label) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw SyntaxError("bad point label '" + std::string(label) + "'");
  return v;
}

}  // namespace

MaximalIdeal point(const Ring& ring, std::string_view label) {
  if (ring.kind() == RingKind::Integers) {
    if (label.size() < 3 || label.front() != '(' || label.back() != ')')
      throw SyntaxError("Integers point label must be (q), got '" + std::string(label) + "'");
    std::uint64_t q = parse_index(label.substr(1, label.size() - 2), label);
    if (!is_prime(q)) throw InvalidSpec("(" + std::to_string(q) + ") is not a maximal ideal of Z");
    MaximalIdeal m;
    m.kind = MaximalIdeal::Kind::IntegerPrime;
    m.index = q;
    m.label = std::string(label);
    return m;
  }
  if (label.substr(0, 2) != "P@") throw SyntaxError("point label must start with P@, got '" + std::string(label) + "'");
  std::string_view rest = label.substr(2);
  if (ring.kind() == RingKind::EventuallyConstant) {
    if (rest == "inf") return ec_point_infinity(ring);
    return ec_point(ring, parse_index(rest, label));
  }
  std::uint64_t k = parse_index(rest, label);
  MaxSpectrum spec = max_spectrum(ring);
  if (k >= spec.points.size()) throw InvalidSpec("no point " + std::string(label) + " in " + ring.spec());
  return spec.points[k];
}

bool verify_maximal(const Ring& ring, const MaximalIdeal& m) {
  const Ideal& P = *m.ideal;
  if (P.contains(ring.one())) return false;
  std::uint64_t one = ring.one().index();
  for (std::uint64_t x = 0; x < ring.order(); ++x) {
    if (P.mask[x]) continue;
    bool found = false;
    for (std::uint64_t y = 0; y < ring.order() && !found; ++y)
      found = P.mask[ring.add_index(ring.mul_index(x, y), ring.neg_index(one))];
    if (!found) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Mask localization_kernel_scan(const Ring& ring, const MaximalIdeal& m) {
  require_enumerable(ring, "localization kernel");
  const Ideal& P = *m.ideal;
  Mask out(ring.order(), 0);
  for (std::uint64_t a = 0; a < ring.order(); ++a) {
    for (std::uint64_t s = 0; s < ring.order(); ++s) {
      if (!P.mask[s] && ring.mul_index(s, a) == 0) {
        out[a] = 1;
        break;
      }
    }
  }
  return out;
}

LocalizationKernel localization_kernel(const Ring& ring, const MaximalIdeal& m) {
  LocalizationKernel lk;
  lk.point = m;
  switch (m.kind) {
    case MaximalIdeal::Kind::Finite: {
      Mask ker = localization_kernel_scan(ring, m);
      std::vector<Element> gens;
      Mask cur = ideal_mask(ring, {});
      for (const auto& e : idempotents(ring)) {
        if (!ker[e.index()] || cur[e.index()]) continue;
        gens.push_back(e);
        cur = ideal_mask(ring, gens);
      }
      if (cur == ker) lk.idempotent_generators = gens;
      lk.kernel = ideal_from_mask(ring, std::move(ker));
      return lk;
    }
    case MaximalIdeal::Kind::EcIndex: {
      std::vector<Rational> prefix(m.index + 1, Rational(1));
      prefix[m.index] = 0;
      lk.idempotent_generators = std::vector<Element>{Element::sequence(canonical_sequence(prefix, Rational(1)))};
      lk.descriptor = "R(1 - e_" + std::to_string(m.index) + ") = {x : x_" + std::to_string(m.index) + " = 0}";
      return lk;
    }
    case MaximalIdeal::Kind::EcInfinity: {
      lk.idempotent_generators = std::vector<Element>{};  // e_0, e_1, ... (infinite family)
      lk.descriptor = "{x : tail(x) = 0}, generated by {e_k : k >= 0}";
      return lk;
    }
    case MaximalIdeal::Kind::IntegerPrime:
      throw UnsupportedRing("localization kernel is not computed for Z");
  }
  return lk;
}

bool LocalizationKernel::contains(const Ring& ring, const Element& a) const {
  switch (point.kind) {
    case MaximalIdeal::Kind::Finite:
      return kernel->contains(a);
    case MaximalIdeal::Kind::EcIndex:
      return sequence_at(a.sequence(), point.index) == 0;
    case MaximalIdeal::Kind::EcInfinity:
      return a.sequence().tail == 0;
    case MaximalIdeal::Kind::IntegerPrime:
      break;
  }
  (void)ring;
  return false;
}

std::optional<Element> LocalizationKernel::idempotent_witness(const Ring& ring, const Element& a) const {
  if (!contains(ring, a) || !idempotent_generators) return std::nullopt;
  switch (point.kind) {
    case MaximalIdeal::Kind::Finite: {
      // the join of the generators: e = 1 - prod(1 - g)
      Element c = ring.one();
      for (const auto& g : *idempotent_generators) c = ring.mul(c, ring.sub(ring.one(), g));
      Element e = ring.sub(ring.one(), c);
      return e;
    }
    case MaximalIdeal::Kind::EcIndex:
      return idempotent_generators->front();
    case MaximalIdeal::Kind::EcInfinity: {
      // e_0 + ... + e_{L-1} over the prefix support
      std::vector<Rational> prefix(a.sequence().prefix.size(), Rational(1));
      return Element::sequence(canonical_sequence(std::move(prefix), Rational(0)));
    }
    case MaximalIdeal::Kind::IntegerPrime:
      break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

MaximalIdeal mu(const Ring& ring, const Ideal& prime) {
  if (ring.kind() == RingKind::Integers) throw NotGelfand("Z: (0) lies in (2) and in (3)");
  MaxSpectrum spec = max_spectrum(ring);
  const MaximalIdeal* found = nullptr;
  for (const auto& m : spec.points) {
    bool sub = std::all_of(prime.elements.begin(), prime.elements.end(),
                           [&](const Element& x) { return m.ideal->contains(x); });
    if (!sub) continue;
    if (found) throw InvalidSpec("ideal is not prime: it lies in more than one maximal ideal");
    found = &m;
  }
  if (!found) throw InvalidSpec("ideal is the unit ideal");
  return *found;
}

MaximalIdeal mu(const Ring& ring, const MaximalIdeal& p) {
  if (ring.kind() == RingKind::Integers) throw NotGelfand("Z: (0) lies in (2) and in (3)");
  if (p.kind == MaximalIdeal::Kind::Finite) return mu(ring, *p.ideal);
  return p;
}

MaximalIdeal mu(const Ring& ring, std::string_view label) {
  if (ring.kind() == RingKind::Integers) throw NotGelfand("Z: (0) lies in (2) and in (3)");
  return mu(ring, point(ring, label));
}

Verdict is_gelfand(const Ring& ring) {
  Verdict v;
  switch (ring.kind()) {
    case RingKind::Integers:
      v.value = false;
      v.witness = {Element::integer(0), Element::integer(2), Element::integer(3)};
      v.note = "(0) lies in (2) and in (3)";
      return v;
    case RingKind::EventuallyConstant:
      v.value = true;
      v.note = "classified: every prime lies in exactly one of P@k, P@inf";
      return v;
    default:
      v.value = true;
      v.note = "finite ring: every prime ideal is maximal";
      v.scanned = max_spectrum(ring).points.size();
      return v;
  }
}

Verdict max_totally_disconnected(const Ring& ring) {
  Verdict v;
  Topology t = max_spectrum(ring).topology;
  v.value = t != Topology::NotTotallyDisconnected;
  v.note = topology_name(t);
  return v;
}

std::vector<ComponentBlock> connected_components_max(const Ring& ring) {
  require_enumerable(ring, "connected components");
  std::vector<ComponentBlock> out;
  for (const auto& m : max_spectrum(ring).points) out.push_back({{m}, *m.primitive_idempotent});
  return out;
}

}  // namespace ringlab
