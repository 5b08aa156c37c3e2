#include "ringlab/core.hpp"

#include <algorithm>
#include <numeric>

namespace ringlab {

namespace {

using i128 = __int128;

// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  i128 r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    i128 q = r0 / r1;
    i128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    i128 s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) return std::nullopt;
  i128 v = s0 % static_cast<i128>(m);
  if (v < 0) v += m;
  return static_cast<std::uint64_t>(v);
}

using Poly = std::vector<std::uint64_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

// a = q*b + r over F_p; b nonzero.
void poly_divmod(Poly a, const Poly& b, std::uint64_t p, Poly& q, Poly& r) {
  trim(a);
  std::uint64_t lead_inv = *inverse_mod(b.back(), p);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    std::uint64_t t = mulmod(a.back(), lead_inv, p);
    q[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(t, b[i], p)) % p;
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

std::optional<Element> poly_quot_inverse(const Ring& ring, const Element& a) {
  std::uint64_t p = ring.modulus();
  Poly x = ring.coefficients(a);
  trim(x);
  if (x.empty()) return std::nullopt;
  Poly r0 = ring.poly_modulus(), r1 = x;
  Poly s0, s1{1};  // coefficients of x
  while (!r1.empty()) {
    Poly q, r;
    poly_divmod(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) return std::nullopt;
  std::uint64_t c = *inverse_mod(r0[0], p);
  std::vector<std::int64_t> coeffs;
  for (auto v : s0) coeffs.push_back(static_cast<std::int64_t>(mulmod(v, c, p)));
  if (coeffs.empty()) coeffs.push_back(0);
  return ring.from_coefficients(coeffs);
}

bool ec_is_unit_component(const Rational& r) { return r != 0; }

bool ec_tail_is_unit(const Rational& t, std::uint64_t p) { return t != 0 && p_valuation(t, p) == 0; }

}  // namespace

std::optional<Element> unit_inverse(const Ring& ring, const Element& a) {
  switch (ring.kind()) {
    case RingKind::ZmodN: {
      auto inv = inverse_mod(a.index(), ring.modulus());
      if (!inv) return std::nullopt;
      return Element::finite(*inv);
    }
    case RingKind::PolyQuot:
      return poly_quot_inverse(ring, a);
    case RingKind::LocalNonChain2:
      // (1 + n)^2 = 1 for n in the maximal ideal
      if (a.index() >> 2) return a;
      return std::nullopt;
    case RingKind::Product: {
      auto parts = ring.components(a);
      for (std::size_t k = 0; k < parts.size(); ++k) {
        auto inv = unit_inverse(ring.factors()[k], parts[k]);
        if (!inv) return std::nullopt;
        parts[k] = *inv;
      }
      return ring.assemble(parts);
    }
    case RingKind::Integers:
      if (abs(a.integer()) == 1) return a;
      return std::nullopt;
    case RingKind::EventuallyConstant: {
      const Sequence& s = a.sequence();
      if (!ec_tail_is_unit(s.tail, ring.modulus())) return std::nullopt;
      std::vector<Rational> prefix;
      for (const auto& r : s.prefix) {
        if (!ec_is_unit_component(r)) return std::nullopt;
        prefix.push_back(Rational(1) / r);
      }
      return Element::sequence(canonical_sequence(std::move(prefix), Rational(1) / s.tail));
    }
  }
  return std::nullopt;
}

bool is_idempotent(const Ring& ring, const Element& a) { return ring.mul(a, a) == a; }

bool is_nilpotent(const Ring& ring, const Element& a) {
  if (!ring.is_finite()) return ring.is_zero(a);  // Z and EC(p) are reduced
  return ring.is_zero(ring.pow(a, ring.order()));
}

std::vector<Element> idempotents(const Ring& ring) {
  if (ring.kind() == RingKind::Integers) return {ring.zero(), ring.one()};
  require_enumerable(ring, "idempotents");
  std::vector<Element> out;
  for (std::uint64_t i = 0; i < ring.order(); ++i)
    if (ring.mul_index(i, i) == i) out.push_back(Element::finite(i));
  return out;
}

CleanDecomposition clean_decompose(const Ring& ring, const Element& a) {
  if (ring.kind() == RingKind::EventuallyConstant) {
    const Sequence& s = a.sequence();
    std::uint64_t p = ring.modulus();
    Rational te = (s.tail == 0 || p_valuation(s.tail, p) >= 1) ? Rational(1) : Rational(0);
    std::vector<Rational> prefix;
    for (const auto& x : s.prefix) prefix.push_back(x - te != 0 ? te : Rational(1) - te);
    Element e = Element::sequence(canonical_sequence(std::move(prefix), te));
    return {ring.sub(a, e), e};
  }
  std::vector<Element> ids = idempotents(ring);
  std::vector<std::string> tried;
  for (const auto& e : ids) {
    Element u = ring.sub(a, e);
    if (is_unit(ring, u)) return {u, e};
    tried.push_back(ring.format(e));
  }
  std::string detail = ring.kind() == RingKind::Integers
                           ? "units {1,-1}, idempotents {0,1}; a - e is never a unit"
                           : "no idempotent e among " + std::to_string(ids.size()) + " makes a - e a unit";
  throw NotClean(ring.format(a), std::move(tried), detail);
}

// ---------------------------------------------------------------------------

Mask principal_ideal_mask(const Ring& ring, std::uint64_t a) {
  Mask m(ring.order(), 0);
  for (std::uint64_t r = 0; r < ring.order(); ++r) m[ring.mul_index(r, a)] = 1;
  return m;
}

namespace {

// S + T for additive subgroups given as masks.
Mask sumset(const Ring& ring, const Mask& s, const Mask& t) {
  std::vector<std::uint64_t> sv, tv;
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    if (s[i]) sv.push_back(i);
    if (t[i]) tv.push_back(i);
  }
  Mask out(s.size(), 0);
  for (auto x : sv)
    for (auto y : tv) out[ring.add_index(x, y)] = 1;
  return out;
}

Mask zero_mask(const Ring& ring) {
  Mask m(ring.order(), 0);
  m[0] = 1;
  return m;
}

}  // namespace

Mask ideal_mask(const Ring& ring, const std::vector<Element>& generators) {
  require_enumerable(ring, "ideal closure");
  Mask m = zero_mask(ring);
  for (const auto& g : generators) {
    if (m[g.index()]) continue;
    m = sumset(ring, m, principal_ideal_mask(ring, g.index()));
  }
  return m;
}

std::vector<Element> mask_elements(const Mask& mask) {
  std::vector<Element> out;
  for (std::uint64_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(Element::finite(i));
  return out;
}

std::vector<Element> ideal_generators(const Ring& ring, const Mask& ideal) {
  std::vector<Element> gens;
  Mask cur = zero_mask(ring);
  for (std::uint64_t i = 0; i < ideal.size(); ++i) {
    if (!ideal[i] || cur[i]) continue;
    gens.push_back(Element::finite(i));
    cur = sumset(ring, cur, principal_ideal_mask(ring, i));
  }
  for (std::size_t k = 0; k < gens.size();) {
    std::vector<Element> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    if (ideal_mask(ring, rest) == ideal)
      gens = std::move(rest);
    else
      ++k;
  }
  return gens;
}

Mask unit_mask(const Ring& ring) {
  require_enumerable(ring, "unit scan");
  Mask m(ring.order(), 0);
  for (std::uint64_t i = 0; i < ring.order(); ++i) m[i] = is_unit(ring, Element::finite(i));
  return m;
}

RadicalSet nilradical(const Ring& ring) {
  require_enumerable(ring, "nilradical");
  Mask m(ring.order(), 0);
  for (std::uint64_t i = 0; i < ring.order(); ++i) m[i] = is_nilpotent(ring, Element::finite(i));
  return {RadicalKind::Nilradical, mask_elements(m), ideal_generators(ring, m)};
}

RadicalSet jacobson_radical(const Ring& ring) {
  require_enumerable(ring, "jacobson radical");
  Mask units = unit_mask(ring);
  std::uint64_t one = ring.one().index();
  Mask m(ring.order(), 0);
  for (std::uint64_t x = 0; x < ring.order(); ++x) {
    bool in = true;
    for (std::uint64_t r = 0; r < ring.order() && in; ++r)
      in = units[ring.add_index(one, ring.neg_index(ring.mul_index(r, x)))];
    m[x] = in;
  }
  return {RadicalKind::Jacobson, mask_elements(m), ideal_generators(ring, m)};
}

std::optional<Element> divide(const Ring& ring, const Element& a, const Element& b) {
  switch (ring.kind()) {
    case RingKind::ZmodN: {
      std::uint64_t n = ring.modulus();
      std::uint64_t g = std::gcd(b.index(), n);
      if (a.index() % g) return std::nullopt;
      std::uint64_t m = n / g;
      std::uint64_t inv = *inverse_mod((b.index() / g) % m, m);
      return Element::finite(mulmod((a.index() / g) % m, inv, m));
    }
    case RingKind::Integers: {
      const BigInt& x = a.integer();
      const BigInt& y = b.integer();
      if (y == 0) return x == 0 ? std::optional<Element>(ring.zero()) : std::nullopt;
      if (x % y != 0) return std::nullopt;
      return Element::integer(x / y);
    }
    case RingKind::EventuallyConstant: {
      const Sequence& x = a.sequence();
      const Sequence& y = b.sequence();
      std::size_t len = std::max(x.prefix.size(), y.prefix.size());
      std::vector<Rational> prefix(len);
      for (std::size_t i = 0; i < len; ++i) {
        const Rational& xi = sequence_at(x, i);
        const Rational& yi = sequence_at(y, i);
        if (yi == 0) {
          if (xi != 0) return std::nullopt;
          prefix[i] = 0;
        } else {
          prefix[i] = xi / yi;
        }
      }
      Rational tail = 0;
      if (y.tail == 0) {
        if (x.tail != 0) return std::nullopt;
      } else {
        tail = x.tail / y.tail;
        if (boost::multiprecision::denominator(tail) % ring.modulus() == 0) return std::nullopt;
      }
      return Element::sequence(canonical_sequence(std::move(prefix), std::move(tail)));
    }
    default: {
      require_enumerable(ring, "divide");
      for (std::uint64_t t = 0; t < ring.order(); ++t)
        if (ring.mul_index(t, b.index()) == a.index()) return Element::finite(t);
      return std::nullopt;
    }
  }
}

}  // namespace ringlab
