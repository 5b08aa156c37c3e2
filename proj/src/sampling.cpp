#include "ringlab/sampling.hpp"

#include "ringlab/core.hpp"

namespace ringlab {

std::uint64_t draw(Rng& rng, std::uint64_t n) { return rng() % n; }

namespace {

Rational small_rational(Rng& rng, std::uint64_t p, bool in_local_ring, bool allow_zero) {
  for (;;) {
    long long num = static_cast<long long>(draw(rng, 41)) - 20;
    if (draw(rng, 4) == 0) num = 0;
    if (num == 0 && !allow_zero) continue;
    long long den = static_cast<long long>(draw(rng, 9)) + 1;
    if (in_local_ring && den % static_cast<long long>(p) == 0) continue;
    return Rational(num, den);
  }
}

}  // namespace

Element random_element(const Ring& ring, Rng& rng) {
  switch (ring.kind()) {
    case RingKind::Integers:
      return Element::integer(static_cast<long long>(draw(rng, 201)) - 100);
    case RingKind::EventuallyConstant: {
      std::uint64_t p = ring.modulus();
      std::vector<Rational> prefix(draw(rng, 5));
      for (auto& r : prefix) r = small_rational(rng, p, false, true);
      Rational tail = small_rational(rng, p, true, true);
      if (draw(rng, 3) == 0) tail *= p;
      return Element::sequence(canonical_sequence(std::move(prefix), std::move(tail)));
    }
    default:
      return Element::finite(draw(rng, ring.order()));
  }
}

Element random_unit(const Ring& ring, Rng& rng) {
  switch (ring.kind()) {
    case RingKind::Integers:
      return Element::integer(draw(rng, 2) ? 1 : -1);
    case RingKind::EventuallyConstant: {
      std::uint64_t p = ring.modulus();
      std::vector<Rational> prefix(draw(rng, 5));
      for (auto& r : prefix) r = small_rational(rng, p, false, false);
      Rational tail;
      do {
        tail = small_rational(rng, p, true, false);
      } while (p_valuation(tail, p) != 0);
      return Element::sequence(canonical_sequence(std::move(prefix), std::move(tail)));
    }
    default:
      for (;;) {
        Element x = Element::finite(draw(rng, ring.order()));
        if (is_unit(ring, x)) return x;
      }
  }
}

}  // namespace ringlab
