#include <doctest.h>

#include "ringlab/corpus.hpp"
#include "ringlab/sampling.hpp"
#include "ringlab/spectrum.hpp"

using namespace ringlab;

namespace {

using V = std::vector<std::uint64_t>;

V indices(const std::vector<Element>& v) {
  V out;
  for (const auto& e : v) out.push_back(e.index());
  return out;
}

}  // namespace

TEST_CASE("ideal closure") {
  Ring r = Ring::zmod(12);
  CHECK(indices(ideal_closure(r, {r.at(4), r.at(6)}).elements) == V{0, 2, 4, 6, 8, 10});
  CHECK(indices(ideal_closure(r, {}).elements) == V{0});
  Ring r6 = Ring::zmod(6);
  CHECK(ideal_closure(r6, {r6.at(5)}).size() == 6);
  Ring l = Ring::local_non_chain2();
  CHECK(ideal_closure(l, {l.parse_element("x"), l.parse_element("y")}).size() == 4);
}

TEST_CASE("primitive idempotents") {
  CHECK(indices(primitive_idempotents(Ring::zmod(12))) == V{4, 9});
  CHECK(indices(primitive_idempotents(Ring::zmod(8))) == V{1});
  Ring p = parse_ring_spec("Prod(Zn(2),Zn(3))");
  auto e = primitive_idempotents(p);
  REQUIRE(e.size() == 2);
  CHECK(p.format(e[0]) == "(0,1)");
  CHECK(p.format(e[1]) == "(1,0)");
  for (const auto& ring : finite_corpus()) {
    auto prims = primitive_idempotents(ring);
    Element sum = ring.zero();
    for (std::size_t i = 0; i < prims.size(); ++i) {
      sum = ring.add(sum, prims[i]);
      for (std::size_t j = i + 1; j < prims.size(); ++j) CHECK(ring.is_zero(ring.mul(prims[i], prims[j])));
    }
    CHECK(sum == ring.one());
  }
}

TEST_CASE("maximal spectrum of finite rings") {
  SUBCASE("Zn(12)") {
    Ring r = Ring::zmod(12);
    auto spec = max_spectrum(r);
    REQUIRE(spec.points.size() == 2);
    CHECK(indices(spec.points[0].ideal->elements) == V{0, 2, 4, 6, 8, 10});
    CHECK(indices(spec.points[1].ideal->elements) == V{0, 3, 6, 9});
    CHECK(spec.points[0].primitive_idempotent->index() == 9);
    CHECK(spec.points[1].primitive_idempotent->index() == 4);
    CHECK(spec.topology == Topology::FiniteDiscrete);
  }
  SUBCASE("a field has the single point {0}") {
    Ring f4 = parse_ring_spec("Quot(Zn(2),[1,1,1])");
    auto spec = max_spectrum(f4);
    REQUIRE(spec.points.size() == 1);
    CHECK(indices(spec.points[0].ideal->elements) == V{0});
  }
  SUBCASE("corpus invariants") {
    for (const auto& ring : finite_corpus()) {
      CAPTURE(ring.spec());
      auto spec = max_spectrum(ring);
      CHECK(spec.points.size() == primitive_idempotents(ring).size());
      for (std::size_t i = 0; i < spec.points.size(); ++i) {
        const auto& m = spec.points[i];
        CHECK(verify_maximal(ring, m));
        CHECK_FALSE(m.contains(ring, *m.primitive_idempotent));
        for (std::size_t j = i + 1; j < spec.points.size(); ++j) {
          // comaximal: P_i + P_j is the unit ideal
          std::vector<Element> gens = m.ideal->elements;
          gens.insert(gens.end(), spec.points[j].ideal->elements.begin(), spec.points[j].ideal->elements.end());
          CHECK(ideal_closure(ring, gens).contains(ring.one()));
        }
      }
      // each maximal ideal contains exactly one of e, 1 - e
      for (const auto& e : idempotents(ring))
        for (const auto& m : spec.points)
          CHECK(m.contains(ring, e) != m.contains(ring, ring.sub(ring.one(), e)));
    }
  }
  SUBCASE("maximal ideals are exactly the maximal elements of the ideal lattice") {
    // independent oracle for Zn: maximal ideals are (q) for prime q | n
    for (std::uint64_t n = 2; n <= 64; ++n) {
      Ring r = Ring::zmod(n);
      std::vector<V> expected;
      for (std::uint64_t q = 2; q <= n; ++q) {
        if (n % q || !is_prime(q)) continue;
        V ideal;
        for (std::uint64_t x = 0; x < n; x += q) ideal.push_back(x);
        expected.push_back(ideal);
      }
      std::sort(expected.begin(), expected.end());
      std::vector<V> got;
      for (const auto& m : max_spectrum(r).points) got.push_back(indices(m.ideal->elements));
      CHECK(got == expected);
    }
  }
}

TEST_CASE("spectrum of infinite rings") {
  Ring ec = Ring::eventually_constant(2);
  auto spec = max_spectrum(ec);
  CHECK(spec.topology == Topology::OnePointCompactificationOfDiscrete);
  auto p3 = point(ec, "P@3");
  CHECK(p3.contains(ec, ec.parse_element("[1,1,1,0;1]")));
  CHECK_FALSE(p3.contains(ec, ec.parse_element("[1,1,1;1]")));
  CHECK(p3.contains(ec, ec.parse_element("[1,1,1;0]")));
  auto pinf = point(ec, "P@inf");
  CHECK(pinf.contains(ec, ec.parse_element("[1;6]")));
  CHECK(pinf.contains(ec, ec.parse_element("[1;0]")));
  CHECK_FALSE(pinf.contains(ec, ec.parse_element("[0;3]")));
  CHECK(max_spectrum(Ring::integers()).topology == Topology::NotTotallyDisconnected);
  CHECK_THROWS_AS(point(ec, "Q@1"), SyntaxError);
}

TEST_CASE("localization kernels") {
  SUBCASE("Zn(12)") {
    Ring r = Ring::zmod(12);
    auto spec = max_spectrum(r);
    auto k2 = localization_kernel(r, spec.points[0]);
    CHECK(indices(k2.kernel->elements) == V{0, 4, 8});
    REQUIRE(k2.idempotent_generators);
    CHECK(indices(*k2.idempotent_generators) == V{4});
    auto k3 = localization_kernel(r, spec.points[1]);
    CHECK(indices(k3.kernel->elements) == V{0, 3, 6, 9});
    REQUIRE(k3.idempotent_generators);
    CHECK(indices(*k3.idempotent_generators) == V{9});
  }
  SUBCASE("finite corpus: idempotent generated and re-closes exactly") {
    for (const auto& ring : finite_corpus()) {
      for (const auto& m : max_spectrum(ring).points) {
        auto lk = localization_kernel(ring, m);
        REQUIRE(lk.idempotent_generators);
        CHECK(ideal_closure(ring, *lk.idempotent_generators) == *lk.kernel);
        for (const auto& g : *lk.idempotent_generators) CHECK(is_idempotent(ring, g));
        // kernel of R -> R_P is R(1 - e) for the point's primitive idempotent
        CHECK(*lk.kernel == ideal_closure(ring, {ring.sub(ring.one(), *m.primitive_idempotent)}));
        for (const auto& a : lk.kernel->elements) {
          auto e = lk.idempotent_witness(ring, a);
          REQUIRE(e);
          CHECK(ring.mul(a, *e) == a);
        }
      }
    }
  }
  SUBCASE("EC(2) sampled kernel elements") {
    Ring ec = Ring::eventually_constant(2);
    Rng rng(5);
    auto p5 = localization_kernel(ec, point(ec, "P@5"));
    REQUIRE(p5.idempotent_generators);
    CHECK(ec.format(p5.idempotent_generators->front()) == "[1,1,1,1,1,0;1]");
    auto pinf = localization_kernel(ec, point(ec, "P@inf"));
    for (int i = 0; i < 100; ++i) {
      Element x = random_element(ec, rng);
      Element in5 = ec.mul(x, p5.idempotent_generators->front());
      CHECK(p5.contains(ec, in5));
      auto e = p5.idempotent_witness(ec, in5);
      REQUIRE(e);
      CHECK(ec.mul(in5, *e) == in5);
      Sequence s = x.sequence();
      s.tail = 0;
      Element inf = Element::sequence(canonical_sequence(s.prefix, 0));
      CHECK(pinf.contains(ec, inf));
      auto f = pinf.idempotent_witness(ec, inf);
      REQUIRE(f);
      CHECK(is_idempotent(ec, *f));
      CHECK(pinf.contains(ec, *f));
      CHECK(ec.mul(inf, *f) == inf);
    }
  }
}

TEST_CASE("mu and the Gelfand property") {
  Ring r = Ring::zmod(12);
  auto spec = max_spectrum(r);
  CHECK(mu(r, spec.points[0]) == spec.points[0]);
  CHECK(mu(r, *spec.points[1].ideal) == spec.points[1]);
  Ring ec = Ring::eventually_constant(2);
  CHECK(mu(ec, "P@3").label == "P@3");
  CHECK_THROWS_AS(mu(Ring::integers(), "(2)"), NotGelfand);
  CHECK(is_gelfand(r).value);
  CHECK(is_gelfand(ec).value);
  auto zg = is_gelfand(Ring::integers());
  CHECK_FALSE(zg.value);
  CHECK(zg.witness.size() == 3);
  for (const auto& ring : finite_corpus())
    for (const auto& m : max_spectrum(ring).points) CHECK(mu(ring, m) == m);
  // a prime ideal (here the nilradical-free prime (2) in Zn(4)) maps to its unique maximal ideal
  Ring r4 = Ring::zmod(4);
  CHECK(mu(r4, ideal_closure(r4, {r4.at(2)})).label == "P@0");
  CHECK_THROWS_AS(mu(Ring::zmod(6), ideal_closure(Ring::zmod(6), {})), InvalidSpec);
}

TEST_CASE("topology") {
  CHECK(max_totally_disconnected(Ring::zmod(12)).value);
  CHECK(max_totally_disconnected(Ring::eventually_constant(2)).value);
  CHECK_FALSE(max_totally_disconnected(Ring::integers()).value);
  auto blocks = connected_components_max(Ring::zmod(12));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].indicator.index() == 9);
  CHECK(blocks[1].indicator.index() == 4);
  CHECK(connected_components_max(Ring::zmod(7)).size() == 1);
  CHECK(connected_components_max(Ring::zmod(7))[0].indicator.index() == 1);
  Ring p = parse_ring_spec("Prod(Zn(2),Zn(2))");
  auto pb = connected_components_max(p);
  REQUIRE(pb.size() == 2);
}
