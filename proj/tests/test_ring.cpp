#include <doctest.h>

#include "ringlab/corpus.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/sampling.hpp"

using namespace ringlab;

TEST_CASE("ring specs parse and print canonically") {
  SUBCASE("Zn") {
    Ring r = parse_ring_spec("Zn(12)");
    CHECK(r.kind() == RingKind::ZmodN);
    CHECK(r.order() == 12);
    CHECK(r.spec() == "Zn(12)");
  }
  SUBCASE("product order") {
    Ring r = parse_ring_spec("Prod(Zn(4), Zn(3))");
    CHECK(r.kind() == RingKind::Product);
    CHECK(r.order() == 12);
    CHECK(r.spec() == "Prod(Zn(4),Zn(3))");
  }
  SUBCASE("F4 as a quotient") {
    Ring r = parse_ring_spec("Quot(Zn(2),[1,1,1])");
    CHECK(r.order() == 4);
    // x^2+x+1 has no root in F2, so the degree-2 quotient is a field
    for (int x = 0; x < 2; ++x) CHECK((x * x + x + 1) % 2 != 0);
  }
  SUBCASE("infinite kinds") {
    CHECK_FALSE(parse_ring_spec("Z").is_finite());
    CHECK_FALSE(parse_ring_spec("EC(2)").is_finite());
    CHECK_THROWS_AS(parse_ring_spec("Z").order(), InfiniteEnumeration);
  }
  SUBCASE("print then parse is the identity") {
    for (const auto& r : builtin_corpus()) CHECK(parse_ring_spec(r.spec()).spec() == r.spec());
    Ring nested = parse_ring_spec("Prod(Zn(9),LocalNonChain2)");
    CHECK(parse_ring_spec(nested.spec()).spec() == nested.spec());
  }
}

TEST_CASE("ring spec errors") {
  CHECK_THROWS_AS(parse_ring_spec("Zn(1)"), InvalidSpec);
  CHECK_THROWS_AS(parse_ring_spec("Zn(12"), SyntaxError);
  CHECK_THROWS_AS(parse_ring_spec("Quot(Zn(2),[1,1,0])"), InvalidSpec);
  CHECK_THROWS_AS(parse_ring_spec("Quot(Zn(4),[1,1,1])"), InvalidSpec);
  CHECK_THROWS_AS(parse_ring_spec("EC(6)"), InvalidSpec);
  CHECK_THROWS_AS(parse_ring_spec("Prod(Zn(2),Z)"), InvalidSpec);
  CHECK_THROWS_AS(parse_ring_spec("Foo(3)"), SyntaxError);
  CHECK_THROWS_AS(parse_ring_spec("Zn(3) junk"), SyntaxError);
}

TEST_CASE("element literals") {
  SUBCASE("Zn reduces") {
    Ring r = Ring::zmod(12);
    CHECK(r.parse_element("17").index() == 5);
    CHECK(r.parse_element("-1").index() == 11);
  }
  SUBCASE("Quot reduces by the modulus") {
    Ring f4 = parse_ring_spec("Quot(Zn(2),[1,1,1])");
    // x^2 = x + 1
    CHECK(f4.format(f4.parse_element("[0,0,1]")) == "[1,1]");
    Element x = f4.parse_element("[0,1]");
    CHECK(f4.format(f4.mul(x, x)) == "[1,1]");
  }
  SUBCASE("LocalNonChain2") {
    Ring r = Ring::local_non_chain2();
    Element x = r.parse_element("x"), y = r.parse_element("y");
    CHECK(r.format(x) == "x");
    CHECK(r.format(r.add(r.one(), r.add(x, y))) == "1+x+y");
    CHECK(r.is_zero(r.mul(x, y)));
    CHECK(r.is_zero(r.mul(x, x)));
    CHECK(r.parse_element("[1,1,0]") == r.add(r.one(), x));
  }
  SUBCASE("Product") {
    Ring r = parse_ring_spec("Prod(Zn(4),Zn(3))");
    Element a = r.parse_element("(3,2)");
    CHECK(r.format(a) == "(3,2)");
    CHECK(r.format(r.mul(a, a)) == "(1,1)");
  }
  SUBCASE("EC canonical trimming") {
    Ring r = Ring::eventually_constant(2);
    Element a = r.parse_element("[1/2,3,3;3]");
    CHECK(r.format(a) == "[1/2;3]");
    CHECK(r.format(r.parse_element("[2/4;6/2]")) == "[1/2;3]");
    CHECK(r.format(r.parse_element("5")) == "[;5]");
    CHECK_THROWS_AS(r.parse_element("[1;1/2]"), SyntaxError);
    CHECK(r.format(r.parse_element("[7;1/3]")) == "[7;1/3]");
  }
  SUBCASE("EC prefix padding") {
    Ring r = Ring::eventually_constant(2);
    Element a = r.parse_element("[1;2]"), b = r.parse_element("[0,5;3]");
    CHECK(r.format(r.add(a, b)) == "[1,7;5]");
    CHECK(r.format(r.mul(a, b)) == "[0,10;6]");
    CHECK(r.format(r.sub(a, a)) == "[;0]");
  }
  SUBCASE("formatting round-trips") {
    Rng rng(7);
    for (const auto& ring : builtin_corpus()) {
      for (int i = 0; i < 30; ++i) {
        Element a = random_element(ring, rng);
        CHECK(ring.is_member(a));
        CHECK(ring.parse_element(ring.format(a)) == a);
      }
    }
  }
}

TEST_CASE("canonical element order") {
  Ring z = Ring::integers();
  CHECK(z.less(z.from_int(1), z.from_int(-1)));
  CHECK(z.less(z.from_int(-1), z.from_int(2)));
  CHECK(z.less(z.from_int(0), z.from_int(1)));
  Ring ec = Ring::eventually_constant(2);
  CHECK(ec.less(ec.parse_element("5"), ec.parse_element("[0;1]")));
  CHECK(ec.less(ec.parse_element("[1;0]"), ec.parse_element("[3;0]")));
  CHECK(ec.less(ec.parse_element("[1/2;0]"), ec.parse_element("[1/3;0]")));
  Ring f9 = parse_ring_spec("Quot(Zn(3),[1,0,1])");
  // lexicographic on coefficient lists, constant term first
  CHECK(f9.less(f9.parse_element("[0,2]"), f9.parse_element("[1,0]")));
  Ring pr = parse_ring_spec("Prod(Zn(4),Zn(3))");
  CHECK(pr.less(pr.parse_element("(0,2)"), pr.parse_element("(1,0)")));
}

namespace {

bool axioms_hold(const Ring& ring, const Element& a, const Element& b, const Element& c) {
  return ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c)) &&
         ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c)) && ring.add(a, b) == ring.add(b, a) &&
         ring.mul(a, b) == ring.mul(b, a) && ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c));
}

bool identities_hold(const Ring& ring, const Element& a) {
  return ring.add(a, ring.zero()) == a && ring.mul(a, ring.one()) == a && ring.is_zero(ring.add(a, ring.neg(a)));
}

}  // namespace

TEST_CASE("ring axioms hold exactly on the corpus") {
  for (const auto& ring : builtin_corpus()) {
    CAPTURE(ring.spec());
    std::uint64_t failures = 0;
    if (ring.is_finite()) {
      // exhaustive over all triples (order <= 64 on the corpus)
      REQUIRE(ring.order() <= 64);
      for (std::uint64_t a = 0; a < ring.order(); ++a) {
        failures += !identities_hold(ring, ring.at(a));
        for (std::uint64_t b = 0; b < ring.order(); ++b)
          for (std::uint64_t c = 0; c < ring.order(); ++c)
            failures += !axioms_hold(ring, ring.at(a), ring.at(b), ring.at(c));
      }
    } else {
      Rng rng(11);
      for (int i = 0; i < 300; ++i) {
        Element a = random_element(ring, rng), b = random_element(ring, rng), c = random_element(ring, rng);
        failures += !axioms_hold(ring, a, b, c);
        failures += !identities_hold(ring, a);
        failures += !ring.is_member(ring.mul(a, b)) || !ring.is_member(ring.add(a, b));
      }
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("Zn arithmetic agrees with machine integers") {
  for (std::uint64_t n = 2; n <= 64; ++n) {
    Ring r = Ring::zmod(n);
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b) {
        CHECK(r.add(r.at(a), r.at(b)).index() == (a + b) % n);
        CHECK(r.mul(r.at(a), r.at(b)).index() == (a * b) % n);
      }
  }
}

TEST_CASE("enumeration cap") {
  ScopedEnumerationCap cap(10);
  CHECK_THROWS_AS(Ring::zmod(12).elements(), EnumerationCapExceeded);
  CHECK(Ring::zmod(10).elements().size() == 10);
  CHECK_THROWS_AS(require_enumerable(Ring::integers(), "x"), InfiniteEnumeration);
}
