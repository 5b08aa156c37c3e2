#include <doctest.h>

#include <numeric>
#include <set>

#include "ringlab/core.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/sampling.hpp"

using namespace ringlab;

namespace {

std::vector<std::uint64_t> indices(const std::vector<Element>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& e : v) out.push_back(e.index());
  return out;
}

using V = std::vector<std::uint64_t>;

}  // namespace

TEST_CASE("units and inverses") {
  SUBCASE("Zn(12)") {
    Ring r = Ring::zmod(12);
    auto inv = unit_inverse(r, r.at(5));
    REQUIRE(inv);
    CHECK(inv->index() == 5);
    CHECK_FALSE(is_unit(r, r.at(4)));
  }
  SUBCASE("Zn brute force") {
    for (std::uint64_t n = 2; n <= 64; ++n) {
      Ring r = Ring::zmod(n);
      for (std::uint64_t a = 0; a < n; ++a) {
        bool brute = false;
        for (std::uint64_t b = 0; b < n; ++b) brute = brute || (a * b) % n == 1 % n;
        CHECK(is_unit(r, r.at(a)) == brute);
        CHECK(is_unit(r, r.at(a)) == (std::gcd(a, n) == 1));
      }
    }
  }
  SUBCASE("every finite corpus ring: inverse multiplies to one, non-units have no inverse") {
    for (const auto& r : finite_corpus()) {
      for (const auto& a : r.elements()) {
        auto inv = unit_inverse(r, a);
        bool brute = false;
        for (const auto& b : r.elements()) brute = brute || r.mul(a, b) == r.one();
        CHECK(inv.has_value() == brute);
        if (inv) CHECK(r.mul(a, *inv) == r.one());
      }
    }
  }
  SUBCASE("fields have every nonzero element invertible") {
    for (const char* s : {"Quot(Zn(2),[1,1,1])", "Quot(Zn(2),[1,1,0,1])", "Quot(Zn(3),[1,0,1])"}) {
      Ring r = parse_ring_spec(s);
      for (const auto& a : r.elements()) CHECK(is_unit(r, a) == !r.is_zero(a));
    }
  }
  SUBCASE("Integers") {
    Ring z = Ring::integers();
    CHECK_FALSE(is_unit(z, z.from_int(2)));
    CHECK(is_unit(z, z.from_int(-1)));
    CHECK_FALSE(is_unit(z, z.from_int(0)));
  }
  SUBCASE("EC(2)") {
    Ring r = Ring::eventually_constant(2);
    auto inv = unit_inverse(r, r.parse_element("[1/2;3]"));
    REQUIRE(inv);
    CHECK(r.format(*inv) == "[2;1/3]");
    CHECK_FALSE(is_unit(r, r.parse_element("[1;2]")));
    CHECK_FALSE(is_unit(r, r.parse_element("[0;1]")));
  }
  SUBCASE("EC(2) random units") {
    Ring r = Ring::eventually_constant(2);
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
      Element u = random_unit(r, rng), v = random_unit(r, rng);
      auto inv = unit_inverse(r, u);
      REQUIRE(inv);
      CHECK(r.mul(u, *inv) == r.one());
      CHECK(is_unit(r, r.mul(u, v)));
    }
  }
}

TEST_CASE("idempotents") {
  CHECK(indices(idempotents(Ring::zmod(6))) == V{0, 1, 3, 4});
  CHECK(indices(idempotents(Ring::zmod(12))) == V{0, 1, 4, 9});
  Ring z = Ring::integers();
  auto zi = idempotents(z);
  REQUIRE(zi.size() == 2);
  CHECK(zi[0] == z.from_int(0));
  CHECK(zi[1] == z.from_int(1));
  CHECK_THROWS_AS(idempotents(Ring::eventually_constant(2)), InfiniteEnumeration);
  for (std::uint64_t n = 2; n <= 64; ++n) {
    V brute;
    for (std::uint64_t e = 0; e < n; ++e)
      if ((e * e) % n == e) brute.push_back(e);
    CHECK(indices(idempotents(Ring::zmod(n))) == brute);
  }
}

TEST_CASE("nilpotents") {
  Ring r = Ring::zmod(8);
  CHECK(is_nilpotent(r, r.at(2)));
  CHECK(is_nilpotent(r, r.at(4)));
  CHECK_FALSE(is_nilpotent(r, r.at(3)));
  Ring l = Ring::local_non_chain2();
  CHECK(is_nilpotent(l, l.parse_element("x+y")));
  CHECK_FALSE(is_nilpotent(l, l.parse_element("1+x")));
}

TEST_CASE("clean decomposition") {
  SUBCASE("Zn(6), 3") {
    Ring r = Ring::zmod(6);
    auto d = clean_decompose(r, r.at(3));
    CHECK(d.unit.index() == 5);
    CHECK(d.idempotent.index() == 4);
  }
  SUBCASE("Integers") {
    Ring z = Ring::integers();
    CHECK_THROWS_AS(clean_decompose(z, z.from_int(3)), NotClean);
    CHECK_THROWS_AS(clean_decompose(z, z.from_int(-2)), NotClean);
    for (int a : {-1, 0, 1, 2}) {
      auto d = clean_decompose(z, z.from_int(a));
      CHECK(z.add(d.unit, d.idempotent) == z.from_int(a));
    }
  }
  SUBCASE("EC(2) constructive rule") {
    Ring r = Ring::eventually_constant(2);
    auto d = clean_decompose(r, r.parse_element("[0,1;6]"));
    CHECK(r.format(d.unit) == "[-1,1;5]");
    CHECK(r.format(d.idempotent) == "[1,0;1]");
  }
  SUBCASE("soundness on every finite corpus element") {
    for (const auto& r : finite_corpus()) {
      for (const auto& a : r.elements()) {
        auto d = clean_decompose(r, a);
        CHECK(r.add(d.unit, d.idempotent) == a);
        CHECK(is_idempotent(r, d.idempotent));
        CHECK(is_unit(r, d.unit));
      }
    }
  }
  SUBCASE("least idempotent is chosen") {
    for (const auto& r : finite_corpus()) {
      for (const auto& a : r.elements()) {
        auto d = clean_decompose(r, a);
        for (const auto& e : r.elements()) {
          if (!r.less(e, d.idempotent)) break;
          if (is_idempotent(r, e)) CHECK_FALSE(is_unit(r, r.sub(a, e)));
        }
      }
    }
  }
  SUBCASE("EC(2) soundness on random elements") {
    Ring r = Ring::eventually_constant(2);
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
      Element a = random_element(r, rng);
      auto d = clean_decompose(r, a);
      CHECK(r.add(d.unit, d.idempotent) == a);
      CHECK(is_idempotent(r, d.idempotent));
      CHECK(is_unit(r, d.unit));
    }
  }
}

TEST_CASE("radicals") {
  Ring r12 = Ring::zmod(12);
  CHECK(indices(nilradical(r12).elements) == V{0, 6});
  CHECK(indices(jacobson_radical(r12).elements) == V{0, 6});
  CHECK(indices(nilradical(r12).generators) == V{6});
  CHECK(indices(nilradical(Ring::zmod(6)).elements) == V{0});
  CHECK(nilradical(Ring::zmod(6)).generators.empty());
  Ring l = Ring::local_non_chain2();
  auto J = jacobson_radical(l);
  CHECK(J.elements.size() == 4);
  CHECK(J.generators.size() == 2);
  CHECK_THROWS_AS(nilradical(Ring::integers()), InfiniteEnumeration);
  for (const auto& r : finite_corpus()) {
    auto N = nilradical(r), Jr = jacobson_radical(r);
    std::set<std::uint64_t> js;
    for (const auto& x : Jr.elements) js.insert(x.index());
    for (const auto& x : N.elements) CHECK(js.count(x.index()));
    CHECK(ideal_mask(r, N.generators) == ideal_mask(r, N.elements));
    CHECK(ideal_mask(r, Jr.generators) == ideal_mask(r, Jr.elements));
    CHECK(indices(mask_elements(ideal_mask(r, Jr.generators))) == indices(Jr.elements));
  }
}

TEST_CASE("divide") {
  Ring r = Ring::zmod(12);
  auto t = divide(r, r.at(4), r.at(2));
  REQUIRE(t);
  CHECK(t->index() == 2);
  CHECK_FALSE(divide(r, r.at(2), r.at(4)));
  Ring z = Ring::integers();
  CHECK(divide(z, z.from_int(6), z.from_int(3)) == z.from_int(2));
  CHECK_FALSE(divide(z, z.from_int(3), z.from_int(6)));
  CHECK(divide(z, z.from_int(0), z.from_int(0)) == z.from_int(0));
  for (std::uint64_t n = 2; n <= 40; ++n) {
    Ring zn = Ring::zmod(n);
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b) {
        std::optional<std::uint64_t> least;
        for (std::uint64_t s = 0; s < n && !least; ++s)
          if ((s * b) % n == a) least = s;
        auto got = divide(zn, zn.at(a), zn.at(b));
        CHECK(got.has_value() == least.has_value());
        if (got && least) CHECK(got->index() == *least);
      }
  }
  Ring ec = Ring::eventually_constant(2);
  CHECK(ec.format(*divide(ec, ec.parse_element("[0,3;4]"), ec.parse_element("[1,6;2]"))) == "[0,1/2;2]");
  CHECK_FALSE(divide(ec, ec.parse_element("[;1]"), ec.parse_element("[;2]")));
  CHECK_FALSE(divide(ec, ec.parse_element("[1;0]"), ec.parse_element("[0;1]")));
}
