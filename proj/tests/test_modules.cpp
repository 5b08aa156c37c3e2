#include <doctest.h>

#include <algorithm>
#include <set>

#include "ringlab/classify.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/modules.hpp"

using namespace ringlab;

namespace {

FiniteModule cyclic(const Ring& R, long long a) { return present_module(R, {{R.from_int(a)}}, 1); }

FiniteModule free_module(const Ring& R, std::size_t g) { return present_module(R, {}, g); }

std::set<Endo> as_set(const std::vector<Endo>& v) { return {v.begin(), v.end()}; }

std::uint64_t product_of_sizes(const DecompositionResult& d) {
  std::uint64_t p = 1;
  for (const auto& s : d.summands) p *= s.size();
  return p;
}

std::uint64_t sum_of(const std::vector<std::uint64_t>& v) {
  std::uint64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("presentations") {
  CHECK(cyclic(Ring::zmod(4), 2).size() == 2);
  CHECK(cyclic(Ring::zmod(12), 4).size() == 4);
  Ring l = Ring::local_non_chain2();
  FiniteModule m2 = lemma33_module(l, l.parse_element("x"), l.parse_element("y"), 2);
  CHECK(m2.size() == 32);
  CHECK(free_module(Ring::zmod(3), 2).size() == 9);
  CHECK(present_module(Ring::zmod(6), {}, 0).size() == 1);

  Ring z6 = Ring::zmod(6);
  FiniteModule m = present_module(z6, {{z6.at(2), z6.at(0)}, {z6.at(0), z6.at(3)}}, 2);
  CHECK(m.size() == 6);
  // cosets are numbered by least representative; 0 is zero
  CHECK(m.format(0) == "(0,0)");
  for (std::uint32_t a = 0; a < m.size(); ++a) {
    CHECK(m.add(a, m.neg(a)) == 0);
    CHECK(m.element_of(m.representative(a)) == a);
  }
  // action is well defined on cosets: r*(v + k) lands in the coset of r*v
  for (std::uint64_t r = 0; r < 6; ++r)
    for (std::uint32_t a = 0; a < m.size(); ++a) {
      auto v = m.representative(a);
      v[0] = z6.add_index(v[0], 2);  // add a relation vector
      std::uint32_t shifted = m.element_of(v);
      CHECK(shifted == a);
      CHECK(m.act(r, shifted) == m.act(r, a));
    }

  CHECK_THROWS_AS(present_module(z6, {{z6.at(1)}}, 2), InvalidSpec);
  CHECK_THROWS_AS(free_module(Ring::zmod(64), 3), EnumerationCapExceeded);
  CHECK_THROWS_AS(free_module(Ring::integers(), 1), UnsupportedRing);

  Presentation p = parse_presentation(z6, "2 1\n2 3\n");
  CHECK(p.generators == 2);
  CHECK(format_presentation(z6, p) == "2 1\n2 3\n");
  CHECK_THROWS_AS(parse_presentation(z6, "2 1\n2"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation(z6, "1 1\n2 3"), SyntaxError);
}

TEST_CASE("module length") {
  CHECK(module_length(cyclic(Ring::zmod(12), 4)) == 2);
  CHECK(module_length(cyclic(Ring::zmod(6), 0)) == 2);
  CHECK(module_length(cyclic(Ring::zmod(6), 1)) == 0);
  Ring l = Ring::local_non_chain2();
  for (std::size_t N = 2; N <= 5; ++N) {
    CAPTURE(N);
    FiniteModule m = lemma33_module(l, l.parse_element("x"), l.parse_element("y"), N);
    CHECK(module_length(m) == 2 * N + 1);
    CHECK(m.size() == (1u << (2 * N + 1)));
  }
  // length of Zn(n) as a module is the number of prime factors with multiplicity
  for (std::uint64_t n = 2; n <= 64; ++n) {
    std::uint64_t k = 0, x = n;
    for (std::uint64_t q = 2; q <= x; ++q)
      while (x % q == 0) {
        x /= q;
        ++k;
      }
    CHECK(module_length(cyclic(Ring::zmod(n), 0)) == k);
  }
}

TEST_CASE("endomorphism algebras") {
  auto e = endomorphism_basis(free_module(Ring::zmod(2), 2));
  CHECK(e.dimension_over_prime_field == 4u);
  auto z2 = endomorphism_basis(cyclic(Ring::zmod(4), 2));
  CHECK_FALSE(z2.dimension_over_prime_field);
  CHECK(z2.order == 2u);
  Ring l = Ring::local_non_chain2();
  FiniteModule m2 = lemma33_module(l, l.parse_element("x"), l.parse_element("y"), 2);
  auto em = endomorphism_basis(m2);
  REQUIRE(em.dimension_over_prime_field);
  CHECK(*em.dimension_over_prime_field == 7);  // regression value
  auto span = enumerate_span(m2, em.basis, 1u << 20);
  REQUIRE(span);
  auto all = as_set(*span);
  CHECK(all.count(identity_endo(m2)));
  CHECK(all.count(zero_endo(m2)));
  for (const auto& f : em.basis) {
    CHECK(is_endomorphism(m2, f));
    for (const auto& g : em.basis) CHECK(all.count(compose(m2, f, g)));
  }
  // every basis member commutes with the action on every element
  for (const auto& f : em.basis)
    for (std::uint64_t r = 0; r < l.order(); ++r)
      for (std::uint32_t m = 0; m < m2.size(); ++m) CHECK(apply(m2, f, m2.act(r, m)) == m2.act(r, apply(m2, f, m)));
  CHECK_THROWS_AS(endomorphism_basis(free_module(Ring::zmod(2), 5)), DimensionCapExceeded);
}

TEST_CASE("the two End solvers agree") {
  std::vector<FiniteModule> mods;
  Ring l = Ring::local_non_chain2();
  mods.push_back(lemma33_module(l, l.parse_element("x"), l.parse_element("y"), 2));
  mods.push_back(free_module(Ring::zmod(3), 2));
  Ring f4 = parse_ring_spec("Quot(Zn(2),[1,1,1])");
  mods.push_back(present_module(f4, {{f4.at(1), f4.at(2)}}, 2));
  Ring p22 = parse_ring_spec("Prod(Zn(2),Zn(2))");
  mods.push_back(free_module(p22, 2));
  mods.push_back(present_module(l, {{l.parse_element("x"), l.parse_element("0")}}, 2));
  for (const auto& m : module_battery(parse_ring_spec("Quot(Zn(3),[1,0,1])"), 0)) mods.push_back(m.module);
  for (const auto& M : mods) {
    CAPTURE(M.ring().spec());
    CAPTURE(format_presentation(M.ring(), M.presentation()));
    auto a = endomorphism_basis_prime_field(M);
    auto b = endomorphism_basis_lattice(M);
    auto sa = enumerate_span(M, a.basis, 1u << 20), sb = enumerate_span(M, b.basis, 1u << 20);
    REQUIRE(sa);
    REQUIRE(sb);
    CHECK(as_set(*sa) == as_set(*sb));
    CHECK(sa->size() == *a.order);
  }
  // composite characteristic: lattice generators are endomorphisms, and the
  // count matches |Hom(Z/a, Z/b)| = gcd(a, b) products
  Ring z12 = Ring::zmod(12);
  FiniteModule m = present_module(z12, {{z12.at(4), z12.at(0)}, {z12.at(0), z12.at(6)}}, 2);  // Z/4 + Z/6
  auto e = endomorphism_basis(m);
  for (const auto& f : e.basis) CHECK(is_endomorphism(m, f));
  CHECK(e.order == std::uint64_t{4 * 2 * 2 * 6});
}

TEST_CASE("idempotent search and indecomposability") {
  auto proj = find_nontrivial_idempotent(endomorphism_basis(free_module(Ring::zmod(2), 2)));
  REQUIRE(proj.idempotent);
  CHECK(proj.exhaustive);
  CHECK_FALSE(find_nontrivial_idempotent(endomorphism_basis(cyclic(Ring::zmod(4), 0))).idempotent);

  CHECK(is_indecomposable(cyclic(Ring::zmod(4), 0)).value == Indecomposability::Indecomposable);
  auto z6 = is_indecomposable(cyclic(Ring::zmod(6), 0));
  CHECK(z6.value == Indecomposability::Decomposable);
  REQUIRE(z6.idempotent);
  Ring l = Ring::local_non_chain2();
  FiniteModule m2 = lemma33_module(l, l.parse_element("x"), l.parse_element("y"), 2);
  CHECK(is_indecomposable(m2).value == Indecomposability::Indecomposable);
  CHECK(is_indecomposable(cyclic(Ring::zmod(6), 1)).value == Indecomposability::Zero);
  // large span: seeded Fitting samples
  auto big = is_indecomposable(free_module(Ring::zmod(61), 2));
  CHECK(big.value == Indecomposability::Decomposable);
}

TEST_CASE("decomposition") {
  auto d6 = decompose(cyclic(Ring::zmod(6), 0));
  std::multiset<std::uint64_t> sizes, lengths;
  for (const auto& s : d6.summands) sizes.insert(s.size());
  CHECK(sizes == std::multiset<std::uint64_t>{2, 3});
  CHECK(d6.lengths == std::vector<std::uint64_t>{1, 1});

  auto d12 = decompose(cyclic(Ring::zmod(12), 0));
  sizes.clear();
  for (const auto& s : d12.summands) sizes.insert(s.size());
  CHECK(sizes == std::multiset<std::uint64_t>{3, 4});
  lengths = {d12.lengths.begin(), d12.lengths.end()};
  CHECK(lengths == std::multiset<std::uint64_t>{1, 2});

  Ring z4 = Ring::zmod(4);
  auto d4 = decompose(present_module(z4, {{z4.at(2), z4.at(0)}}, 2));
  sizes.clear();
  for (const auto& s : d4.summands) sizes.insert(s.size());
  CHECK(sizes == std::multiset<std::uint64_t>{2, 4});
  CHECK(d4.exhaustive);

  CHECK(decompose(cyclic(Ring::zmod(5), 1)).summands.empty());
}

TEST_CASE("decomposition invariants over the battery") {
  for (const auto& R : finite_corpus()) {
    if (R.order() > 16) continue;
    for (const auto& bm : module_battery(R, 0)) {
      CAPTURE(R.spec());
      CAPTURE(bm.label);
      const FiniteModule& M = bm.module;
      auto d = decompose(M);
      CHECK(product_of_sizes(d) == M.size());
      CHECK(sum_of(d.lengths) == module_length(M));
      Endo total = zero_endo(M);
      for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
        CHECK(is_idempotent_endo(M, d.idempotents[i]));
        for (std::size_t j = 0; j < d.idempotents.size(); ++j)
          if (i != j) CHECK(compose(M, d.idempotents[i], d.idempotents[j]) == zero_endo(M));
        total = add(M, total, d.idempotents[i]);
      }
      if (M.size() > 1) CHECK(total == identity_endo(M));
      for (const auto& S : d.summands) {
        CHECK(d.supports[&S - d.summands.data()].size() == 1);
        auto again = decompose(S);
        REQUIRE(again.summands.size() == 1);
        CHECK(again.summands[0].size() == S.size());
      }
    }
  }
}

TEST_CASE("support") {
  auto s = support(cyclic(Ring::zmod(12), 4));
  REQUIRE(s.size() == 1);
  CHECK(s[0].label == "P@0");
  CHECK(s[0].ideal->contains(Ring::zmod(12).at(2)));
  CHECK(support(cyclic(Ring::zmod(12), 0)).size() == 2);
  CHECK(support(cyclic(Ring::zmod(12), 1)).empty());
}

TEST_CASE("cyclic, socle, cocyclic") {
  Ring z6 = Ring::zmod(6);
  FiniteModule m = present_module(z6, {{z6.at(2), z6.at(0)}, {z6.at(0), z6.at(3)}}, 2);
  auto c = is_cyclic(m);
  CHECK(c.value);
  REQUIRE(c.generator);
  CHECK(m.format(*c.generator) == "(1,1)");

  Ring l = Ring::local_non_chain2();
  FiniteModule m2 = lemma33_module(l, l.parse_element("x"), l.parse_element("y"), 2);
  CHECK_FALSE(is_cyclic(m2).value);

  FiniteModule z4 = cyclic(Ring::zmod(4), 0);
  CHECK(is_cocyclic(z4));
  auto soc = mask_members(socle(z4));
  REQUIRE(soc.size() == 2);
  CHECK(z4.format(soc[1]) == "(2)");
  CHECK_FALSE(is_cocyclic(cyclic(Ring::zmod(6), 0)));
}

TEST_CASE("lemma33 construction") {
  Ring l = Ring::local_non_chain2();
  FiniteModule m3 = lemma33_module(l, l.parse_element("x"), l.parse_element("y"), 3);
  CHECK(m3.size() == 128);
  CHECK(module_length(m3) == 7);
  CHECK(is_indecomposable(m3).value == Indecomposability::Indecomposable);
  CHECK_FALSE(is_cyclic(m3).value);
  Ring z4 = Ring::zmod(4);
  CHECK_THROWS_AS(lemma33_module(z4, z4.at(2), z4.at(2), 2), HypothesisViolated);
  CHECK_THROWS_AS(lemma33_module(Ring::zmod(6), Ring::zmod(6).at(2), Ring::zmod(6).at(3), 2), HypothesisViolated);
  CHECK_THROWS_AS(lemma33_module(l, l.parse_element("x"), l.parse_element("y"), 6), InvalidSpec);
}

TEST_CASE("module battery") {
  auto b = module_battery(Ring::zmod(12), 0);
  CHECK(b.size() == 6 + 20);
  auto lb = module_battery(Ring::local_non_chain2(), 0);
  CHECK(lb.back().label == "lemma33(x,y,3)");
  // determinism
  auto again = module_battery(Ring::zmod(12), 0);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i].label == again[i].label);
}
