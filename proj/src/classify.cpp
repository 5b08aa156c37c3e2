#include "ringlab/classify.hpp"

#include <algorithm>
#include <map>

#include "ringlab/bezout.hpp"

namespace ringlab {

namespace {

constexpr std::uint64_t kSeed = 0;
constexpr int kCleanSamples = 1000;
constexpr int kKernelSamples = 100;
constexpr int kBezoutSamples = 1000;

// Principal ideals of a finite ring, deduplicated: id[a] names (a).
struct PrincipalTable {
  std::vector<std::size_t> id;
  std::vector<Mask> masks;
  std::vector<std::uint64_t> rep;  // least generator of each ideal
};

PrincipalTable principal_table(const Ring& ring) {
  PrincipalTable t;
  std::map<Mask, std::size_t> seen;
  t.id.resize(ring.order());
  for (std::uint64_t a = 0; a < ring.order(); ++a) {
    Mask m = principal_ideal_mask(ring, a);
    auto [it, fresh] = seen.emplace(m, t.masks.size());
    if (fresh) {
      t.masks.push_back(std::move(m));
      t.rep.push_back(a);
    }
    t.id[a] = it->second;
  }
  return t;
}

bool subset(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// First pair (a, b), b < a, of elements in `members` whose principal ideals
// are incomparable; a, b range over the canonical order.
std::optional<std::pair<std::uint64_t, std::uint64_t>> chain_violation(const PrincipalTable& t,
                                                                       const std::vector<std::uint64_t>& members,
                                                                       std::uint64_t& scanned) {
  std::size_t k = t.masks.size();
  std::vector<char> comparable(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      comparable[i * k + j] = subset(t.masks[i], t.masks[j]) || subset(t.masks[j], t.masks[i]);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ++scanned;
      if (!comparable[t.id[members[i]] * k + t.id[members[j]]]) return std::make_pair(members[i], members[j]);
    }
  return std::nullopt;
}

// Elements of the local factor R*e, in canonical order.
std::vector<std::uint64_t> factor_elements(const Ring& ring, const Element& e) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < ring.order(); ++a)
    if (ring.mul_index(a, e.index()) == a) out.push_back(a);
  return out;
}

std::vector<Element> as_elements(std::initializer_list<std::uint64_t> xs) {
  std::vector<Element> out;
  for (auto x : xs) out.push_back(Element::finite(x));
  return out;
}

struct FactorScan {
  bool chain = true;
  std::optional<Element> factor;
  std::vector<Element> witness;
  std::uint64_t scanned = 0;
};

FactorScan scan_local_factors(const Ring& ring) {
  require_enumerable(ring, "local factor scan");
  PrincipalTable t = principal_table(ring);
  FactorScan out;
  for (const auto& e : primitive_idempotents(ring)) {
    auto bad = chain_violation(t, factor_elements(ring, e), out.scanned);
    if (bad) {
      out.chain = false;
      out.factor = e;
      out.witness = as_elements({bad->first, bad->second});
      return out;
    }
  }
  return out;
}

bool valid_clean(const Ring& ring, const Element& a, const CleanDecomposition& c) {
  return is_unit(ring, c.unit) && is_idempotent(ring, c.idempotent) && ring.add(c.unit, c.idempotent) == a;
}

// Finite-ring evaluation context for local_global_check.
struct LocalGlobalContext {
  const Ring& ring;
  Mask units;
  std::vector<Element> factors;
  std::uint64_t one;
};

LocalGlobalResult check_values(const LocalGlobalContext& ctx, const Polynomial& f) {
  const Ring& R = ctx.ring;
  std::uint64_t n = R.order();
  std::uint64_t total = f.vars == 1 ? n : n * n;
  std::vector<std::uint64_t> values(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::vector<Element> x{Element::finite(i % n)};
    if (f.vars == 2) x.push_back(Element::finite(i / n));
    values[i] = evaluate(R, f, x).index();
  }
  LocalGlobalResult res;
  for (const auto& e : ctx.factors) {
    std::uint64_t c = R.add_index(ctx.one, R.neg_index(e.index()));
    bool any = std::any_of(values.begin(), values.end(),
                           [&](std::uint64_t v) { return ctx.units[R.add_index(R.mul_index(v, e.index()), c)]; });
    if (!any) {
      res.outcome = LocalGlobal::Vacuous;
      res.factor = e;
      return res;
    }
  }
  for (std::uint64_t i = 0; i < total; ++i)
    if (ctx.units[values[i]]) {
      res.outcome = LocalGlobal::Holds;
      res.witness = {Element::finite(i % n)};
      if (f.vars == 2) res.witness.push_back(Element::finite(i / n));
      return res;
    }
  res.outcome = LocalGlobal::Fails;
  return res;
}

FlagEntry make_flag(const Ring& ring, std::string name, const Verdict& v) {
  FlagEntry f;
  f.name = std::move(name);
  f.value = v.value ? Tri::True : Tri::False;
  for (const auto& w : v.witness) f.witness.push_back(ring.format(w));
  f.note = v.note;
  f.scanned = v.scanned;
  f.sampled = v.sampled;
  return f;
}

}  // namespace

Verdict is_clean(const Ring& ring) {
  Verdict v;
  if (ring.kind() == RingKind::Integers) {
    v.value = false;
    v.witness = {ring.from_int(3)};
    v.note = "3 - 0 and 3 - 1 are not units";
    return v;
  }
  if (ring.kind() == RingKind::EventuallyConstant) {
    Rng rng(kSeed);
    for (int i = 0; i < kCleanSamples; ++i) {
      Element a = random_element(ring, rng);
      ++v.scanned;
      if (!valid_clean(ring, a, clean_decompose(ring, a))) {
        v.witness = {a};
        v.note = "constructive decomposition invalid";
        return v;
      }
    }
    v.value = true;
    v.sampled = true;
    v.note = "constructive rule verified on sampled elements";
    return v;
  }
  require_enumerable(ring, "clean scan");
  for (const auto& a : ring.elements()) {
    ++v.scanned;
    try {
      clean_decompose(ring, a);
    } catch (const NotClean&) {
      v.witness = {a};
      v.note = "no idempotent e with a - e a unit";
      return v;
    }
  }
  v.value = true;
  v.note = "exhaustive";
  return v;
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "PASS";
    case Outcome::Fail:
      return "FAIL";
    case Outcome::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "";
}

Verdict zero_p_idempotent_generated(const Ring& ring) {
  Verdict v;
  if (ring.kind() == RingKind::Integers) {
    v.value = true;
    v.note = "Z is a domain: every 0_P is 0";
    return v;
  }
  if (ring.kind() == RingKind::EventuallyConstant) {
    Rng rng(kSeed);
    for (int i = 0; i < kKernelSamples; ++i) {
      auto k = draw(rng, 6);
      MaximalIdeal m = ec_point(ring, k);
      LocalizationKernel lk = localization_kernel(ring, m);
      Element a = ring.mul(random_element(ring, rng), lk.idempotent_generators->front());
      auto e = lk.idempotent_witness(ring, a);
      ++v.scanned;
      if (!e || !is_idempotent(ring, *e) || !lk.contains(ring, *e) || ring.mul(a, *e) != a) {
        v.witness = {a};
        v.note = "no idempotent witness at " + m.label;
        return v;
      }
    }
    LocalizationKernel inf = localization_kernel(ring, ec_point_infinity(ring));
    for (int i = 0; i < kKernelSamples; ++i) {
      Sequence s = random_element(ring, rng).sequence();
      Element a = Element::sequence(canonical_sequence(s.prefix, Rational(0)));
      auto e = inf.idempotent_witness(ring, a);
      ++v.scanned;
      if (!e || !is_idempotent(ring, *e) || !inf.contains(ring, *e) || ring.mul(a, *e) != a) {
        v.witness = {a};
        v.note = "no idempotent witness at P@inf";
        return v;
      }
    }
    v.value = true;
    v.sampled = true;
    v.note = "idempotent witnesses verified on sampled kernel elements";
    return v;
  }
  for (const auto& m : max_spectrum(ring).points) {
    LocalizationKernel lk = localization_kernel(ring, m);
    ++v.scanned;
    if (!lk.idempotent_generators || ideal_closure(ring, *lk.idempotent_generators) != *lk.kernel) {
      v.note = "0_" + m.label + " is not generated by idempotents";
      if (!lk.kernel->elements.empty()) v.witness = {lk.kernel->elements.back()};
      return v;
    }
  }
  v.value = true;
  v.note = "exhaustive over maximal ideals";
  return v;
}

Theorem1Report theorem1_equivalence(const Ring& ring) {
  Theorem1Report r;
  try {
    bool gelfand = is_gelfand(ring).value;
    r.flag1 = gelfand && max_totally_disconnected(ring).value;
    r.flag3 = is_clean(ring).value;
    r.flag4 = gelfand && zero_p_idempotent_generated(ring).value;
  } catch (const UnsupportedRing& e) {
    r.detail = e.what();
    return r;
  } catch (const CapExceeded& e) {
    r.detail = e.what();
    return r;
  } catch (const InfiniteEnumeration& e) {
    r.detail = e.what();
    return r;
  }
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  if (*r.flag1 == *r.flag3 && *r.flag3 == *r.flag4) {
    r.outcome = Outcome::Pass;
    r.detail = "all " + b(*r.flag1);
  } else {
    r.outcome = Outcome::Fail;
    if (*r.flag1 != *r.flag3)
      r.detail = "flag1=" + b(*r.flag1) + " flag3=" + b(*r.flag3);
    else
      r.detail = "flag3=" + b(*r.flag3) + " flag4=" + b(*r.flag4);
  }
  return r;
}

// ---------------------------------------------------------------------------

Element evaluate(const Ring& ring, const Polynomial& f, const std::vector<Element>& x) {
  Element total = ring.zero();
  for (const auto& t : f.terms) {
    Element m = t.coeff;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) m = ring.mul(m, ring.pow(x[i], t.exponents[i]));
    total = ring.add(total, m);
  }
  return total;
}

std::string format_polynomial(const Ring& ring, const Polynomial& f) {
  static const char* names[] = {"X", "Y"};
  std::string out;
  for (const auto& t : f.terms) {
    if (ring.is_zero(t.coeff)) continue;
    if (!out.empty()) out += " + ";
    out += ring.format(t.coeff);
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      out += std::string("*") + names[i];
      if (t.exponents[i] > 1) out += "^" + std::to_string(t.exponents[i]);
    }
  }
  return out.empty() ? "0" : out;
}

std::string local_global_name(LocalGlobal v) {
  switch (v) {
    case LocalGlobal::Holds:
      return "holds";
    case LocalGlobal::Vacuous:
      return "vacuous";
    case LocalGlobal::Fails:
      return "fails";
  }
  return "";
}

LocalGlobalResult local_global_check(const Ring& ring, const Polynomial& f) {
  if (!ring.is_finite()) throw UnsupportedRing("local-global check needs a finite ring");
  if (f.vars < 1 || f.vars > 2) throw InvalidSpec("local-global check supports 1 or 2 variables");
  require_enumerable(ring, "local-global check");
  LocalGlobalContext ctx{ring, unit_mask(ring), primitive_idempotents(ring), ring.one().index()};
  return check_values(ctx, f);
}

std::vector<Polynomial> local_global_battery(const Ring& ring, std::uint64_t seed) {
  require_enumerable(ring, "polynomial battery");
  std::vector<Polynomial> out;
  std::uint64_t n = ring.order();
  if (n <= 16)
    for (std::uint64_t c2 = 0; c2 < n; ++c2)
      for (std::uint64_t c1 = 0; c1 < n; ++c1)
        for (std::uint64_t c0 = 0; c0 < n; ++c0) {
          Polynomial f;
          f.terms = {{{0}, ring.at(c0)}, {{1}, ring.at(c1)}, {{2}, ring.at(c2)}};
          out.push_back(std::move(f));
        }
  if (n <= 8) {
    Rng rng(seed);
    static const std::vector<std::vector<unsigned>> monomials{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    for (int i = 0; i < 50; ++i) {
      Polynomial f;
      f.vars = 2;
      for (const auto& mono : monomials) f.terms.push_back({mono, ring.at(draw(rng, n))});
      out.push_back(std::move(f));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Verdict is_valuation_local(const Ring& ring) {
  require_enumerable(ring, "valuation test");
  auto prims = primitive_idempotents(ring);
  if (prims.size() != 1)
    throw NotLocal("NotLocal: " + ring.spec() + " has " + std::to_string(prims.size()) + " primitive idempotents");
  FactorScan s = scan_local_factors(ring);
  Verdict v;
  v.value = s.chain;
  v.witness = s.witness;
  v.scanned = s.scanned;
  v.note = s.chain ? "principal ideals form a chain" : "neither element divides the other";
  return v;
}

Verdict is_arithmetic(const Ring& ring) {
  Verdict v;
  if (ring.kind() == RingKind::Integers) {
    v.value = true;
    v.note = "classified: every localization Z_(q) is a valuation ring";
    return v;
  }
  if (ring.kind() == RingKind::EventuallyConstant) {
    v.value = true;
    v.note = "classified: localizations are Q and Z_(" + std::to_string(ring.modulus()) + ")";
    return v;
  }
  FactorScan s = scan_local_factors(ring);
  v.value = s.chain;
  v.witness = s.witness;
  v.scanned = s.scanned;
  v.note = s.chain ? "every local factor is a chain ring"
                   : "local factor R*" + ring.format(*s.factor) + " is not a chain ring";
  return v;
}

Verdict is_bezout(const Ring& ring) {
  Verdict v;
  if (ring.kind() == RingKind::Integers) {
    v.value = true;
    v.note = "classified: Euclidean";
    return v;
  }
  if (ring.kind() == RingKind::EventuallyConstant) {
    Rng rng(kSeed);
    for (int i = 0; i < kBezoutSamples; ++i) {
      Element a = random_element(ring, rng), b = random_element(ring, rng);
      ++v.scanned;
      BezoutCertificate c = gcd_bezout(ring, a, b);
      bool ok = ring.add(ring.mul(c.s, a), ring.mul(c.t, b)) == c.d && divide(ring, a, c.d) && divide(ring, b, c.d);
      if (!ok) {
        v.witness = {a, b};
        v.note = "gcd certificate invalid";
        return v;
      }
    }
    v.value = true;
    v.sampled = true;
    v.note = "2-generated ideals; gcd certificates verified on sampled pairs";
    return v;
  }
  require_enumerable(ring, "bezout scan");
  PrincipalTable t = principal_table(ring);
  std::size_t k = t.masks.size();
  std::map<Mask, std::size_t> principal;
  for (std::size_t i = 0; i < k; ++i) principal.emplace(t.masks[i], i);
  std::vector<char> ok(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      std::vector<Element> gens = as_elements({t.rep[i], t.rep[j]});
      ok[i * k + j] = ok[j * k + i] = principal.count(ideal_mask(ring, gens)) > 0;
    }
  std::uint64_t n = ring.order();
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < a; ++b) {
      ++v.scanned;
      if (!ok[t.id[a] * k + t.id[b]]) {
        v.witness = as_elements({a, b});
        v.note = "2-generated ideal is not principal";
        return v;
      }
    }
  v.value = true;
  v.note = "exhaustive over 2-generated ideals";
  return v;
}

Verdict is_von_neumann_regular(const Ring& ring) {
  Verdict v;
  if (ring.kind() == RingKind::Integers) {
    v.value = false;
    v.witness = {ring.from_int(2)};
    v.note = "2 is not in 4Z";
    return v;
  }
  if (ring.kind() == RingKind::EventuallyConstant) {
    v.value = false;
    v.witness = {ring.from_int(static_cast<long long>(ring.modulus()))};
    v.note = "constant p: p/p^2 has negative valuation";
    return v;
  }
  require_enumerable(ring, "regularity scan");
  std::uint64_t n = ring.order();
  for (std::uint64_t a = 0; a < n; ++a) {
    ++v.scanned;
    std::uint64_t sq = ring.mul_index(a, a);
    bool found = false;
    for (std::uint64_t x = 0; x < n && !found; ++x) found = ring.mul_index(sq, x) == a;
    if (!found) {
      v.witness = {Element::finite(a)};
      v.note = "a is not in R*a^2";
      return v;
    }
  }
  v.value = true;
  v.note = "exhaustive";
  return v;
}

std::uint64_t jacobson_nilpotency_index(const Ring& ring) {
  if (!ring.is_finite()) throw UnsupportedRing("nilpotency index needs a finite ring");
  RadicalSet J = jacobson_radical(ring);
  std::vector<Element> power = J.generators;
  Mask zero = ideal_mask(ring, {});
  for (std::uint64_t k = 1;; ++k) {
    Mask m = ideal_mask(ring, power);
    if (m == zero) return k;
    std::vector<Element> gens = ideal_generators(ring, m);
    power.clear();
    for (const auto& a : gens)
      for (const auto& b : J.generators) power.push_back(ring.mul(a, b));
  }
}

Theorem34Result theorem34_classify(const Ring& ring) {
  if (!ring.is_finite()) throw UnsupportedRing("local factor classification needs a finite ring");
  FactorScan s = scan_local_factors(ring);
  return {s.chain, s.factor, s.witness};
}

// ---------------------------------------------------------------------------

std::string tri_name(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    case Tri::NotEvaluated:
      return "not-evaluated";
  }
  return "";
}

const FlagEntry& ClassificationReport::flag(const std::string& name) const {
  for (const auto& f : flags)
    if (f.name == name) return f;
  throw InvalidSpec("unknown flag " + name);
}

ClassificationReport classify(const Ring& ring) {
  ClassificationReport r;
  r.ring = ring.spec();
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      r.flags.push_back(fn());
    } catch (const CapExceeded& e) {
      r.flags.push_back({name, Tri::NotEvaluated, {}, e.what()});
    } catch (const UnsupportedRing& e) {
      r.flags.push_back({name, Tri::NotEvaluated, {}, e.what()});
    } catch (const InfiniteEnumeration& e) {
      r.flags.push_back({name, Tri::NotEvaluated, {}, e.what()});
    }
  };
  guarded("clean", [&] { return make_flag(ring, "clean", is_clean(ring)); });
  guarded("gelfand", [&] { return make_flag(ring, "gelfand", is_gelfand(ring)); });
  guarded("max_totally_disconnected", [&] {
    FlagEntry f = make_flag(ring, "max_totally_disconnected", max_totally_disconnected(ring));
    if (ring.kind() == RingKind::Integers)
      f.witness = {"(2)", "(3)"};  // no clopen set separates them
    else if (ring.is_finite())
      f.scanned = max_spectrum(ring).points.size();
    return f;
  });
  guarded("zero_p_idempotent_generated",
          [&] { return make_flag(ring, "zero_p_idempotent_generated", zero_p_idempotent_generated(ring)); });
  guarded("arithmetic", [&] { return make_flag(ring, "arithmetic", is_arithmetic(ring)); });
  guarded("bezout", [&] { return make_flag(ring, "bezout", is_bezout(ring)); });
  guarded("von_neumann_regular",
          [&] { return make_flag(ring, "von_neumann_regular", is_von_neumann_regular(ring)); });
  guarded("theorem34", [&] {
    if (!ring.is_finite()) throw UnsupportedRing("evaluated on finite rings only");
    FactorScan s = scan_local_factors(ring);
    FlagEntry f;
    f.name = "theorem34";
    f.value = s.chain ? Tri::True : Tri::False;
    for (const auto& w : s.witness) f.witness.push_back(ring.format(w));
    f.scanned = s.scanned;
    f.note = s.chain ? "every local factor is an artinian chain ring"
                     : "local factor R*" + ring.format(*s.factor) + " is not a chain ring";
    return f;
  });
  if (ring.is_finite()) {
    try {
      r.jacobson_index = jacobson_nilpotency_index(ring);
    } catch (const CapExceeded&) {
    }
  }
  return r;
}

}  // namespace ringlab
