#include "ringlab/suites.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ringlab/corpus.hpp"
#include "ringlab/modules.hpp"

namespace ringlab {

namespace {

constexpr int kSampledPairs = 1000;
constexpr int kMatricesPerRing = 500;
constexpr std::uint64_t kExhaustivePairsOrder = 64;

RingOutcome start(const Ring& R) {
  RingOutcome r;
  r.ring = R.spec();
  return r;
}

RingOutcome fail(RingOutcome r, std::string detail, std::vector<std::string> witness) {
  r.outcome = Outcome::Fail;
  r.detail = std::move(detail);
  r.counterwitness = std::move(witness);
  return r;
}

bool valid_edr(const Ring& R, const Element& a, const Element& b, const EDRWitness& w) {
  return R.mul(w.d, w.a_prime) == a && R.mul(w.d, w.b_prime) == b &&
         is_unit(R, R.add(w.a_prime, R.mul(w.c, w.b_prime)));
}

// Bezout counterwitness of a finite non-Bezout ring.
std::pair<Element, Element> non_principal_pair(const Ring& R) {
  Verdict v = is_bezout(R);
  return {v.witness.at(0), v.witness.at(1)};
}

BigInt laplace_det(const std::vector<std::vector<BigInt>>& A) {
  std::size_t n = A.size();
  if (n == 1) return A[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(A[i][j]);
      minor.push_back(std::move(row));
    }
    BigInt term = A[0][c] * laplace_det(minor);
    total += c % 2 ? BigInt(-term) : term;
  }
  return total;
}

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

struct BatteryDecomposition {
  std::string label;
  DecompositionResult result;
};

std::vector<BatteryDecomposition> decompose_battery(const Ring& R, std::uint64_t seed) {
  std::vector<BatteryDecomposition> out;
  for (auto& bm : module_battery(R, seed)) out.push_back({bm.label, decompose(bm.module, seed)});
  return out;
}

bool all_exhaustive(const std::vector<BatteryDecomposition>& b) {
  return std::all_of(b.begin(), b.end(), [](const auto& x) { return x.result.exhaustive; });
}

std::uint64_t summand_count(const std::vector<BatteryDecomposition>& b) {
  std::uint64_t n = 0;
  for (const auto& x : b) n += x.result.summands.size();
  return n;
}

// ---------------------------------------------------------------------------

RingOutcome suite_t1(const Ring& R, std::uint64_t) {
  RingOutcome r = start(R);
  Theorem1Report t = theorem1_equivalence(R);
  r.outcome = t.outcome;
  r.detail = t.detail;
  r.checked = 3;
  if (t.outcome == Outcome::Fail) {
    auto b = [](const std::optional<bool>& x) { return std::string(*x ? "true" : "false"); };
    r.counterwitness = {"flag1=" + b(t.flag1), "flag3=" + b(t.flag3), "flag4=" + b(t.flag4)};
  }
  return r;
}

RingOutcome suite_lg(const Ring& R, std::uint64_t seed) {
  RingOutcome r = start(R);
  std::uint64_t holds = 0, vacuous = 0;
  for (const auto& f : local_global_battery(R, seed)) {
    ++r.checked;
    LocalGlobalResult res = local_global_check(R, f);
    if (res.outcome == LocalGlobal::Fails)
      return fail(r, "unit values locally but not globally", {format_polynomial(R, f)});
    if (res.outcome == LocalGlobal::Holds) {
      if (!is_unit(R, evaluate(R, f, res.witness)))
        return fail(r, "reported witness is not a unit value", {format_polynomial(R, f)});
      ++holds;
    } else {
      ++vacuous;
    }
  }
  r.detail = std::to_string(r.checked) + " polynomials: " + std::to_string(holds) + " holds, " +
             std::to_string(vacuous) + " vacuous";
  return r;
}

RingOutcome suite_t21(const Ring& R, std::uint64_t seed) {
  RingOutcome r = start(R);
  auto check = [&](const Element& a, const Element& b) -> bool {
    ++r.checked;
    return valid_edr(R, a, b, edr_witness(R, a, b));
  };
  if (R.kind() == RingKind::Integers) {
    r.outcome = Outcome::Inconclusive;
    r.detail = "Z is not clean; unit-form witnesses exist only for some pairs";
    return r;
  }
  if (!R.is_finite()) {
    Rng rng(seed);
    for (int i = 0; i < kSampledPairs; ++i) {
      Element a = random_element(R, rng), b = random_element(R, rng);
      if (!check(a, b)) return fail(r, "invalid witness", {R.format(a), R.format(b)});
    }
    r.detail = std::to_string(r.checked) + " sampled pairs";
    return r;
  }
  if (!is_arithmetic(R).value) {
    auto [a, b] = non_principal_pair(R);
    r.checked = 1;
    try {
      edr_witness(R, a, b);
    } catch (const DomainNegative&) {
      r.detail = "not Bezout: (" + R.format(a) + ", " + R.format(b) + ") has no witness";
      return r;
    }
    return fail(r, "witness produced for a non-principal pair", {R.format(a), R.format(b)});
  }
  if (R.order() <= kExhaustivePairsOrder) {
    for (const auto& a : R.elements())
      for (const auto& b : R.elements())
        if (!check(a, b)) return fail(r, "invalid witness", {R.format(a), R.format(b)});
    r.detail = "exhaustive over " + std::to_string(r.checked) + " pairs";
  } else {
    Rng rng(seed);
    for (int i = 0; i < kSampledPairs; ++i) {
      Element a = random_element(R, rng), b = random_element(R, rng);
      if (!check(a, b)) return fail(r, "invalid witness", {R.format(a), R.format(b)});
    }
    r.detail = std::to_string(r.checked) + " sampled pairs";
  }
  return r;
}

RingOutcome suite_snf(const Ring& R, std::uint64_t seed) {
  RingOutcome r = start(R);
  if (R.is_finite() && !is_arithmetic(R).value) {
    auto [a, b] = non_principal_pair(R);
    r.checked = 1;
    try {
      smith_normal_form(R, {{a, b}});
    } catch (const DiagonalizationFailed&) {
      r.detail = "[[" + R.format(a) + ", " + R.format(b) + "]] is not diagonalizable";
      return r;
    }
    return fail(r, "diagonalized a matrix with a non-principal row", {R.format(a), R.format(b)});
  }
  Rng rng(seed);
  for (int i = 0; i < kMatricesPerRing; ++i) {
    Matrix A = random_matrix(R, rng);
    ++r.checked;
    CertificateCheck c = verify_snf_certificate(R, A, smith_normal_form(R, A));
    if (!c.ok) return fail(r, "certificate rejected: " + c.clause, {format_matrix(R, A)});
  }
  r.detail = std::to_string(r.checked) + " round trips";
  if (R.kind() == RingKind::Integers) {
    std::uint64_t agree = 0;
    for (const auto& A : integer_matrix_corpus()) {
      ++r.checked;
      SNFCertificate cert = smith_normal_form(R, A);
      std::vector<BigInt> ours;
      for (const auto& d : cert.diagonal) ours.push_back(d.integer());
      if (ours != determinant_divisor_factors(A)) return fail(r, "disagrees with minor-gcd oracle", {format_matrix(R, A)});
      ++agree;
    }
    r.detail += "; oracle agreement on " + std::to_string(agree) + " matrices";
  }
  return r;
}

RingOutcome suite_p32(const Ring& R, std::uint64_t seed) {
  RingOutcome r = start(R);
  auto battery = decompose_battery(R, seed);
  for (const auto& bd : battery) {
    for (std::size_t i = 0; i < bd.result.summands.size(); ++i) {
      const FiniteModule& S = bd.result.summands[i];
      ++r.checked;
      auto supp = support(S);
      if (supp.size() != 1)
        return fail(r, "summand support has " + std::to_string(supp.size()) + " points",
                    {bd.label, "summand " + std::to_string(i)});
      std::uint64_t e = supp[0].primitive_idempotent->index();
      ModuleMask img(S.size(), 0);
      for (std::uint32_t m = 0; m < S.size(); ++m) img[S.act(e, m)] = 1;
      if (std::count(img.begin(), img.end(), 1) != static_cast<std::ptrdiff_t>(S.size()))
        return fail(r, "summand differs from its localization", {bd.label, "summand " + std::to_string(i)});
    }
  }
  r.detail = std::to_string(battery.size()) + " modules, " + std::to_string(r.checked) + " summands";
  if (!all_exhaustive(battery)) {
    r.outcome = Outcome::Inconclusive;
    r.detail += "; some summands only probably indecomposable";
  }
  return r;
}

RingOutcome suite_t34(const Ring& R, std::uint64_t seed) {
  RingOutcome r = start(R);
  Theorem34Result cls = theorem34_classify(R);
  std::uint64_t index = jacobson_nilpotency_index(R);
  auto battery = decompose_battery(R, seed);
  if (cls.satisfied) {
    for (const auto& bd : battery)
      for (std::size_t i = 0; i < bd.result.summands.size(); ++i) {
        const FiniteModule& S = bd.result.summands[i];
        ++r.checked;
        std::vector<std::string> where{bd.label, "summand " + std::to_string(i)};
        if (!is_cyclic(S).value) return fail(r, "summand is not cyclic", where);
        if (!is_cocyclic(S)) return fail(r, "summand is not cocyclic", where);
        if (bd.result.lengths[i] > index) return fail(r, "summand longer than the nilpotency index", where);
      }
    r.detail = "satisfied; " + std::to_string(r.checked) + " summands cyclic, cocyclic, length <= " +
               std::to_string(index);
    if (!all_exhaustive(battery)) r.outcome = Outcome::Inconclusive;
    return r;
  }
  for (auto& bm : module_battery(R, seed)) {
    if (bm.label.rfind("lemma33(", 0) != 0 || bm.label.substr(bm.label.size() - 3) != ",3)") continue;
    const FiniteModule& M = bm.module;
    ++r.checked;
    auto ind = is_indecomposable(M, seed);
    std::string shape = "|M| = " + std::to_string(M.size()) + ", length " + std::to_string(module_length(M));
    if (ind.value != Indecomposability::Indecomposable)
      return fail(r, bm.label + " is " + indecomposability_name(ind.value), {bm.label});
    if (is_cyclic(M).value) return fail(r, bm.label + " is cyclic", {bm.label});
    r.detail = "violated at factor " + R.format(*cls.factor) + " (" + R.format(cls.witness[0]) + ", " +
               R.format(cls.witness[1]) + "); " + bm.label + ": " + shape + ", indecomposable, not cyclic";
    return r;
  }
  r.outcome = Outcome::Inconclusive;
  r.detail = "violated, but no construction host pair in the battery";
  return r;
}

RingOutcome suite_cvnr(const Ring& R, std::uint64_t seed) {
  RingOutcome r = start(R);
  bool vnr = is_von_neumann_regular(R).value;
  std::uint64_t index = jacobson_nilpotency_index(R);
  bool arith = is_arithmetic(R).value;
  if (vnr != (index == 1 && arith))
    return fail(r, "regularity disagrees with index 1 and arithmetic",
                {"regular=" + std::string(vnr ? "true" : "false"), "index=" + std::to_string(index)});
  auto battery = decompose_battery(R, seed);
  if (vnr) {
    for (const auto& bd : battery)
      for (std::size_t i = 0; i < bd.result.lengths.size(); ++i) {
        ++r.checked;
        if (bd.result.lengths[i] != 1)
          return fail(r, "non-simple summand over a regular ring", {bd.label, "summand " + std::to_string(i)});
      }
    r.detail = "regular; " + std::to_string(r.checked) + " summands simple";
    return r;
  }
  for (const auto& bd : battery)
    for (std::size_t i = 0; i < bd.result.lengths.size(); ++i) {
      ++r.checked;
      if (bd.result.lengths[i] > 1 && bd.result.exhaustive) {
        r.detail = "not regular; " + bd.label + " has an indecomposable summand of length " +
                   std::to_string(bd.result.lengths[i]);
        return r;
      }
    }
  return fail(r, "not regular, yet every battery summand is simple", {});
}

RingOutcome suite_clen(const Ring& R, std::uint64_t seed) {
  RingOutcome r = start(R);
  std::uint64_t index = jacobson_nilpotency_index(R);
  bool arith = is_arithmetic(R).value;
  auto battery = decompose_battery(R, seed);
  if (arith) {
    for (const auto& bd : battery)
      for (std::size_t i = 0; i < bd.result.lengths.size(); ++i) {
        ++r.checked;
        if (bd.result.lengths[i] > index)
          return fail(r, "summand longer than the nilpotency index " + std::to_string(index),
                      {bd.label, "summand " + std::to_string(i)});
      }
    r.detail = std::to_string(summand_count(battery)) + " summands of length <= " + std::to_string(index);
    if (!all_exhaustive(battery)) r.outcome = Outcome::Inconclusive;
    return r;
  }
  for (const auto& bd : battery)
    for (std::size_t i = 0; i < bd.result.lengths.size(); ++i) {
      ++r.checked;
      if (bd.result.lengths[i] > index && bd.result.exhaustive) {
        r.detail = "not arithmetic; " + bd.label + " is indecomposable of length " +
                   std::to_string(bd.result.lengths[i]) + " > " + std::to_string(index);
        return r;
      }
    }
  r.outcome = Outcome::Inconclusive;
  r.detail = "not arithmetic; no long indecomposable in the battery";
  return r;
}

using SuiteFn = std::function<RingOutcome(const Ring&, std::uint64_t)>;

SuiteFn suite_fn(const std::string& id) {
  if (id == "T1") return suite_t1;
  if (id == "LG") return suite_lg;
  if (id == "T21") return suite_t21;
  if (id == "SNF") return suite_snf;
  if (id == "P32") return suite_p32;
  if (id == "T34") return suite_t34;
  if (id == "CVNR") return suite_cvnr;
  if (id == "CLEN") return suite_clen;
  throw UnknownSuite("unknown suite: " + id);
}

}  // namespace

Outcome SuiteResult::overall() const {
  bool inconclusive = false;
  for (const auto& r : rings) {
    if (r.outcome == Outcome::Fail) return Outcome::Fail;
    if (r.outcome == Outcome::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Outcome::Inconclusive : Outcome::Pass;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"T1", "LG", "T21", "SNF", "P32", "T34", "CVNR", "CLEN"};
  return ids;
}

std::vector<Ring> suite_targets(const std::string& id) {
  suite_fn(id);
  if (id == "T1" || id == "SNF") return builtin_corpus();
  std::vector<Ring> out;
  if (id == "T21") {
    for (const auto& R : builtin_corpus())
      if (R.kind() != RingKind::Integers) out.push_back(R);
    return out;
  }
  for (const auto& R : finite_corpus())
    if (id != "LG" || R.order() <= 16) out.push_back(R);
  return out;
}

SuiteResult verify_suite(const std::string& id, const std::vector<Ring>& rings, std::uint64_t seed) {
  SuiteFn fn = suite_fn(id);
  SuiteResult result{id, {}};
  for (const auto& R : rings) {
    try {
      result.rings.push_back(fn(R, seed));
    } catch (const CapExceeded& e) {
      result.rings.push_back({R.spec(), Outcome::Inconclusive, e.what(), {}, 0});
    } catch (const UnsupportedRing& e) {
      result.rings.push_back({R.spec(), Outcome::Inconclusive, e.what(), {}, 0});
    } catch (const InfiniteEnumeration& e) {
      result.rings.push_back({R.spec(), Outcome::Inconclusive, e.what(), {}, 0});
    }
  }
  return result;
}

std::vector<Matrix> integer_matrix_corpus() {
  auto z = [](long long v) { return Element::integer(v); };
  std::vector<Matrix> out{{{z(2), z(4)}, {z(6), z(8)}}};
  Rng rng(100);
  while (out.size() < 100) {
    std::size_t m = rng() % 3 + 1, n = rng() % 3 + 1;
    Matrix A(m, std::vector<Element>(n));
    for (auto& row : A)
      for (auto& x : row) x = z(static_cast<long long>(rng() % 19) - 9);
    out.push_back(A);
  }
  return out;
}

std::vector<BigInt> determinant_divisor_factors(const Matrix& A) {
  std::size_t m = A.size(), n = A[0].size(), r = std::min(m, n);
  std::vector<BigInt> d{1};
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    choose(m, k, 0, cur, rows);
    choose(n, k, 0, cur, cols);
    BigInt g = 0;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        std::vector<std::vector<BigInt>> minor(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = A[rs[i]][cs[j]].integer();
        g = gcd(g, abs(laplace_det(minor)));
      }
    d.push_back(g);
  }
  std::vector<BigInt> s;
  for (std::size_t k = 1; k <= r; ++k) s.push_back(d[k - 1] == 0 || d[k] == 0 ? BigInt(0) : BigInt(d[k] / d[k - 1]));
  return s;
}

Matrix random_matrix(const Ring& ring, Rng& rng) {
  std::size_t m = draw(rng, 3) + 1, n = draw(rng, 3) + 1;
  Matrix A(m);
  for (auto& row : A)
    for (std::size_t j = 0; j < n; ++j) row.push_back(random_element(ring, rng));
  return A;
}

}  // namespace ringlab
