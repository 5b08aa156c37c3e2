#include "ringlab/bezout.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ringlab {

namespace {

std::size_t principal_size(const Ring& ring, std::uint64_t x) {
  Mask m = principal_ideal_mask(ring, x);
  return static_cast<std::size_t>(std::count(m.begin(), m.end(), 1));
}

bool ec_unit_component(const Rational& r) { return r != 0; }
bool ec_unit_tail(const Rational& r, std::uint64_t p) { return r != 0 && p_valuation(r, p) == 0; }

Rational pow_p(std::uint64_t p, long long v) {
  BigInt x = 1;
  for (long long i = 0; i < v; ++i) x *= p;
  return Rational(x);
}

std::size_t ec_len(std::initializer_list<const Element*> xs) {
  std::size_t n = 0;
  for (auto* x : xs) n = std::max(n, x->sequence().prefix.size());
  return n;
}

BezoutCertificate gcd_integers(const BigInt& a, const BigInt& b) {
  BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigInt s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    BigInt t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {Element::integer(r0), Element::integer(s0), Element::integer(t0)};
}

BezoutCertificate gcd_ec(const Ring& ring, const Element& a, const Element& b) {
  std::uint64_t p = ring.modulus();
  const Sequence& x = a.sequence();
  const Sequence& y = b.sequence();
  std::size_t len = ec_len({&a, &b});
  std::vector<Rational> d(len), s(len), t(len);
  for (std::size_t i = 0; i < len; ++i) {
    const Rational& xi = sequence_at(x, i);
    const Rational& yi = sequence_at(y, i);
    if (xi != 0) {
      d[i] = 1;
      s[i] = Rational(1) / xi;
    } else if (yi != 0) {
      d[i] = 1;
      t[i] = Rational(1) / yi;
    }
  }
  Rational dt = 0, st = 0, tt = 0;
  if (x.tail != 0 || y.tail != 0) {
    bool use_a = x.tail != 0 && (y.tail == 0 || p_valuation(x.tail, p) <= p_valuation(y.tail, p));
    const Rational& g = use_a ? x.tail : y.tail;
    dt = pow_p(p, p_valuation(g, p));
    (use_a ? st : tt) = dt / g;
  }
  return {Element::sequence(canonical_sequence(d, dt)), Element::sequence(canonical_sequence(s, st)),
          Element::sequence(canonical_sequence(t, tt))};
}

BezoutCertificate gcd_finite(const Ring& ring, const Element& a, const Element& b) {
  std::optional<std::uint64_t> d;
  if (ring.kind() == RingKind::ZmodN) {
    d = std::gcd(std::gcd(a.index(), b.index()), ring.modulus()) % ring.modulus();
  } else {
    require_enumerable(ring, "gcd");
    Mask I = ideal_mask(ring, {a, b});
    std::size_t size = static_cast<std::size_t>(std::count(I.begin(), I.end(), 1));
    for (std::uint64_t x = 0; x < ring.order() && !d; ++x)
      if (I[x] && principal_size(ring, x) == size) d = x;
  }
  if (!d) throw NotPrincipal(ring.format(a), ring.format(b));
  Element de = Element::finite(*d);
  for (std::uint64_t s = 0; s < ring.order(); ++s) {
    Element se = Element::finite(s);
    auto t = divide(ring, ring.sub(de, ring.mul(se, a)), b);
    if (t) return {de, se, *t};
  }
  throw NotPrincipal(ring.format(a), ring.format(b));
}

// All t with t*d = a, in canonical order.
std::vector<Element> quotients(const Ring& ring, const Element& a, const Element& d) {
  std::vector<Element> out;
  for (std::uint64_t t = 0; t < ring.order(); ++t)
    if (ring.mul_index(t, d.index()) == a.index()) out.push_back(Element::finite(t));
  return out;
}

EDRWitness edr_integers(const Ring& ring, const Element& a, const Element& b) {
  BezoutCertificate g = gcd_integers(a.integer(), b.integer());
  std::optional<EDRWitness> best;
  for (int sign : {1, -1}) {
    BigInt d = g.d.integer() * sign;
    BigInt ap = a.integer() / d, bp = b.integer() / d;
    for (int u : {1, -1}) {
      std::optional<BigInt> c;
      if (bp == 0) {
        if (ap == u) c = BigInt(0);
      } else if ((u - ap) % bp == 0) {
        c = (u - ap) / bp;
      }
      if (!c) continue;
      EDRWitness w{Element::integer(d), Element::integer(ap), Element::integer(bp), Element::integer(*c)};
      if (!best || ring.less(w.c, best->c)) best = w;
    }
  }
  if (!best)
    throw WitnessNotFound("no c with a' + c b' = +-1 for (" + ring.format(a) + ", " + ring.format(b) +
                          "); Z is not local-global");
  return *best;
}

EDRWitness edr_ec(const Ring& ring, const Element& a, const Element& b) {
  std::uint64_t p = ring.modulus();
  BezoutCertificate g = gcd_ec(ring, a, b);
  const Sequence& d = g.d.sequence();
  const Sequence& x = a.sequence();
  const Sequence& y = b.sequence();
  std::size_t len = ec_len({&a, &b, &g.d});
  std::vector<Rational> ap(len), bp(len), c(len);
  auto component = [&](const Rational& di, const Rational& xi, const Rational& yi, bool tail, Rational& api,
                       Rational& bpi, Rational& ci) {
    if (di == 0) {
      api = 1;
      bpi = 0;
    } else {
      api = xi / di;
      bpi = yi / di;
    }
    bool unit = tail ? ec_unit_tail(api, p) : ec_unit_component(api);
    ci = unit ? 0 : 1;
  };
  for (std::size_t i = 0; i < len; ++i)
    component(sequence_at(d, i), sequence_at(x, i), sequence_at(y, i), false, ap[i], bp[i], c[i]);
  Rational apt, bpt, ct;
  component(d.tail, x.tail, y.tail, true, apt, bpt, ct);
  return {g.d, Element::sequence(canonical_sequence(ap, apt)), Element::sequence(canonical_sequence(bp, bpt)),
          Element::sequence(canonical_sequence(c, ct))};
}

}  // namespace

BezoutCertificate gcd_bezout(const Ring& ring, const Element& a, const Element& b) {
  switch (ring.kind()) {
    case RingKind::Integers:
      return gcd_integers(a.integer(), b.integer());
    case RingKind::EventuallyConstant:
      return gcd_ec(ring, a, b);
    default:
      return gcd_finite(ring, a, b);
  }
}

EDRWitness edr_witness(const Ring& ring, const Element& a, const Element& b) {
  if (ring.is_zero(a) && ring.is_zero(b)) return {ring.zero(), ring.one(), ring.zero(), ring.zero()};
  if (ring.kind() == RingKind::Integers) return edr_integers(ring, a, b);
  if (ring.kind() == RingKind::EventuallyConstant) return edr_ec(ring, a, b);
  require_enumerable(ring, "edr witness");
  BezoutCertificate g = gcd_bezout(ring, a, b);
  std::vector<Element> as = quotients(ring, a, g.d), bs = quotients(ring, b, g.d);
  for (std::uint64_t c = 0; c < ring.order(); ++c) {
    Element ce = Element::finite(c);
    for (const auto& ap : as)
      for (const auto& bp : bs)
        if (is_unit(ring, ring.add(ap, ring.mul(ce, bp)))) return {g.d, ap, bp, ce};
  }
  throw WitnessNotFound("no (c, a', b') with a' + c b' a unit for (" + ring.format(a) + ", " + ring.format(b) +
                        ") over " + ring.spec() + "; d = " + ring.format(g.d));
}

bool is_unimodular(const Ring& ring, const std::vector<Element>& xs) {
  switch (ring.kind()) {
    case RingKind::Integers: {
      BigInt g = 0;
      for (const auto& x : xs) g = gcd(g, x.integer());
      return g == 1;
    }
    case RingKind::EventuallyConstant: {
      std::size_t len = 0;
      for (const auto& x : xs) len = std::max(len, x.sequence().prefix.size());
      for (std::size_t i = 0; i < len; ++i)
        if (std::none_of(xs.begin(), xs.end(), [&](const Element& x) { return sequence_at(x.sequence(), i) != 0; }))
          return false;
      return std::any_of(xs.begin(), xs.end(),
                         [&](const Element& x) { return ec_unit_tail(x.sequence().tail, ring.modulus()); });
    }
    default:
      return ideal_mask(ring, xs)[ring.one().index()] != 0;
  }
}

GHWitness gh_condition(const Ring& ring, const Element& a, const Element& b, const Element& c) {
  if (!is_unimodular(ring, {a, b, c}))
    throw NotUnimodular("(" + ring.format(a) + ", " + ring.format(b) + ", " + ring.format(c) +
                        ") is not the unit ideal");
  if (ring.kind() == RingKind::Integers) {
    // small search in canonical order; the local recipe needs units Z lacks
    std::vector<Element> range;
    range.push_back(ring.zero());
    for (long long k = 1; k <= 32; ++k) {
      range.push_back(ring.from_int(k));
      range.push_back(ring.from_int(-k));
    }
    for (const auto& p : range)
      for (const auto& q : range)
        if (is_unimodular(ring, {ring.mul(p, a), ring.add(ring.mul(p, b), ring.mul(q, c))})) return {p, q};
    throw WitnessNotFound("no (p, q) with |p|, |q| <= 32");
  }
  // (b, c) = (d), b = b'd, c = c'd, b' + c'q a unit, a + sd a unit;
  // then p = b' + c'q and (pa, pb + pqc) = p(a, b + qc) = R
  EDRWitness w = edr_witness(ring, b, c);
  const Element& d = w.d;
  std::optional<Element> s;
  if (ring.kind() == RingKind::EventuallyConstant) {
    // componentwise: s_i = 0 where a_i is a unit, else 1
    const Sequence& x = a.sequence();
    std::size_t len = ec_len({&a, &d});
    std::vector<Rational> sv(len);
    for (std::size_t i = 0; i < len; ++i) sv[i] = ec_unit_component(sequence_at(x, i)) ? 0 : 1;
    Rational st = ec_unit_tail(x.tail, ring.modulus()) ? 0 : 1;
    s = Element::sequence(canonical_sequence(sv, st));
  } else {
    for (std::uint64_t k = 0; k < ring.order() && !s; ++k)
      if (is_unit(ring, ring.add(a, ring.mul(Element::finite(k), d)))) s = Element::finite(k);
  }
  if (!s || !is_unit(ring, ring.add(a, ring.mul(*s, d))))
    throw WitnessNotFound("no s with a + s d a unit for a = " + ring.format(a) + ", d = " + ring.format(d));
  // edr_witness(b, c) plays (a', b', c) = (b', c', q)
  Element p = ring.add(w.a_prime, ring.mul(w.c, w.b_prime));
  Element q = ring.mul(p, w.c);
  return {p, q};
}

// ---------------------------------------------------------------------------

Matrix identity_matrix(const Ring& ring, std::size_t n) {
  Matrix I = zero_matrix(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) I[i][i] = ring.one();
  return I;
}

Matrix zero_matrix(const Ring& ring, std::size_t m, std::size_t n) {
  return Matrix(m, std::vector<Element>(n, ring.zero()));
}

Matrix multiply(const Ring& ring, const Matrix& A, const Matrix& B) {
  std::size_t m = A.size(), k = B.size(), n = B.empty() ? 0 : B[0].size();
  Matrix C = zero_matrix(ring, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element acc = ring.zero();
      for (std::size_t l = 0; l < k; ++l) acc = ring.add(acc, ring.mul(A[i][l], B[l][j]));
      C[i][j] = acc;
    }
  return C;
}

std::string format_matrix(const Ring& ring, const Matrix& A) {
  std::ostringstream os;
  os << A.size() << " " << (A.empty() ? 0 : A[0].size()) << "\n";
  for (const auto& row : A) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << ring.format(row[j]);
    os << "\n";
  }
  return os.str();
}

Matrix parse_matrix(const Ring& ring, std::string_view text) {
  std::istringstream in{std::string(text)};
  long long m = 0, n = 0;
  if (!(in >> m >> n) || m < 1 || n < 1) throw SyntaxError("matrix header must be 'm n' with m, n >= 1");
  Matrix A(static_cast<std::size_t>(m));
  for (auto& row : A) {
    for (long long j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw SyntaxError("matrix has fewer entries than its header declares");
      row.push_back(ring.parse_element(tok));
    }
  }
  std::string extra;
  if (in >> extra) throw SyntaxError("trailing token '" + extra + "' after matrix entries");
  return A;
}

// ---------------------------------------------------------------------------

namespace {

struct Reducer {
  const Ring& ring;
  Matrix D, P, Q;
  std::vector<EDRWitness> consumed;
  std::size_t m, n;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(D[i], D[j]);
    std::swap(P[i], P[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : D) std::swap(row[i], row[j]);
    for (auto& row : Q) std::swap(row[i], row[j]);
  }
  // row_i += t * row_j
  void add_row(std::size_t i, std::size_t j, const Element& t) {
    for (std::size_t c = 0; c < n; ++c) D[i][c] = ring.add(D[i][c], ring.mul(t, D[j][c]));
    for (std::size_t c = 0; c < m; ++c) P[i][c] = ring.add(P[i][c], ring.mul(t, P[j][c]));
  }
  void add_col(std::size_t i, std::size_t j, const Element& t) {
    for (std::size_t r = 0; r < m; ++r) D[r][i] = ring.add(D[r][i], ring.mul(t, D[r][j]));
    for (std::size_t r = 0; r < n; ++r) Q[r][i] = ring.add(Q[r][i], ring.mul(t, Q[r][j]));
  }
  static void mix(const Ring& ring, Element& x, Element& y, const Element (&T)[2][2]) {
    Element nx = ring.add(ring.mul(T[0][0], x), ring.mul(T[0][1], y));
    Element ny = ring.add(ring.mul(T[1][0], x), ring.mul(T[1][1], y));
    x = std::move(nx);
    y = std::move(ny);
  }
  void transform_rows(std::size_t k, std::size_t i, const Element (&T)[2][2]) {
    for (std::size_t c = 0; c < n; ++c) mix(ring, D[k][c], D[i][c], T);
    for (std::size_t c = 0; c < m; ++c) mix(ring, P[k][c], P[i][c], T);
  }
  void transform_cols(std::size_t k, std::size_t j, const Element (&T)[2][2]) {
    for (std::size_t r = 0; r < m; ++r) mix(ring, D[r][k], D[r][j], T);
    for (std::size_t r = 0; r < n; ++r) mix(ring, Q[r][k], Q[r][j], T);
  }

  std::string submatrix(std::size_t k) const {
    Matrix S;
    for (std::size_t i = k; i < m; ++i) S.emplace_back(D[i].begin() + static_cast<std::ptrdiff_t>(k), D[i].end());
    std::string s = "[";
    for (std::size_t i = 0; i < S.size(); ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < S[i].size(); ++j) s += (j ? "," : "") + ring.format(S[i][j]);
      s += "]";
    }
    return s + "]";
  }

  // [[s, t], [-b', a']] with s a' + t b' = 1, sending (a, b) to (d, 0).
  void hermite(const Element& a, const Element& b, std::size_t k, Element (&T)[2][2]) {
    Element s, t, ap, bp;
    try {
      if (ring.kind() == RingKind::Integers) {
        BezoutCertificate g = gcd_bezout(ring, a, b);
        s = g.s;
        t = g.t;
        ap = *divide(ring, a, g.d);
        bp = *divide(ring, b, g.d);
      } else {
        EDRWitness w = edr_witness(ring, a, b);
        Element u = ring.add(w.a_prime, ring.mul(w.c, w.b_prime));
        Element ui = *unit_inverse(ring, u);
        s = ui;
        t = ring.mul(w.c, ui);
        ap = w.a_prime;
        bp = w.b_prime;
        consumed.push_back(w);
      }
    } catch (const DomainNegative& e) {
      throw DiagonalizationFailed(submatrix(k), e.what());
    }
    T[0][0] = s;
    T[0][1] = t;
    T[1][0] = ring.neg(bp);
    T[1][1] = ap;
  }

  bool nonzero(const Element& x) const { return !ring.is_zero(x); }

  void reduce_at(std::size_t k, std::size_t pass_limit) {
    for (std::size_t pass = 0;; ++pass) {
      if (pass > pass_limit) throw DiagonalizationFailed(submatrix(k), "pass limit exceeded");
      for (std::size_t i = k + 1; i < m; ++i) {
        if (!nonzero(D[i][k])) continue;
        if (auto t = divide(ring, D[i][k], D[k][k])) {
          add_row(i, k, ring.neg(*t));
        } else {
          Element T[2][2];
          hermite(D[k][k], D[i][k], k, T);
          transform_rows(k, i, T);
        }
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!nonzero(D[k][j])) continue;
        if (auto t = divide(ring, D[k][j], D[k][k])) {
          add_col(j, k, ring.neg(*t));
        } else {
          Element T[2][2];
          hermite(D[k][k], D[k][j], k, T);
          transform_cols(k, j, T);
        }
      }
      bool col_clear = true;
      for (std::size_t i = k + 1; i < m; ++i) col_clear = col_clear && !nonzero(D[i][k]);
      if (!col_clear) continue;
      // the pivot must divide the rest; otherwise fold the offending row in
      bool folded = false;
      for (std::size_t i = k + 1; i < m && !folded; ++i)
        for (std::size_t j = k + 1; j < n && !folded; ++j)
          if (nonzero(D[i][j]) && !divide(ring, D[i][j], D[k][k])) {
            add_row(k, i, ring.one());
            folded = true;
          }
      if (!folded) return;
    }
  }

  // Unit u with u*d the normal form of d.
  Element normalizer(const Element& d) const {
    switch (ring.kind()) {
      case RingKind::Integers:
        return ring.from_int(d.integer() < 0 ? -1 : 1);
      case RingKind::EventuallyConstant: {
        std::uint64_t p = ring.modulus();
        const Sequence& s = d.sequence();
        std::vector<Rational> u(s.prefix.size());
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = s.prefix[i] == 0 ? Rational(1) : Rational(1) / s.prefix[i];
        Rational ut = s.tail == 0 ? Rational(1) : pow_p(p, p_valuation(s.tail, p)) / s.tail;
        return Element::sequence(canonical_sequence(u, ut));
      }
      default: {
        Mask target = principal_ideal_mask(ring, d.index());
        for (std::uint64_t x = 0; x < ring.order(); ++x) {
          if (!target[x]) continue;
          if (principal_ideal_mask(ring, x) != target) continue;
          for (std::uint64_t u = 0; u < ring.order(); ++u)
            if (ring.mul_index(u, d.index()) == x && is_unit(ring, Element::finite(u))) return Element::finite(u);
        }
        return ring.one();
      }
    }
  }

  void scale_row(std::size_t k, const Element& u) {
    for (auto& x : D[k]) x = ring.mul(u, x);
    for (auto& x : P[k]) x = ring.mul(u, x);
  }
};

}  // namespace

SNFCertificate smith_normal_form(const Ring& ring, const Matrix& A, const SNFOptions& opts) {
  if (A.empty() || A[0].empty()) throw SyntaxError("empty matrix");
  std::size_t m = A.size(), n = A[0].size();
  for (const auto& row : A)
    if (row.size() != n) throw SyntaxError("ragged matrix");
  if (m > opts.max_dim || n > opts.max_dim)
    throw DimensionCapExceeded("matrix " + std::to_string(m) + "x" + std::to_string(n) + " exceeds " +
                               std::to_string(opts.max_dim) + "x" + std::to_string(opts.max_dim));
  if (ring.kind() == RingKind::EventuallyConstant) {
    for (const auto& row : A)
      for (const auto& x : row)
        if (x.sequence().prefix.size() > opts.max_ec_prefix)
          throw DimensionCapExceeded("EC entry prefix longer than " + std::to_string(opts.max_ec_prefix));
  } else if (ring.is_finite()) {
    require_enumerable(ring, "smith normal form");
  }

  Reducer r{ring, A, identity_matrix(ring, m), identity_matrix(ring, n), {}, m, n};
  std::size_t rank_bound = std::min(m, n);
  std::size_t pass_limit = 16 + 4 * (m + n) * (m + n);
  for (std::size_t k = 0; k < rank_bound; ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t j = k; j < n && !pivot; ++j)
      for (std::size_t i = k; i < m && !pivot; ++i)
        if (r.nonzero(r.D[i][j])) pivot = {i, j};
    if (!pivot) break;
    if (pivot->first != k) r.swap_rows(k, pivot->first);
    if (pivot->second != k) r.swap_cols(k, pivot->second);
    r.reduce_at(k, pass_limit);
  }
  for (std::size_t k = 0; k < rank_bound; ++k)
    if (r.nonzero(r.D[k][k])) r.scale_row(k, r.normalizer(r.D[k][k]));

  SNFCertificate cert{std::move(r.P), std::move(r.D), std::move(r.Q), {}, std::move(r.consumed)};
  for (std::size_t k = 0; k < rank_bound; ++k) cert.diagonal.push_back(cert.D[k][k]);
  return cert;
}

// ---------------------------------------------------------------------------
// Independent checker: exact products, cofactor determinants, divisibility.

namespace {

Element determinant(const Ring& ring, const Matrix& M) {
  std::size_t n = M.size();
  std::map<std::pair<std::size_t, std::uint32_t>, Element> memo;
  // expansion along row `row` over the columns not in `used`
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t used) -> Element {
    if (row == n) return ring.one();
    auto key = std::make_pair(row, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Element acc = ring.zero();
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      Element term = ring.mul(M[row][c], self(self, row + 1, used | (1u << c)));
      acc = sign > 0 ? ring.add(acc, term) : ring.sub(acc, term);
      sign = -sign;
    }
    memo.emplace(key, acc);
    return acc;
  };
  return rec(rec, 0, 0);
}

bool is_square(const Matrix& M, std::size_t n) {
  if (M.size() != n) return false;
  return std::all_of(M.begin(), M.end(), [&](const auto& row) { return row.size() == n; });
}

}  // namespace

CertificateCheck verify_snf_certificate(const Ring& ring, const Matrix& A, const SNFCertificate& cert) {
  std::size_t m = A.size(), n = A.empty() ? 0 : A[0].size();
  if (!is_square(cert.P, m)) return {false, "P is not m x m"};
  if (!is_square(cert.Q, n)) return {false, "Q is not n x n"};
  if (cert.D.size() != m || (m && cert.D[0].size() != n)) return {false, "D is not m x n"};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !ring.is_zero(cert.D[i][j])) return {false, "D is not diagonal"};
  std::size_t r = std::min(m, n);
  bool seen_zero = false;
  for (std::size_t k = 0; k < r; ++k) {
    const Element& d = cert.D[k][k];
    if (ring.is_zero(d)) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return {false, "zero diagonal entry precedes a nonzero one"};
    if (k + 1 < r && !divide(ring, cert.D[k + 1][k + 1], d))
      return {false, "divisibility chain broken at position " + std::to_string(k)};
  }
  if (!is_unit(ring, determinant(ring, cert.P))) return {false, "det(P) is not a unit"};
  if (!is_unit(ring, determinant(ring, cert.Q))) return {false, "det(Q) is not a unit"};
  if (multiply(ring, multiply(ring, cert.P, A), cert.Q) != cert.D) return {false, "P*A*Q != D"};
  return {};
}

}  // namespace ringlab
