#include "ringlab/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <numeric>
#include <sstream>

#include "parse_util.hpp"

namespace ringlab {

namespace {

std::atomic<std::uint64_t> g_enumeration_cap{4096};

constexpr std::uint64_t kOrderLimit = std::uint64_t{1} << 62;
constexpr std::uint64_t kTableLimit = 256;

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_signed(long long v, std::uint64_t n) {
  long long m = v % static_cast<long long>(n);
  if (m < 0) m += static_cast<long long>(n);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t reduce_big(const BigInt& v, std::uint64_t n) {
  BigInt m = v % n;
  if (m < 0) m += n;
  return static_cast<std::uint64_t>(m);
}

}  // namespace

std::uint64_t enumeration_cap() { return g_enumeration_cap.load(); }
void set_enumeration_cap(std::uint64_t cap) { g_enumeration_cap.store(cap); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

long long p_valuation(const Rational& r, std::uint64_t p) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  long long v = 0;
  while (num != 0 && num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

std::string format_rational(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Sequence canonical_sequence(std::vector<Rational> prefix, Rational tail) {
  while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
  return Sequence{std::move(prefix), std::move(tail)};
}

const Rational& sequence_at(const Sequence& s, std::size_t k) {
  return k < s.prefix.size() ? s.prefix[k] : s.tail;
}

struct Ring::Impl {
  RingKind kind{};
  std::uint64_t n = 0;
  std::vector<std::uint64_t> poly;
  std::vector<Ring> factors;
  std::vector<std::uint64_t> strides;
  std::optional<std::uint64_t> order;
  std::uint64_t characteristic = 0;
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;

  // Structural arithmetic on indices (no tables).
  std::uint64_t s_add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t s_neg(std::uint64_t a) const;
  std::uint64_t s_mul(std::uint64_t a, std::uint64_t b) const;
  void build_tables();

  std::vector<std::uint64_t> decode_poly(std::uint64_t idx) const {
    std::size_t d = poly.size() - 1;
    std::vector<std::uint64_t> c(d);
    for (std::size_t i = d; i-- > 0;) {
      c[i] = idx % n;
      idx /= n;
    }
    return c;
  }
  std::uint64_t encode_poly(const std::vector<std::uint64_t>& c) const {
    std::uint64_t idx = 0;
    for (std::uint64_t v : c) idx = idx * n + v;
    return idx;
  }
};

std::uint64_t Ring::Impl::s_add(std::uint64_t a, std::uint64_t b) const {
  switch (kind) {
    case RingKind::ZmodN: {
      std::uint64_t s = a + b;
      return s >= n ? s - n : s;
    }
    case RingKind::LocalNonChain2:
      return a ^ b;
    case RingKind::PolyQuot: {
      auto ca = decode_poly(a), cb = decode_poly(b);
      for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % n;
      return encode_poly(ca);
    }
    case RingKind::Product: {
      std::uint64_t r = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        std::uint64_t ord = *factors[k].impl_->order;
        std::uint64_t x = (a / strides[k]) % ord, y = (b / strides[k]) % ord;
        r += factors[k].add_index(x, y) * strides[k];
      }
      return r;
    }
    default:
      break;
  }
  throw UnsupportedRing("index arithmetic on an infinite ring");
}

std::uint64_t Ring::Impl::s_neg(std::uint64_t a) const {
  switch (kind) {
    case RingKind::ZmodN:
      return a == 0 ? 0 : n - a;
    case RingKind::LocalNonChain2:
      return a;
    case RingKind::PolyQuot: {
      auto c = decode_poly(a);
      for (auto& v : c) v = v == 0 ? 0 : n - v;
      return encode_poly(c);
    }
    case RingKind::Product: {
      std::uint64_t r = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        std::uint64_t ord = *factors[k].impl_->order;
        r += factors[k].neg_index((a / strides[k]) % ord) * strides[k];
      }
      return r;
    }
    default:
      break;
  }
  throw UnsupportedRing("index arithmetic on an infinite ring");
}

std::uint64_t Ring::Impl::s_mul(std::uint64_t a, std::uint64_t b) const {
  switch (kind) {
    case RingKind::ZmodN:
      return mulmod(a, b, n);
    case RingKind::LocalNonChain2: {
      std::uint64_t a0 = a >> 2, ax = (a >> 1) & 1, ay = a & 1;
      std::uint64_t b0 = b >> 2, bx = (b >> 1) & 1, by = b & 1;
      std::uint64_t c0 = a0 & b0;
      std::uint64_t cx = (a0 & bx) ^ (ax & b0);
      std::uint64_t cy = (a0 & by) ^ (ay & b0);
      return (c0 << 2) | (cx << 1) | cy;
    }
    case RingKind::PolyQuot: {
      auto ca = decode_poly(a), cb = decode_poly(b);
      std::size_t d = ca.size();
      std::vector<std::uint64_t> prod(2 * d - 1, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + mulmod(ca[i], cb[j], n)) % n;
      for (std::size_t k = prod.size(); k-- > d;) {
        std::uint64_t t = prod[k];
        if (t == 0) continue;
        for (std::size_t i = 0; i <= d; ++i) {
          std::uint64_t sub = mulmod(t, poly[i], n);
          std::size_t pos = k - d + i;
          prod[pos] = (prod[pos] + n - sub) % n;
        }
      }
      prod.resize(d);
      return encode_poly(prod);
    }
    case RingKind::Product: {
      std::uint64_t r = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        std::uint64_t ord = *factors[k].impl_->order;
        std::uint64_t x = (a / strides[k]) % ord, y = (b / strides[k]) % ord;
        r += factors[k].mul_index(x, y) * strides[k];
      }
      return r;
    }
    default:
      break;
  }
  throw UnsupportedRing("index arithmetic on an infinite ring");
}

Ring Ring::zmod(std::uint64_t n) {
  if (n < 2) throw InvalidSpec("Zn(n) requires n >= 2, got " + std::to_string(n));
  if (n >= kOrderLimit) throw InvalidSpec("Zn modulus too large");
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::ZmodN;
  impl->n = n;
  impl->order = n;
  impl->characteristic = n;
  return Ring(std::move(impl));
}

void Ring::Impl::build_tables() {
  std::uint64_t ord = *order;
  if (ord > kTableLimit) return;
  add_table.resize(ord * ord);
  mul_table.resize(ord * ord);
  for (std::uint64_t a = 0; a < ord; ++a) {
    for (std::uint64_t b = 0; b < ord; ++b) {
      add_table[a * ord + b] = static_cast<std::uint32_t>(s_add(a, b));
      mul_table[a * ord + b] = static_cast<std::uint32_t>(s_mul(a, b));
    }
  }
}

Ring Ring::poly_quot(const Ring& base, std::vector<std::int64_t> modulus) {
  if (base.kind() != RingKind::ZmodN || !is_prime(base.modulus()))
    throw InvalidSpec("Quot requires a base Zn(p) with p prime, got " + base.spec());
  std::uint64_t p = base.modulus();
  if (modulus.size() < 2) throw InvalidSpec("Quot modulus must have degree >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::PolyQuot;
  impl->n = p;
  for (auto c : modulus) impl->poly.push_back(reduce_signed(c, p));
  if (impl->poly.back() != 1) throw InvalidSpec("Quot modulus must be monic (leading coefficient 1)");
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i + 1 < impl->poly.size(); ++i) {
    if (ord > kOrderLimit / p) throw InvalidSpec("Quot ring order too large");
    ord *= p;
  }
  impl->order = ord;
  impl->characteristic = p;
  impl->build_tables();
  return Ring(std::move(impl));
}

Ring Ring::product(std::vector<Ring> factors) {
  if (factors.empty()) throw InvalidSpec("Prod requires at least one factor");
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::Product;
  std::uint64_t ord = 1;
  std::uint64_t ch = 1;
  for (const auto& f : factors) {
    if (!f.is_finite()) throw InvalidSpec("Prod factors must be finite rings, got " + f.spec());
    if (ord > kOrderLimit / f.order()) throw InvalidSpec("Prod ring order too large");
    ord *= f.order();
    ch = std::lcm(ch, f.characteristic());
  }
  impl->strides.resize(factors.size());
  std::uint64_t stride = 1;
  for (std::size_t k = factors.size(); k-- > 0;) {
    impl->strides[k] = stride;
    stride *= factors[k].order();
  }
  impl->factors = std::move(factors);
  impl->order = ord;
  impl->characteristic = ch;
  impl->build_tables();
  return Ring(std::move(impl));
}

Ring Ring::integers() {
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::Integers;
  return Ring(std::move(impl));
}

Ring Ring::eventually_constant(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidSpec("EC(p) requires p prime, got " + std::to_string(p));
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::EventuallyConstant;
  impl->n = p;
  return Ring(std::move(impl));
}

Ring Ring::local_non_chain2() {
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::LocalNonChain2;
  impl->n = 2;
  impl->order = 8;
  impl->characteristic = 2;
  impl->build_tables();
  return Ring(std::move(impl));
}

RingKind Ring::kind() const { return impl_->kind; }
bool Ring::is_finite() const { return impl_->order.has_value(); }

std::uint64_t Ring::order() const {
  if (!impl_->order) throw InfiniteEnumeration(spec() + " is infinite");
  return *impl_->order;
}

std::optional<std::uint64_t> Ring::cached_order() const { return impl_->order; }
std::uint64_t Ring::modulus() const { return impl_->n; }
const std::vector<std::uint64_t>& Ring::poly_modulus() const { return impl_->poly; }
std::size_t Ring::degree() const { return impl_->poly.empty() ? 0 : impl_->poly.size() - 1; }
const std::vector<Ring>& Ring::factors() const { return impl_->factors; }
std::uint64_t Ring::characteristic() const { return impl_->characteristic; }

std::string Ring::spec() const {
  switch (impl_->kind) {
    case RingKind::ZmodN:
      return "Zn(" + std::to_string(impl_->n) + ")";
    case RingKind::PolyQuot: {
      std::string s = "Quot(Zn(" + std::to_string(impl_->n) + "),[";
      for (std::size_t i = 0; i < impl_->poly.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(impl_->poly[i]);
      }
      return s + "])";
    }
    case RingKind::Product: {
      std::string s = "Prod(";
      for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
        if (i) s += ",";
        s += impl_->factors[i].spec();
      }
      return s + ")";
    }
    case RingKind::Integers:
      return "Z";
    case RingKind::EventuallyConstant:
      return "EC(" + std::to_string(impl_->n) + ")";
    case RingKind::LocalNonChain2:
      return "LocalNonChain2";
  }
  return {};
}

bool Ring::operator==(const Ring& other) const {
  return impl_ == other.impl_ || spec() == other.spec();
}

Element Ring::zero() const {
  switch (impl_->kind) {
    case RingKind::Integers:
      return Element::integer(0);
    case RingKind::EventuallyConstant:
      return Element::sequence(Sequence{{}, Rational(0)});
    default:
      return Element::finite(0);
  }
}

Element Ring::one() const { return from_int(1); }

Element Ring::from_int(long long v) const {
  switch (impl_->kind) {
    case RingKind::ZmodN:
      return Element::finite(reduce_signed(v, impl_->n));
    case RingKind::PolyQuot:
      return from_coefficients({static_cast<std::int64_t>(reduce_signed(v, impl_->n))});
    case RingKind::LocalNonChain2:
      return Element::finite((v & 1) ? 4 : 0);
    case RingKind::Product: {
      std::vector<Element> parts;
      for (const auto& f : impl_->factors) parts.push_back(f.from_int(v));
      return assemble(parts);
    }
    case RingKind::Integers:
      return Element::integer(v);
    case RingKind::EventuallyConstant:
      return Element::sequence(Sequence{{}, Rational(v)});
  }
  return {};
}

std::uint64_t Ring::add_index(std::uint64_t a, std::uint64_t b) const {
  if (!impl_->add_table.empty()) return impl_->add_table[a * *impl_->order + b];
  return impl_->s_add(a, b);
}

std::uint64_t Ring::neg_index(std::uint64_t a) const { return impl_->s_neg(a); }

std::uint64_t Ring::mul_index(std::uint64_t a, std::uint64_t b) const {
  if (!impl_->mul_table.empty()) return impl_->mul_table[a * *impl_->order + b];
  return impl_->s_mul(a, b);
}

namespace {

Sequence seq_combine(const Sequence& a, const Sequence& b, bool multiply) {
  std::size_t len = std::max(a.prefix.size(), b.prefix.size());
  std::vector<Rational> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    const Rational& x = sequence_at(a, i);
    const Rational& y = sequence_at(b, i);
    out[i] = multiply ? Rational(x * y) : Rational(x + y);
  }
  Rational tail = multiply ? Rational(a.tail * b.tail) : Rational(a.tail + b.tail);
  return canonical_sequence(std::move(out), std::move(tail));
}

}  // namespace

Element Ring::add(const Element& a, const Element& b) const {
  switch (impl_->kind) {
    case RingKind::Integers:
      return Element::integer(a.integer() + b.integer());
    case RingKind::EventuallyConstant:
      return Element::sequence(seq_combine(a.sequence(), b.sequence(), false));
    default:
      return Element::finite(add_index(a.index(), b.index()));
  }
}

Element Ring::neg(const Element& a) const {
  switch (impl_->kind) {
    case RingKind::Integers:
      return Element::integer(-a.integer());
    case RingKind::EventuallyConstant: {
      Sequence s = a.sequence();
      for (auto& r : s.prefix) r = -r;
      s.tail = -s.tail;
      return Element::sequence(std::move(s));
    }
    default:
      return Element::finite(neg_index(a.index()));
  }
}

Element Ring::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Ring::mul(const Element& a, const Element& b) const {
  switch (impl_->kind) {
    case RingKind::Integers:
      return Element::integer(a.integer() * b.integer());
    case RingKind::EventuallyConstant:
      return Element::sequence(seq_combine(a.sequence(), b.sequence(), true));
    default:
      return Element::finite(mul_index(a.index(), b.index()));
  }
}

Element Ring::pow(const Element& a, std::uint64_t k) const {
  Element result = one();
  Element base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

namespace {

int cmp_big(const BigInt& a, const BigInt& b) { return a < b ? -1 : (a > b ? 1 : 0); }

int cmp_rational_pair(const Rational& a, const Rational& b) {
  int c = cmp_big(boost::multiprecision::numerator(a), boost::multiprecision::numerator(b));
  if (c) return c;
  return cmp_big(boost::multiprecision::denominator(a), boost::multiprecision::denominator(b));
}

}  // namespace

int Ring::compare(const Element& a, const Element& b) const {
  switch (impl_->kind) {
    case RingKind::Integers: {
      const BigInt& x = a.integer();
      const BigInt& y = b.integer();
      int c = cmp_big(abs(x), abs(y));
      if (c) return c;
      int sx = x < 0 ? 1 : 0, sy = y < 0 ? 1 : 0;
      return sx - sy;
    }
    case RingKind::EventuallyConstant: {
      const Sequence& x = a.sequence();
      const Sequence& y = b.sequence();
      if (x.prefix.size() != y.prefix.size()) return x.prefix.size() < y.prefix.size() ? -1 : 1;
      for (std::size_t i = 0; i < x.prefix.size(); ++i) {
        int c = cmp_rational_pair(x.prefix[i], y.prefix[i]);
        if (c) return c;
      }
      return cmp_rational_pair(x.tail, y.tail);
    }
    default:
      return a.index() < b.index() ? -1 : (a.index() > b.index() ? 1 : 0);
  }
}

Element Ring::at(std::uint64_t index) const {
  if (!is_finite() || index >= order()) throw std::out_of_range("element index out of range");
  return Element::finite(index);
}

std::vector<Element> Ring::elements() const {
  require_enumerable(*this, "element enumeration");
  std::vector<Element> out;
  out.reserve(order());
  for (std::uint64_t i = 0; i < order(); ++i) out.push_back(Element::finite(i));
  return out;
}

std::vector<Element> Ring::components(const Element& a) const {
  if (impl_->kind != RingKind::Product) throw UnsupportedRing("components() requires a Prod ring");
  std::vector<Element> parts;
  for (std::size_t k = 0; k < impl_->factors.size(); ++k)
    parts.push_back(Element::finite((a.index() / impl_->strides[k]) % impl_->factors[k].order()));
  return parts;
}

Element Ring::assemble(const std::vector<Element>& parts) const {
  if (impl_->kind != RingKind::Product || parts.size() != impl_->factors.size())
    throw UnsupportedRing("assemble() requires a Prod ring and one part per factor");
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) idx += parts[k].index() * impl_->strides[k];
  return Element::finite(idx);
}

std::vector<std::uint64_t> Ring::coefficients(const Element& a) const {
  if (impl_->kind == RingKind::PolyQuot) return impl_->decode_poly(a.index());
  if (impl_->kind == RingKind::LocalNonChain2)
    return {a.index() >> 2, (a.index() >> 1) & 1, a.index() & 1};
  throw UnsupportedRing("coefficients() requires a Quot ring or LocalNonChain2");
}

Element Ring::from_coefficients(const std::vector<std::int64_t>& coeffs) const {
  if (impl_->kind == RingKind::LocalNonChain2) {
    if (coeffs.size() > 3) throw SyntaxError("LocalNonChain2 literal has at most 3 coefficients");
    std::uint64_t c[3] = {0, 0, 0};
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = reduce_signed(coeffs[i], 2);
    return Element::finite((c[0] << 2) | (c[1] << 1) | c[2]);
  }
  if (impl_->kind != RingKind::PolyQuot) throw UnsupportedRing("from_coefficients() requires a Quot ring");
  std::uint64_t p = impl_->n;
  std::size_t d = degree();
  std::vector<std::uint64_t> c;
  for (auto v : coeffs) c.push_back(reduce_signed(v, p));
  // reduce by the monic modulus
  for (std::size_t k = c.size(); k-- > d;) {
    std::uint64_t t = c[k];
    if (t == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) {
      std::size_t pos = k - d + i;
      c[pos] = (c[pos] + p - mulmod(t, impl_->poly[i], p)) % p;
    }
  }
  c.resize(d, 0);
  return Element::finite(impl_->encode_poly(c));
}

bool Ring::is_member(const Element& a) const {
  switch (impl_->kind) {
    case RingKind::Integers:
      return a.is_integer();
    case RingKind::EventuallyConstant: {
      if (!a.is_sequence()) return false;
      const auto& s = a.sequence();
      if (!s.prefix.empty() && s.prefix.back() == s.tail) return false;
      return boost::multiprecision::denominator(s.tail) % impl_->n != 0;
    }
    default:
      return a.is_finite() && a.index() < *impl_->order;
  }
}

void require_enumerable(const Ring& ring, std::string_view what) {
  if (!ring.is_finite())
    throw InfiniteEnumeration(std::string(what) + " requires a finite ring; " + ring.spec() + " is infinite");
  if (ring.order() > enumeration_cap())
    throw EnumerationCapExceeded(std::string(what) + ": order " + std::to_string(ring.order()) + " of " +
                                 ring.spec() + " exceeds enumeration cap " + std::to_string(enumeration_cap()));
}

// ---------------------------------------------------------------------------
// Parsing and printing

namespace {

using detail::Cursor;

Ring parse_ring_at(Cursor& cur) {
  cur.skip_ws();
  std::string id = cur.identifier();
  if (id == "Z") return Ring::integers();
  if (id == "LocalNonChain2") return Ring::local_non_chain2();
  if (id == "Zn" || id == "EC") {
    cur.expect('(');
    BigInt n = cur.integer();
    cur.expect(')');
    if (n < 0 || n > BigInt(kOrderLimit)) throw InvalidSpec(id + " parameter out of range");
    auto v = static_cast<std::uint64_t>(n);
    return id == "Zn" ? Ring::zmod(v) : Ring::eventually_constant(v);
  }
  if (id == "Quot") {
    cur.expect('(');
    Ring base = parse_ring_at(cur);
    cur.expect(',');
    std::vector<std::int64_t> coeffs;
    cur.expect('[');
    do {
      BigInt c = cur.integer();
      if (base.kind() == RingKind::ZmodN) c %= base.modulus();
      coeffs.push_back(static_cast<std::int64_t>(c));
    } while (cur.eat(','));
    cur.expect(']');
    cur.expect(')');
    return Ring::poly_quot(base, coeffs);
  }
  if (id == "Prod") {
    cur.expect('(');
    std::vector<Ring> factors;
    do {
      factors.push_back(parse_ring_at(cur));
    } while (cur.eat(','));
    cur.expect(')');
    return Ring::product(std::move(factors));
  }
  throw SyntaxError("unknown ring constructor '" + id + "' at offset " + std::to_string(cur.pos()));
}

Rational parse_rational(Cursor& cur) {
  BigInt num = cur.integer();
  BigInt den = 1;
  if (cur.eat('/')) {
    den = cur.integer();
    if (den == 0) throw SyntaxError("zero denominator in rational literal");
  }
  return Rational(num, den);
}

Element parse_element_at(const Ring& ring, Cursor& cur);

Element parse_lnc2(const Ring& ring, Cursor& cur) {
  cur.skip_ws();
  if (cur.peek() == '[') {
    cur.expect('[');
    std::vector<std::int64_t> coeffs;
    do {
      coeffs.push_back(static_cast<std::int64_t>(cur.integer() % 2));
    } while (cur.eat(','));
    cur.expect(']');
    return ring.from_coefficients(coeffs);
  }
  std::vector<std::int64_t> c{0, 0, 0};
  do {
    cur.skip_ws();
    char ch = cur.peek();
    if (ch == 'x' || ch == 'y') {
      cur.advance();
      c[ch == 'x' ? 1 : 2] += 1;
    } else {
      c[0] += static_cast<std::int64_t>(cur.integer() % 2);
    }
  } while (cur.eat('+'));
  return ring.from_coefficients(c);
}

Element parse_element_at(const Ring& ring, Cursor& cur) {
  cur.skip_ws();
  switch (ring.kind()) {
    case RingKind::ZmodN:
      return Element::finite(reduce_big(cur.integer(), ring.modulus()));
    case RingKind::Integers:
      return Element::integer(cur.integer());
    case RingKind::LocalNonChain2:
      return parse_lnc2(ring, cur);
    case RingKind::PolyQuot: {
      std::vector<std::int64_t> coeffs;
      if (cur.eat('[')) {
        do {
          coeffs.push_back(static_cast<std::int64_t>(reduce_big(cur.integer(), ring.modulus())));
        } while (cur.eat(','));
        cur.expect(']');
      } else {
        coeffs.push_back(static_cast<std::int64_t>(reduce_big(cur.integer(), ring.modulus())));
      }
      return ring.from_coefficients(coeffs);
    }
    case RingKind::Product: {
      cur.expect('(');
      std::vector<Element> parts;
      for (std::size_t k = 0; k < ring.factors().size(); ++k) {
        if (k) cur.expect(',');
        parts.push_back(parse_element_at(ring.factors()[k], cur));
      }
      cur.expect(')');
      return ring.assemble(parts);
    }
    case RingKind::EventuallyConstant: {
      std::vector<Rational> prefix;
      Rational tail;
      if (cur.eat('[')) {
        cur.skip_ws();
        if (cur.peek() != ';') {
          do {
            prefix.push_back(parse_rational(cur));
          } while (cur.eat(','));
        }
        cur.expect(';');
        tail = parse_rational(cur);
        cur.expect(']');
      } else {
        tail = parse_rational(cur);
      }
      if (boost::multiprecision::denominator(tail) % ring.modulus() == 0)
        throw SyntaxError("EC tail " + format_rational(tail) + " is not in the localization at " +
                          std::to_string(ring.modulus()));
      return Element::sequence(canonical_sequence(std::move(prefix), std::move(tail)));
    }
  }
  throw SyntaxError("unsupported ring kind");
}

}  // namespace

Ring parse_ring_spec(std::string_view text) {
  Cursor cur(text);
  Ring r = parse_ring_at(cur);
  cur.skip_ws();
  if (!cur.at_end()) throw SyntaxError("trailing characters after ring spec at offset " + std::to_string(cur.pos()));
  return r;
}

Element Ring::parse_element(std::string_view text) const {
  Cursor cur(text);
  Element e = parse_element_at(*this, cur);
  cur.skip_ws();
  if (!cur.at_end()) throw SyntaxError("trailing characters after element literal at offset " + std::to_string(cur.pos()));
  return e;
}

std::string Ring::format(const Element& a) const {
  switch (impl_->kind) {
    case RingKind::ZmodN:
      return std::to_string(a.index());
    case RingKind::Integers:
      return a.integer().str();
    case RingKind::LocalNonChain2: {
      auto c = coefficients(a);
      std::string s;
      const char* names[3] = {"1", "x", "y"};
      for (int i = 0; i < 3; ++i) {
        if (!c[i]) continue;
        if (!s.empty()) s += "+";
        s += names[i];
      }
      return s.empty() ? "0" : s;
    }
    case RingKind::PolyQuot: {
      auto c = coefficients(a);
      std::string s = "[";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
      }
      return s + "]";
    }
    case RingKind::Product: {
      auto parts = components(a);
      std::string s = "(";
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) s += ",";
        s += impl_->factors[k].format(parts[k]);
      }
      return s + ")";
    }
    case RingKind::EventuallyConstant: {
      const auto& seq = a.sequence();
      std::string s = "[";
      for (std::size_t i = 0; i < seq.prefix.size(); ++i) {
        if (i) s += ",";
        s += format_rational(seq.prefix[i]);
      }
      return s + ";" + format_rational(seq.tail) + "]";
    }
  }
  return {};
}

}  // namespace ringlab
