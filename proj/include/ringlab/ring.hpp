#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ringlab/errors.hpp"

namespace ringlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// An element of EC(p): the sequence (prefix[0], prefix[1], ..., tail, tail, ...).
// Canonical when the last prefix entry differs from the tail.
struct Sequence {
  std::vector<Rational> prefix;
  Rational tail;

  bool operator==(const Sequence&) const = default;
};

// A ring element in canonical form.  Finite rings store a dense index in
// [0, order); the index order is the canonical element order.  Integers
// store an arbitrary-precision integer and EC(p) a Sequence.  Elements do
// not know their ring; every operation goes through a Ring.
class Element {
 public:
  Element() = default;

  static Element finite(std::uint64_t index) { return Element(Storage(index)); }
  static Element integer(BigInt value) { return Element(Storage(std::move(value))); }
  static Element sequence(Sequence value) { return Element(Storage(std::move(value))); }

  bool is_finite() const { return std::holds_alternative<std::uint64_t>(value_); }
  bool is_integer() const { return std::holds_alternative<BigInt>(value_); }
  bool is_sequence() const { return std::holds_alternative<Sequence>(value_); }

  std::uint64_t index() const { return std::get<std::uint64_t>(value_); }
  const BigInt& integer() const { return std::get<BigInt>(value_); }
  const Sequence& sequence() const { return std::get<Sequence>(value_); }

  bool operator==(const Element&) const = default;

 private:
  using Storage = std::variant<std::uint64_t, BigInt, Sequence>;
  explicit Element(Storage s) : value_(std::move(s)) {}
  Storage value_{std::uint64_t{0}};
};

enum class RingKind { ZmodN, PolyQuot, Product, Integers, EventuallyConstant, LocalNonChain2 };

// A concretely representable commutative ring.  Cheap to copy (shared
// immutable state).
class Ring {
 public:
  static Ring zmod(std::uint64_t n);
  // base must be Zn(p) with p prime; modulus is monic, constant term first.
  static Ring poly_quot(const Ring& base, std::vector<std::int64_t> modulus);
  // Factors must be finite rings.
  static Ring product(std::vector<Ring> factors);
  static Ring integers();
  static Ring eventually_constant(std::uint64_t p);
  // F2[x,y]/(x^2, xy, y^2), basis {1, x, y}.
  static Ring local_non_chain2();

  RingKind kind() const;
  bool is_finite() const;
  // Number of elements; throws InfiniteEnumeration for infinite rings.
  std::uint64_t order() const;
  std::optional<std::uint64_t> cached_order() const;

  // ZmodN: n.  PolyQuot and EC: the prime p.
  std::uint64_t modulus() const;
  // PolyQuot: reduced monic modulus coefficients, constant term first.
  const std::vector<std::uint64_t>& poly_modulus() const;
  std::size_t degree() const;
  const std::vector<Ring>& factors() const;
  // Characteristic of a finite ring (additive order of 1).
  std::uint64_t characteristic() const;

  // Text in the ring-spec grammar; parse_ring_spec(spec()) == *this.
  std::string spec() const;

  Element zero() const;
  Element one() const;
  Element from_int(long long v) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t k) const;
  bool is_zero(const Element& a) const { return a == zero(); }

  // Canonical element order; negative, zero or positive like strcmp.
  int compare(const Element& a, const Element& b) const;
  bool less(const Element& a, const Element& b) const { return compare(a, b) < 0; }

  // Finite rings: the element with the given canonical index.
  Element at(std::uint64_t index) const;
  // Finite rings: every element in canonical order (respects the cap).
  std::vector<Element> elements() const;

  // Raw index arithmetic for finite rings (hot paths).
  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_index(std::uint64_t a) const;
  std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const;

  // Product rings: split into / assemble from factor elements.
  std::vector<Element> components(const Element& a) const;
  Element assemble(const std::vector<Element>& parts) const;
  // PolyQuot and LocalNonChain2: coefficient vector (constant term first).
  std::vector<std::uint64_t> coefficients(const Element& a) const;
  Element from_coefficients(const std::vector<std::int64_t>& coeffs) const;

  Element parse_element(std::string_view text) const;
  std::string format(const Element& a) const;

  // Checks that the element is a canonical member of this ring.
  bool is_member(const Element& a) const;

  bool operator==(const Ring& other) const;

 private:
  struct Impl;
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

Ring parse_ring_spec(std::string_view text);

// Throws InfiniteEnumeration or EnumerationCapExceeded unless the ring may
// be enumerated under the current cap.
void require_enumerable(const Ring& ring, std::string_view what);

// Helpers for EC(p) and rationals.
// p-adic valuation of a nonzero rational (callers handle zero).
long long p_valuation(const Rational& r, std::uint64_t p);
std::string format_rational(const Rational& r);
Sequence canonical_sequence(std::vector<Rational> prefix, Rational tail);
// Component k of an EC sequence (prefix entry or tail).
const Rational& sequence_at(const Sequence& s, std::size_t k);

bool is_prime(std::uint64_t n);

}  // namespace ringlab
