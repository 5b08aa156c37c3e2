#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringlab {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (ring specs, element literals, files).
class SyntaxError : public Error {
 public:
  using Error::Error;
};

// Well-formed text describing something that is not a valid ring.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class InfiniteEnumeration : public Error {
 public:
  using Error::Error;
};

// Operation is not defined for this kind of ring.
class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

// A declared size limit was hit.  Distinct from a mathematical negative.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class EnumerationCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class DimensionCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class SearchCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

// A mathematical negative answer with a counterwitness in the message
// (NotClean, NotPrincipal, ...).  The CLI maps these to exit code 1.
class DomainNegative : public Error {
 public:
  using Error::Error;
};

class NotGelfand : public DomainNegative {
 public:
  using DomainNegative::DomainNegative;
};

class NotLocal : public DomainNegative {
 public:
  using DomainNegative::DomainNegative;
};

class NotUnimodular : public DomainNegative {
 public:
  using DomainNegative::DomainNegative;
};

class WitnessNotFound : public DomainNegative {
 public:
  using DomainNegative::DomainNegative;
};

class HypothesisViolated : public DomainNegative {
 public:
  using DomainNegative::DomainNegative;
};

// Process-wide limit on the order of rings whose elements may be
// enumerated.  Defaults to 4096.
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

// Restores the previous cap on destruction.
class ScopedEnumerationCap {
 public:
  explicit ScopedEnumerationCap(std::uint64_t cap) : saved_(enumeration_cap()) {
    set_enumeration_cap(cap);
  }
  ~ScopedEnumerationCap() { set_enumeration_cap(saved_); }
  ScopedEnumerationCap(const ScopedEnumerationCap&) = delete;
  ScopedEnumerationCap& operator=(const ScopedEnumerationCap&) = delete;

 private:
  std::uint64_t saved_;
};

}  // namespace ringlab
