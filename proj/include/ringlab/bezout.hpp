#pragma once

#include <string>
#include <vector>

#include "ringlab/core.hpp"

namespace ringlab {

using Matrix = std::vector<std::vector<Element>>;

// d = s*a + t*b and a, b in (d).
struct BezoutCertificate {
  Element d, s, t;
};

// a = a'd, b = b'd, a' + c*b' a unit.
struct EDRWitness {
  Element d, a_prime, b_prime, c;
};

// (p*a, p*b + q*c) is the unit ideal.
struct GHWitness {
  Element p, q;
};

struct SNFCertificate {
  Matrix P, D, Q;
  std::vector<Element> diagonal;     // D[i][i], i < min(m, n)
  std::vector<EDRWitness> consumed;  // witnesses used by the 2x2 transforms
};

class NotPrincipal : public DomainNegative {
 public:
  NotPrincipal(std::string a, std::string b)
      : DomainNegative("NotPrincipal: (" + a + ", " + b + ") is not a principal ideal"), a_(std::move(a)),
        b_(std::move(b)) {}
  const std::string& a() const { return a_; }
  const std::string& b() const { return b_; }

 private:
  std::string a_, b_;
};

class DiagonalizationFailed : public DomainNegative {
 public:
  DiagonalizationFailed(std::string submatrix, std::string reason)
      : DomainNegative("DiagonalizationFailed: " + reason + "; submatrix " + submatrix),
        submatrix_(std::move(submatrix)) {}
  const std::string& submatrix() const { return submatrix_; }

 private:
  std::string submatrix_;
};

BezoutCertificate gcd_bezout(const Ring& ring, const Element& a, const Element& b);
EDRWitness edr_witness(const Ring& ring, const Element& a, const Element& b);
GHWitness gh_condition(const Ring& ring, const Element& a, const Element& b, const Element& c);
// (a, b, c) = R
bool is_unimodular(const Ring& ring, const std::vector<Element>& xs);

struct SNFOptions {
  std::size_t max_dim = 8;
  std::size_t max_ec_prefix = 32;
};

SNFCertificate smith_normal_form(const Ring& ring, const Matrix& A, const SNFOptions& opts = {});

struct CertificateCheck {
  bool ok = true;
  std::string clause;  // first violated clause
};
CertificateCheck verify_snf_certificate(const Ring& ring, const Matrix& A, const SNFCertificate& cert);

// Matrix helpers
Matrix identity_matrix(const Ring& ring, std::size_t n);
Matrix zero_matrix(const Ring& ring, std::size_t m, std::size_t n);
Matrix multiply(const Ring& ring, const Matrix& A, const Matrix& B);
std::string format_matrix(const Ring& ring, const Matrix& A);
// "m n" then m rows of n element literals.
Matrix parse_matrix(const Ring& ring, std::string_view text);

}  // namespace ringlab
