#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etm/errors.hpp"

namespace etm {

/// Field element, named by its index in 0..n-1. The index is the base-p
/// reading of the coefficient vector (constant term least significant), so
/// prime-field elements are just the residues 0..p-1. Vertex labels of
/// constructed maps use this index.
using Fel = std::uint32_t;

/// GF(p^e) with the canonical modulus: the monic irreducible degree-e
/// polynomial whose coefficient vector, read as a base-p integer, is
/// minimal. Immutable after construction; all operations are pure.
class Field {
 public:
  Field(long p, long e);

  long p() const { return p_; }
  long e() const { return e_; }
  long order() const { return n_; }  // n = p^e

  /// Modulus coefficients, constant term first, length e+1, monic.
  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  std::vector<int> coeffs(Fel a) const;
  Fel element(const std::vector<int>& coeffs) const;

  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;      // throws DivisionByZero on 0
  Fel pow(Fel a, long k) const;
  Fel frobenius(Fel a) const;  // a^p

  long mult_order(Fel a) const;  // throws ZeroElement
  bool is_primitive(Fel a) const;

  /// All phi(n-1) generators of the multiplicative group, ascending index.
  std::vector<Fel> primitive_elements() const;

  /// Partition of elems under iterated Frobenius. Orbits are ordered by
  /// their smallest member; each orbit starts at that member.
  std::vector<std::vector<Fel>> galois_orbits(const std::vector<Fel>& elems) const;

 private:
  long p_ = 0, e_ = 0, n_ = 0;
  std::vector<int> modulus_;
  Fel generator_ = 0;          // smallest primitive element
  std::vector<Fel> exp_;       // exp_[k] = generator^k, k in [0, n-1)
  std::vector<long> log_;      // log_[a] for a != 0

  Fel mul_poly(Fel a, Fel b) const;  // table-free product, used in setup
};

bool is_prime(long m);
long euler_phi(long m);

/// Factor n = p^e with p prime; returns false when n is not a prime power.
bool prime_power(long n, long& p, long& e);

}  // namespace etm
