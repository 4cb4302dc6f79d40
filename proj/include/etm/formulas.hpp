#pragma once

#include <string>

#include "etm/classify.hpp"

namespace etm::formulas {

/// Closed-form invariants of the Biggs map M_n(c) and its Petrie dual.
/// Values depend only on n = p^e. The Biggs map has type
/// {face_size, n-1}_{petrie_length}; its Petrie dual swaps the two.
struct BiggsValues {
  long n = 0, p = 0, e = 0;
  long aut_order = 0;       // n(n-1) for n >= 5; 4, 12, 24 for n = 2, 3, 4
  long genus = 0;           // 0 for n <= 4
  long face_size = 0;       // m = (n-1)/2 or n-1 as n = 3 mod 4 or not (n >= 5)
  long degree = 0;          // n - 1
  long petrie_length = 0;   // 2p for n >= 3; 2 for n = 2
  long face_count = 0;
  long petrie_count = 0;
  long chi = 0;
  long petrie_chi = 0;      // chi of the Petrie dual, n(1 - (n-1)/2 + (n-1)/2p)
  EtClass cls = EtClass::C1;         // 1 for n <= 4, 2Pex for n >= 5
  EtClass petrie_cls = EtClass::C1;  // 1 for n <= 4, 2*ex for n >= 5
};
BiggsValues biggs_values(long n);

/// Closed-form invariants of the James map M_n(c, j) and its Petrie dual.
/// The two face orbits have the stated cardinalities, with the branch
/// selected by whether j or 2-j = (n-1)/2 mod (n-1).
struct JamesValues {
  long n = 0, p = 0, e = 0, j = 0;
  bool special_branch = false;  // j or 2-j = (n-1)/2
  long aut_order = 0;           // n(n-1)/2
  long genus = 0;
  long face_orbit_small = 0, face_orbit_large = 0;
  long petrie_length = 0;  // l = 2(n-1)/gcd(n-1, 2(j-1))
  long petrie_count = 0;   // n(n-1)/l, a single orbit
  long chi = 0;
  long petrie_chi = 0;     // n(1 - (n-1)/2 + (n-1)/l)
};
JamesValues james_values(long n, long j);

long biggs_census_size(long n);  // phi(n-1)/e
long james_census_size(long n);  // (n-3) phi(n-1) / 4e

}  // namespace etm::formulas
