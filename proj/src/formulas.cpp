#include "etm/formulas.hpp"

#include <numeric>
#include <stdexcept>

#include "etm/field.hpp"

namespace etm::formulas {

namespace {

long exact_div(long a, long b) {
  if (b == 0 || a % b != 0) throw std::logic_error("inexact division in formula evaluation");
  return a / b;
}

}  // namespace

BiggsValues biggs_values(long n) {
  BiggsValues v;
  if (!prime_power(n, v.p, v.e))
    throw Error(Err::NotPrimePower, std::to_string(n) + " is not a prime power");
  v.n = n;
  v.degree = n - 1;
  if (n <= 4) {
    v.aut_order = (n == 2) ? 4 : (n == 3 ? 12 : 24);
    v.genus = 0;
    v.face_size = (n == 2) ? 2 : 3;
    v.petrie_length = (n == 2) ? 2 : 2 * v.p;  // {2,1}_2, {3,2}_6, {3,3}_4
    v.cls = v.petrie_cls = EtClass::C1;
  } else {
    v.aut_order = n * (n - 1);
    if (n % 4 == 3) {
      v.face_size = (n - 1) / 2;
      v.genus = exact_div(n * n - 7 * n + 4, 4);
    } else {
      v.face_size = n - 1;
      v.genus = exact_div((n - 1) * (n - 4), 4);
    }
    v.petrie_length = 2 * v.p;
    v.cls = EtClass::C2Pex;
    v.petrie_cls = EtClass::C2sex;
  }
  v.face_count = exact_div(n * (n - 1), v.face_size);
  v.petrie_count = exact_div(n * (n - 1), v.petrie_length);
  v.chi = n - exact_div(n * (n - 1), 2) + v.face_count;
  if (n >= 3)
    v.petrie_chi = n - exact_div(n * (n - 1), 2) + v.petrie_count;
  else
    v.petrie_chi = v.chi;  // P(M_2) is again the sphere map
  return v;
}

JamesValues james_values(long n, long j) {
  JamesValues v;
  if (!prime_power(n, v.p, v.e))
    throw Error(Err::NotPrimePower, std::to_string(n) + " is not a prime power");
  if (n <= 3 || n % 4 != 3)
    throw Error(Err::BadCongruence, "need n = 3 mod 4 and n > 3");
  const long m = n - 1;
  j = ((j % m) + m) % m;
  if (j % 2 == 0 || j == 1) throw Error(Err::BadJ, "j must be odd and != 1");
  v.n = n;
  v.j = j;
  v.aut_order = exact_div(n * (n - 1), 2);
  const long j2 = ((2 - j) % m + m) % m;
  v.special_branch = (j == m / 2 || j2 == m / 2);
  long F;
  if (v.special_branch) {
    v.face_orbit_small = exact_div(n * (n - 1), 2 * v.p);
    v.face_orbit_large = n;
    v.genus = exact_div((n - 1) * (n * (v.p - 1) - 4 * v.p), 4 * v.p);
  } else {
    long a = std::gcd(m, j), b = std::gcd(m, j2);
    v.face_orbit_small = n * std::min(a, b);
    v.face_orbit_large = n * std::max(a, b);
    v.genus = exact_div(n * ((n - 3) - 2 * a - 2 * b), 4) + 1;
  }
  if (v.face_orbit_small > v.face_orbit_large) std::swap(v.face_orbit_small, v.face_orbit_large);
  F = v.face_orbit_small + v.face_orbit_large;
  v.chi = n - exact_div(n * (n - 1), 2) + F;
  if (v.chi != 2 - 2 * v.genus) throw std::logic_error("james genus does not match chi");
  v.petrie_length = exact_div(2 * m, std::gcd(m, 2 * (j - 1)));
  v.petrie_count = exact_div(n * (n - 1), v.petrie_length);
  v.petrie_chi = n - exact_div(n * (n - 1), 2) + v.petrie_count;
  return v;
}

long biggs_census_size(long n) {
  long p, e;
  if (!prime_power(n, p, e))
    throw Error(Err::NotPrimePower, std::to_string(n) + " is not a prime power");
  return exact_div(euler_phi(n - 1), e);
}

long james_census_size(long n) {
  long p, e;
  if (!prime_power(n, p, e))
    throw Error(Err::NotPrimePower, std::to_string(n) + " is not a prime power");
  if (n <= 3 || n % 4 != 3)
    throw Error(Err::BadCongruence, "need n = 3 mod 4 and n > 3");
  return exact_div((n - 3) * euler_phi(n - 1), 4 * e);
}

}  // namespace etm::formulas
