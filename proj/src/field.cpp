#include "etm/field.hpp"

#include <algorithm>
#include <numeric>

namespace etm {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::NotPrimePower: return "NotPrimePower";
    case Err::NotPrimitive: return "NotPrimitive";
    case Err::ZeroElement: return "ZeroElement";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::BadGeneratingSet: return "BadGeneratingSet";
    case Err::BadCongruence: return "BadCongruence";
    case Err::BadJ: return "BadJ";
    case Err::InvalidRotation: return "InvalidRotation";
    case Err::NotOrientableRepresentation: return "NotOrientableRepresentation";
    case Err::InvalidFlagMap: return "InvalidFlagMap";
    case Err::NotFree: return "NotFree";
    case Err::GenusUndefined: return "GenusUndefined";
    case Err::TooLarge: return "TooLarge";
    case Err::Unsupported: return "Unsupported";
    case Err::ParseError: return "ParseError";
  }
  return "Error";
}

bool is_prime(long m) {
  if (m < 2) return false;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

long euler_phi(long m) {
  long result = m;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      result -= result / d;
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

bool prime_power(long n, long& p, long& e) {
  if (n < 2) return false;
  long d = 2;
  while (d * d <= n && n % d != 0) ++d;
  p = (d * d <= n) ? d : n;
  e = 0;
  long m = n;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return m == 1;
}

namespace {

// Dense polynomials over Z_p, coefficient vectors with constant term first.
using Poly = std::vector<int>;

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& f, const Poly& g, long p) {
  Poly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (size_t j = 0; j < g.size(); ++j)
      h[i + j] = static_cast<int>((h[i + j] + static_cast<long>(f[i]) * g[j]) % p);
  }
  return h;
}

// Remainder of f by monic g.
Poly poly_mod(Poly f, const Poly& g, long p) {
  int dg = poly_deg(g);
  for (int i = poly_deg(f); i >= dg; --i) {
    int c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      long t = f[i - dg + j] - static_cast<long>(c) * g[j];
      f[i - dg + j] = static_cast<int>(((t % p) + p) % p);
    }
  }
  f.resize(std::max(dg, 1));
  return f;
}

bool poly_divides(const Poly& d, const Poly& f, long p) {
  Poly r = poly_mod(f, d, p);
  return poly_deg(r) < 0;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, long p) {
  int df = poly_deg(f);
  for (int dd = 1; 2 * dd <= df; ++dd) {
    long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      Poly d(dd + 1, 0);
      long t = idx;
      for (int i = 0; i < dd; ++i) {
        d[i] = static_cast<int>(t % p);
        t /= p;
      }
      d[dd] = 1;
      if (poly_divides(d, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(long p, long e) : p_(p), e_(e) {
  if (e < 1) throw Error(Err::NotPrime, "exponent must be >= 1");
  if (!is_prime(p)) throw Error(Err::NotPrime, std::to_string(p) + " is not prime");
  n_ = 1;
  for (long i = 0; i < e; ++i) {
    n_ *= p;
    if (n_ > (1L << 16)) throw Error(Err::TooLarge, "field order exceeds 2^16");
  }

  if (e_ == 1) {
    modulus_ = {0, 1};  // x; residues handled directly mod p
  } else {
    // Minimal monic irreducible of degree e, by base-p reading of the
    // non-leading coefficients.
    for (long idx = 0;; ++idx) {
      Poly f(e_ + 1, 0);
      long t = idx;
      for (long i = 0; i < e_; ++i) {
        f[i] = static_cast<int>(t % p_);
        t /= p_;
      }
      f[e_] = 1;
      if (poly_irreducible(f, p_)) {
        modulus_ = f;
        break;
      }
    }
  }

  // Discrete-log tables over the smallest primitive element.
  for (Fel a = 1; a < static_cast<Fel>(n_); ++a) {
    long ord = 1;
    Fel x = a;
    while (x != 1) {
      x = mul_poly(x, a);
      ++ord;
    }
    if (ord == n_ - 1) {
      generator_ = a;
      break;
    }
  }
  exp_.resize(n_ - 1);
  log_.assign(n_, -1);
  Fel x = 1;
  for (long k = 0; k < n_ - 1; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = mul_poly(x, generator_);
  }
}

std::vector<int> Field::coeffs(Fel a) const {
  std::vector<int> c(e_);
  long t = a;
  for (long i = 0; i < e_; ++i) {
    c[i] = static_cast<int>(t % p_);
    t /= p_;
  }
  return c;
}

Fel Field::element(const std::vector<int>& coeffs) const {
  long a = 0;
  for (size_t i = coeffs.size(); i-- > 0;) a = a * p_ + (coeffs[i] % p_ + p_) % p_;
  return static_cast<Fel>(a % n_);
}

std::string Field::modulus_string() const {
  std::string s;
  for (int i = static_cast<int>(modulus_.size()) - 1; i >= 0; --i) {
    if (modulus_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || modulus_[i] != 1) s += std::to_string(modulus_[i]);
    if (i >= 1) s += (i == 1) ? "x" : "x^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

Fel Field::add(Fel a, Fel b) const {
  if (e_ == 1) return static_cast<Fel>((a + b) % n_);
  long r = 0, scale = 1;
  for (long i = 0; i < e_; ++i) {
    long ca = (a / scale) % p_, cb = (b / scale) % p_;
    r += ((ca + cb) % p_) * scale;
    scale *= p_;
  }
  return static_cast<Fel>(r);
}

Fel Field::neg(Fel a) const {
  if (e_ == 1) return static_cast<Fel>((n_ - a) % n_);
  long r = 0, scale = 1;
  for (long i = 0; i < e_; ++i) {
    long ca = (a / scale) % p_;
    r += ((p_ - ca) % p_) * scale;
    scale *= p_;
  }
  return static_cast<Fel>(r);
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul_poly(Fel a, Fel b) const {
  if (a == 0 || b == 0) return 0;
  if (e_ == 1) return static_cast<Fel>((static_cast<long>(a) * b) % p_);
  Poly f = coeffs(a), g = coeffs(b);
  Poly h = poly_mod(poly_mul(f, g, p_), modulus_, p_);
  h.resize(e_, 0);
  return element(h);
}

Fel Field::mul(Fel a, Fel b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (n_ - 1)];
}

Fel Field::inv(Fel a) const {
  if (a == 0) throw Error(Err::DivisionByZero, "inverse of zero");
  return exp_[(n_ - 1 - log_[a]) % (n_ - 1)];
}

Fel Field::pow(Fel a, long k) const {
  if (a == 0) {
    if (k > 0) return 0;
    if (k == 0) return 1;
    throw Error(Err::DivisionByZero, "negative power of zero");
  }
  long m = n_ - 1;
  long t = ((log_[a] * (k % m)) % m + m) % m;
  return exp_[t];
}

Fel Field::frobenius(Fel a) const { return pow(a, p_); }

long Field::mult_order(Fel a) const {
  if (a == 0) throw Error(Err::ZeroElement, "order of zero");
  return (n_ - 1) / std::gcd(n_ - 1, log_[a]);
}

bool Field::is_primitive(Fel a) const {
  if (a == 0) throw Error(Err::ZeroElement, "zero is not in the multiplicative group");
  return mult_order(a) == n_ - 1;
}

std::vector<Fel> Field::primitive_elements() const {
  std::vector<Fel> out;
  for (Fel a = 1; a < static_cast<Fel>(n_); ++a)
    if (is_primitive(a)) out.push_back(a);
  return out;
}

std::vector<std::vector<Fel>> Field::galois_orbits(const std::vector<Fel>& elems) const {
  std::vector<Fel> sorted(elems);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<bool> member(n_, false);
  for (Fel a : sorted) member[a] = true;
  std::vector<std::vector<Fel>> orbits;
  std::vector<bool> seen(n_, false);
  for (Fel a : sorted) {
    if (seen[a]) continue;
    std::vector<Fel> orbit;
    Fel x = a;
    do {
      if (member[x]) {
        orbit.push_back(x);
        seen[x] = true;
      }
      x = frobenius(x);
    } while (x != a);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace etm
