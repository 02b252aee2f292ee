#pragma once

// Polynomials in t with 64-bit integer coefficients, always used under an
// explicit truncation degree. Products accumulate in __int128 and fail
// loudly on narrowing, so window arithmetic is exact or an error.

#include <string>
#include <vector>

#include "kmsatake/errors.hpp"
#include "kmsatake/linalg.hpp"

namespace kmsatake {

struct Poly {
  std::vector<Int> c;  // c[k] is the t^k coefficient

  Poly() = default;
  explicit Poly(Int constant) {
    if (constant != 0) c.push_back(constant);
  }
  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }
  Int get(int k) const { return k >= 0 && k < (int)c.size() ? c[k] : 0; }
  Int at_zero() const { return get(0); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

inline Poly poly_one() { return Poly(1); }

inline Poly poly_monomial(Int coeff, int deg) {
  Poly p;
  if (coeff != 0) {
    p.c.assign(deg + 1, 0);
    p.c[deg] = coeff;
  }
  return p;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly s;
  s.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t k = 0; k < s.c.size(); ++k) s.c[k] = a.get((int)k) + b.get((int)k);
  s.normalize();
  return s;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly s;
  s.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t k = 0; k < s.c.size(); ++k) s.c[k] = a.get((int)k) - b.get((int)k);
  s.normalize();
  return s;
}

inline Poly poly_scale(const Poly& a, Int m) {
  if (m == 0) return Poly();
  Poly s = a;
  for (Int& e : s.c) e *= m;
  return s;
}

inline Poly poly_truncate(const Poly& a, int tdeg) {
  Poly s = a;
  if ((int)s.c.size() > tdeg + 1) s.c.resize(tdeg + 1);
  s.normalize();
  return s;
}

inline Poly poly_mul(const Poly& a, const Poly& b, int tdeg) {
  Poly s;
  if (a.is_zero() || b.is_zero()) return s;
  int top = std::min(a.degree() + b.degree(), tdeg);
  if (top < 0) return s;
  s.c.assign(top + 1, 0);
  for (int k = 0; k <= top; ++k) {
    __int128 acc = 0;
    for (int i = std::max(0, k - b.degree()); i <= std::min(k, a.degree()); ++i) {
      acc += (__int128)a.c[i] * b.c[k - i];
    }
    internal_check(acc <= INT64_MAX && acc >= -(__int128)INT64_MAX,
                   "polynomial coefficient overflow");
    s.c[k] = (Int)acc;
  }
  s.normalize();
  return s;
}

// Multiplicative inverse modulo t^{tdeg+1}; the constant term must be a
// unit of Z.
inline Poly poly_invert(const Poly& a, int tdeg) {
  internal_check(a.get(0) == 1 || a.get(0) == -1,
                 "series inversion requires constant term +-1");
  Int u = a.get(0);
  Poly b;
  b.c.assign(tdeg + 1, 0);
  b.c[0] = u;
  for (int k = 1; k <= tdeg; ++k) {
    __int128 acc = 0;
    for (int j = 1; j <= std::min(k, a.degree()); ++j) {
      acc += (__int128)a.c[j] * b.c[k - j];
    }
    acc = -acc * u;
    internal_check(acc <= INT64_MAX && acc >= -(__int128)INT64_MAX,
                   "series inversion overflow");
    b.c[k] = (Int)acc;
  }
  b.normalize();
  return b;
}

inline std::string poly_to_string(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= a.degree(); ++k) {
    Int v = a.c[k];
    if (v == 0) continue;
    if (!out.empty()) {
      out += v > 0 ? " + " : " - ";
    } else if (v < 0) {
      out += "-";
    }
    Int mag = v > 0 ? v : -v;
    if (mag != 1 || k == 0) out += std::to_string(mag);
    if (k > 0) {
      if (mag != 1) out += "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace kmsatake
