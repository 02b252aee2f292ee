#pragma once

// Small exact linear algebra over Z and Q, sized for Cartan-matrix work
// (dimensions in the single digits, entries far below 2^40). Fractions
// keep 64-bit reduced numerator/denominator and multiply through
// __int128 so intermediate products cannot wrap silently.

#include <cstdint>
#include <numeric>
#include <vector>

#include "kmsatake/errors.hpp"

namespace kmsatake {

using Int = long long;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

struct Frac {
  Int num = 0;
  Int den = 1;

  Frac() = default;
  Frac(Int n) : num(n), den(1) {}
  Frac(Int n, Int d) : num(n), den(d) { normalize(); }

  void normalize() {
    internal_check(den != 0, "Frac: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend Frac operator+(const Frac& a, const Frac& b) {
    __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
    __int128 d = (__int128)a.den * b.den;
    return from_wide(n, d);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    __int128 n = (__int128)a.num * b.den - (__int128)b.num * a.den;
    __int128 d = (__int128)a.den * b.den;
    return from_wide(n, d);
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return from_wide((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    internal_check(b.num != 0, "Frac: division by zero");
    return from_wide((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

  static Frac from_wide(__int128 n, __int128 d) {
    internal_check(d != 0, "Frac: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd_wide(an, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    internal_check(n <= INT64_MAX && n >= -(__int128)INT64_MAX && d <= INT64_MAX,
                   "Frac: 64-bit overflow");
    Frac f;
    f.num = (Int)n;
    f.den = (Int)d;
    return f;
  }

  static __int128 gcd_wide(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

using FVec = std::vector<Frac>;
using FMat = std::vector<FVec>;

inline FMat to_fmat(const Mat& m) {
  FMat f(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    f[i].assign(m[i].begin(), m[i].end());
  }
  return f;
}

// Row-reduces `m` in place; returns the pivot column of each reduced row.
inline std::vector<int> row_reduce(FMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Frac inv = Frac(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Frac f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back((int)c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

inline int rank_of(const Mat& m) {
  FMat f = to_fmat(m);
  return (int)row_reduce(f).size();
}

// Basis of { x : m x = 0 } over Q, one vector per non-pivot column,
// scaled to primitive integer vectors with deterministic sign (first
// nonzero entry positive).
inline Mat kernel_basis(const Mat& m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  FMat f = to_fmat(m);
  std::vector<int> pivots = row_reduce(f);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  Mat basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    FVec x(cols, Frac(0));
    x[free_c] = Frac(1);
    for (size_t r = 0; r < pivots.size(); ++r) {
      x[pivots[r]] = Frac(0) - f[r][free_c];
    }
    Int lcm = 1;
    for (const Frac& e : x) lcm = std::lcm(lcm, e.den);
    Vec v(cols);
    Int g = 0;
    for (size_t j = 0; j < cols; ++j) {
      v[j] = x[j].num * (lcm / x[j].den);
      g = std::gcd(g, v[j] < 0 ? -v[j] : v[j]);
    }
    if (g > 1) {
      for (Int& e : v) e /= g;
    }
    for (Int e : v) {
      if (e != 0) {
        if (e < 0) {
          for (Int& u : v) u = -u;
        }
        break;
      }
    }
    basis.push_back(v);
  }
  return basis;
}

// Exact integer determinant (Bareiss).
inline Int det(const Mat& m) {
  size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  __int128 prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  __int128 d = a[n - 1][n - 1] * sign;
  internal_check(d <= INT64_MAX && d >= -(__int128)INT64_MAX, "det overflow");
  return (Int)d;
}

// Solves m x = b over Q if a solution exists (m need not be square).
// Returns false when inconsistent.
inline bool solve_rational(const Mat& m, const FVec& b, FVec& x) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  FMat aug(rows, FVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = Frac(m[i][j]);
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots = row_reduce(aug);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == (int)cols) return false;  // 0 = nonzero row
  }
  x.assign(cols, Frac(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return true;
}

inline Vec mat_apply(const Mat& m, const Vec& x) {
  Vec y(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  }
  return y;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Int vec_sum(const Vec& a) {
  Int s = 0;
  for (Int e : a) s += e;
  return s;
}

inline bool vec_is_zero(const Vec& a) {
  for (Int e : a) {
    if (e != 0) return false;
  }
  return true;
}

inline bool vec_nonneg(const Vec& a) {
  for (Int e : a) {
    if (e < 0) return false;
  }
  return true;
}

}  // namespace kmsatake
