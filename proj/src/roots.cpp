#include "kmsatake/roots.hpp"

#include <numeric>

namespace kmsatake {

std::vector<Vec> compositions(int n, int h) {
  std::vector<Vec> out;
  Vec cur(n, 0);
  // Lexicographic by construction: leftmost coordinate varies slowest.
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == n - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  if (n > 0) rec(rec, 0, h);
  return out;
}

// Peterson: with c_gamma = sum_{k>=1} m_{gamma/k}/k,
//   ((gamma,gamma) - 2(rho,gamma)) c_gamma =
//       sum over ordered splits gamma = beta + beta' of (beta,beta') c_beta c_beta',
// where (rho,alpha_i) = d_i. The divisor vanishes only off the c-support
// (a nonsimple root gamma has <rho,gamma-check> >= 2 when real and
// (gamma,gamma) <= 0 when imaginary, either way divisor != 0), so a zero
// divisor forces m_gamma = 0 and c_gamma = the k >= 2 tail.
RootTable enumerate_roots(const RootDatum& datum, int depth) {
  input_check(depth >= 1, "root table depth must be >= 1");
  RootTable table;
  table.depth = depth;
  std::map<Vec, Frac> c;
  const int n = datum.n;
  auto rho_form = [&](const Vec& g) {
    Int s = 0;
    for (int i = 0; i < n; ++i) s += g[i] * datum.d[i];
    return s;
  };
  for (int i = 0; i < n; ++i) {
    Vec g(n, 0);
    g[i] = 1;
    c[g] = Frac(1);
    table.entries[g] = {1, true};
  }
  for (int h = 2; h <= depth; ++h) {
    for (const Vec& gamma : compositions(n, h)) {
      Frac rhs(0);
      for (const auto& [beta, cb] : c) {
        Vec rest(n);
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          rest[i] = gamma[i] - beta[i];
          ok = ok && rest[i] >= 0;
        }
        if (!ok || vec_is_zero(rest)) continue;
        auto it = c.find(rest);
        if (it == c.end()) continue;
        rhs = rhs + Frac(datum.form_qq(beta, rest)) * cb * it->second;
      }
      Int divisor = datum.form_qq(gamma, gamma) - 2 * rho_form(gamma);
      Frac tail(0);
      Int g = 0;
      for (Int e : gamma) g = std::gcd(g, e);
      for (Int k = 2; k <= g; ++k) {
        if (g % k != 0) continue;
        Vec part(n);
        for (int i = 0; i < n; ++i) part[i] = gamma[i] / k;
        auto it = table.entries.find(part);
        if (it != table.entries.end()) tail = tail + Frac(it->second.mult, k);
      }
      Frac cg;
      Int mult = 0;
      if (divisor != 0) {
        cg = rhs / Frac(divisor);
        Frac m = cg - tail;
        internal_check(m.is_integer() && m.num >= 0,
                       "Peterson recursion produced a non-integral or "
                       "negative multiplicity");
        mult = m.num;
      } else {
        internal_check(rhs.is_zero(),
                       "Peterson recursion: zero divisor with nonzero sum");
        cg = tail;
      }
      if (!cg.is_zero()) c[gamma] = cg;
      if (mult > 0) {
        table.entries[gamma] = {mult, datum.form_qq(gamma, gamma) > 0};
      }
    }
  }
  return table;
}

Int multiplicity(const RootTable& table, const Vec& alpha_q) {
  Int habs = 0;
  bool has_pos = false, has_neg = false;
  for (Int e : alpha_q) {
    habs += e < 0 ? -e : e;
    has_pos = has_pos || e > 0;
    has_neg = has_neg || e < 0;
  }
  if (habs > table.depth) {
    throw WindowError("root multiplicity query at height " +
                      std::to_string(habs) + " exceeds table depth " +
                      std::to_string(table.depth));
  }
  if (habs == 0 || (has_pos && has_neg)) return 0;
  Vec key = alpha_q;
  if (has_neg) {
    for (Int& e : key) e = -e;
  }
  auto it = table.entries.find(key);
  return it == table.entries.end() ? 0 : it->second.mult;
}

bool is_real(const RootTable& table, const Vec& alpha_q) {
  input_check(multiplicity(table, alpha_q) > 0, "not a root");
  Vec key = alpha_q;
  for (Int e : alpha_q) {
    if (e < 0) {
      for (Int& f : key) f = -f;
      break;
    }
  }
  return table.entries.at(key).real;
}

}  // namespace kmsatake
