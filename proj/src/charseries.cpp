#include "kmsatake/charseries.hpp"

#include <algorithm>

#include "kmsatake/errors.hpp"

namespace kmsatake {

namespace {

Int height(const Vec& gamma) {
  Int h = 0;
  for (Int g : gamma) h += g;
  return h;
}

bool offset_in_window(const Vec& gamma, int depth) {
  for (Int g : gamma) {
    if (g < 0) return false;
  }
  return height(gamma) <= depth;
}

Int binomial(Int top, Int k) {
  internal_check(top >= 0 && k >= 0, "binomial arguments must be nonnegative");
  if (k > top) return 0;
  __int128 b = 1;
  for (Int j = 1; j <= k; ++j) {
    b = b * (top - j + 1) / j;
    internal_check(b <= (__int128)1 << 62, "binomial coefficient overflow");
  }
  return (Int)b;
}

}  // namespace

Window make_window(const RootDatum& datum, const Vec& base, int depth,
                   int tdeg) {
  input_check((int)base.size() == datum.r, "window base has wrong dimension");
  input_check(depth >= 0 && tdeg >= 0,
              "window depth and t-degree must be nonnegative");
  if (depth > kMaxWindowDepth || tdeg > kMaxWindowTdeg) {
    throw WindowError("requested window exceeds engine caps (depth <= " +
                      std::to_string(kMaxWindowDepth) + ", tdeg <= " +
                      std::to_string(kMaxWindowTdeg) + ")");
  }
  return Window{base, depth, tdeg};
}

CharSeries series_zero(const Window& win) { return CharSeries{win, {}}; }

CharSeries monomial_at_offset(const Window& win, const Vec& gamma,
                              const Poly& coeff) {
  if (!offset_in_window(gamma, win.depth)) {
    throw WindowError("weight outside window");
  }
  CharSeries f{win, {}};
  Poly p = poly_truncate(coeff, win.tdeg);
  if (!p.c.empty()) f.terms[gamma] = p;
  return f;
}

CharSeries monomial(const RootDatum& datum, const Window& win, const Vec& nu,
                    const Poly& coeff) {
  input_check((int)nu.size() == datum.r, "weight has wrong dimension");
  auto gamma = datum.root_decompose(vec_sub(win.base, nu));
  if (!gamma) throw WindowError("weight outside window");
  return monomial_at_offset(win, *gamma, coeff);
}

Poly coefficient_at_offset(const CharSeries& f, const Vec& gamma) {
  if (!offset_in_window(gamma, f.win.depth)) {
    throw WindowError("weight outside window");
  }
  auto it = f.terms.find(gamma);
  if (it == f.terms.end()) return Poly{};
  return it->second;
}

Poly coefficient(const RootDatum& datum, const CharSeries& f, const Vec& nu) {
  input_check((int)nu.size() == datum.r, "weight has wrong dimension");
  auto gamma = datum.root_decompose(vec_sub(f.win.base, nu));
  if (!gamma) throw WindowError("weight outside window");
  return coefficient_at_offset(f, *gamma);
}

void add_term(CharSeries& f, const Vec& gamma, const Poly& p) {
  if (!offset_in_window(gamma, f.win.depth)) return;
  Poly q = poly_truncate(p, f.win.tdeg);
  if (q.c.empty()) return;
  auto it = f.terms.find(gamma);
  if (it == f.terms.end()) {
    f.terms.emplace(gamma, q);
  } else {
    it->second = poly_add(it->second, q);
    if (it->second.c.empty()) f.terms.erase(it);
  }
}

CharSeries series_add(const CharSeries& f, const CharSeries& g) {
  input_check(f.win.base == g.win.base,
              "cannot add series with different window bases");
  CharSeries out{Window{f.win.base, std::min(f.win.depth, g.win.depth),
                        std::min(f.win.tdeg, g.win.tdeg)},
                 {}};
  for (const auto& [gamma, p] : f.terms) add_term(out, gamma, p);
  for (const auto& [gamma, p] : g.terms) add_term(out, gamma, p);
  return out;
}

CharSeries series_scale(const CharSeries& f, const Poly& p) {
  CharSeries out{f.win, {}};
  for (const auto& [gamma, q] : f.terms) {
    add_term(out, gamma, poly_mul(q, p, f.win.tdeg));
  }
  return out;
}

CharSeries multiply(const CharSeries& f, const CharSeries& g) {
  input_check(f.win.base.size() == g.win.base.size(),
              "cannot multiply series over different root data");
  CharSeries out{Window{vec_add(f.win.base, g.win.base),
                        std::min(f.win.depth, g.win.depth),
                        std::min(f.win.tdeg, g.win.tdeg)},
                 {}};
  for (const auto& [ga, pa] : f.terms) {
    Int ha = height(ga);
    if (ha > out.win.depth) continue;
    for (const auto& [gb, pb] : g.terms) {
      if (ha + height(gb) > out.win.depth) continue;
      add_term(out, vec_add(ga, gb), poly_mul(pa, pb, out.win.tdeg));
    }
  }
  return out;
}

CharSeries invert(const CharSeries& f) {
  const int depth = f.win.depth;
  const int tdeg = f.win.tdeg;
  size_t ncoords = f.terms.empty() ? 0 : f.terms.begin()->first.size();
  Vec zero(ncoords, 0);
  auto lead = f.terms.find(zero);
  if (lead == f.terms.end() ||
      (lead->second.at_zero() != 1 && lead->second.at_zero() != -1)) {
    throw InputError(
        "series inversion requires leading coefficient with constant term "
        "+-1");
  }
  Poly u_inv = poly_invert(lead->second, tdeg);

  Vec neg_base(f.win.base.size(), 0);
  for (size_t i = 0; i < neg_base.size(); ++i) neg_base[i] = -f.win.base[i];
  CharSeries out{Window{neg_base, depth, tdeg}, {}};
  out.terms[zero] = u_inv;

  std::vector<std::pair<Vec, const Poly*>> fterms;
  for (const auto& [gamma, p] : f.terms) {
    if (height(gamma) > 0) fterms.push_back({gamma, &p});
  }

  // The inverse is supported on sums of f's support offsets; enumerate that
  // closure inside the window, then solve by increasing height:
  // b_gamma = -u^{-1} sum_{0 < gamma' <= gamma} f_{gamma'} b_{gamma - gamma'}.
  std::vector<Vec> order;
  {
    std::map<Vec, bool> seen;
    seen[zero] = true;
    std::vector<Vec> frontier{zero};
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& g : frontier) {
        for (const auto& [step, p] : fterms) {
          (void)p;
          Vec h = vec_add(g, step);
          if (!offset_in_window(h, depth)) continue;
          if (seen.count(h)) continue;
          seen[h] = true;
          next.push_back(h);
        }
      }
      frontier = std::move(next);
    }
    for (const auto& [g, flag] : seen) {
      (void)flag;
      if (g != zero) order.push_back(g);
    }
    std::sort(order.begin(), order.end(), [](const Vec& a, const Vec& b) {
      Int ha = 0, hb = 0;
      for (Int x : a) ha += x;
      for (Int x : b) hb += x;
      if (ha != hb) return ha < hb;
      return a < b;
    });
  }

  std::map<Vec, Poly> solved;
  solved[zero] = u_inv;
  for (const auto& gamma : order) {
    Poly acc;
    for (const auto& [step, p] : fterms) {
      Vec rest(gamma.size());
      bool ok = true;
      for (size_t i = 0; i < gamma.size(); ++i) {
        rest[i] = gamma[i] - step[i];
        if (rest[i] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      auto it = solved.find(rest);
      if (it == solved.end()) continue;
      acc = poly_add(acc, poly_mul(*p, it->second, tdeg));
    }
    if (acc.c.empty()) continue;
    Poly b = poly_scale(poly_mul(u_inv, acc, tdeg), -1);
    if (b.c.empty()) continue;
    solved[gamma] = b;
    out.terms[gamma] = b;
  }
  return out;
}

CharSeries rewindow(const RootDatum& datum, const CharSeries& f,
                    const Window& win) {
  auto shift = datum.root_decompose(vec_sub(win.base, f.win.base));
  internal_check(shift.has_value(),
                 "rewindow requires bases differing by a root lattice element");
  CharSeries out{win, {}};
  for (const auto& [gamma, p] : f.terms) {
    add_term(out, vec_add(gamma, *shift), p);
  }
  return out;
}

CharSeries geometric_factor(const Window& win, const Vec& alpha_q, Int m,
                            bool with_t, bool inverse) {
  internal_check(m >= 1, "geometric factor needs positive multiplicity");
  Int h = height(alpha_q);
  internal_check(h >= 1, "geometric factor needs a positive root offset");
  Vec zero_base(win.base.size(), 0);
  CharSeries out{Window{zero_base, win.depth, win.tdeg}, {}};
  int kmax = win.depth / (int)h;
  for (int k = 0; k <= kmax; ++k) {
    int tpow = with_t ? k : 0;
    if (tpow > win.tdeg) break;
    Int value;
    if (inverse) {
      value = binomial(m + k - 1, k);
    } else {
      if (k > m) break;
      Int b = binomial(m, k);
      value = (k % 2 == 0) ? b : -b;
    }
    if (value == 0) continue;
    Vec gamma(alpha_q.size());
    for (size_t i = 0; i < alpha_q.size(); ++i) gamma[i] = alpha_q[i] * k;
    add_term(out, gamma, poly_monomial(value, tpow));
  }
  return out;
}

CharSeries flipped_hl_factor(const Window& win, const Vec& beta_q) {
  Int h = height(beta_q);
  internal_check(h >= 1, "flipped factor needs a positive root offset");
  Vec zero_base(win.base.size(), 0);
  CharSeries out{Window{zero_base, win.depth, win.tdeg}, {}};
  Vec zero(beta_q.size(), 0);
  add_term(out, zero, poly_monomial(1, 1));
  Poly tm1 = poly_sub(poly_monomial(1, 1), poly_monomial(1, 0));
  int kmax = win.depth / (int)h;
  for (int k = 1; k <= kmax; ++k) {
    Vec gamma(beta_q.size());
    for (size_t i = 0; i < beta_q.size(); ++i) gamma[i] = beta_q[i] * k;
    add_term(out, gamma, tm1);
  }
  return out;
}

namespace {

// Ascend x to its dominant chamber representative by reflecting at the
// smallest negative coordinate. Terms whose representative is singular
// cancel inside J and are dropped by the caller.
struct Ascent {
  Vec top;
  int sign = 1;
  bool singular = false;
};

Ascent ascend_to_dominant(const RootDatum& datum, Vec x) {
  Ascent out;
  int sign = 1;
  long steps = 0;
  const long cap = 200000;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < datum.n; ++i) {
      if (x[i] < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) break;
    x = datum.reflect_weight(neg, x);
    sign = -sign;
    if (++steps > cap) {
      throw InternalError(
          "dominant-chamber ascent did not terminate (weight outside the "
          "Tits cone?)");
    }
  }
  out.top = x;
  out.sign = sign;
  for (int i = 0; i < datum.n; ++i) {
    if (x[i] == 0) {
      out.singular = true;
      break;
    }
  }
  return out;
}

}  // namespace

CharSeries apply_J(const RootDatum& datum, const CharSeries& f) {
  input_check(datum.weight_regular_dominant(f.win.base),
              "apply_J needs a strictly dominant window base");
  const int depth = f.win.depth;
  CharSeries out{f.win, {}};
  for (const auto& [gamma, p] : f.terms) {
    Vec x = vec_sub(f.win.base, datum.q_to_weight(gamma));
    Ascent up = ascend_to_dominant(datum, x);
    if (up.singular) continue;
    auto gamma_top = datum.root_decompose(vec_sub(up.top, f.win.base));
    internal_check(gamma_top.has_value(),
                   "orbit representative left the root lattice coset");
    Int h_top = height(*gamma_top);  // height of top - base, may be negative
    // Walk the orbit of the regular representative downward. A point y at
    // root-coordinate offset tau from the top contributes at window offset
    // tau - gamma_top when that is componentwise nonnegative; prune once
    // hgt(tau) exceeds h_top + depth.
    struct Node {
      Vec weight;
      Vec tau;
      int sign;
      Int h;
    };
    std::map<Vec, int> seen;
    std::vector<Node> frontier;
    frontier.push_back(Node{up.top, Vec(datum.n, 0), up.sign, 0});
    seen[up.top] = 1;
    Int bound = h_top + depth;
    while (!frontier.empty()) {
      std::vector<Node> next;
      for (const auto& node : frontier) {
        Vec off(datum.n);
        bool ok = true;
        for (int i = 0; i < datum.n; ++i) {
          off[i] = node.tau[i] - (*gamma_top)[i];
          if (off[i] < 0) ok = false;
        }
        if (ok) add_term(out, off, poly_scale(p, node.sign));
        for (int i = 0; i < datum.n; ++i) {
          Int c = node.weight[i];
          if (c <= 0) continue;
          Int h2 = node.h + c;
          if (h2 > bound) continue;
          Vec y = datum.reflect_weight(i, node.weight);
          if (seen.count(y)) continue;
          seen[y] = 1;
          Vec tau = node.tau;
          tau[i] += c;
          next.push_back(Node{y, tau, -node.sign, h2});
        }
      }
      frontier = std::move(next);
    }
  }
  return out;
}

CharSeries at_t_zero(const CharSeries& f) {
  CharSeries out{f.win, {}};
  for (const auto& [gamma, p] : f.terms) {
    Int v = p.at_zero();
    if (v != 0) out.terms[gamma] = poly_monomial(v, 0);
  }
  return out;
}

bool series_equal(const CharSeries& f, const CharSeries& g) {
  return f.win.base == g.win.base && f.terms == g.terms;
}

}  // namespace kmsatake
