#include "kmsatake/satake.hpp"

#include <algorithm>
#include <optional>

namespace kmsatake {

namespace {

Int height(const Vec& g) {
  Int h = 0;
  for (Int x : g) h += x;
  return h;
}

// lambda - mu as a nonnegative combination of simple coroots, if mu <= lambda.
// Coroots are coordinate vectors, so the coefficients are the first n
// coordinate differences and the extra coordinates must agree.
std::optional<Vec> coroot_gap(const RootDatum& datum, const Vec& mu,
                              const Vec& lambda) {
  input_check(static_cast<int>(mu.size()) == datum.r &&
                  static_cast<int>(lambda.size()) == datum.r,
              "coweight has wrong length");
  Vec g(datum.n, 0);
  for (int i = 0; i < datum.n; ++i) {
    g[i] = lambda[i] - mu[i];
    if (g[i] < 0) return std::nullopt;
  }
  for (int j = datum.n; j < datum.r; ++j) {
    if (lambda[j] != mu[j]) return std::nullopt;
  }
  return g;
}

// Coroot in coweight coordinates, from its coefficient vector over the
// simple coroots (which are the first standard basis vectors).
Vec pad_coroot(const RootDatum& datum, const Vec& coeffs) {
  Vec out(datum.r, 0);
  for (int i = 0; i < datum.n; ++i) out[i] = coeffs[i];
  return out;
}

struct DualContext {
  RootDatum dual;
  Mat map;
  Vec lam_d;
  RootTable table;
};

DualContext make_dual_context(const RootDatum& datum, const Vec& lambda,
                              int depth, int tdeg) {
  input_check(static_cast<int>(lambda.size()) == datum.r,
              "coweight has wrong length");
  input_check(datum.coweight_dominant(lambda),
              "lambda must be a dominant coweight");
  DualContext ctx;
  ctx.dual = datum.dual();
  ctx.map = datum.coweight_to_dual_weight_map(ctx.dual);
  ctx.lam_d = mat_apply(ctx.map, lambda);
  make_window(ctx.dual, ctx.lam_d, depth, tdeg);  // enforce caps up front
  // Depth 0 is a legal window (lambda = nu) but not a legal root table.
  ctx.table = enumerate_roots(ctx.dual, std::max(depth, 1));
  return ctx;
}

// N(t) for nu <= lambda, with the cross-check between the direct series
// coefficient and the reassembly from c_{lambda,mu} and Freudenthal
// multiplicities. Optionally reports dim L(lambda)_nu on the dual datum.
Poly mv_count_core(const RootDatum& datum, const Vec& lambda, const Vec& nu,
                   int tdeg, Int* top_components) {
  auto gap = coroot_gap(datum, nu, lambda);
  input_check(gap.has_value(), "nu is not below lambda");
  int depth = static_cast<int>(height(*gap));

  DualContext ctx = make_dual_context(datum, lambda, depth, tdeg);
  const Vec& gamma = *gap;

  CharSeries p = hl_function(ctx.dual, ctx.table, ctx.lam_d, depth, tdeg);
  CharSeries inv_p0 = invert(
      hl_function(ctx.dual, ctx.table, Vec(ctx.dual.r, 0), depth, tdeg));
  Poly direct = coefficient_at_offset(multiply(p, inv_p0), gamma);

  // Independent reassembly: sum_{mu} c_{lambda,mu} chi_mu with the chi built
  // from Freudenthal tables. Dominant mu with mu >= nu suffice: a weight of
  // L(mu) lying above nu forces mu >= nu by transitivity.
  HlExpansion expansion =
      hl_coeff_triangular(ctx.dual, ctx.table, ctx.lam_d, depth, tdeg);
  CharSeries assembled = series_zero(make_window(ctx.dual, ctx.lam_d, depth, tdeg));
  for (const auto& [gamma_mu, c] : expansion.coeffs) {
    if (c.c.empty()) continue;
    bool inside = true;
    for (int i = 0; i < ctx.dual.n; ++i) {
      if (gamma_mu[i] > gamma[i]) inside = false;
    }
    if (!inside) continue;
    Vec mu_d = ctx.lam_d;
    for (int i = 0; i < ctx.dual.n; ++i) {
      for (int j = 0; j < ctx.dual.r; ++j)
        mu_d[j] -= gamma_mu[i] * ctx.dual.alpha[i][j];
    }
    CharacterTable mults =
        freudenthal_table(ctx.dual, ctx.table, mu_d,
                          depth - static_cast<int>(height(gamma_mu)));
    for (const auto& [off, m] : mults.mults) {
      Vec total = gamma_mu;
      for (int i = 0; i < ctx.dual.n; ++i) total[i] += off[i];
      add_term(assembled, total, poly_scale(c, m));
    }
  }
  Poly reassembled = coefficient_at_offset(multiply(assembled, inv_p0), gamma);
  internal_check(direct == reassembled,
                 "count series routes disagree (series coefficient vs "
                 "Freudenthal reassembly)");

  if (top_components != nullptr) {
    Vec nu_d = mat_apply(ctx.map, nu);
    *top_components = weight_multiplicity(ctx.dual, ctx.table, ctx.lam_d, nu_d);
  }
  return direct;
}

}  // namespace

SatakeTransform satake_transform(const RootDatum& datum, const Vec& lambda,
                                 int depth, int tdeg) {
  DualContext ctx = make_dual_context(datum, lambda, depth, tdeg);
  CharSeries p = hl_function(ctx.dual, ctx.table, ctx.lam_d, depth, tdeg);
  CharSeries inv_p0 = invert(
      hl_function(ctx.dual, ctx.table, Vec(ctx.dual.r, 0), depth, tdeg));
  CharSeries s = multiply(p, inv_p0);

  SatakeTransform out;
  out.lambda = lambda;
  out.depth = depth;
  out.tdeg = tdeg;
  for (int i = 0; i < datum.n; ++i) out.shift += lambda[i];
  out.terms = s.terms;
  internal_check(coefficient_at_offset(s, Vec(ctx.dual.n, 0)) ==
                     poly_monomial(1, 0),
                 "Satake transform must have unit coefficient at lambda");
  return out;
}

Poly mv_count_series(const RootDatum& datum, const Vec& lambda, const Vec& nu,
                     int tdeg) {
  return mv_count_core(datum, lambda, nu, tdeg, nullptr);
}

MvPrediction mv_prediction(const RootDatum& datum, const Vec& lambda,
                           const Vec& nu, int tdeg) {
  MvPrediction out;
  out.lambda = lambda;
  out.nu = nu;
  Int top = 0;
  out.count = mv_count_core(datum, lambda, nu, tdeg, &top);
  out.top_components = top;
  out.dimension = height(*coroot_gap(datum, nu, lambda));
  internal_check(out.count.at_zero() == out.top_components,
                 "inconsistent limit: N(0) must equal the top weight "
                 "multiplicity");
  return out;
}

bool st_nonempty(const RootDatum& datum, const Vec& mu, const Vec& nu) {
  return datum.coweight_leq(nu, mu);
}

bool grT_vanishing(const RootDatum& datum, const Vec& lambda, const Vec& nu) {
  input_check(datum.coweight_dominant(lambda),
              "lambda must be a dominant coweight");
  return datum.coweight_leq(nu, lambda);
}

bool grS_nonempty_window(const RootDatum& datum, const Vec& lambda,
                         const Vec& mu, const Word& word) {
  input_check(datum.coweight_dominant(lambda),
              "lambda must be a dominant coweight");
  Vec wl = act_coweight(datum, word, lambda);
  return datum.coweight_leq(wl, mu);
}

bool grT_nonempty_window(const RootDatum& datum, const Vec& lambda,
                         const Vec& nu, const Word& word) {
  input_check(datum.coweight_dominant(lambda),
              "lambda must be a dominant coweight");
  Vec wl = act_coweight(datum, word, lambda);
  return datum.coweight_leq(nu, wl);
}

std::vector<Vec> strata_interval(const RootDatum& datum, const Vec& mu,
                                 const Vec& lambda) {
  input_check(datum.coweight_dominant(lambda),
              "lambda must be a dominant coweight");
  auto gap = coroot_gap(datum, mu, lambda);
  input_check(gap.has_value(), "mu is not below lambda");

  std::vector<std::pair<std::pair<Int, Vec>, Vec>> found;
  Vec gamma(datum.n, 0);
  while (true) {
    Vec nu = lambda;
    for (int i = 0; i < datum.n; ++i) nu[i] -= gamma[i];
    if (datum.coweight_dominant(nu)) {
      found.push_back({{height(*gap) - height(gamma), nu}, nu});
    }
    int k = datum.n - 1;
    while (k >= 0 && gamma[k] == (*gap)[k]) {
      gamma[k] = 0;
      --k;
    }
    if (k < 0) break;
    ++gamma[k];
  }
  std::sort(found.begin(), found.end());
  std::vector<Vec> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(f.second);
  return out;
}

Vec coroot_step_witness(const RootDatum& datum, const Vec& mu,
                        const Vec& lambda, const RootTable& dual_table) {
  input_check(datum.coweight_dominant(lambda),
              "lambda must be a dominant coweight");
  input_check(datum.coweight_dominant(mu), "mu must be a dominant coweight");
  auto gap = coroot_gap(datum, mu, lambda);
  input_check(gap.has_value(), "mu is not below lambda");
  input_check(height(*gap) > 0, "mu must differ from lambda");

  std::vector<std::pair<std::pair<Int, Vec>, Vec>> candidates;
  for (const auto& [coeffs, entry] : dual_table.entries) {
    candidates.push_back({{height(coeffs), coeffs}, coeffs});
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& cand : candidates) {
    Vec step = pad_coroot(datum, cand.second);
    Vec target = vec_sub(lambda, step);
    if (datum.coweight_leq(mu, target)) return step;
  }
  if (dual_table.depth < height(*gap)) {
    throw WindowError(
        "window too small: the dual root table is shallower than the gap "
        "between lambda and mu");
  }
  throw InternalError(
      "no coroot step found in a complete window; a positive coroot with "
      "mu <= lambda - coroot < lambda must exist");
}

GammaCount gamma_count(const RootDatum& datum, const Vec& lambda,
                       const Word& word) {
  input_check(static_cast<int>(lambda.size()) == datum.r,
              "coweight has wrong length");
  input_check(datum.coweight_dominant(lambda),
              "lambda must be a dominant coweight");
  GammaCount out;
  for (const Vec& alpha_q : inversion_set(datum, word)) {
    Int pairs = datum.pairing(datum.q_to_weight(alpha_q), lambda);
    internal_check(pairs >= 0,
                   "a positive root paired negatively with a dominant "
                   "coweight");
    out.entries.push_back({alpha_q, pairs});
    out.total += pairs;
  }
  Vec wl = act_coweight(datum, word, lambda);
  Int rho_drop = 0;
  for (int i = 0; i < datum.n; ++i) rho_drop += lambda[i] - wl[i];
  internal_check(out.total == rho_drop,
                 "inversion pair count must equal <rho, lambda - w lambda>");
  return out;
}

}  // namespace kmsatake
