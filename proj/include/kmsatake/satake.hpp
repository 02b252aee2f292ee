#pragma once

#include "kmsatake/hall_littlewood.hpp"

namespace kmsatake {

// Sat(lambda) = q^{<rho,lambda>} (P_lambda/P_0)(q^{-1}) on the dual root
// datum. Terms are keyed by the coroot-coefficient offset gamma, so the
// coweight carried by a term is nu = lambda - sum_i gamma_i alphacheck_i
// and the coefficient of e^nu is q^{shift} * term(q^{-1}).
struct SatakeTransform {
  Vec lambda;
  int depth = 0;
  int tdeg = 0;
  Int shift = 0;
  std::map<Vec, Poly> terms;
};

struct MvPrediction {
  Vec lambda;
  Vec nu;
  Int dimension = 0;       // <rho, lambda - nu>
  Int top_components = 0;  // dim L(lambda)_nu on the dual datum
  Poly count;              // N(t); the point count is q^{dimension} N(q^{-1})
};

struct GammaCount {
  // (positive real root alpha in root coordinates, <alpha, lambda>);
  // the set Gamma consists of the pairs (alpha, k) with 0 <= k < count.
  std::vector<std::pair<Vec, Int>> entries;
  Int total = 0;
};

SatakeTransform satake_transform(const RootDatum& datum, const Vec& lambda,
                                 int depth, int tdeg);

// N(t) for the pair nu <= lambda, computed two ways (series coefficient of
// P_lambda/P_0, and reassembly from c_{lambda,mu} with Freudenthal weight
// multiplicities) which must agree.
Poly mv_count_series(const RootDatum& datum, const Vec& lambda, const Vec& nu,
                     int tdeg);

MvPrediction mv_prediction(const RootDatum& datum, const Vec& lambda,
                           const Vec& nu, int tdeg);

// S_mu and T_nu intersect exactly when nu <= mu.
bool st_nonempty(const RootDatum& datum, const Vec& mu, const Vec& nu);
// Necessary condition nu <= lambda for Gr_lambda to meet T_nu; false means
// the intersection is empty.
bool grT_vanishing(const RootDatum& datum, const Vec& lambda, const Vec& nu);
// Necessary conditions on the chart through w(lambda): mu >= w(lambda) for
// the S side, nu <= w(lambda) for the T side.
bool grS_nonempty_window(const RootDatum& datum, const Vec& lambda,
                         const Vec& mu, const Word& word);
bool grT_nonempty_window(const RootDatum& datum, const Vec& lambda,
                         const Vec& nu, const Word& word);

// All dominant coweights nu with mu <= nu <= lambda, sorted by the height
// of nu - mu, then lexicographically.
std::vector<Vec> strata_interval(const RootDatum& datum, const Vec& mu,
                                 const Vec& lambda);

// Some positive coroot ac with mu <= lambda - ac < lambda, searched through
// the dual root table by increasing height.
Vec coroot_step_witness(const RootDatum& datum, const Vec& mu,
                        const Vec& lambda, const RootTable& dual_table);

GammaCount gamma_count(const RootDatum& datum, const Vec& lambda,
                       const Word& word);

}  // namespace kmsatake
