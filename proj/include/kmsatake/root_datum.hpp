#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmsatake/gcm.hpp"
#include "kmsatake/linalg.hpp"

namespace kmsatake {

// Simply connected root datum for a GCM of size n. The weight lattice is
// Z^r with r = n + corank(A), in coordinates where the simple coroots are
// the first n dual basis vectors. Consequences used everywhere:
//   <x, coroot_i> = x[i],  fundamental weight omega_i = e_i,
//   rho = (1,...,1 | 0,...,0),
//   simple root alpha_i = (a_1i, ..., a_ni | row i of E).
// E is the n x corank block completing the alpha rows to rank n. Its
// first column is all ones, so in corank >= 1 the coweight e_n pairs to 1
// with every simple root and serves as an integral rho-check; the
// remaining columns are indicator vectors picked greedily.
struct RootDatum {
  std::string name;
  Gcm gcm;
  Vec d;       // symmetrizer
  GcmClass cls;
  int n = 0;
  int corank = 0;
  int r = 0;
  Mat alpha;   // n rows, length r
  Mat extra;   // E, n rows, length corank
  Mat sym;     // (alpha_i, alpha_j) = d_i a_ij
  Vec rho;
  FVec rho_check;  // rational in finite type (e.g. A1 needs 1/2)

  Int pairing(const Vec& weight, const Vec& coweight) const;
  Vec simple_root(int i) const { return alpha[i]; }
  Vec simple_coroot(int i) const;
  Vec fundamental_weight(int i) const;

  // Invariant bilinear form on the root lattice, arguments in
  // simple-root coordinates.
  Int form_qq(const Vec& g1, const Vec& g2) const;
  // (x, sum_i g_i alpha_i) = sum_i g_i d_i x_i for a weight x.
  Int form_wq(const Vec& x, const Vec& g) const;

  // Reflection s_i on each coordinate system.
  Vec reflect_weight(int i, const Vec& x) const;
  Vec reflect_coweight(int i, const Vec& y) const;
  Vec reflect_q(int i, const Vec& g) const;

  // Writes v as an integer combination of simple roots if possible.
  std::optional<Vec> root_decompose(const Vec& v) const;
  Vec q_to_weight(const Vec& g) const;

  bool weight_dominant(const Vec& x) const;
  bool weight_regular_dominant(const Vec& x) const;
  bool coweight_dominant(const Vec& y) const;
  // mu <= lambda in the dominance order (difference a nonnegative
  // integer combination of simple roots / coroots).
  bool weight_leq(const Vec& mu, const Vec& lambda) const;
  bool coweight_leq(const Vec& mu, const Vec& lambda) const;

  RootDatum dual() const;

  // Injective map taking coroot_i to the dual datum's simple root and
  // dominant coweights to dominant dual weights; columns are images of
  // basis vectors. `dual_datum` must be this->dual().
  Mat coweight_to_dual_weight_map(const RootDatum& dual_datum) const;
};

RootDatum build_datum(const Gcm& g, const std::string& name = "");
RootDatum build_datum(const Gcm& g, const Vec& symmetrizer,
                      const std::string& name = "");

// Parses {"name": str, "cartan": [[int]], "symmetrizer": [int]?}.
RootDatum datum_from_json(const std::string& text);

}  // namespace kmsatake
