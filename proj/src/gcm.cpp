#include "kmsatake/gcm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace kmsatake {

Gcm validate_gcm(const Mat& m) {
  input_check(!m.empty(), "Cartan matrix is empty");
  int n = (int)m.size();
  for (const Vec& row : m) {
    input_check((int)row.size() == n, "Cartan matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    input_check(m[i][i] == 2, "diagonal entry a_" + std::to_string(i + 1) +
                                  std::to_string(i + 1) + " must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      input_check(m[i][j] <= 0, "positive off-diagonal entry at (" +
                                    std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
      input_check((m[i][j] == 0) == (m[j][i] == 0),
                  "asymmetric zero at (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + ")");
    }
  }
  return Gcm{n, m};
}

static std::vector<std::vector<int>> dynkin_components(const Gcm& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.n, false);
  for (int start = 0; start < g.n; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::deque<int> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      comp.push_back(i);
      for (int j = 0; j < g.n; ++j) {
        if (!seen[j] && g.a[i][j] != 0) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

Vec symmetrize(const Gcm& g) {
  std::vector<Frac> ratio(g.n);
  std::vector<bool> seen(g.n, false);
  Vec d(g.n, 0);
  for (const std::vector<int>& comp : dynkin_components(g)) {
    ratio[comp[0]] = Frac(1);
    seen[comp[0]] = true;
    std::deque<int> queue{comp[0]};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < g.n; ++j) {
        if (i == j || g.a[i][j] == 0) continue;
        // d_i a_ij = d_j a_ji, and a_ij, a_ji are both negative here,
        // so the propagated ratio stays positive.
        Frac r = ratio[i] * Frac(g.a[i][j], g.a[j][i]);
        if (!seen[j]) {
          ratio[j] = r;
          seen[j] = true;
          queue.push_back(j);
        } else {
          input_check(ratio[j] == r, "GCM is not symmetrizable");
        }
      }
    }
    Int lcm = 1;
    for (int i : comp) lcm = std::lcm(lcm, ratio[i].den);
    Int gcd = 0;
    for (int i : comp) {
      d[i] = ratio[i].num * (lcm / ratio[i].den);
      gcd = std::gcd(gcd, d[i]);
    }
    if (gcd > 1) {
      for (int i : comp) d[i] /= gcd;
    }
  }
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      internal_check(d[i] * g.a[i][j] == d[j] * g.a[j][i],
                     "symmetrizer check failed");
    }
  }
  return d;
}

std::string gcm_type_name(GcmType t) {
  switch (t) {
    case GcmType::Finite:
      return "Finite";
    case GcmType::Affine:
      return "Affine";
    default:
      return "Indefinite";
  }
}

static Mat submatrix(const Gcm& g, const std::vector<int>& idx) {
  Mat sub(idx.size(), Vec(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i) {
    for (size_t j = 0; j < idx.size(); ++j) sub[i][j] = g.a[idx[i]][idx[j]];
  }
  return sub;
}

// Leading principal minors all positive <=> there is u > 0 with Au > 0
// (nonsingular M-matrix), which is the finite-type branch of the
// trichotomy. No symmetrizer needed.
static bool all_leading_minors_positive(const Mat& m) {
  for (size_t k = 1; k <= m.size(); ++k) {
    Mat lead(k, Vec(k));
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
    }
    if (det(lead) <= 0) return false;
  }
  return true;
}

static GcmType classify_block(const Mat& m, Vec* delta_out) {
  if (all_leading_minors_positive(m)) return GcmType::Finite;
  Mat kernel = kernel_basis(m);
  if (kernel.size() == 1) {
    bool positive = true;
    for (Int e : kernel[0]) positive = positive && e > 0;
    if (positive) {
      if (delta_out) *delta_out = kernel[0];
      return GcmType::Affine;
    }
  }
  return GcmType::Indefinite;
}

GcmClass classify(const Gcm& g) {
  GcmClass cls;
  cls.components = dynkin_components(g);
  for (const std::vector<int>& comp : cls.components) {
    cls.component_types.push_back(classify_block(submatrix(g, comp), nullptr));
  }
  Vec delta;
  cls.type = classify_block(g.a, &delta);
  if (cls.type == GcmType::Affine) cls.delta = delta;
  return cls;
}

}  // namespace kmsatake
