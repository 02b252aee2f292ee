#pragma once

#include <string>
#include <vector>

#include "kmsatake/linalg.hpp"

namespace kmsatake {

// Generalized Cartan matrix: a_ii = 2, a_ij <= 0 off the diagonal,
// a_ij = 0 iff a_ji = 0. Indices are 0-based in code, 1-based in
// error messages.
struct Gcm {
  int n = 0;
  Mat a;

  Int entry(int i, int j) const { return a[i][j]; }
};

Gcm validate_gcm(const Mat& m);

// Positive diagonal d with d_i a_ij = d_j a_ji, coprime within each
// connected component of the Dynkin graph. Throws InputError when no
// positive symmetrizer exists.
Vec symmetrize(const Gcm& g);

enum class GcmType { Finite, Affine, Indefinite };

std::string gcm_type_name(GcmType t);

struct GcmClass {
  GcmType type = GcmType::Indefinite;
  // Primitive strictly positive null vector; nonempty only for Affine.
  Vec delta;
  // Connected components as index lists, and the type of each.
  std::vector<std::vector<int>> components;
  std::vector<GcmType> component_types;
};

// Finite: all leading principal minors positive. Affine: corank 1 with a
// strictly positive null vector (forces indecomposable). Everything else
// Indefinite. Components are always reported individually.
GcmClass classify(const Gcm& g);

}  // namespace kmsatake
