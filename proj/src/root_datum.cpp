#include "kmsatake/root_datum.hpp"

#include <nlohmann/json.hpp>

namespace kmsatake {

Int RootDatum::pairing(const Vec& weight, const Vec& coweight) const {
  input_check((int)weight.size() == r && (int)coweight.size() == r,
              "dimension mismatch: expected vectors of length " +
                  std::to_string(r));
  Int s = 0;
  for (int k = 0; k < r; ++k) s += weight[k] * coweight[k];
  return s;
}

Vec RootDatum::simple_coroot(int i) const {
  Vec y(r, 0);
  y[i] = 1;
  return y;
}

Vec RootDatum::fundamental_weight(int i) const {
  Vec x(r, 0);
  x[i] = 1;
  return x;
}

Int RootDatum::form_qq(const Vec& g1, const Vec& g2) const {
  Int s = 0;
  for (int i = 0; i < n; ++i) {
    if (g1[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += g1[i] * sym[i][j] * g2[j];
  }
  return s;
}

Int RootDatum::form_wq(const Vec& x, const Vec& g) const {
  Int s = 0;
  for (int i = 0; i < n; ++i) s += g[i] * d[i] * x[i];
  return s;
}

Vec RootDatum::reflect_weight(int i, const Vec& x) const {
  input_check(i >= 0 && i < n,
              "reflection index out of range: " + std::to_string(i));
  Vec y = x;
  Int c = x[i];
  if (c != 0) {
    for (int k = 0; k < r; ++k) y[k] -= c * alpha[i][k];
  }
  return y;
}

Vec RootDatum::reflect_coweight(int i, const Vec& y) const {
  input_check(i >= 0 && i < n,
              "reflection index out of range: " + std::to_string(i));
  Vec z = y;
  Int c = 0;
  for (int k = 0; k < r; ++k) c += alpha[i][k] * y[k];
  z[i] -= c;
  return z;
}

Vec RootDatum::reflect_q(int i, const Vec& g) const {
  input_check(i >= 0 && i < n,
              "reflection index out of range: " + std::to_string(i));
  Vec h = g;
  Int c = 0;
  for (int j = 0; j < n; ++j) c += gcm.a[i][j] * g[j];
  h[i] -= c;
  return h;
}

std::optional<Vec> RootDatum::root_decompose(const Vec& v) const {
  // Stack <., coroot_j> rows (giving A c = v_first) on the extra
  // coordinates (E^T c = v_extra); the alpha_i are independent so a
  // solution is unique.
  Mat m(r, Vec(n));
  FVec b(r);
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < n; ++i) m[j][i] = alpha[i][j];
    b[j] = Frac(v[j]);
  }
  FVec x;
  if (!solve_rational(m, b, x)) return std::nullopt;
  Vec c(n);
  for (int i = 0; i < n; ++i) {
    if (!x[i].is_integer()) return std::nullopt;
    c[i] = x[i].num;
  }
  return c;
}

Vec RootDatum::q_to_weight(const Vec& g) const {
  Vec v(r, 0);
  for (int i = 0; i < n; ++i) {
    if (g[i] == 0) continue;
    for (int k = 0; k < r; ++k) v[k] += g[i] * alpha[i][k];
  }
  return v;
}

bool RootDatum::weight_dominant(const Vec& x) const {
  for (int i = 0; i < n; ++i) {
    if (x[i] < 0) return false;
  }
  return true;
}

bool RootDatum::weight_regular_dominant(const Vec& x) const {
  for (int i = 0; i < n; ++i) {
    if (x[i] <= 0) return false;
  }
  return true;
}

bool RootDatum::coweight_dominant(const Vec& y) const {
  for (int i = 0; i < n; ++i) {
    Int c = 0;
    for (int k = 0; k < r; ++k) c += alpha[i][k] * y[k];
    if (c < 0) return false;
  }
  return true;
}

bool RootDatum::weight_leq(const Vec& mu, const Vec& lambda) const {
  std::optional<Vec> c = root_decompose(vec_sub(lambda, mu));
  return c && vec_nonneg(*c);
}

bool RootDatum::coweight_leq(const Vec& mu, const Vec& lambda) const {
  for (int k = 0; k < r; ++k) {
    Int diff = lambda[k] - mu[k];
    if (k < n ? diff < 0 : diff != 0) return false;
  }
  return true;
}

RootDatum RootDatum::dual() const {
  Mat at(n, Vec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at[i][j] = gcm.a[j][i];
  }
  return build_datum(validate_gcm(at), "dual(" + name + ")");
}

Mat RootDatum::coweight_to_dual_weight_map(const RootDatum& dual_datum) const {
  internal_check(dual_datum.n == n && dual_datum.r == r,
                 "dual datum shape mismatch");
  // Columns i < n are forced (coroot_i must land on the dual simple
  // root); columns n+t are E[.][t] on top of a scaled identity, the
  // scale bumped only in the measure-zero case where the map would be
  // singular.
  for (Int scale = 1; scale <= 16; ++scale) {
    Mat m(r, Vec(r, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < r; ++j) m[j][i] = dual_datum.alpha[i][j];
    }
    for (int t = 0; t < corank; ++t) {
      for (int j = 0; j < n; ++j) m[j][n + t] = extra[j][t];
      m[n + t][n + t] = scale;
    }
    if (det(m) != 0) return m;
  }
  throw InternalError("coweight map: no nonsingular completion found");
}

static Mat build_extra_block(const Gcm& g, int corank) {
  int n = g.n;
  Mat e(n, Vec(corank, 0));
  if (corank == 0) return e;
  Mat kernel = kernel_basis(g.a);
  internal_check((int)kernel.size() == corank, "corank mismatch");
  // Column vectors of E restricted to ker(A) must be independent; grow
  // a candidate list until the Gram-style matrix P[s][k] = col_s . ker_k
  // reaches full rank.
  Mat p;
  auto rank_with = [&](const Vec& col) {
    Mat q = p;
    Vec row(corank);
    for (int k = 0; k < corank; ++k) {
      Int s = 0;
      for (int j = 0; j < n; ++j) s += col[j] * kernel[k][j];
      row[k] = s;
    }
    q.push_back(row);
    return std::pair<int, Vec>(rank_of(q), row);
  };
  std::vector<Vec> cols;
  Vec ones(n, 1);
  auto [rank1, row1] = rank_with(ones);
  internal_check(rank1 == 1, "all-ones column vanishes on the kernel");
  cols.push_back(ones);
  p.push_back(row1);
  for (int j = 0; j < n && (int)cols.size() < corank; ++j) {
    Vec ind(n, 0);
    ind[j] = 1;
    auto [rank2, row2] = rank_with(ind);
    if (rank2 > (int)p.size()) {
      cols.push_back(ind);
      p.push_back(row2);
    }
  }
  internal_check((int)cols.size() == corank, "extra block rank completion");
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < corank; ++t) e[j][t] = cols[t][j];
  }
  return e;
}

static RootDatum assemble(const Gcm& g, const Vec& d, const std::string& name) {
  RootDatum dat;
  dat.name = name.empty() ? "datum" : name;
  dat.gcm = g;
  dat.d = d;
  dat.cls = classify(g);
  dat.n = g.n;
  dat.corank = g.n - rank_of(g.a);
  dat.r = dat.n + dat.corank;
  dat.extra = build_extra_block(g, dat.corank);
  dat.alpha.assign(dat.n, Vec(dat.r, 0));
  for (int i = 0; i < dat.n; ++i) {
    for (int j = 0; j < dat.n; ++j) dat.alpha[i][j] = g.a[j][i];
    for (int t = 0; t < dat.corank; ++t) dat.alpha[i][dat.n + t] = dat.extra[i][t];
  }
  dat.sym.assign(dat.n, Vec(dat.n));
  for (int i = 0; i < dat.n; ++i) {
    for (int j = 0; j < dat.n; ++j) dat.sym[i][j] = d[i] * g.a[i][j];
  }
  dat.rho.assign(dat.r, 0);
  for (int i = 0; i < dat.n; ++i) dat.rho[i] = 1;
  if (dat.corank > 0) {
    dat.rho_check.assign(dat.r, Frac(0));
    dat.rho_check[dat.n] = Frac(1);
  } else {
    Mat at(dat.n, Vec(dat.n));
    for (int i = 0; i < dat.n; ++i) {
      for (int j = 0; j < dat.n; ++j) at[i][j] = g.a[j][i];
    }
    FVec ones(dat.n, Frac(1));
    bool ok = solve_rational(at, ones, dat.rho_check);
    internal_check(ok, "rho-check solve failed on nonsingular GCM");
  }
  internal_check(rank_of(dat.alpha) == dat.n, "simple roots not independent");
  for (int i = 0; i < dat.n; ++i) {
    internal_check(dat.rho[i] == 1, "rho pairing");
    Frac pair(0);
    for (int k = 0; k < dat.r; ++k) {
      pair = pair + Frac(dat.alpha[i][k]) * dat.rho_check[k];
    }
    internal_check(pair == Frac(1), "rho-check pairing");
  }
  return dat;
}

RootDatum build_datum(const Gcm& g, const std::string& name) {
  return assemble(g, symmetrize(g), name);
}

RootDatum build_datum(const Gcm& g, const Vec& symmetrizer,
                      const std::string& name) {
  input_check((int)symmetrizer.size() == g.n,
              "symmetrizer length must match the GCM size");
  for (Int di : symmetrizer) {
    input_check(di > 0, "symmetrizer entries must be positive");
  }
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      input_check(symmetrizer[i] * g.a[i][j] == symmetrizer[j] * g.a[j][i],
                  "supplied symmetrizer does not symmetrize the GCM");
    }
  }
  return assemble(g, symmetrizer, name);
}

RootDatum datum_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("datum JSON parse error: ") + e.what());
  }
  input_check(doc.is_object() && doc.contains("cartan"),
              "datum JSON must be an object with a \"cartan\" field");
  Mat a;
  try {
    a = doc.at("cartan").get<Mat>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("\"cartan\" must be a matrix of integers");
  }
  std::string name = doc.value("name", "datum");
  Gcm g = validate_gcm(a);
  if (doc.contains("symmetrizer")) {
    Vec d;
    try {
      d = doc.at("symmetrizer").get<Vec>();
    } catch (const nlohmann::json::exception&) {
      throw InputError("\"symmetrizer\" must be a list of integers");
    }
    return build_datum(g, d, name);
  }
  return build_datum(g, name);
}

}  // namespace kmsatake
