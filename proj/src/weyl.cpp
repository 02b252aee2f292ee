#include "kmsatake/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace kmsatake {

Mat identity_matrix(int r) {
  Mat m(r, Vec(r, 0));
  for (int k = 0; k < r; ++k) m[k][k] = 1;
  return m;
}

Mat reflection_matrix(const RootDatum& datum, int i) {
  Mat m = identity_matrix(datum.r);
  for (int k = 0; k < datum.r; ++k) m[k][i] -= datum.alpha[i][k];
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t rows = a.size(), inner = b.size(), cols = b[0].size();
  Mat c(rows, Vec(cols, 0));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Vec act(const RootDatum& datum, const Word& word, const Vec& weight) {
  Vec x = weight;
  for (int i : word) x = datum.reflect_weight(i, x);
  return x;
}

Vec act_coweight(const RootDatum& datum, const Word& word,
                 const Vec& coweight) {
  Vec y = coweight;
  for (int i : word) y = datum.reflect_coweight(i, y);
  return y;
}

static void check_index(const RootDatum& datum, int i) {
  input_check(i >= 0 && i < datum.n,
              "reflection index out of range: " + std::to_string(i));
}

// Root-coordinate action matrix of the word (columns are images of the
// simple roots); enough to detect descents, since a real root has all
// coordinates of one sign.
static Mat q_matrix(const RootDatum& datum, const Word& word) {
  Mat q(datum.n, Vec(datum.n, 0));
  for (int i = 0; i < datum.n; ++i) q[i][i] = 1;
  for (int i : word) {
    check_index(datum, i);
    // Left-compose s_i: replace row context via column operations on q.
    for (int col = 0; col < datum.n; ++col) {
      Int c = 0;
      for (int j = 0; j < datum.n; ++j) c += datum.gcm.a[i][j] * q[j][col];
      q[i][col] -= c;
    }
  }
  return q;
}

Word canonical_word(const RootDatum& datum, const Word& word) {
  Mat q = q_matrix(datum, word);
  Word out;
  int guard = 0;
  for (;;) {
    int descent = -1;
    for (int i = 0; i < datum.n && descent < 0; ++i) {
      for (int j = 0; j < datum.n; ++j) {
        if (q[j][i] < 0) {
          descent = i;
          break;
        }
      }
    }
    if (descent < 0) {
      for (int i = 0; i < datum.n; ++i) {
        for (int j = 0; j < datum.n; ++j) {
          internal_check(q[j][i] == (i == j ? 1 : 0),
                         "descent-free Weyl action is not the identity");
        }
      }
      return out;
    }
    out.push_back(descent);
    // q := q * S_descent (peeling the first applied letter).
    Mat next(datum.n, Vec(datum.n));
    for (int col = 0; col < datum.n; ++col) {
      Vec e(datum.n, 0);
      e[col] = 1;
      Vec img = datum.reflect_q(descent, e);
      for (int j = 0; j < datum.n; ++j) {
        Int s = 0;
        for (int k = 0; k < datum.n; ++k) s += q[j][k] * img[k];
        next[j][col] = s;
      }
    }
    q = next;
    internal_check(++guard <= (int)word.size() + 1,
                   "word reduction exceeded the input length");
  }
}

std::pair<int, int> length_and_sign(const RootDatum& datum, const Word& word) {
  Word reduced = canonical_word(datum, word);
  int len = (int)reduced.size();
  return {len, len % 2 == 0 ? 1 : -1};
}

std::vector<Vec> inversion_set(const RootDatum& datum, const Word& word) {
  Word reduced = canonical_word(datum, word);
  std::vector<Vec> inv;
  for (size_t j = 0; j < reduced.size(); ++j) {
    Vec v(datum.n, 0);
    v[reduced[j]] = 1;
    for (size_t p = j; p-- > 0;) v = datum.reflect_q(reduced[p], v);
    internal_check(vec_nonneg(v), "inversion telescoping produced a "
                                  "negative root from a reduced word");
    inv.push_back(v);
  }
  return inv;
}

OrbitSlice orbit_within_depth(const RootDatum& datum, const Vec& base,
                              int depth) {
  input_check((int)base.size() == datum.r, "base weight has wrong dimension");
  input_check(datum.weight_regular_dominant(base),
              "orbit base must be strictly dominant");
  input_check(depth >= 0, "orbit depth must be >= 0");
  OrbitSlice slice;
  slice.base = base;
  slice.depth = depth;
  std::map<Vec, OrbitEntry> seen;
  std::deque<Vec> queue;
  seen[base] = OrbitEntry{base, 1, {}, 0};
  queue.push_back(base);
  while (!queue.empty()) {
    Vec x = queue.front();
    queue.pop_front();
    OrbitEntry cur = seen[x];
    for (int i = 0; i < datum.n; ++i) {
      if (x[i] <= 0) continue;
      int d = cur.depth + (int)x[i];
      if (d > depth) continue;
      Vec y = datum.reflect_weight(i, x);
      if (seen.count(y)) continue;
      OrbitEntry e;
      e.weight = y;
      e.sign = -cur.sign;
      e.word = cur.word;
      e.word.push_back(i);
      e.depth = d;
      seen[y] = e;
      queue.push_back(y);
    }
  }
  for (const auto& [w, e] : seen) slice.entries.push_back(e);
  std::stable_sort(slice.entries.begin(), slice.entries.end(),
                   [](const OrbitEntry& a, const OrbitEntry& b) {
                     if (a.depth != b.depth) return a.depth < b.depth;
                     return a.weight < b.weight;
                   });
  return slice;
}

std::vector<Word> elements_up_to_length(const RootDatum& datum, int max_len) {
  std::vector<Word> out{{}};
  std::map<Mat, bool> seen{{identity_matrix(datum.r), true}};
  std::vector<std::pair<Word, Mat>> frontier{{{}, identity_matrix(datum.r)}};
  std::vector<Mat> refl;
  for (int i = 0; i < datum.n; ++i) refl.push_back(reflection_matrix(datum, i));
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<Word, Mat>> next;
    for (const auto& [word, m] : frontier) {
      for (int i = 0; i < datum.n; ++i) {
        Mat m2 = mat_mul(refl[i], m);  // s_i applied after w
        if (seen.count(m2)) continue;
        seen[m2] = true;
        Word w2 = word;
        w2.push_back(i);
        out.push_back(w2);
        next.emplace_back(std::move(w2), std::move(m2));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

static Poly parabolic_poincare(const RootDatum& datum,
                               const std::vector<int>& gens, int tdeg) {
  Poly p;
  p.c.assign(tdeg + 1, 0);
  p.c[0] = 1;
  std::map<Mat, bool> seen{{identity_matrix(datum.r), true}};
  std::vector<Mat> frontier{identity_matrix(datum.r)};
  std::vector<Mat> refl;
  for (int i : gens) refl.push_back(reflection_matrix(datum, i));
  for (int len = 1; len <= tdeg; ++len) {
    std::vector<Mat> next;
    for (const Mat& m : frontier) {
      for (const Mat& s : refl) {
        Mat m2 = mat_mul(s, m);
        if (seen.count(m2)) continue;
        seen[m2] = true;
        next.push_back(std::move(m2));
      }
    }
    p.c[len] = (Int)next.size();
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  p.normalize();
  return p;
}

Poly stabilizer_poincare_weight(const RootDatum& datum, const Vec& lambda,
                                int tdeg) {
  input_check(datum.weight_dominant(lambda),
              "stabilizer Poincare series requires a dominant weight");
  std::vector<int> gens;
  for (int i = 0; i < datum.n; ++i) {
    if (lambda[i] == 0) gens.push_back(i);
  }
  return parabolic_poincare(datum, gens, tdeg);
}

Poly stabilizer_poincare_coweight(const RootDatum& datum, const Vec& lambda,
                                  int tdeg) {
  input_check(datum.coweight_dominant(lambda),
              "stabilizer Poincare series requires a dominant coweight");
  std::vector<int> gens;
  for (int i = 0; i < datum.n; ++i) {
    Int c = 0;
    for (int k = 0; k < datum.r; ++k) c += datum.alpha[i][k] * lambda[k];
    if (c == 0) gens.push_back(i);
  }
  return parabolic_poincare(datum, gens, tdeg);
}

}  // namespace kmsatake
