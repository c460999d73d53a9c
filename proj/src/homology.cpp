#include "trisurf/homology.hpp"

#include <cstdlib>
#include <deque>

namespace trisurf {

namespace {

long checked_mul_sub(long a, long q, long b) {
  long prod = 0, out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw MapError("homology: integer overflow during reduction");
  }
  return out;
}

using Matrix = std::vector<std::vector<long>>;

// row_i -= q * row_j in both matrices.
void axpy(Matrix& m, Matrix& u, int i, int j, long q) {
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] = checked_mul_sub(m[i][c], q, m[j][c]);
  for (std::size_t c = 0; c < u[i].size(); ++c) u[i][c] = checked_mul_sub(u[i][c], q, u[j][c]);
}

// Echelon reduction of m by unimodular row operations mirrored in u.
// Returns the number of nonzero rows.
int row_reduce(Matrix& m, Matrix& u) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i) {
        if (m[i][col] != 0 && (best < 0 || std::labs(m[i][col]) < std::labs(m[best][col]))) best = i;
      }
      if (best < 0) break;
      std::swap(m[r], m[best]);
      std::swap(u[r], u[best]);
      bool others = false;
      for (int i = r + 1; i < rows; ++i) {
        if (m[i][col] == 0) continue;
        axpy(m, u, i, r, m[i][col] / m[r][col]);
        if (m[i][col] != 0) others = true;
      }
      if (!others) {
        ++r;
        break;
      }
    }
  }
  return r;
}

}  // namespace

Homology::Homology(const CombMap& map) {
  const Cells c = cells(map);
  const int n = map.n_darts();
  tree_.assign(n, 0);
  // Breadth-first spanning tree on vertices.
  std::vector<char> seen(c.n_vertices(), 0);
  std::deque<int> queue{c.vertex(map.root())};
  seen[queue.front()] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (Dart d : c.vertices[v]) {
      const int u = c.vertex(map.alpha(d));
      if (seen[u]) continue;
      seen[u] = 1;
      tree_[d - 1] = tree_[map.alpha(d) - 1] = 1;
      queue.push_back(u);
    }
  }
  // Chords indexed by their smaller dart, which is the positive orientation.
  std::vector<int> chord_of(n, -1);
  int chords = 0;
  for (Dart d = 1; d <= n; ++d) {
    if (!tree_[d - 1] && d < map.alpha(d)) chord_of[d - 1] = chords++;
  }
  auto chord_sign = [&](Dart d, int* idx) {
    const Dart a = map.alpha(d);
    if (chord_of[d - 1] >= 0) {
      *idx = chord_of[d - 1];
      return 1;
    }
    *idx = chord_of[a - 1];
    return -1;
  };
  Matrix b(chords, std::vector<long>(c.n_faces(), 0));
  for (int f = 0; f < c.n_faces(); ++f) {
    for (Dart d : c.faces[f]) {
      if (tree_[d - 1]) continue;
      int idx = 0;
      const int s = chord_sign(d, &idx);
      b[idx][f] += s;
    }
  }
  Matrix u(chords, std::vector<long>(chords, 0));
  for (int i = 0; i < chords; ++i) u[i][i] = 1;
  const int r = row_reduce(b, u);
  rank_ = chords - r;
  const int genus = (2 - (c.n_vertices() - n / 2 + c.n_faces())) / 2;
  if (rank_ != 2 * genus) throw MapError("homology: rank does not match Euler data");
  dart_vec_.assign(n, HomologyVector(rank_, 0));
  for (Dart d = 1; d <= n; ++d) {
    if (tree_[d - 1]) continue;
    int idx = 0;
    const int s = chord_sign(d, &idx);
    for (int k = 0; k < rank_; ++k) dart_vec_[d - 1][k] = s * u[r + k][idx];
  }
}

HomologyVector Homology::class_of(const Walk& w) const {
  HomologyVector v(rank_, 0);
  for (Dart d : w) {
    const auto& dv = dart_vec_[d - 1];
    for (int k = 0; k < rank_; ++k) v[k] += dv[k];
  }
  return v;
}

bool Homology::is_zero(const HomologyVector& v) {
  for (long x : v)
    if (x != 0) return false;
  return true;
}

HomologyVector operator+(const HomologyVector& a, const HomologyVector& b) {
  HomologyVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace trisurf
