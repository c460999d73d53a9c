#include "trisurf/schema.hpp"

#include <deque>
#include <map>

namespace trisurf {

namespace {

// Applies letter -> word images to w; letters without an image are kept.
Word substitute(const Word& w, const std::map<int, Word>& images) {
  Word out;
  for (int x : w) {
    const auto it = images.find(std::abs(x));
    if (it == images.end()) {
      out.push_back(x);
    } else if (x > 0) {
      out.insert(out.end(), it->second.begin(), it->second.end());
    } else {
      const Word inv = inverse(it->second);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

// Image for a signed letter s: s -> w.
void set_signed(std::map<int, Word>& images, int s, const Word& w) {
  images[std::abs(s)] = s > 0 ? w : inverse(w);
}

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word slice(const Word& w, std::size_t lo, std::size_t hi) { return Word(w.begin() + lo, w.begin() + hi); }

struct Normalizer {
  Word cur;
  std::vector<Word> img;  // image of each original letter

  void apply(const std::map<int, Word>& images) {
    cur = substitute(cur, images);
    for (Word& w : img) w = substitute(w, images);
  }

  void run() {
    std::size_t k = 0;  // length of the normalized prefix
    while (k < cur.size()) {
      const Word rest = slice(cur, k, cur.size());
      std::size_t i = 0, j = 0, kk = 0, l = 0;
      bool found = false;
      for (i = 0; i < rest.size() && !found; ++i) {
        kk = std::find(rest.begin() + i + 1, rest.end(), -rest[i]) - rest.begin();
        if (kk >= rest.size()) continue;
        for (j = i + 1; j < kk && !found; ++j) {
          l = std::find(rest.begin() + kk + 1, rest.end(), -rest[j]) - rest.begin();
          if (l < rest.size()) found = true;
        }
      }
      if (!found) throw MapError("schema: no interlinked pair in a reduced polygon word");
      --i;
      --j;
      const int ell = rest[i];
      const int m = rest[j];
      const Word P = slice(rest, 0, i), B = slice(rest, i + 1, j), C = slice(rest, j + 1, kk),
                 D = slice(rest, kk + 1, l), E = slice(rest, l + 1, rest.size());
      const Word M = cat({D, C, B});
      const Word Q = cat({P, M});
      std::map<int, Word> s;
      set_signed(s, ell, cat({{ell}, inverse(B)}));
      apply(s);
      s.clear();
      set_signed(s, m, cat({{m}, inverse(cat({C, B}))}));
      apply(s);
      s.clear();
      set_signed(s, ell, cat({M, {ell}}));
      apply(s);
      s.clear();
      set_signed(s, ell, cat({inverse(Q), {ell}, Q}));
      set_signed(s, m, cat({inverse(Q), {m}, Q}));
      apply(s);
      const Word expect = cat({slice(cur, 0, k), {ell, m, -ell, -m}, free_reduce(cat({P, D, C, B, E}))});
      if (cur != expect || cur.size() != k + 4 + P.size() + D.size() + C.size() + B.size() + E.size()) {
        throw MapError("schema: normalization step failed");
      }
      k += 4;
    }
    // Rename the signed letters of each commutator to a_i, b_i.
    std::map<int, Word> rename;
    for (std::size_t t = 0; t < cur.size(); t += 4) {
      const int idx = static_cast<int>(t / 4);
      set_signed(rename, cur[t], {SurfaceGroup::a(idx)});
      set_signed(rename, cur[t + 1], {SurfaceGroup::b(idx)});
    }
    // Simultaneous renaming through temporary letters avoids collisions.
    const int shift = 1000;
    std::map<int, Word> to_tmp, from_tmp;
    for (const auto& [x, w] : rename) {
      Word t = w;
      for (int& y : t) y += y > 0 ? shift : -shift;
      to_tmp[x] = t;
    }
    apply(to_tmp);
    for (int y = 1; y <= static_cast<int>(cur.size() / 2); ++y) from_tmp[y + shift] = {y};
    apply(from_tmp);
  }
};

}  // namespace

Schema::Schema(const CombMap& map) {
  require_valid(map, false);
  const Cells c = cells(map);
  const int n = map.n_darts();
  const int genus = (2 - (c.n_vertices() - n / 2 + c.n_faces())) / 2;
  group_ = SurfaceGroup(genus);

  // Depth-first spanning tree on vertices.
  std::vector<char> tree(n, 0);
  {
    std::vector<char> seen(c.n_vertices(), 0);
    std::vector<std::pair<int, std::size_t>> stack{{c.vertex(map.root()), 0}};
    seen[stack.back().first] = 1;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos == c.vertices[v].size()) {
        stack.pop_back();
        continue;
      }
      const Dart d = c.vertices[v][pos++];
      const int u = c.vertex(map.alpha(d));
      if (seen[u]) continue;
      seen[u] = 1;
      tree[d - 1] = tree[map.alpha(d) - 1] = 1;
      stack.push_back({u, 0});
    }
  }
  // Breadth-first dual tree through non-tree edges.
  const int root_face = c.face(map.root());
  std::vector<Dart> parent_dart(c.n_faces(), 0);  // dart of the face on its parent edge
  std::vector<int> order;
  std::vector<char> cotree(n, 0);
  {
    std::vector<char> seen(c.n_faces(), 0);
    std::deque<int> queue{root_face};
    seen[root_face] = 1;
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      order.push_back(f);
      for (Dart d : c.faces[f]) {
        if (tree[d - 1]) continue;
        const Dart a = map.alpha(d);
        const int h = c.face(a);
        if (seen[h]) continue;
        seen[h] = 1;
        cotree[d - 1] = cotree[a - 1] = 1;
        parent_dart[h] = a;
        queue.push_back(h);
      }
    }
  }
  // Leftover edges become letters, oriented by their smaller dart.
  std::vector<Word> xword(n);
  std::vector<char> solved(n, 0);
  int letters = 0;
  for (Dart d = 1; d <= n; ++d) {
    if (tree[d - 1]) {
      solved[d - 1] = 1;
      continue;
    }
    if (cotree[d - 1] || d > map.alpha(d)) continue;
    ++letters;
    xword[d - 1] = {letters};
    xword[map.alpha(d) - 1] = {-letters};
    solved[d - 1] = solved[map.alpha(d) - 1] = 1;
  }
  if (letters != 2 * genus) throw MapError("schema: leftover edge count does not match the genus");
  // Leaves first: each face's parent edge is its only unsolved dart.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int f = *it;
    if (f == root_face) continue;
    const auto& fd = c.faces[f];
    const Dart pd = parent_dart[f];
    const std::size_t pos = std::find(fd.begin(), fd.end(), pd) - fd.begin();
    Word w;
    for (std::size_t t = 1; t < fd.size(); ++t) {
      const Dart d = fd[(pos + t) % fd.size()];
      if (!solved[d - 1]) throw MapError("schema: dual tree order violated");
      w.insert(w.end(), xword[d - 1].begin(), xword[d - 1].end());
    }
    xword[pd - 1] = free_reduce(inverse(w));
    xword[map.alpha(pd) - 1] = inverse(xword[pd - 1]);
    solved[pd - 1] = solved[map.alpha(pd) - 1] = 1;
  }
  Word root_word;
  for (Dart d : c.faces[root_face]) root_word.insert(root_word.end(), xword[d - 1].begin(), xword[d - 1].end());
  raw_relator_ = cyclic_reduce(root_word);
  if (static_cast<int>(raw_relator_.size()) != 4 * genus) throw MapError("schema: polygon word has wrong length");

  Normalizer norm;
  norm.cur = raw_relator_;
  for (int x = 1; x <= letters; ++x) norm.img.push_back({x});
  norm.run();
  if (norm.cur != group_.relator()) throw MapError("schema: relator normalization failed");

  dart_word_.assign(n, {});
  for (Dart d = 1; d <= n; ++d) {
    Word w;
    for (int x : xword[d - 1]) {
      const Word& im = norm.img[std::abs(x) - 1];
      if (x > 0) {
        w.insert(w.end(), im.begin(), im.end());
      } else {
        const Word inv = inverse(im);
        w.insert(w.end(), inv.begin(), inv.end());
      }
    }
    dart_word_[d - 1] = free_reduce(w);
  }
}

Word Schema::word_of(const Walk& w) const {
  Word out;
  for (Dart d : w) out.insert(out.end(), dart_word_[d - 1].begin(), dart_word_[d - 1].end());
  return free_reduce(out);
}

}  // namespace trisurf
