#include "trisurf/surface_group.hpp"

#include <algorithm>

#include "trisurf/errors.hpp"

namespace trisurf {

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + lo, r.begin() + hi);
}

bool is_rotation_of(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  Word doubled = a;
  doubled.insert(doubled.end(), a.begin(), a.end());
  return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
}

namespace {
long pair_key(int x, int y) { return static_cast<long>(x) * 4096 + y; }
}  // namespace

SurfaceGroup::SurfaceGroup(int genus) : genus_(genus) {
  if (genus < 0) throw DomainError("SurfaceGroup: negative genus");
  for (int k = 0; k < genus; ++k) {
    relator_.insert(relator_.end(), {a(k), b(k), -a(k), -b(k)});
  }
  cyclic_[0] = relator_;
  cyclic_[1] = inverse(relator_);
  const int n = static_cast<int>(relator_.size());
  for (int s = 0; s < 2 && n >= 2; ++s) {
    for (int i = 0; i < n; ++i) {
      pair_index_[pair_key(cyclic_[s][i], cyclic_[s][(i + 1) % n])] = {s, i};
    }
  }
}

int SurfaceGroup::match_at(const Word& w, std::size_t i, bool wrap, Word* complement) const {
  const std::size_t len = w.size();
  const int n = static_cast<int>(relator_.size());
  auto at = [&](std::size_t k) { return w[wrap ? k % len : k]; };
  const std::size_t limit = wrap ? std::min<std::size_t>(len, n) : std::min<std::size_t>(len - i, n);
  if (limit < 2) return static_cast<int>(limit);
  const auto it = pair_index_.find(pair_key(at(i), at(i + 1)));
  if (it == pair_index_.end()) return 1;
  const auto [s, off] = it->second;
  const Word& c = cyclic_[s];
  std::size_t m = 2;
  while (m < limit && at(i + m) == c[(off + m) % n]) ++m;
  if (complement) {
    complement->clear();
    for (int k = static_cast<int>(m); k < n; ++k) complement->push_back(c[(off + k) % n]);
  }
  return static_cast<int>(m);
}

Word SurfaceGroup::dehn_reduce(const Word& input) const {
  if (genus_ < 2) throw DomainError("Dehn reduction requires genus >= 2");
  const int half = 2 * genus_;
  Word w = free_reduce(input);
  Word comp;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + half < w.size(); ++i) {
      const int m = match_at(w, i, false, &comp);
      if (m <= half) continue;
      Word next(w.begin(), w.begin() + i);
      const Word rep = inverse(comp);
      next.insert(next.end(), rep.begin(), rep.end());
      next.insert(next.end(), w.begin() + i + m, w.end());
      w = free_reduce(next);
      changed = true;
      break;
    }
  }
  return w;
}

Word SurfaceGroup::dehn_reduce_cyclic(const Word& input) const {
  if (genus_ < 2) throw DomainError("Dehn reduction requires genus >= 2");
  const int half = 2 * genus_;
  Word w = cyclic_reduce(input);
  Word comp;
  bool changed = true;
  while (changed) {
    changed = false;
    if (static_cast<int>(w.size()) <= half) break;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int m = match_at(w, i, true, &comp);
      if (m <= half) continue;
      // Rotate the match to the front, then replace it.
      Word rot(w.begin() + i, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + i);
      Word next = inverse(comp);
      next.insert(next.end(), rot.begin() + m, rot.end());
      w = cyclic_reduce(next);
      changed = true;
      break;
    }
  }
  return w;
}

std::vector<long> SurfaceGroup::abelianize(const Word& w) const {
  std::vector<long> v(2 * genus_, 0);
  for (int x : w) {
    const int g = std::abs(x);
    if (g < 1 || g > 2 * genus_) throw DomainError("abelianize: letter outside the alphabet");
    v[g - 1] += x > 0 ? 1 : -1;
  }
  return v;
}

bool SurfaceGroup::is_trivial(const Word& w) const {
  if (genus_ == 0) return true;
  if (genus_ == 1) {
    for (long x : abelianize(w))
      if (x != 0) return false;
    return true;
  }
  return dehn_reduce(w).empty();
}

bool SurfaceGroup::are_conjugate(const Word& u, const Word& v) const {
  if (genus_ == 0) return true;
  if (abelianize(u) != abelianize(v)) return false;
  if (genus_ == 1) return true;
  const Word cu = dehn_reduce_cyclic(u);
  const Word cv = dehn_reduce_cyclic(v);
  if (cu.empty() || cv.empty()) return cu.empty() && cv.empty();
  if (is_rotation_of(cu, cv)) return true;
  std::vector<Word> conjugators{Word{}};
  for (int x = 1; x <= 2 * genus_; ++x) {
    conjugators.push_back({x});
    conjugators.push_back({-x});
  }
  for (std::size_t i = 0; i < cu.size(); ++i) {
    Word ru(cu.begin() + i, cu.end());
    ru.insert(ru.end(), cu.begin(), cu.begin() + i);
    for (std::size_t j = 0; j < cv.size(); ++j) {
      Word rv(cv.begin() + j, cv.end());
      rv.insert(rv.end(), cv.begin(), cv.begin() + j);
      const Word rv_inv = inverse(rv);
      for (const Word& z : conjugators) {
        Word t = inverse(z);
        t.insert(t.end(), ru.begin(), ru.end());
        t.insert(t.end(), z.begin(), z.end());
        t.insert(t.end(), rv_inv.begin(), rv_inv.end());
        if (dehn_reduce(t).empty()) return true;
      }
    }
  }
  return false;
}

}  // namespace trisurf
