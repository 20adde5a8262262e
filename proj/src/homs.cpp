#include "rtorsion/homs.hpp"

#include <algorithm>
#include <set>

namespace rt {

int evaluate_word(const PermGroup& g, const std::vector<int>& images, const GroupWord& w) {
  int x = PermGroup::identity();
  for (const auto& l : w.letters()) x = g.mul(x, l.exp > 0 ? images[l.gen] : g.inv(images[l.gen]));
  return x;
}

std::vector<int> orbit_representative(const std::vector<int>& tuple, const PermGroup& g) {
  std::vector<int> best = tuple, cand(tuple.size());
  for (int c = 0; c < g.order(); ++c) {
    const int ci = g.inv(c);
    bool smaller = false, decided = false;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      cand[i] = g.mul(g.mul(c, tuple[i]), ci);
      if (!decided && cand[i] != best[i]) {
        smaller = cand[i] < best[i];
        decided = true;
        if (!smaller) break;
      }
    }
    if (smaller) best = cand;
  }
  return best;
}

bool is_homomorphism(const FinitePresentation& p, const PermGroup& g, const std::vector<int>& images) {
  for (const auto& r : p.relators())
    if (evaluate_word(g, images, r) != PermGroup::identity()) return false;
  return true;
}

SurjectionSearch meridian_search(const PermGroup& g) {
  SurjectionSearch s;
  s.use_common_classes = true;
  for (int c = 0; c < static_cast<int>(g.conjugacy_classes().size()); ++c) s.common_classes.push_back(c);
  return s;
}

namespace {

class Search {
 public:
  Search(const FinitePresentation& p, const PermGroup& g) : p_(p), g_(g) {}

  void run(std::vector<int> images, const std::vector<std::vector<char>>& allowed) {
    allowed_ = &allowed;
    if (!propagate(images)) return;
    descend(images);
  }

  std::vector<HomClass> results() const {
    std::vector<HomClass> out;
    for (const auto& r : found_) out.push_back(HomClass{r, true, {}});
    return out;
  }

 private:
  // Deduces generators occurring exactly once in a relator whose other
  // letters are all assigned; false on a contradiction.
  bool propagate(std::vector<int>& images) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : p_.relators()) {
        const auto& letters = r.letters();
        int unknown = -1, count = 0;
        std::size_t where = 0;
        bool several = false;
        for (std::size_t i = 0; i < letters.size(); ++i) {
          if (images[letters[i].gen] >= 0) continue;
          if (unknown >= 0 && letters[i].gen != unknown) several = true;
          unknown = letters[i].gen;
          where = i;
          ++count;
        }
        if (several) continue;
        if (unknown < 0) {
          if (evaluate_word(g_, images, r) != PermGroup::identity()) return false;
          continue;
        }
        if (count != 1) continue;
        int u = PermGroup::identity(), v = PermGroup::identity();
        for (std::size_t i = 0; i < where; ++i) {
          const int x = images[letters[i].gen];
          u = g_.mul(u, letters[i].exp > 0 ? x : g_.inv(x));
        }
        for (std::size_t i = where + 1; i < letters.size(); ++i) {
          const int x = images[letters[i].gen];
          v = g_.mul(v, letters[i].exp > 0 ? x : g_.inv(x));
        }
        // u x^e v = 1  =>  x^e = u^-1 v^-1
        int x = g_.mul(g_.inv(u), g_.inv(v));
        if (letters[where].exp < 0) x = g_.inv(x);
        if (!(*allowed_)[unknown][x]) return false;
        images[unknown] = x;
        changed = true;
      }
    }
    return true;
  }

  int choose(const std::vector<int>& images) const {
    int best = -1, best_score = -1;
    for (int k = 0; k < p_.num_generators(); ++k) {
      if (images[k] >= 0) continue;
      int score = 0;
      for (const auto& r : p_.relators()) {
        bool uses = false, touches = false;
        for (const auto& l : r.letters()) {
          if (l.gen == k) uses = true;
          else if (images[l.gen] >= 0) touches = true;
        }
        if (uses && touches) ++score;
      }
      if (score > best_score) {
        best = k;
        best_score = score;
      }
    }
    return best;
  }

  void descend(const std::vector<int>& images) {
    const int k = choose(images);
    if (k < 0) {
      if (g_.generates(images)) found_.insert(orbit_representative(images, g_));
      return;
    }
    for (int x = 0; x < g_.order(); ++x) {
      if (!(*allowed_)[k][x]) continue;
      std::vector<int> next = images;
      next[k] = x;
      if (propagate(next)) descend(next);
    }
  }

  const FinitePresentation& p_;
  const PermGroup& g_;
  const std::vector<std::vector<char>>* allowed_ = nullptr;
  std::set<std::vector<int>> found_;
};

}  // namespace

std::vector<HomClass> enumerate_surjections(const FinitePresentation& p, const PermGroup& g,
                                            const SurjectionSearch& search) {
  const int n = p.num_generators();
  const int num_classes = static_cast<int>(g.conjugacy_classes().size());
  if (n == 0) {
    if (g.order() == 1) return {HomClass{}};
    return {};
  }
  auto mask_of = [&](const std::vector<int>& classes) {
    std::vector<char> mask(g.order(), classes.empty() ? 1 : 0);
    for (int c : classes) {
      if (c < 0 || c >= num_classes) throw std::invalid_argument("conjugacy class index out of range");
      for (int x : g.conjugacy_classes()[c]) mask[x] = 1;
    }
    return mask;
  };

  Search s(p, g);
  std::vector<std::vector<char>> allowed(n);
  if (search.use_common_classes) {
    for (int c : search.common_classes) {
      const auto mask = mask_of({c});
      std::fill(allowed.begin(), allowed.end(), mask);
      std::vector<int> images(n, -1);
      images[0] = g.conjugacy_classes()[c].front();
      s.run(images, allowed);
    }
  } else {
    for (int k = 0; k < n; ++k)
      allowed[k] = mask_of(k < static_cast<int>(search.allowed_classes.size()) ? search.allowed_classes[k]
                                                                               : std::vector<int>{});
    // Gauge fixing: generator 0 ranges over class representatives only.
    for (int c = 0; c < num_classes; ++c) {
      const int rep = g.conjugacy_classes()[c].front();
      if (!allowed[0][rep]) continue;
      std::vector<int> images(n, -1);
      images[0] = rep;
      s.run(images, allowed);
    }
  }
  return s.results();
}

std::vector<HomClass> enumerate_surjections_naive(const FinitePresentation& p, const PermGroup& g) {
  const int n = p.num_generators();
  std::set<std::vector<int>> found;
  std::vector<int> images(n, 0);
  for (;;) {
    if (is_homomorphism(p, g, images) && g.generates(images)) found.insert(orbit_representative(images, g));
    int k = 0;
    while (k < n && ++images[k] == g.order()) images[k++] = 0;
    if (k == n) break;
  }
  std::vector<HomClass> out;
  for (const auto& r : found) out.push_back(HomClass{r, true, {}});
  return out;
}

}  // namespace rt
