#include "rtorsion/perm_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <stdexcept>

namespace rt {

namespace {

constexpr int kMaxOrder = 20000;
constexpr int kMaxTable = 2048;

}  // namespace

Perm parse_permutation(std::string_view text, int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  std::vector<bool> seen(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("malformed cycle notation: " + std::string(text));
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= text.size()) throw std::invalid_argument("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("malformed cycle notation: " + std::string(text));
      const int point = std::stoi(std::string(text.substr(start, pos - start)));
      if (point < 1 || point > degree)
        throw std::invalid_argument("point " + std::to_string(point) + " outside degree " + std::to_string(degree));
      if (seen[point - 1]) throw std::invalid_argument("point repeated in cycle notation: " + std::string(text));
      seen[point - 1] = true;
      cycle.push_back(point - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return p;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::string name)
    : name_(std::move(name)), degree_(degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
  Perm id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) throw std::invalid_argument("generator has wrong degree");
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != id) throw std::invalid_argument("generator is not a permutation");
  }
  // Closure by breadth-first search on right multiplication by generators.
  std::map<Perm, int> seen{{id, 0}};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Perm y = compose(x, g);
      if (seen.emplace(y, 0).second) {
        if (static_cast<int>(seen.size()) > kMaxOrder) throw std::invalid_argument("group too large to enumerate");
        queue.push_back(std::move(y));
      }
    }
  }
  elements_.reserve(seen.size());
  for (const auto& [p, unused] : seen) elements_.push_back(p);

  const int n = order();
  if (n <= kMaxTable) {
    table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) table_[static_cast<std::size_t>(a) * n + b] = lookup(compose(elements_[a], elements_[b]));
  }
  inv_.resize(n);
  for (int a = 0; a < n; ++a) inv_[a] = lookup(invert(elements_[a]));
  for (const auto& g : generators) gens_.push_back(lookup(g));

  class_of_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    std::vector<int> cls;
    for (int g = 0; g < n; ++g) cls.push_back(conj(g, a));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (int x : cls) class_of_[x] = static_cast<int>(classes_.size());
    classes_.push_back(std::move(cls));
  }
}

int PermGroup::lookup(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

int PermGroup::index_of(const Perm& p) const {
  if (static_cast<int>(p.size()) != degree_) throw std::invalid_argument("permutation has wrong degree");
  const int i = lookup(p);
  if (i < 0) throw std::invalid_argument("permutation " + cycle_string(p) + " is not in the group");
  return i;
}

int PermGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  return lookup(compose(elements_[a], elements_[b]));
}

int PermGroup::pow(int a, long k) const {
  if (k < 0) return pow(inv(a), -k);
  int r = identity(), base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int PermGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::vector<int> PermGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < order(); ++a) {
    bool central = true;
    for (int g : gens_)
      if (mul(a, g) != mul(g, a)) {
        central = false;
        break;
      }
    if (central) z.push_back(a);
  }
  return z;
}

bool PermGroup::generates(const std::vector<int>& elems) const {
  std::vector<bool> in(order(), false);
  std::vector<int> members{identity()};
  in[identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int g : elems) {
      const int y = mul(members[i], g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  return static_cast<int>(members.size()) == order();
}

PermGroup alternating_group(int n) {
  if (n < 1) throw std::invalid_argument("alternating group needs n >= 1");
  std::vector<Perm> gens;
  // 3-cycles (1 2 k) generate A_n.
  for (int k = 3; k <= n; ++k) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    p[0] = 1;
    p[1] = k - 1;
    p[k - 1] = 0;
    gens.push_back(p);
  }
  return PermGroup(n, gens, "A" + std::to_string(n));
}

PermGroup symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric group needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm cycle(n), swap(n);
    for (int i = 0; i < n; ++i) {
      cycle[i] = (i + 1) % n;
      swap[i] = i;
    }
    std::swap(swap[0], swap[1]);
    gens = {cycle, swap};
  }
  return PermGroup(n, gens, "S" + std::to_string(n));
}

PermGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
  Perm cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return PermGroup(n, {cycle}, "C" + std::to_string(n));
}

PermGroup dihedral_group(int n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  Perm rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return PermGroup(n, {rot, ref}, "D" + std::to_string(n));
}

PermGroup trivial_group() { return PermGroup(1, {}, "trivial"); }

PermGroup named_group(const std::string& name) {
  if (name == "trivial" || name == "1") return trivial_group();
  if (name.size() >= 2 && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    const int n = std::stoi(name.substr(1));
    switch (name[0]) {
      case 'A': return alternating_group(n);
      case 'S': return symmetric_group(n);
      case 'C': return cyclic_group(n);
      case 'D': return dihedral_group(n);
      default: break;
    }
  }
  throw std::invalid_argument("unknown group name: " + name);
}

PermGroup group_from_json(const nlohmann::json& j) {
  const int degree = j.at("degree").get<int>();
  std::vector<Perm> gens;
  for (const auto& g : j.at("generators")) gens.push_back(parse_permutation(g.get<std::string>(), degree));
  return PermGroup(degree, gens, j.value("name", std::string()));
}

PermGroup load_group(const std::string& name_or_path) {
  std::ifstream in(name_or_path);
  if (!in) return named_group(name_or_path);
  return group_from_json(nlohmann::json::parse(in));
}

}  // namespace rt
