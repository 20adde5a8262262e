#include <algorithm>
#include "rtorsion/knot.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace rt {

namespace {

struct Passage {
  std::size_t crossing;
  int entry;  // position 0..3 at which the strand enters
};

// Occurrences of each label as (crossing, position).
std::map<long, std::vector<std::pair<std::size_t, int>>> incidences(const PDCode& d) {
  std::map<long, std::vector<std::pair<std::size_t, int>>> occ;
  for (std::size_t c = 0; c < d.size(); ++c)
    for (int k = 0; k < 4; ++k) occ[d.crossings[c][k]].emplace_back(c, k);
  return occ;
}

// Walks the knot from the under-strand entry of crossing 0; returns the
// passages in order (2 per crossing).
std::vector<Passage> traverse(const PDCode& d) {
  const auto occ = incidences(d);
  for (const auto& [label, where] : occ)
    if (where.size() != 2)
      throw std::invalid_argument("edge label " + std::to_string(label) + " occurs " + std::to_string(where.size()) +
                                  " times (expected 2)");
  std::vector<Passage> path;
  std::vector<std::array<bool, 4>> used(d.size(), {false, false, false, false});
  std::size_t c = 0;
  int entry = 0;
  for (;;) {
    if (entry == 2) throw std::invalid_argument("inconsistent orientation: under strand entered against its direction");
    if (used[c][entry]) break;
    const int exit = (entry + 2) % 4;
    if (used[c][exit]) throw std::invalid_argument("inconsistent orientation at crossing " + std::to_string(c + 1));
    used[c][entry] = used[c][exit] = true;
    path.push_back({c, entry});
    const auto& where = occ.at(d.crossings[c][exit]);
    const auto next = where[0] == std::make_pair(c, exit) ? where[1] : where[0];
    c = next.first;
    entry = next.second;
  }
  if (c != 0 || entry != 0) throw std::invalid_argument("inconsistent orientation: traversal does not close up");
  if (path.size() != 2 * d.size()) throw std::invalid_argument("multi-component diagram (links are not supported)");
  return path;
}

int find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return static_cast<int>(x);
}

}  // namespace

PDCode parse_pd(std::string_view text) {
  static const std::regex crossing_re(R"([Xx]?\s*[\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]])");
  PDCode d;
  std::string rest;
  const std::string s(text);
  auto begin = std::sregex_iterator(s.begin(), s.end(), crossing_re);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    rest += s.substr(last, it->position() - last);
    last = it->position() + it->length();
    std::array<long, 4> x{};
    for (int k = 0; k < 4; ++k) x[k] = std::stol((*it)[k + 1].str());
    d.crossings.push_back(x);
  }
  rest += s.substr(last);
  for (char ch : rest)
    if (!std::isspace(static_cast<unsigned char>(ch)) && std::string_view(",[]()PD").find(ch) == std::string_view::npos)
      throw std::invalid_argument("malformed PD code near '" + std::string(1, ch) + "'");
  if (d.crossings.empty()) throw std::invalid_argument("empty PD code");
  validate_pd(d);
  return d;
}

PDCode pd_from_json(const nlohmann::json& j) {
  PDCode d;
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 4) throw std::invalid_argument("PD crossing must have 4 labels: " + x.dump());
    d.crossings.push_back({x[0].get<long>(), x[1].get<long>(), x[2].get<long>(), x[3].get<long>()});
  }
  if (d.crossings.empty()) throw std::invalid_argument("empty PD code");
  validate_pd(d);
  return d;
}

void validate_pd(const PDCode& d) { traverse(d); }

std::vector<int> crossing_signs(const PDCode& d) {
  std::vector<int> sign(d.size(), 0);
  for (const auto& p : traverse(d))
    if (p.entry == 1) sign[p.crossing] = -1;
    else if (p.entry == 3) sign[p.crossing] = 1;
  return sign;
}

int writhe(const PDCode& d) {
  const auto s = crossing_signs(d);
  return std::accumulate(s.begin(), s.end(), 0);
}

MarkedPresentation wirtinger(const PDCode& d, bool mirror, std::string name) {
  const auto path = traverse(d);
  const auto signs = crossing_signs(d);
  const int orient = mirror ? -1 : 1;

  // Edges are merged into arcs through over-crossings.
  std::map<long, std::size_t> edge_id;
  for (const auto& x : d.crossings)
    for (long e : x) edge_id.emplace(e, edge_id.size());
  std::vector<std::size_t> parent(edge_id.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& x : d.crossings) parent[find(parent, edge_id[x[1]])] = find(parent, edge_id[x[3]]);

  // Number arcs by first appearance along the knot, starting with the
  // outgoing under-edge of crossing 0.
  std::map<int, int> arc_of_root;
  auto arc = [&](long edge) {
    const int root = find(parent, edge_id.at(edge));
    auto [it, inserted] = arc_of_root.emplace(root, static_cast<int>(arc_of_root.size()));
    return it->second;
  };
  arc(d.crossings[0][2]);
  for (const auto& p : path) {
    const auto& x = d.crossings[p.crossing];
    if (p.entry == 0) arc(x[2]);
  }
  const int n = static_cast<int>(arc_of_root.size());
  if (n != static_cast<int>(d.size())) throw std::invalid_argument("diagram has a crossing without a genuine under-pass");

  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back("x" + std::to_string(k + 1));
  FinitePresentation pres(names, {});
  for (std::size_t c = 0; c < d.size(); ++c) {
    const auto& x = d.crossings[c];
    const int in = arc(x[0]), out = arc(x[2]), over = arc(x[1]);
    const int e = orient * signs[c];
    // x_out = over^-e x_in over^e
    GroupWord r = GroupWord::power(out, -1) * GroupWord::power(over, -e) * GroupWord::power(in, 1) *
                  GroupWord::power(over, e);
    pres.add_relator(r);
  }

  // Longitude: over-arcs met along the knot, corrected to linking number 0.
  // Read from arc x1 onwards, so crossing 0 (which starts x1) comes last.
  std::vector<std::size_t> unders;
  for (const auto& p : path)
    if (p.entry == 0) unders.push_back(p.crossing);
  const auto first = std::find(unders.begin(), unders.end(), std::size_t{0});
  std::rotate(unders.begin(), std::next(first), unders.end());
  GroupWord lambda;
  int w = 0;
  for (std::size_t c : unders) {
    const int e = orient * signs[c];
    lambda *= GroupWord::power(arc(d.crossings[c][1]), e);
    w += e;
  }
  lambda *= GroupWord::power(0, -w);

  MarkedPresentation m;
  m.name = std::move(name);
  m.presentation = std::move(pres);
  m.meridian = 0;
  m.longitude = lambda.reduced();
  m.orientation = orient;
  m.conjugate_generators = true;
  return m;
}

MarkedPresentation unknot() {
  MarkedPresentation m;
  m.name = "unknot";
  m.presentation = FinitePresentation({"a"}, {});
  m.conjugate_generators = true;
  return m;
}

MarkedPresentation knot_from_json(const nlohmann::json& j) {
  const std::string name = j.value("name", std::string());
  if (j.contains("pd")) {
    const auto& pd = j.at("pd");
    PDCode d = pd.is_string() ? parse_pd(pd.get<std::string>()) : pd_from_json(pd);
    return wirtinger(d, j.value("mirror", false), name);
  }
  if (!j.contains("presentation")) throw std::invalid_argument("knot file needs 'pd' or 'presentation'");
  MarkedPresentation m;
  m.name = name;
  m.presentation = decode_presentation(j.at("presentation"));
  m.meridian = m.presentation.index_of(j.at("meridian").get<std::string>());
  m.longitude = m.presentation.parse_word(j.value("longitude", std::string()));
  const auto alpha = m.presentation.abelianization_to_Z(m.meridian);
  const auto sums = m.longitude.exponent_sums(m.presentation.num_generators());
  long degree = 0;
  for (std::size_t k = 0; k < sums.size(); ++k) degree += sums[k] * alpha[k];
  if (degree != 0) throw std::invalid_argument("longitude is not null-homologous");
  m.conjugate_generators = j.value("conjugate_generators", false);
  return m;
}

MarkedPresentation load_knot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open knot file " + path);
  return knot_from_json(nlohmann::json::parse(in));
}

}  // namespace rt
