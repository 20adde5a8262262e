#include "rtorsion/presentation.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rt {

GroupWord GroupWord::power(int gen, long k) {
  GroupWord w;
  const int e = k < 0 ? -1 : 1;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) w.letters_.push_back({gen, e});
  return w;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
  return w;
}

GroupWord GroupWord::reduced() const {
  GroupWord w;
  for (const auto& l : letters_) {
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen && w.letters_.back().exp == -l.exp) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

GroupWord GroupWord::pow(long k) const {
  GroupWord base = k < 0 ? inverse() : *this;
  GroupWord w;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) w *= base;
  return w;
}

std::vector<long> GroupWord::exponent_sums(int num_generators) const {
  std::vector<long> s(num_generators, 0);
  for (const auto& l : letters_) s[l.gen] += l.exp;
  return s;
}

GroupWord& GroupWord::operator*=(const GroupWord& o) {
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

std::string GroupWord::str(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const long k = static_cast<long>(j - i) * letters_[i].exp;
    if (!out.empty()) out += ' ';
    out += names.at(letters_[i].gen);
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out.empty() ? "1" : out;
}

FinitePresentation::FinitePresentation(std::vector<std::string> generators, std::vector<GroupWord> relators)
    : gens_(std::move(generators)) {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] == gens_[j]) throw std::invalid_argument("duplicate generator " + gens_[i]);
  for (auto& r : relators) add_relator(std::move(r));
}

FinitePresentation FinitePresentation::parse(std::vector<std::string> generators,
                                             const std::vector<std::string>& relators) {
  FinitePresentation p(std::move(generators), {});
  for (const auto& r : relators) p.add_relator(p.parse_word(r));
  return p;
}

int FinitePresentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

GroupWord FinitePresentation::parse_word(std::string_view text) const {
  GroupWord w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    long k = 1;
    std::string name = token;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      const std::string e = token.substr(caret + 1);
      std::size_t used = 0;
      try {
        k = std::stol(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != e.size()) throw std::invalid_argument("malformed exponent in '" + token + "'");
    }
    w *= GroupWord::power(index_of(name), k);
  }
  return w;
}

void FinitePresentation::add_relator(GroupWord w) {
  for (const auto& l : w.letters()) {
    if (l.gen < 0 || l.gen >= num_generators()) throw std::invalid_argument("relator uses an undeclared generator");
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("letters must have exponent +-1");
  }
  rels_.push_back(std::move(w));
}

FinitePresentation FinitePresentation::without_relator(int k) const {
  FinitePresentation p = *this;
  p.rels_.erase(p.rels_.begin() + k);
  return p;
}

Matrix<Integer> FinitePresentation::relation_matrix() const {
  Matrix<Integer> m = Matrix<Integer>::Zero(num_relators(), num_generators());
  for (int i = 0; i < num_relators(); ++i) {
    const auto s = rels_[i].exponent_sums(num_generators());
    for (int j = 0; j < num_generators(); ++j) m(i, j) = s[j];
  }
  return m;
}

std::vector<Integer> FinitePresentation::abelian_invariants() const {
  std::vector<Integer> out;
  const Matrix<Integer> m = relation_matrix();
  std::vector<Integer> d;
  if (m.rows() > 0) d = smith_normal_form(m).invariants();
  for (const auto& x : d)
    if (!(x == Integer(1))) out.push_back(x);
  for (auto k = static_cast<Eigen::Index>(d.size()); k < m.cols(); ++k) out.emplace_back(0);
  return out;
}

std::vector<long> FinitePresentation::abelianization_to_Z(int positive) const {
  const Matrix<Integer> m = relation_matrix();
  const int n = num_generators();
  Matrix<Integer> right = Matrix<Integer>::Identity(n, n);
  std::vector<Integer> d;
  if (m.rows() > 0) {
    SmithForm s = smith_normal_form(m);
    right = s.right;
    d = s.invariants();
  }
  // Coordinate k of H_1 is read off column k of the right transform.
  int free = -1;
  for (int k = 0; k < n; ++k) {
    const bool is_free = k >= static_cast<int>(d.size()) || d[k].is_zero();
    if (is_free) {
      if (free >= 0) throw std::domain_error("H_1 has rank > 1");
      free = k;
    } else if (!(d[k] == Integer(1))) {
      throw std::domain_error("H_1 has torsion");
    }
  }
  if (free < 0) throw std::domain_error("H_1 is finite");
  std::vector<long> alpha(n);
  for (int j = 0; j < n; ++j) alpha[j] = right(j, free).to_long();
  if (alpha[positive] < 0)
    for (auto& a : alpha) a = -a;
  if (alpha[positive] == 0) throw std::domain_error("distinguished generator is trivial in H_1");
  return alpha;
}

std::string FinitePresentation::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? ", " : "") + gens_[i];
  out += " | ";
  for (std::size_t i = 0; i < rels_.size(); ++i) out += (i ? ", " : "") + rels_[i].str(gens_);
  return out + ">";
}

nlohmann::json encode_presentation(const FinitePresentation& p) {
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : p.relators()) rels.push_back(r.str(p.generators()));
  return {{"generators", p.generators()}, {"relators", rels}};
}

FinitePresentation decode_presentation(const nlohmann::json& j) {
  return FinitePresentation::parse(j.at("generators").get<std::vector<std::string>>(),
                                   j.value("relators", std::vector<std::string>{}));
}

}  // namespace rt
