// Words and finite presentations.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rtorsion/matrix.hpp"

namespace rt {

struct Letter {
  int gen;
  int exp;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  /// g^k as |k| letters.
  static GroupWord power(int gen, long k);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  GroupWord inverse() const;
  GroupWord reduced() const;
  GroupWord pow(long k) const;
  /// Exponent sum of each generator.
  std::vector<long> exponent_sums(int num_generators) const;

  GroupWord& operator*=(const GroupWord& o);
  friend GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<Letter> letters_;
};

class FinitePresentation {
 public:
  FinitePresentation() = default;
  FinitePresentation(std::vector<std::string> generators, std::vector<GroupWord> relators);
  /// Relators in the syntax "x y1 x^-1 y1^-1"; "x^3" expands to three letters.
  static FinitePresentation parse(std::vector<std::string> generators, const std::vector<std::string>& relators);

  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<GroupWord>& relators() const { return rels_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  int num_relators() const { return static_cast<int>(rels_.size()); }
  /// Throws std::invalid_argument for an unknown name.
  int index_of(std::string_view name) const;
  GroupWord parse_word(std::string_view text) const;

  void add_relator(GroupWord w);
  FinitePresentation without_relator(int k) const;

  /// Exponent-sum matrix, one row per relator.
  Matrix<Integer> relation_matrix() const;
  /// Invariant factors of H_1 (0 entries are free Z summands), ones removed.
  std::vector<Integer> abelian_invariants() const;

  /// Images of the generators under H_1 -> Z; throws std::domain_error
  /// unless H_1 is infinite cyclic.  Signs are fixed by `positive`, which
  /// must map to a positive integer.
  std::vector<long> abelianization_to_Z(int positive = 0) const;

  std::string str() const;

 private:
  std::vector<std::string> gens_;
  std::vector<GroupWord> rels_;
};

nlohmann::json encode_presentation(const FinitePresentation& p);
/// {"generators": [...], "relators": ["x y x^-1 y^-1", ...]}.
FinitePresentation decode_presentation(const nlohmann::json& j);

}  // namespace rt
