// Finite permutation groups given by generators.
//
// Elements are enumerated once and sorted lexicographically by image arrays,
// so an element is identified with its index and index order is the element
// order used for canonical forms.  Index 0 is the identity.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace rt {

/// 0-based image array: p[i] is the image of point i.
using Perm = std::vector<int>;

/// Parses cycle notation with 1-based points, e.g. "(1 2 3)(4 5)" or "()".
Perm parse_permutation(std::string_view text, int degree);
/// Cycle notation with 1-based points; the identity prints as "()".
std::string cycle_string(const Perm& p);
/// (a * b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
Perm invert(const Perm& p);

class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(int degree, std::vector<Perm> generators, std::string name = "");

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Perm& element(int i) const { return elements_[i]; }
  /// Indices of the defining generators.
  const std::vector<int>& generators() const { return gens_; }
  /// Throws std::invalid_argument when p is not in the group.
  int index_of(const Perm& p) const;
  int parse(std::string_view cycles) const { return index_of(parse_permutation(cycles, degree_)); }
  std::string str(int a) const { return cycle_string(elements_[a]); }

  static constexpr int identity() { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long k) const;
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }
  int element_order(int a) const;

  /// Classes ordered by representative; each class sorted, representative first.
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int a) const { return class_of_[a]; }
  int class_representative(int a) const { return classes_[class_of_[a]].front(); }
  std::vector<int> center() const;
  bool generates(const std::vector<int>& elems) const;

 private:
  int lookup(const Perm& p) const;

  std::string name_;
  int degree_;
  std::vector<Perm> elements_;
  std::vector<int> gens_;
  std::vector<int> inv_;
  std::vector<int> table_;  // |G|^2 products when small enough
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

PermGroup alternating_group(int n);
PermGroup symmetric_group(int n);
PermGroup cyclic_group(int n);
PermGroup dihedral_group(int n);
PermGroup trivial_group();

/// Built-in names: A<n>, S<n>, C<n>, D<n>, trivial.
PermGroup named_group(const std::string& name);
/// {"name": ..., "degree": n, "generators": ["(1 2 3)", ...]}.
PermGroup group_from_json(const nlohmann::json& j);
/// A built-in name, or a path to a group file.
PermGroup load_group(const std::string& name_or_path);

}  // namespace rt
