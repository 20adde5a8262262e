// Linear representations of permutation groups over Q(zeta).
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "rtorsion/matrix.hpp"
#include "rtorsion/perm_group.hpp"
#include "rtorsion/torsion_value.hpp"

namespace rt {

class Representation {
 public:
  Representation() = default;
  /// Extends the generator images multiplicatively; throws std::invalid_argument
  /// if the result is not a homomorphism.  The dimension is only needed when
  /// the group has no generators.
  Representation(const PermGroup& g, const std::vector<Matrix<Cyclotomic>>& generator_images, std::string name = "",
                 int dimension = -1);

  const std::string& name() const { return name_; }
  int dimension() const { return dim_; }
  int group_order() const { return static_cast<int>(mats_.size()); }
  const Matrix<Cyclotomic>& operator()(int element) const { return mats_.at(element); }

  /// Distinct determinants of the image (a finite group of roots of unity).
  const std::vector<Cyclotomic>& determinants() const { return dets_; }
  /// P phi P^-1.
  Representation conjugated(const Matrix<Cyclotomic>& p) const;

 private:
  std::string name_;
  int dim_ = 0;
  std::vector<Matrix<Cyclotomic>> mats_;
  std::vector<Cyclotomic> dets_;
};

/// Permutation action on e_1 - e_n, ..., e_{n-1} - e_n (dimension n - 1).
Matrix<Integer> standard_matrix(const Perm& p);
Matrix<Integer> permutation_matrix(const Perm& p);
/// The standard representation of a subgroup of S_5; throws unless degree 5.
Matrix<Integer> standard_rep_A5(const Perm& p);

Representation standard_representation(const PermGroup& g);
Representation permutation_representation(const PermGroup& g);
Representation trivial_representation(const PermGroup& g, int n);

/// "A5-standard", "standard", "permutation", "trivial-<n>".
Representation named_representation(const PermGroup& g, const std::string& name);
/// {"name"?, "generators": [matrix per group generator]} with scalar encodings.
Representation representation_from_json(const PermGroup& g, const nlohmann::json& j);
/// A built-in name or a path to a representation file.
Representation load_representation(const PermGroup& g, const std::string& name_or_path);

}  // namespace rt
