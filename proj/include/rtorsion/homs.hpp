// Surjective homomorphisms from finitely presented groups onto permutation
// groups, up to simultaneous conjugation.
#pragma once

#include <vector>

#include "rtorsion/perm_group.hpp"
#include "rtorsion/presentation.hpp"

namespace rt {

/// Image of a word under the assignment generator i -> images[i].
int evaluate_word(const PermGroup& g, const std::vector<int>& images, const GroupWord& w);

/// Least tuple (lexicographic on element indices) in the orbit under
/// simultaneous conjugation.
std::vector<int> orbit_representative(const std::vector<int>& tuple, const PermGroup& g);

struct HomClass {
  /// Orbit representative of the generator images.
  std::vector<int> images;
  bool surjective = true;
  /// Images of distinguished words, conjugated consistently with images:
  /// (rho(lambda), rho(mu)) for knots, (rho(x), rho(y_i)) for Seifert links.
  std::vector<int> peripheral;
  friend bool operator==(const HomClass&, const HomClass&) = default;
};

struct SurjectionSearch {
  /// Per generator, the conjugacy classes (indices into conjugacy_classes())
  /// its image may lie in; empty or missing entries mean unrestricted.
  std::vector<std::vector<int>> allowed_classes;
  /// Classes for all generators at once (Wirtinger generators are conjugate);
  /// the search then runs once per listed class.
  std::vector<int> common_classes;
  bool use_common_classes = false;
};

/// One HomClass per conjugation orbit of surjective homomorphisms obeying the
/// class restrictions, sorted by images.
std::vector<HomClass> enumerate_surjections(const FinitePresentation& p, const PermGroup& g,
                                            const SurjectionSearch& search = {});

/// Same result by plain backtracking without propagation or gauge fixing;
/// exponential, used as a cross-check on small inputs.
std::vector<HomClass> enumerate_surjections_naive(const FinitePresentation& p, const PermGroup& g);

/// For a knot group: all generators in the meridian's class, every class tried.
SurjectionSearch meridian_search(const PermGroup& g);

/// True when every relator maps to the identity.
bool is_homomorphism(const FinitePresentation& p, const PermGroup& g, const std::vector<int>& images);

}  // namespace rt
