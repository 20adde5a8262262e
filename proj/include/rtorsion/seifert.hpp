// Seifert manifolds M(p_1/q_1, ..., p_m/q_m) over S^2: presentations,
// S_G enumeration and the closed-form torsion.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rtorsion/surgery.hpp"

namespace rt {

/// Fibers p_i/q_i with p_i >= 2 and companions p_i s_i - q_i r_i = 1.
struct SeifertParams {
  std::vector<SurgerySlope> fibers;
  int m() const { return static_cast<int>(fibers.size()); }
  std::string str() const;
};

/// Validates m >= 2 and gcd(p_i, q_i) = 1; fibers with p_i < 0 are flipped
/// to (-p_i)/(-q_i).  Throws std::invalid_argument if some |p_i| < 2.
SeifertParams seifert_params(const std::vector<std::pair<long, long>>& fractions);
/// "3/2,-3,-5"
SeifertParams parse_seifert_params(std::string_view text);
/// {"name"?, "params": ["3/2", "-3", "-5"]}
SeifertParams seifert_params_from_json(const nlohmann::json& j);
SeifertParams load_seifert_params(const std::string& path);

/// <x, y_1..y_m | y_1...y_m, [x, y_i], x^q_i y_i^p_i>.
FinitePresentation seifert_presentation(const SeifertParams& params);
/// <x, y_1..y_m | [x, y_i]>, the fundamental group of the link exterior.
FinitePresentation seifert_link_presentation(int m);
/// |sum_i q_i prod_{j != i} p_j|.
Integer seifert_homology_order(const SeifertParams& params);

/// Tuples [g, h_1, ..., h_m] up to conjugation with g central, h_1...h_m = 1,
/// g^q_i h_i^p_i = 1 and generating G.  Sorted orbit representatives.
std::vector<std::vector<int>> enumerate_SG(const SeifertParams& params, const PermGroup& g);

struct SeifertCharacter {
  long order = 1;
  long a = 0;
  std::vector<long> b;
};

/// Every surjection onto Z/order (H_1 must be cyclic of that order).
std::vector<SeifertCharacter> seifert_characters(const SeifertParams& params, long order);

/// det(X - I)^(m-2) / prod_i det(X^s_i Y_i^r_i - I) for images X of x and
/// Y_i of y_i.  Throws std::domain_error if det(X - I) = 0 or a fiber
/// determinant vanishes.
TorsionValue seifert_torsion(const SeifertParams& params, const GeneratorImages<Cyclotomic>& rho,
                             const UnitGroupSpec& units);

/// Same value computed from the chain complex of the link exterior followed
/// by one gluing per filled torus (central circle first).
TorsionValue seifert_torsion_by_gluing(const SeifertParams& params, const GeneratorImages<Cyclotomic>& rho,
                                       const UnitGroupSpec& units);

/// Images zeta^a phi(g), zeta^b_i phi(h_i) of the generators of the presentation.
GeneratorImages<Cyclotomic> seifert_images(const PermGroup& g, const Representation& phi, const std::vector<int>& tuple,
                                           const SeifertCharacter& chi);

/// T_{M, beta'}^phi via the closed form, one value per S_G class.
ManifoldInvariantSet seifert_invariant_set(const SeifertParams& params, const PermGroup& g, const Representation& phi,
                                           const SeifertCharacter& chi);

/// |v|^2 for a constant class whose units all have modulus 1.
Rational modulus_profile(const TorsionValue& v);

}  // namespace rt
