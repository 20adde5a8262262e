// Dehn filling: gluing along solid tori, evaluation at t = zeta and the
// invariant sets T_{K(p/q), beta}^phi.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rtorsion/knot_invariant.hpp"

namespace rt {

/// p/q with p >= 0, gcd(p, q) = 1 and companions p s - q r = 1.
struct SurgerySlope {
  long p = 1, q = 0, r = 0, s = 1;
  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

/// Canonical companions: 0 <= r < p when p > 0, (r, s) = (-q, 0) when p = 0.
/// Negative p is normalized by flipping both signs.
SurgerySlope slope(long p, long q);
/// "p/q" or "p".
SurgerySlope parse_slope(std::string_view text);
/// The same slope with (r, s) replaced by (r + k p, s + k q).
SurgerySlope shifted_companion(const SurgerySlope& s, long k);

/// Least nonnegative residue.
long mod(long a, long m);

/// Every surjection H_1 -> Z/order as exponent vectors (one entry per
/// generator, reduced into [0, order)), sorted.
std::vector<std::vector<long>> surjections_to_cyclic(const FinitePresentation& p, long order);
/// Same, but throws std::domain_error unless H_1 is cyclic of that order.
std::vector<std::vector<long>> enumerate_characters(const FinitePresentation& p, long order);

/// Units {+-1, zeta_order^k, det phi(G)} of a closed manifold invariant.
UnitGroupSpec manifold_units(const Representation& phi, long order);

/// tau_E / core_det; throws std::domain_error when core_det = 0 (the
/// filling is not acyclic).
TorsionValue glue_torsion(const TorsionValue& tau_e, const Cyclotomic& core_det, const UnitGroupSpec& units);

/// Substitutes t = zeta and canonicalizes in the given units.  Throws
/// std::domain_error when the denominator vanishes at zeta.
TorsionValue evaluate_at_root(const TorsionValue& tau, const Cyclotomic& zeta, const UnitGroupSpec& units);

/// The knot presentation plus the filling relator mu^p lambda^q.
FinitePresentation surgered_presentation(const MarkedPresentation& k, const SurgerySlope& s);

/// g^q h^p = 1 for the peripheral pair (g, h) = (rho(lambda), rho(mu)).
bool satisfies_filling(const PermGroup& g, int lambda_image, int mu_image, const SurgerySlope& s);

/// Knot-level surjections whose peripheral pair satisfies the filling relation.
std::vector<HomClass> surgery_surjections(const MarkedPresentation& k, const SurgerySlope& s, const PermGroup& g);

struct HypothesisViolation {
  std::vector<int> peripheral;  // canonical [g, h] or [g, h_1, ..., h_m]
  std::string condition;        // which determinant vanished
};

struct ManifoldValue {
  TorsionValue tau;
  std::vector<HomClass> sources;  // classes producing this value
};

struct ManifoldInvariantSet {
  std::vector<ManifoldValue> values;  // canonical, distinct, sorted
  std::vector<HypothesisViolation> violations;
  std::vector<std::string> warnings;
  bool complete() const { return violations.empty(); }
  std::vector<TorsionValue> taus() const;
};

/// Merges (value, source) pairs into a canonical sorted set.
void add_value(ManifoldInvariantSet& set, TorsionValue tau, const HomClass& source);

/// T_{K(p/q), beta}^phi where beta sends [mu] to zeta_p^u.  Classes violating
/// the determinant hypotheses are skipped and listed in violations.
ManifoldInvariantSet surgery_invariant_set(const MarkedPresentation& k, const SurgerySlope& s, const PermGroup& g,
                                           const Representation& phi, long u = 1);

/// det(zeta^k phi(a) - I).
Cyclotomic shifted_det(const Representation& phi, int a, const Cyclotomic& zeta, long k);

}  // namespace rt
