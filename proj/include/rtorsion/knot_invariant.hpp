// Twisted torsion of knot exteriors and the sets T_K^phi([g, h]).
#pragma once

#include <vector>

#include "rtorsion/fox.hpp"
#include "rtorsion/homs.hpp"
#include "rtorsion/knot.hpp"
#include "rtorsion/representation.hpp"

namespace rt {

/// Generator images alpha(x) phi(rho(x)) with alpha(x) = t^alpha_x.
GeneratorImages<LaurentPoly> twisted_images(const FinitePresentation& p, const PermGroup& g, const Representation& phi,
                                            const std::vector<int>& images, const std::vector<long>& alpha);
/// Same with t replaced by zeta.
GeneratorImages<Cyclotomic> twisted_images_at(const FinitePresentation& p, const PermGroup& g,
                                              const Representation& phi, const std::vector<int>& images,
                                              const std::vector<long>& alpha, const Cyclotomic& zeta);

/// Units +-t^k det phi(G).
UnitGroupSpec knot_units(const Representation& phi);

/// The relator dropped by default: the last one when there are as many
/// relators as generators, none otherwise.
int default_dropped_relator(const FinitePresentation& p);

/// Peripheral pair (rho(lambda), rho(mu)).
std::vector<int> peripheral_images(const MarkedPresentation& k, const PermGroup& g, const std::vector<int>& images);
/// Orbit representative of (g, h) under simultaneous conjugation.
std::vector<int> peripheral_class(const PermGroup& g, int lambda_image, int mu_image);

struct KnotTorsionOptions {
  int deleted = -1;  // generator column removed; -1 = meridian
  int dropped = -2;  // relator removed; -2 = default_dropped_relator
};

/// tau_{alpha (x) phi o rho}(E_K) for one homomorphism.
TorsionValue knot_torsion(const MarkedPresentation& k, const PermGroup& g, const Representation& phi,
                          const std::vector<int>& images, const KnotTorsionOptions& opts = {});

/// All surjections onto G with peripheral data filled in.
std::vector<HomClass> knot_surjections(const MarkedPresentation& k, const PermGroup& g);

struct KnotTorsionRecord {
  HomClass hom;
  std::vector<int> peripheral;  // canonical [g, h]
  TorsionValue tau;
};

std::vector<KnotTorsionRecord> knot_torsion_records(const MarkedPresentation& k, const PermGroup& g,
                                                    const Representation& phi);

struct KnotInvariantSet {
  std::vector<int> peripheral;  // canonical [g, h]
  std::vector<TorsionValue> values;  // canonical, distinct, sorted
};

/// Deduplicated, sorted canonical values.
std::vector<TorsionValue> canonical_set(std::vector<TorsionValue> values);

/// T_K^phi([g, h]); empty when no surjection has that peripheral class.
KnotInvariantSet knot_invariant_set(const MarkedPresentation& k, const PermGroup& g, const Representation& phi,
                                    int lambda_image, int mu_image);
/// Every nonempty T_K^phi([g, h]), ordered by peripheral class.
std::vector<KnotInvariantSet> knot_invariant_table(const std::vector<KnotTorsionRecord>& records);

}  // namespace rt
