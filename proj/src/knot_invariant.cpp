#include "rtorsion/knot_invariant.hpp"

#include <algorithm>
#include <map>

namespace rt {

namespace {

Matrix<LaurentPoly> scaled_by_t(const Matrix<Cyclotomic>& m, long k) {
  Matrix<LaurentPoly> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = LaurentPoly::monomial(m(i, j), k);
  return r;
}

}  // namespace

GeneratorImages<LaurentPoly> twisted_images(const FinitePresentation& p, const PermGroup& g, const Representation& phi,
                                            const std::vector<int>& images, const std::vector<long>& alpha) {
  GeneratorImages<LaurentPoly> rho;
  for (int k = 0; k < p.num_generators(); ++k) {
    rho.mat.push_back(scaled_by_t(phi(images[k]), alpha[k]));
    rho.inv.push_back(scaled_by_t(phi(g.inv(images[k])), -alpha[k]));
  }
  return rho;
}

GeneratorImages<Cyclotomic> twisted_images_at(const FinitePresentation& p, const PermGroup& g,
                                              const Representation& phi, const std::vector<int>& images,
                                              const std::vector<long>& alpha, const Cyclotomic& zeta) {
  GeneratorImages<Cyclotomic> rho;
  for (int k = 0; k < p.num_generators(); ++k) {
    const Cyclotomic s = power(zeta, alpha[k]);
    rho.mat.push_back(phi(images[k]) * s);
    rho.inv.push_back(phi(g.inv(images[k])) * s.inverse());
  }
  return rho;
}

UnitGroupSpec knot_units(const Representation& phi) { return UnitGroupSpec::generated(true, true, phi.determinants()); }

int default_dropped_relator(const FinitePresentation& p) {
  return p.num_relators() == p.num_generators() ? p.num_relators() - 1 : -1;
}

std::vector<int> peripheral_images(const MarkedPresentation& k, const PermGroup& g, const std::vector<int>& images) {
  return {evaluate_word(g, images, k.longitude), images[k.meridian]};
}

std::vector<int> peripheral_class(const PermGroup& g, int lambda_image, int mu_image) {
  return orbit_representative({lambda_image, mu_image}, g);
}

TorsionValue knot_torsion(const MarkedPresentation& k, const PermGroup& g, const Representation& phi,
                          const std::vector<int>& images, const KnotTorsionOptions& opts) {
  const auto& p = k.presentation;
  const auto alpha = p.abelianization_to_Z(k.meridian);
  const auto rho = twisted_images(p, g, phi, images, alpha);
  const int deleted = opts.deleted < 0 ? k.meridian : opts.deleted;
  const int dropped = opts.dropped == -2 ? default_dropped_relator(p) : opts.dropped;
  return presentation_torsion(p, rho, deleted, dropped, knot_units(phi));
}

std::vector<HomClass> knot_surjections(const MarkedPresentation& k, const PermGroup& g) {
  auto homs = enumerate_surjections(k.presentation, g, k.conjugate_generators ? meridian_search(g) : SurjectionSearch{});
  for (auto& h : homs) h.peripheral = peripheral_images(k, g, h.images);
  return homs;
}

std::vector<KnotTorsionRecord> knot_torsion_records(const MarkedPresentation& k, const PermGroup& g,
                                                    const Representation& phi) {
  std::vector<KnotTorsionRecord> out;
  for (auto& h : knot_surjections(k, g)) {
    KnotTorsionRecord r;
    r.peripheral = peripheral_class(g, h.peripheral[0], h.peripheral[1]);
    r.tau = knot_torsion(k, g, phi, h.images);
    r.hom = std::move(h);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<TorsionValue> canonical_set(std::vector<TorsionValue> values) {
  for (auto& v : values) v = canonicalize(v);
  std::sort(values.begin(), values.end(),
            [](const TorsionValue& a, const TorsionValue& b) { return compare_canonical(a, b) < 0; });
  values.erase(std::unique(values.begin(), values.end(),
                           [](const TorsionValue& a, const TorsionValue& b) { return a.value() == b.value(); }),
               values.end());
  return values;
}

KnotInvariantSet knot_invariant_set(const MarkedPresentation& k, const PermGroup& g, const Representation& phi,
                                    int lambda_image, int mu_image) {
  KnotInvariantSet s;
  s.peripheral = peripheral_class(g, lambda_image, mu_image);
  std::vector<TorsionValue> values;
  for (const auto& h : knot_surjections(k, g))
    if (peripheral_class(g, h.peripheral[0], h.peripheral[1]) == s.peripheral)
      values.push_back(knot_torsion(k, g, phi, h.images));
  s.values = canonical_set(std::move(values));
  return s;
}

std::vector<KnotInvariantSet> knot_invariant_table(const std::vector<KnotTorsionRecord>& records) {
  std::map<std::vector<int>, std::vector<TorsionValue>> by_class;
  for (const auto& r : records) by_class[r.peripheral].push_back(r.tau);
  std::vector<KnotInvariantSet> out;
  for (auto& [cls, values] : by_class) out.push_back({cls, canonical_set(std::move(values))});
  return out;
}

}  // namespace rt
