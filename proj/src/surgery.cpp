#include "rtorsion/surgery.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rt {

namespace {

long parse_long(std::string_view text, const char* what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(text) + "'");
  return v;
}

// x with a x = 1 mod m, for gcd(a, m) = 1.
long inverse_mod(long a, long m) {
  long r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long k = r0 / r1;
    r0 = std::exchange(r1, r0 - k * r1);
    s0 = std::exchange(s1, s0 - k * s1);
  }
  return mod(s0, m);
}

LaurentRational constant(const Cyclotomic& c) { return LaurentRational(LaurentPoly::monomial(c, 0)); }

}  // namespace

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

SurgerySlope slope(long p, long q) {
  if (std::gcd(p, q) != 1) throw std::invalid_argument("slope " + std::to_string(p) + "/" + std::to_string(q) + " is not irreducible");
  if (p < 0) {
    p = -p;
    q = -q;
  }
  SurgerySlope s;
  s.p = p;
  s.q = q;
  if (p == 0) {
    s.r = -q;
    s.s = 0;
  } else {
    s.r = p == 1 ? 0 : mod(-inverse_mod(q, p), p);
    s.s = (1 + q * s.r) / p;
  }
  return s;
}

SurgerySlope parse_slope(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return slope(parse_long(text, "slope"), 1);
  return slope(parse_long(text.substr(0, slash), "slope"), parse_long(text.substr(slash + 1), "slope"));
}

SurgerySlope shifted_companion(const SurgerySlope& s, long k) {
  SurgerySlope t = s;
  t.r += k * s.p;
  t.s += k * s.q;
  return t;
}

std::vector<std::vector<long>> surjections_to_cyclic(const FinitePresentation& p, long order) {
  if (order < 1) throw std::invalid_argument("character order must be positive");
  const int n = p.num_generators();
  Matrix<Integer> right = Matrix<Integer>::Identity(n, n);
  std::vector<Integer> d;
  if (p.num_relators() > 0) {
    const SmithForm s = smith_normal_form(p.relation_matrix());
    right = s.right;
    d = s.invariants();
  }
  // In the Smith coordinates f, e = right * f is a homomorphism iff
  // d_k f_k = 0 mod order for every k.
  std::vector<long> step(n, 1);
  for (std::size_t k = 0; k < d.size(); ++k) {
    const long dk = d[k].is_zero() ? 0 : mod(d[k].to_long(), order);
    step[k] = order / std::gcd(dk, order);
  }
  std::set<std::vector<long>> found;
  std::vector<long> f(n, 0);
  while (true) {
    std::vector<long> e(n, 0);
    long g = order;
    for (int j = 0; j < n; ++j) {
      long v = 0;
      for (int k = 0; k < n; ++k) v = mod(v + mod(right(j, k).to_long(), order) * f[k], order);
      e[j] = v;
      g = std::gcd(g, v);
    }
    if (g == 1) found.insert(e);
    int k = 0;
    while (k < n) {
      f[k] += step[k];
      if (f[k] < order) break;
      f[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<long>> enumerate_characters(const FinitePresentation& p, long order) {
  const auto inv = p.abelian_invariants();
  if (!(inv.size() == 1 && inv[0] == Integer(order)) && !(inv.empty() && order == 1))
    throw std::domain_error("H_1 is not cyclic of order " + std::to_string(order));
  return surjections_to_cyclic(p, order);
}

UnitGroupSpec manifold_units(const Representation& phi, long order) {
  std::vector<Cyclotomic> gens = phi.determinants();
  gens.push_back(Cyclotomic::zeta(static_cast<int>(order), 1));
  return UnitGroupSpec::generated(true, false, gens);
}

TorsionValue glue_torsion(const TorsionValue& tau_e, const Cyclotomic& core_det, const UnitGroupSpec& units) {
  if (is_zero(core_det)) throw std::domain_error("core determinant vanishes; the filling is not acyclic");
  if (tau_e.is_zero()) return TorsionValue(LaurentRational(0), units);
  return canonicalize(TorsionValue(tau_e.value() / constant(core_det), units));
}

TorsionValue evaluate_at_root(const TorsionValue& tau, const Cyclotomic& zeta, const UnitGroupSpec& units) {
  Cyclotomic v;
  try {
    v = tau.value().evaluate(zeta);
  } catch (const std::domain_error&) {
    throw std::domain_error("evaluation undefined; lemma hypothesis violated");
  }
  return canonicalize(TorsionValue(constant(v), units));
}

FinitePresentation surgered_presentation(const MarkedPresentation& k, const SurgerySlope& s) {
  FinitePresentation p = k.presentation;
  GroupWord r = GroupWord::power(k.meridian, s.p);
  r *= k.longitude.pow(s.q);
  p.add_relator(r.reduced());
  return p;
}

bool satisfies_filling(const PermGroup& g, int lambda_image, int mu_image, const SurgerySlope& s) {
  return g.mul(g.pow(lambda_image, s.q), g.pow(mu_image, s.p)) == PermGroup::identity();
}

std::vector<HomClass> surgery_surjections(const MarkedPresentation& k, const SurgerySlope& s, const PermGroup& g) {
  std::vector<HomClass> out;
  for (auto& h : knot_surjections(k, g))
    if (satisfies_filling(g, h.peripheral[0], h.peripheral[1], s)) out.push_back(std::move(h));
  return out;
}

std::vector<TorsionValue> ManifoldInvariantSet::taus() const {
  std::vector<TorsionValue> out;
  for (const auto& v : values) out.push_back(v.tau);
  return out;
}

void add_value(ManifoldInvariantSet& set, TorsionValue tau, const HomClass& source) {
  tau = canonicalize(tau);
  auto it = std::lower_bound(set.values.begin(), set.values.end(), tau, [](const ManifoldValue& a, const TorsionValue& b) {
    return compare_canonical(a.tau, b) < 0;
  });
  if (it != set.values.end() && compare_canonical(it->tau, tau) == 0) {
    it->sources.push_back(source);
    return;
  }
  set.values.insert(it, ManifoldValue{std::move(tau), {source}});
}

Cyclotomic shifted_det(const Representation& phi, int a, const Cyclotomic& zeta, long k) {
  const int n = phi.dimension();
  return determinant(Matrix<Cyclotomic>(phi(a) * power(zeta, k) - Matrix<Cyclotomic>::Identity(n, n)));
}

ManifoldInvariantSet surgery_invariant_set(const MarkedPresentation& k, const SurgerySlope& s, const PermGroup& g,
                                           const Representation& phi, long u) {
  if (s.p < 2) throw std::invalid_argument("surgery invariant needs p >= 2 so that H_1 = Z/p is nontrivial");
  if (std::gcd(u, s.p) != 1) throw std::invalid_argument("character exponent must be a unit mod p");
  const Cyclotomic zeta = Cyclotomic::zeta(static_cast<int>(s.p), u);
  const UnitGroupSpec units = manifold_units(phi, s.p);
  ManifoldInvariantSet out;
  for (const auto& h : surgery_surjections(k, s, g)) {
    const int lam = h.peripheral[0], mu = h.peripheral[1];
    const auto cls = peripheral_class(g, lam, mu);
    if (is_zero(shifted_det(phi, mu, zeta, 1))) {
      out.violations.push_back({cls, "det(zeta phi(h) - I) = 0"});
      continue;
    }
    const int core = g.mul(g.pow(lam, s.s), g.pow(mu, s.r));
    const Cyclotomic core_det = shifted_det(phi, core, zeta, s.r);
    if (is_zero(core_det)) {
      out.violations.push_back({cls, "det(zeta^r phi(g^s h^r) - I) = 0"});
      continue;
    }
    const TorsionValue tau = knot_torsion(k, g, phi, h.images);
    if (tau.is_zero()) {
      out.warnings.push_back("class [" + g.str(cls[0]) + ", " + g.str(cls[1]) + "] has zero knot torsion; skipped");
      continue;
    }
    const TorsionValue value = glue_torsion(evaluate_at_root(tau, zeta, units), core_det, units);
    if (value.is_zero())
      out.warnings.push_back("class [" + g.str(cls[0]) + ", " + g.str(cls[1]) + "] vanishes at t = zeta; not acyclic");
    add_value(out, value, h);
  }
  return out;
}

}  // namespace rt
