#include "rtorsion/seifert.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace rt {

namespace {

Matrix<Cyclotomic> image_power(const GeneratorImages<Cyclotomic>& rho, int gen, long k) {
  const Eigen::Index n = rho.dim();
  Matrix<Cyclotomic> r = Matrix<Cyclotomic>::Identity(n, n);
  const Matrix<Cyclotomic>& base = k < 0 ? rho.inv[gen] : rho.mat[gen];
  for (long e = k < 0 ? -k : k; e > 0; --e) r = multiply(r, base);
  return r;
}

Cyclotomic det_minus_identity(const Matrix<Cyclotomic>& a) {
  return determinant(Matrix<Cyclotomic>(a - Matrix<Cyclotomic>::Identity(a.rows(), a.cols())));
}

LaurentRational constant(const Cyclotomic& c) { return LaurentRational(LaurentPoly::monomial(c, 0)); }

SeifertParams checked(std::vector<SurgerySlope> fibers) {
  if (fibers.size() < 2) throw std::invalid_argument("a Seifert manifold needs at least two fibers");
  for (const auto& f : fibers)
    if (f.p < 2) throw std::invalid_argument("fiber " + f.str() + " has |p| < 2");
  return SeifertParams{std::move(fibers)};
}

}  // namespace

std::string SeifertParams::str() const {
  std::string out;
  for (std::size_t i = 0; i < fibers.size(); ++i) out += (i ? "," : "") + fibers[i].str();
  return out;
}

SeifertParams seifert_params(const std::vector<std::pair<long, long>>& fractions) {
  std::vector<SurgerySlope> fibers;
  for (const auto& [p, q] : fractions) fibers.push_back(slope(p, q));
  return checked(std::move(fibers));
}

SeifertParams parse_seifert_params(std::string_view text) {
  std::vector<SurgerySlope> fibers;
  while (true) {
    const auto comma = text.find(',');
    fibers.push_back(parse_slope(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return checked(std::move(fibers));
}

SeifertParams seifert_params_from_json(const nlohmann::json& j) {
  std::vector<SurgerySlope> fibers;
  for (const auto& f : j.at("params")) fibers.push_back(f.is_string() ? parse_slope(f.get<std::string>()) : slope(f.get<long>(), 1));
  return checked(std::move(fibers));
}

SeifertParams load_seifert_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open params file " + path);
  return seifert_params_from_json(nlohmann::json::parse(in));
}

FinitePresentation seifert_link_presentation(int m) {
  std::vector<std::string> names{"x"};
  for (int i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
  FinitePresentation p(names, {});
  for (int i = 1; i <= m; ++i) {
    GroupWord c = GroupWord::power(0, 1);
    c *= GroupWord::power(i, 1);
    c *= GroupWord::power(0, -1);
    c *= GroupWord::power(i, -1);
    p.add_relator(c);
  }
  return p;
}

FinitePresentation seifert_presentation(const SeifertParams& params) {
  const int m = params.m();
  FinitePresentation link = seifert_link_presentation(m);
  FinitePresentation p(link.generators(), {});
  GroupWord product;
  for (int i = 1; i <= m; ++i) product *= GroupWord::power(i, 1);
  p.add_relator(product);
  for (const auto& r : link.relators()) p.add_relator(r);
  for (int i = 1; i <= m; ++i) {
    GroupWord w = GroupWord::power(0, params.fibers[i - 1].q);
    w *= GroupWord::power(i, params.fibers[i - 1].p);
    p.add_relator(w);
  }
  return p;
}

Integer seifert_homology_order(const SeifertParams& params) {
  Integer total(0);
  for (int i = 0; i < params.m(); ++i) {
    Integer term(params.fibers[i].q);
    for (int j = 0; j < params.m(); ++j)
      if (j != i) term *= Integer(params.fibers[j].p);
    total += term;
  }
  return total < Integer(0) ? -total : total;
}

std::vector<std::vector<int>> enumerate_SG(const SeifertParams& params, const PermGroup& g) {
  const int m = params.m();
  std::set<std::vector<int>> found;
  for (int z : g.center()) {
    // candidates[i] = { h : z^q_i h^p_i = 1 }
    std::vector<std::vector<int>> candidates(m);
    std::vector<std::vector<bool>> allowed(m, std::vector<bool>(g.order(), false));
    for (int i = 0; i < m; ++i) {
      const int zq = g.pow(z, params.fibers[i].q);
      for (int h = 0; h < g.order(); ++h)
        if (g.mul(zq, g.pow(h, params.fibers[i].p)) == PermGroup::identity()) {
          allowed[i][h] = true;
          // Conjugating fixes z, so h_1 may be taken to be a class representative.
          if (i > 0 || g.class_representative(h) == h) candidates[i].push_back(h);
        }
    }
    std::vector<int> tuple(m + 1);
    tuple[0] = z;
    auto extend = [&](auto&& self, int i, int prefix) -> void {
      if (i == m - 1) {
        const int last = g.inv(prefix);
        if (!allowed[i][last]) return;
        tuple[m] = last;
        if (g.generates(tuple)) found.insert(orbit_representative(tuple, g));
        return;
      }
      for (int h : candidates[i]) {
        tuple[i + 1] = h;
        self(self, i + 1, g.mul(prefix, h));
      }
    };
    extend(extend, 0, PermGroup::identity());
  }
  return {found.begin(), found.end()};
}

std::vector<SeifertCharacter> seifert_characters(const SeifertParams& params, long order) {
  std::vector<SeifertCharacter> out;
  for (const auto& e : enumerate_characters(seifert_presentation(params), order))
    out.push_back(SeifertCharacter{order, e[0], std::vector<long>(e.begin() + 1, e.end())});
  return out;
}

TorsionValue seifert_torsion(const SeifertParams& params, const GeneratorImages<Cyclotomic>& rho,
                             const UnitGroupSpec& units) {
  const int m = params.m();
  if (static_cast<int>(rho.mat.size()) != m + 1) throw std::invalid_argument("need images of x, y_1, ..., y_m");
  const Cyclotomic dx = det_minus_identity(rho.mat[0]);
  if (is_zero(dx)) throw std::domain_error("det(rho(x) - I) = 0");
  Cyclotomic value = power(dx, m - 2);
  for (int i = 0; i < m; ++i) {
    const auto& f = params.fibers[i];
    const Cyclotomic d = det_minus_identity(multiply(image_power(rho, 0, f.s), image_power(rho, i + 1, f.r)));
    if (is_zero(d)) throw std::domain_error("det(rho(x^s y^r) - I) = 0 at fiber " + std::to_string(i + 1));
    value /= d;
  }
  return canonicalize(TorsionValue(constant(value), units));
}

TorsionValue seifert_torsion_by_gluing(const SeifertParams& params, const GeneratorImages<Cyclotomic>& rho,
                                       const UnitGroupSpec& units) {
  const int m = params.m();
  const auto link = seifert_link_presentation(m);
  const Cyclotomic exterior = complex_torsion(presentation_complex(link, rho));
  TorsionValue tau = canonicalize(TorsionValue(constant(exterior), units));
  // Central circle: meridian x, longitude y_1...y_m, slope 0/1.
  const SurgerySlope central = slope(0, 1);
  tau = glue_torsion(tau, det_minus_identity(image_power(rho, 0, central.r)), units);
  // Fiber i: meridian y_i, longitude x, slope p_i/q_i, core x^s_i y_i^r_i.
  for (int i = 0; i < m; ++i) {
    const auto& f = params.fibers[i];
    tau = glue_torsion(tau, det_minus_identity(multiply(image_power(rho, 0, f.s), image_power(rho, i + 1, f.r))), units);
  }
  return tau;
}

GeneratorImages<Cyclotomic> seifert_images(const PermGroup& g, const Representation& phi, const std::vector<int>& tuple,
                                           const SeifertCharacter& chi) {
  const Cyclotomic zeta = Cyclotomic::zeta(static_cast<int>(chi.order), 1);
  GeneratorImages<Cyclotomic> rho;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    const long e = k == 0 ? chi.a : chi.b.at(k - 1);
    const Cyclotomic s = power(zeta, e);
    rho.mat.push_back(phi(tuple[k]) * s);
    rho.inv.push_back(phi(g.inv(tuple[k])) * s.inverse());
  }
  return rho;
}

ManifoldInvariantSet seifert_invariant_set(const SeifertParams& params, const PermGroup& g, const Representation& phi,
                                           const SeifertCharacter& chi) {
  if (static_cast<int>(chi.b.size()) != params.m()) throw std::invalid_argument("character needs one exponent per fiber");
  const UnitGroupSpec units = manifold_units(phi, chi.order);
  ManifoldInvariantSet out;
  for (const auto& tuple : enumerate_SG(params, g)) {
    try {
      add_value(out, seifert_torsion(params, seifert_images(g, phi, tuple, chi), units), HomClass{tuple, true, {}});
    } catch (const std::domain_error& e) {
      out.violations.push_back({tuple, e.what()});
    }
  }
  return out;
}

Rational modulus_profile(const TorsionValue& v) {
  if (!v.value().is_constant()) throw std::domain_error("modulus profile needs a constant value");
  return abs_square_rational(v.value().constant());
}

}  // namespace rt
