// Fox free differential calculus and torsion of presentation 2-complexes.
//
// Convention: the Fox matrix F has block rows indexed by relators and block
// columns by generators; block (r, j) is rho(dr/dx_j).  On row vectors the
// 2-complex of a presentation has d_2 = F and d_1 = the column of blocks
// rho(x_j) - I, so that F d_1 = 0.  BasedComplex acts on column vectors and
// stores the full transposes.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rtorsion/chain_complex.hpp"
#include "rtorsion/presentation.hpp"
#include "rtorsion/torsion_value.hpp"

namespace rt {

/// Images of the generators together with their inverses.
template <class S>
struct GeneratorImages {
  std::vector<Matrix<S>> mat;
  std::vector<Matrix<S>> inv;
  Eigen::Index dim() const { return mat.empty() ? 0 : mat[0].rows(); }
};

template <class S>
Matrix<S> evaluate_word(const GeneratorImages<S>& rho, const GroupWord& w) {
  Matrix<S> x = Matrix<S>::Identity(rho.dim(), rho.dim());
  for (const auto& l : w.letters()) x = multiply(x, l.exp > 0 ? rho.mat[l.gen] : rho.inv[l.gen]);
  return x;
}

/// Block Fox matrix; throws std::invalid_argument if a relator does not map to I.
template <class S>
Matrix<S> fox_matrix(const FinitePresentation& p, const GeneratorImages<S>& rho) {
  const Eigen::Index d = rho.dim();
  const int g = p.num_generators();
  if (static_cast<int>(rho.mat.size()) != g || static_cast<int>(rho.inv.size()) != g)
    throw std::invalid_argument("need one image per generator");
  const Matrix<S> id = Matrix<S>::Identity(d, d);
  for (int k = 0; k < g; ++k)
    if (!(multiply(rho.mat[k], rho.inv[k]) == id)) throw std::invalid_argument("generator image and inverse do not match");
  Matrix<S> f = Matrix<S>::Zero(p.num_relators() * d, g * d);
  for (int r = 0; r < p.num_relators(); ++r) {
    Matrix<S> prefix = id;
    for (const auto& l : p.relators()[r].letters()) {
      auto block = f.block(r * d, l.gen * d, d, d);
      if (l.exp > 0) {
        block += prefix;
        prefix = multiply(prefix, rho.mat[l.gen]);
      } else {
        prefix = multiply(prefix, rho.inv[l.gen]);
        block -= prefix;
      }
    }
    if (!(prefix == id)) throw std::invalid_argument("relator " + std::to_string(r + 1) + " does not map to the identity");
  }
  return f;
}

/// The based chain complex C_2 -> C_1 -> C_0 of the presentation 2-complex
/// (one 0-cell, a 1-cell per generator, a 2-cell per relator).
template <class S>
BasedComplex<S> presentation_complex(const FinitePresentation& p, const GeneratorImages<S>& rho) {
  const Eigen::Index d = rho.dim();
  const int g = p.num_generators();
  Matrix<S> d1(d, g * d);
  for (int k = 0; k < g; ++k) d1.block(0, k * d, d, d) = (rho.mat[k] - Matrix<S>::Identity(d, d)).transpose();
  if (p.num_relators() == 0) return BasedComplex<S>({d1});
  Matrix<S> d2 = fox_matrix(p, rho).transpose();
  return BasedComplex<S>({d1, d2});
}

/// det(F with the dropped relator's block row and the deleted generator's
/// block column removed) / det(rho(deleted) - I), as a class modulo units.
/// dropped = -1 means no relator is dropped.  Returns the zero class when
/// the numerator vanishes.
template <class S>
TorsionValue presentation_torsion(const FinitePresentation& p, const GeneratorImages<S>& rho, int deleted, int dropped,
                                  const UnitGroupSpec& units) {
  const int g = p.num_generators();
  const int rels = p.num_relators() - (dropped >= 0 ? 1 : 0);
  if (rels != g - 1)
    throw std::invalid_argument("deficiency is not 1 (" + std::to_string(g) + " generators, " + std::to_string(rels) +
                                " relators)");
  if (deleted < 0 || deleted >= g) throw std::invalid_argument("deleted generator out of range");
  if (dropped >= p.num_relators()) throw std::invalid_argument("dropped relator out of range");
  const Eigen::Index d = rho.dim();
  const S den = determinant(Matrix<S>(rho.mat[deleted] - Matrix<S>::Identity(d, d)));
  if (is_zero(den)) throw std::domain_error("det(rho(deleted) - I) = 0; choose another generator");

  const Matrix<S> f = fox_matrix(p, rho);
  std::vector<Eigen::Index> rows, cols;
  for (int r = 0; r < p.num_relators(); ++r)
    if (r != dropped)
      for (Eigen::Index i = 0; i < d; ++i) rows.push_back(r * d + i);
  for (int k = 0; k < g; ++k)
    if (k != deleted)
      for (Eigen::Index i = 0; i < d; ++i) cols.push_back(k * d + i);
  Matrix<S> a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) a(i, j) = f(rows[i], cols[j]);
  const S num = determinant(a);
  if (is_zero(num)) return TorsionValue(LaurentRational(0), units);
  return canonicalize(TorsionValue(LaurentRational(num) / LaurentRational(den), units));
}

}  // namespace rt
