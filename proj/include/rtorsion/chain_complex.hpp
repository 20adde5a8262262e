// Torsion of based acyclic chain complexes.
//
// A complex C_m -> ... -> C_0 is given by its boundary matrices d_i: C_i -> C_{i-1}
// acting on column vectors in the standard (distinguished) bases.  The torsion
// is computed straight from the definition
//
//   tau = prod_i [b_i b_{i-1} / c_i]^((-1)^(i+1)),
//
// with b_i spanned by selected columns of d_{i+1} and the lift of b_{i-1}
// taken to be the standard vectors of the columns selected from d_i.  This is
// the reference route against which closed-form torsion formulas are checked.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtorsion/matrix.hpp"
#include "rtorsion/serialize.hpp"

namespace rt {

/// Field in which torsion of a complex over S takes values.
template <class S>
struct fraction_of {
  using type = S;
};
template <>
struct fraction_of<Integer> {
  using type = Rational;
};
template <>
struct fraction_of<LaurentPoly> {
  using type = LaurentRational;
};
template <class S>
using fraction_t = typename fraction_of<S>::type;

template <class S>
class BasedComplex {
 public:
  BasedComplex() = default;
  /// boundaries[k] is d_{k+1}: C_{k+1} -> C_k.
  explicit BasedComplex(std::vector<Matrix<S>> boundaries) : d_(std::move(boundaries)) {
    for (std::size_t k = 0; k + 1 < d_.size(); ++k) {
      if (d_[k].cols() != d_[k + 1].rows()) throw std::invalid_argument("boundary dimensions do not chain");
      if (!is_zero_matrix(multiply(d_[k], d_[k + 1])))
        throw std::invalid_argument("boundary maps do not compose to zero in degree " + std::to_string(k + 2));
    }
  }

  /// Top degree m.
  int length() const { return static_cast<int>(d_.size()); }
  Eigen::Index dim(int i) const {
    if (i < 0 || i > length()) return 0;
    if (i == 0) return d_.empty() ? 0 : d_[0].rows();
    return d_[i - 1].cols();
  }
  /// d_i for 1 <= i <= m; an empty map outside that range.
  Matrix<S> boundary(int i) const {
    if (i >= 1 && i <= length()) return d_[i - 1];
    return Matrix<S>::Zero(dim(i - 1), dim(i));
  }
  const std::vector<Matrix<S>>& boundaries() const { return d_; }

  /// rank d_{i+1} + rank d_i = dim C_i in every degree.
  bool is_acyclic() const {
    std::vector<Eigen::Index> ranks(length() + 2, 0);
    for (int i = 1; i <= length(); ++i) ranks[i] = rank(d_[i - 1]);
    for (int i = 0; i <= length(); ++i)
      if (ranks[i + 1] + ranks[i] != dim(i)) return false;
    return true;
  }

 private:
  std::vector<Matrix<S>> d_;
};

/// For each i = 1..m, the columns of d_i spanning its image.
struct ImageBasisChoice {
  std::vector<std::vector<Eigen::Index>> columns;  // columns[i-1] selects from d_i

  /// Greedy column rank profile, scanning columns left to right or right to left.
  template <class S>
  static ImageBasisChoice greedy(const BasedComplex<S>& c, bool reversed = false) {
    ImageBasisChoice choice;
    for (int i = 1; i <= c.length(); ++i) {
      Matrix<S> d = c.boundary(i);
      if (reversed) d = d.rowwise().reverse().eval();
      auto cols = pivot_columns(d);
      if (reversed)
        for (auto& j : cols) j = d.cols() - 1 - j;
      std::sort(cols.begin(), cols.end());
      choice.columns.push_back(std::move(cols));
    }
    return choice;
  }
};

/// tau(C, c) for an acyclic based complex; throws std::domain_error("not acyclic") otherwise.
template <class S>
fraction_t<S> complex_torsion(const BasedComplex<S>& c, const ImageBasisChoice& choice) {
  using F = fraction_t<S>;
  if (!c.is_acyclic()) throw std::domain_error("not acyclic");
  const int m = c.length();
  if (static_cast<int>(choice.columns.size()) != m) throw std::invalid_argument("image basis choice has wrong length");
  F tau(1);
  for (int i = 0; i <= m; ++i) {
    const Eigen::Index n = c.dim(i);
    // Columns: b_i = d_{i+1}(selected), then lifts of b_{i-1}.
    Matrix<S> basis = Matrix<S>::Zero(n, n);
    Eigen::Index col = 0;
    if (i + 1 <= m) {
      const Matrix<S> d = c.boundary(i + 1);
      for (Eigen::Index j : choice.columns[i]) basis.col(col++) = d.col(j);
    }
    if (i >= 1)
      for (Eigen::Index j : choice.columns[i - 1]) basis(j, col++) = S(1);
    if (col != n) throw std::domain_error("image basis choice does not give a basis in degree " + std::to_string(i));
    const S det = determinant(basis);
    if (is_zero(det)) throw std::domain_error("image basis choice does not give a basis in degree " + std::to_string(i));
    if ((i + 1) % 2 == 0) {
      tau *= F(det);
    } else {
      tau /= F(det);
    }
  }
  return tau;
}

template <class S>
fraction_t<S> complex_torsion(const BasedComplex<S>& c) {
  return complex_torsion(c, ImageBasisChoice::greedy(c));
}

/// Degreewise data for 0 -> C' -> C -> C'' -> 0: inclusion, projection and a
/// chosen lift (section) of the projection.
template <class S>
struct ShortExactData {
  std::vector<Matrix<S>> inclusion;   // C'_i -> C_i, i = 0..m
  std::vector<Matrix<S>> projection;  // C_i -> C''_i
  std::vector<Matrix<S>> lift;        // C''_i -> C_i with projection * lift = I
};

template <class S>
struct MultiplicativityReport {
  fraction_t<S> total, sub, quot;
  /// [c'_i c''_i / c_i] per degree.
  std::vector<S> compatibility;
  bool unit_compatibility = true;
  /// (-1)^eps with eps = sum_i alpha_{i-1}(C') alpha_i(C''), alpha_i = sum_{j <= i} dim C_j mod 2.
  int sign = 1;
  /// tau(C) = sign tau(C') tau(C'') prod_i [c'_i c''_i / c_i]^((-1)^(i+1)).
  bool holds = false;
};

template <class S>
MultiplicativityReport<S> multiplicativity_report(const BasedComplex<S>& sub, const BasedComplex<S>& total,
                                                  const BasedComplex<S>& quot, const ShortExactData<S>& maps) {
  using F = fraction_t<S>;
  const int m = std::max({sub.length(), total.length(), quot.length()});
  if (static_cast<int>(maps.inclusion.size()) != m + 1 || static_cast<int>(maps.projection.size()) != m + 1 ||
      static_cast<int>(maps.lift.size()) != m + 1)
    throw std::invalid_argument("short exact sequence data needs one map per degree");
  auto bad = [](const std::string& why) { return std::invalid_argument("not a short exact sequence: " + why); };
  for (int i = 0; i <= m; ++i) {
    const auto& inc = maps.inclusion[i];
    const auto& proj = maps.projection[i];
    const auto& lift = maps.lift[i];
    if (inc.rows() != total.dim(i) || inc.cols() != sub.dim(i)) throw bad("inclusion shape in degree " + std::to_string(i));
    if (proj.rows() != quot.dim(i) || proj.cols() != total.dim(i)) throw bad("projection shape in degree " + std::to_string(i));
    if (lift.rows() != total.dim(i) || lift.cols() != quot.dim(i)) throw bad("lift shape in degree " + std::to_string(i));
    if (!is_zero_matrix(multiply(proj, inc))) throw bad("projection after inclusion is nonzero");
    if (!(multiply(proj, lift) == Matrix<S>::Identity(quot.dim(i), quot.dim(i)))) throw bad("lift is not a section");
    if (rank(inc) != sub.dim(i)) throw bad("inclusion is not injective");
    if (sub.dim(i) + quot.dim(i) != total.dim(i)) throw bad("dimensions do not add up");
    if (i >= 1) {
      if (!(multiply(total.boundary(i), inc) == multiply(maps.inclusion[i - 1], sub.boundary(i))))
        throw bad("inclusion is not a chain map");
      if (!(multiply(quot.boundary(i), proj) == multiply(maps.projection[i - 1], total.boundary(i))))
        throw bad("projection is not a chain map");
    }
  }

  MultiplicativityReport<S> r;
  r.total = complex_torsion(total);
  r.sub = complex_torsion(sub);
  r.quot = complex_torsion(quot);
  F correction(1);
  for (int i = 0; i <= m; ++i) {
    Matrix<S> basis(total.dim(i), total.dim(i));
    if (sub.dim(i) > 0) basis.leftCols(sub.dim(i)) = maps.inclusion[i];
    if (quot.dim(i) > 0) basis.rightCols(quot.dim(i)) = maps.lift[i];
    S d = total.dim(i) == 0 ? S(1) : determinant(basis);
    if (!(d == S(1))) r.unit_compatibility = false;
    if ((i + 1) % 2 == 0) {
      correction *= F(d);
    } else {
      correction /= F(d);
    }
    r.compatibility.push_back(std::move(d));
  }
  long alpha_sub = 0, alpha_quot = 0;
  int eps = 0;
  for (int i = 0; i <= m; ++i) {
    alpha_quot += quot.dim(i);
    eps ^= static_cast<int>((alpha_sub & 1) & (alpha_quot & 1));
    alpha_sub += sub.dim(i);
  }
  r.sign = eps ? -1 : 1;
  r.holds = r.total == F(r.sign) * r.sub * r.quot * correction;
  return r;
}

/// True when torsion is multiplicative on the given short exact sequence
/// (accounting for the compatibility determinants, which are 1 in the
/// classical statement).
template <class S>
bool check_multiplicativity(const BasedComplex<S>& sub, const BasedComplex<S>& total, const BasedComplex<S>& quot,
                            const ShortExactData<S>& maps) {
  return multiplicativity_report(sub, total, quot, maps).holds;
}

template <class S>
Json encode_complex(const BasedComplex<S>& c) {
  Json j = Json::array();
  for (const auto& d : c.boundaries()) j.push_back(encode_matrix(d));
  return j;
}

inline BasedComplex<Cyclotomic> decode_cyclotomic_complex(const Json& j) {
  std::vector<Matrix<Cyclotomic>> d;
  for (const auto& m : j) d.push_back(decode_cyclotomic_matrix(m));
  return BasedComplex<Cyclotomic>(std::move(d));
}

}  // namespace rt
