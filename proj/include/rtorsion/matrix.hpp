// Dense matrices over the exact scalar types.
//
// Storage is Eigen::Matrix templated on the scalar; the exact algorithms
// (determinant, rank profile, inverse, Smith normal form) are free functions
// so they never go through Eigen's floating-point decompositions.
#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "rtorsion/cyclotomic.hpp"
#include "rtorsion/laurent.hpp"
#include "rtorsion/rational.hpp"

#define RT_EXACT_NUMTRAITS(T)                                       \
  template <>                                                        \
  struct NumTraits<T> : GenericNumTraits<T> {                        \
    typedef T Real;                                                  \
    typedef T NonInteger;                                            \
    typedef T Nested;                                                \
    typedef T Literal;                                               \
    enum {                                                           \
      IsComplex = 0,                                                 \
      IsInteger = 0,                                                 \
      IsSigned = 1,                                                  \
      RequireInitialization = 1,                                     \
      ReadCost = 1,                                                  \
      AddCost = 10,                                                  \
      MulCost = 40                                                   \
    };                                                               \
    static inline T epsilon() { return T(0); }                       \
    static inline T dummy_precision() { return T(0); }               \
    static inline int digits10() { return 0; }                       \
  };

namespace Eigen {
RT_EXACT_NUMTRAITS(rt::Integer)
RT_EXACT_NUMTRAITS(rt::Rational)
RT_EXACT_NUMTRAITS(rt::Cyclotomic)
RT_EXACT_NUMTRAITS(rt::LaurentPoly)
RT_EXACT_NUMTRAITS(rt::LaurentRational)
}  // namespace Eigen

#undef RT_EXACT_NUMTRAITS

namespace rt {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
struct is_exact_field : std::false_type {};
template <>
struct is_exact_field<Rational> : std::true_type {};
template <>
struct is_exact_field<Cyclotomic> : std::true_type {};
template <>
struct is_exact_field<LaurentRational> : std::true_type {};

inline bool is_zero(const Integer& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool is_zero(const LaurentRational& x) { return x.is_zero(); }

inline Integer exact_divide(const Integer& a, const Integer& b) {
  if (!(a % b).is_zero()) throw std::domain_error("integer division is not exact");
  return a / b;
}

namespace detail {

// Rough size used to prefer small pivots during elimination.
inline std::size_t pivot_weight(const LaurentPoly& x) { return x.coeffs().size(); }
template <class S>
std::size_t pivot_weight(const S&) {
  return 1;
}

}  // namespace detail

/// Exact determinant: division-based elimination over fields, Bareiss
/// fraction-free elimination over the integral domains Z and Q(zeta)[t^±1].
template <class S>
S determinant(Matrix<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return S(1);
  bool negate = false;
  if constexpr (is_exact_field<S>::value) {
    S det(1);
    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k; i < n; ++i)
        if (!is_zero(m(i, k))) {
          p = i;
          break;
        }
      if (p < 0) return S(0);
      if (p != k) {
        m.row(p).swap(m.row(k));
        negate = !negate;
      }
      const S inv = S(1) / m(k, k);
      det *= m(k, k);
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (is_zero(m(i, k))) continue;
        const S f = m(i, k) * inv;
        for (Eigen::Index j = k + 1; j < n; ++j)
          if (!is_zero(m(k, j))) m(i, j) -= f * m(k, j);
      }
    }
    return negate ? S(-det) : det;
  } else {
    S prev(1);
    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index p = -1;
      std::size_t best = 0;
      for (Eigen::Index i = k; i < n; ++i) {
        if (is_zero(m(i, k))) continue;
        std::size_t w = detail::pivot_weight(m(i, k));
        if (p < 0 || w < best) {
          p = i;
          best = w;
        }
      }
      if (p < 0) return S(0);
      if (p != k) {
        m.row(p).swap(m.row(k));
        negate = !negate;
      }
      const S piv = m(k, k);
      for (Eigen::Index i = k + 1; i < n; ++i) {
        const S lead = m(i, k);
        for (Eigen::Index j = k + 1; j < n; ++j) {
          S v = is_zero(m(i, j)) ? S(0) : S(piv * m(i, j));
          if (!is_zero(lead) && !is_zero(m(k, j))) v -= lead * m(k, j);
          m(i, j) = is_zero(v) ? S(0) : exact_divide(v, prev);
        }
      }
      prev = piv;
    }
    const S& d = m(n - 1, n - 1);
    return negate ? S(-d) : d;
  }
}

/// Indices of the columns selected greedily left to right as a maximal
/// linearly independent set (the column rank profile).
template <class S>
std::vector<Eigen::Index> pivot_columns(Matrix<S> m) {
  std::vector<Eigen::Index> pivots;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  S prev(1);
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const S piv = m(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      const S lead = m(i, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        if constexpr (is_exact_field<S>::value) {
          if (!is_zero(lead) && !is_zero(m(r, j))) m(i, j) -= lead / piv * m(r, j);
        } else {
          S v = is_zero(m(i, j)) ? S(0) : S(piv * m(i, j));
          if (!is_zero(lead) && !is_zero(m(r, j))) v -= lead * m(r, j);
          m(i, j) = is_zero(v) ? S(0) : exact_divide(v, prev);
        }
      }
      m(i, c) = S(0);
    }
    if constexpr (!is_exact_field<S>::value) prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
Eigen::Index rank(const Matrix<S>& m) {
  return static_cast<Eigen::Index>(pivot_columns(m).size());
}

/// Inverse over a field by Gauss-Jordan elimination; throws if singular.
template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  static_assert(is_exact_field<S>::value, "inverse requires a field");
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Matrix<S> a = m;
  Matrix<S> inv = Matrix<S>::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (!is_zero(a(i, k))) {
        p = i;
        break;
      }
    if (p < 0) throw std::domain_error("singular matrix");
    a.row(p).swap(a.row(k));
    inv.row(p).swap(inv.row(k));
    const S s = S(1) / a(k, k);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(k, j) *= s;
      inv(k, j) *= s;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || is_zero(a(i, k))) continue;
      const S f = a(i, k);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (!is_zero(a(k, j))) a(i, j) -= f * a(k, j);
        if (!is_zero(inv(k, j))) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

/// Exact product; avoids Eigen's blocked kernels, which assume cheap scalars.
template <class S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix<S> r = Matrix<S>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

template <class S>
bool is_zero_matrix(const Matrix<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Converts entries through the target scalar's converting constructor.
template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
  Matrix<To> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = To(m(i, j));
  return r;
}

/// Assembles a matrix from a rectangular grid of equally-sized blocks.
template <class S>
Matrix<S> assemble_blocks(const std::vector<std::vector<Matrix<S>>>& blocks, Eigen::Index block_rows,
                          Eigen::Index block_cols) {
  const Eigen::Index br = static_cast<Eigen::Index>(blocks.size());
  const Eigen::Index bc = br == 0 ? 0 : static_cast<Eigen::Index>(blocks[0].size());
  Matrix<S> r = Matrix<S>::Zero(br * block_rows, bc * block_cols);
  for (Eigen::Index i = 0; i < br; ++i) {
    if (static_cast<Eigen::Index>(blocks[i].size()) != bc) throw std::invalid_argument("ragged block grid");
    for (Eigen::Index j = 0; j < bc; ++j) {
      const auto& b = blocks[i][j];
      if (b.size() == 0) continue;
      if (b.rows() != block_rows || b.cols() != block_cols) throw std::invalid_argument("block size mismatch");
      r.block(i * block_rows, j * block_cols, block_rows, block_cols) = b;
    }
  }
  return r;
}

struct SmithForm {
  Matrix<Integer> diagonal;  // same shape as the input
  Matrix<Integer> left;      // unimodular, rows x rows
  Matrix<Integer> right;     // unimodular, cols x cols
  /// Diagonal entries d_1 | d_2 | ... (length min(rows, cols)).
  std::vector<Integer> invariants() const;
};

/// left * m * right = diagonal, with nonnegative d_i dividing d_{i+1}.
SmithForm smith_normal_form(const Matrix<Integer>& m);

}  // namespace rt
