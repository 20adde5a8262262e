#include "rtorsion/matrix.hpp"

namespace rt {

namespace {

void swap_rows(Matrix<Integer>& d, Matrix<Integer>& u, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  d.row(a).swap(d.row(b));
  u.row(a).swap(u.row(b));
}

void swap_cols(Matrix<Integer>& d, Matrix<Integer>& v, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  d.col(a).swap(d.col(b));
  v.col(a).swap(v.col(b));
}

// row_i += f * row_k
void add_row(Matrix<Integer>& d, Matrix<Integer>& u, Eigen::Index i, Eigen::Index k, const Integer& f) {
  for (Eigen::Index j = 0; j < d.cols(); ++j)
    if (!d(k, j).is_zero()) d(i, j) += f * d(k, j);
  for (Eigen::Index j = 0; j < u.cols(); ++j)
    if (!u(k, j).is_zero()) u(i, j) += f * u(k, j);
}

// col_j += f * col_k
void add_col(Matrix<Integer>& d, Matrix<Integer>& v, Eigen::Index j, Eigen::Index k, const Integer& f) {
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    if (!d(i, k).is_zero()) d(i, j) += f * d(i, k);
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    if (!v(i, k).is_zero()) v(i, j) += f * v(i, k);
}

}  // namespace

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> out;
  for (Eigen::Index i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const Matrix<Integer>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Matrix<Integer> d = m;
  Matrix<Integer> u = Matrix<Integer>::Identity(rows, rows);
  Matrix<Integer> v = Matrix<Integer>::Identity(cols, cols);

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j) {
          if (d(i, j).is_zero()) continue;
          if (pi < 0 || abs(d(i, j)) < abs(d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;
      swap_rows(d, u, t, pi);
      swap_cols(d, v, t, pj);

      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (d(i, t).is_zero()) continue;
        add_row(d, u, i, t, -floor_div(d(i, t), d(t, t)));
        if (!d(i, t).is_zero()) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (d(t, j).is_zero()) continue;
        add_col(d, v, j, t, -floor_div(d(t, j), d(t, t)));
        if (!d(t, j).is_zero()) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide the rest of the block.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (!(d(i, j) % d(t, t)).is_zero()) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(d, u, t, bad, Integer(1));
    }
    if (d(t, t).sign() < 0) {
      for (Eigen::Index j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (Eigen::Index j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return SmithForm{d, u, v};
}

}  // namespace rt
