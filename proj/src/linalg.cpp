#include "nullproj/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace nullproj {

Rref rref(Mat<Rational> m) {
  Echelon<Rational> e = echelon_form(std::move(m));
  Rref out;
  out.pivot_cols = e.pivot_cols;
  const std::size_t r = e.pivot_cols.size();
  if (r == 0) return out;
  const std::size_t ncols = e.rows[0].size();
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t pc = e.pivot_cols[i];
    Rational inv = e.rows[i][pc];
    for (std::size_t c = pc; c < ncols; ++c) e.rows[i][c] /= inv;
    for (std::size_t above = 0; above < i; ++above) {
      Rational f = e.rows[above][pc];
      if (sgn(f) == 0) continue;
      for (std::size_t c = pc; c < ncols; ++c) {
        e.rows[above][c] -= f * e.rows[i][c];
      }
    }
  }
  out.rows.assign(e.rows.begin(), e.rows.begin() + static_cast<long>(r));
  return out;
}

namespace {

Eigen::MatrixXd to_eigen(const std::vector<Vec<double>>& rows) {
  if (rows.empty()) return Eigen::MatrixXd(0, 0);
  Eigen::MatrixXd m(static_cast<long>(rows.size()),
                    static_cast<long>(rows[0].dim()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != rows[0].dim()) {
      throw std::invalid_argument("ragged vector collection");
    }
    for (std::size_t j = 0; j < rows[i].dim(); ++j) {
      m(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
    }
  }
  return m;
}

}  // namespace

std::size_t float_rank(const std::vector<Vec<double>>& rows, double eps) {
  if (rows.empty()) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(rows));
  const auto& sv = svd.singularValues();
  std::size_t r = 0;
  for (long i = 0; i < sv.size(); ++i) {
    if (sv(i) > eps) ++r;
  }
  return r;
}

double smallest_singular_value(const std::vector<Vec<double>>& rows) {
  if (rows.empty()) return 0.0;
  if (rows.size() > rows[0].dim()) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(rows));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0.0;
  return sv(sv.size() - 1);
}

bool independent(const std::vector<Vec<Rational>>& vectors) {
  if (vectors.empty()) return true;
  return rank_of_vectors(vectors) == vectors.size();
}

bool independent(const std::vector<Vec<double>>& vectors) {
  if (vectors.empty()) return true;
  if (vectors.size() > vectors[0].dim()) return false;
  return float_rank(vectors, epsilon()) == vectors.size();
}

}  // namespace nullproj
