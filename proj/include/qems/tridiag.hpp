#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace qems {

/// Real symmetric tridiagonal matrix in compact storage.
struct TridiagonalMatrix {
  std::vector<double> diag;  // n entries
  std::vector<double> sub;   // n-1 entries

  int size() const { return static_cast<int>(diag.size()); }

  Eigen::MatrixXd dense() const {
    const int n = size();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = sub[i];
    return m;
  }
};

struct TridiagonalEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns, vectors.col(k) <-> values(k)
};

class EigensolverError : public std::runtime_error {
 public:
  EigensolverError(const std::string& what, int iterations)
      : std::runtime_error(what), iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

/// Implicit-shift QL iteration for a symmetric tridiagonal matrix
/// (EISPACK tql2 lineage). Deterministic; eigenvalues returned ascending
/// with matching orthonormal eigenvectors.
inline TridiagonalEigen diagonalize(const TridiagonalMatrix& t) {
  const int n = t.size();
  if (n == 0) throw std::invalid_argument("diagonalize: empty matrix");
  std::vector<double> d = t.diag;
  std::vector<double> e(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = t.sub[i];

  Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);
  const double eps = std::numeric_limits<double>::epsilon();
  const int max_iter = 50;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == max_iter)
          throw EigensolverError("tridiagonal QL failed to converge", iter);
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  // Sort ascending, permuting eigenvectors alongside.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

  TridiagonalEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.values(k) = d[order[k]];
    out.vectors.col(k) = z.col(order[k]);
  }
  return out;
}

}  // namespace qems
