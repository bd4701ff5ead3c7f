#pragma once

#include <Eigen/Dense>

#include <array>
#include <cassert>
#include <cmath>
#include <vector>

namespace polyvem {

/// Dimension of the polynomial space P_k in `dim` variables (0 for k < 0).
inline constexpr int poly_space_dim(int dim, int k) {
  if (k < 0) return 0;
  switch (dim) {
    case 1: return k + 1;
    case 2: return (k + 1) * (k + 2) / 2;
    case 3: return (k + 1) * (k + 2) * (k + 3) / 6;
    default: return 0;
  }
}

template <int Dim>
using Exponents = std::array<int, Dim>;

template <int Dim>
inline int total_degree(const Exponents<Dim>& a) {
  int d = 0;
  for (int i = 0; i < Dim; ++i) d += a[i];
  return d;
}

/// Multi-indices of total degree <= k in graded lexicographic order:
/// degree ascending, within a degree the leading exponent descending,
/// so the 2D sequence starts 1, x, y, x^2, xy, y^2, ...
template <int Dim>
std::vector<Exponents<Dim>> graded_exponents(int k) {
  std::vector<Exponents<Dim>> out;
  out.reserve(static_cast<std::size_t>(poly_space_dim(Dim, k)));
  for (int d = 0; d <= k; ++d) {
    if constexpr (Dim == 1) {
      out.push_back({d});
    } else if constexpr (Dim == 2) {
      for (int a1 = d; a1 >= 0; --a1) out.push_back({a1, d - a1});
    } else {
      for (int a1 = d; a1 >= 0; --a1)
        for (int a2 = d - a1; a2 >= 0; --a2) out.push_back({a1, a2, d - a1 - a2});
    }
  }
  return out;
}

/// Position of a multi-index in the graded ordering above.
template <int Dim>
inline int graded_index(const Exponents<Dim>& a) {
  const int d = total_degree<Dim>(a);
  const int offset = poly_space_dim(Dim, d - 1);
  if constexpr (Dim == 1) {
    return offset;
  } else if constexpr (Dim == 2) {
    return offset + a[1];
  } else {
    const int r = d - a[0];
    return offset + r * (r + 1) / 2 + a[2];
  }
}

/// Scaled monomial basis on a domain D: m_a(x) = prod_i ((x_i - c_i)/h_D)^{a_i},
/// enumerated in graded lexicographic order up to `degree`. Products stay in the
/// family (m_a * m_b = m_{a+b}), which the exact integrators rely on.
template <int Dim>
struct ScaledMonomialBasis {
  using Point = Eigen::Matrix<double, Dim, 1>;

  Point centroid = Point::Zero();
  double diameter = 1.0;
  int degree = 0;
  std::vector<Exponents<Dim>> exps;

  ScaledMonomialBasis() = default;
  ScaledMonomialBasis(const Point& c, double h, int k)
      : centroid(c), diameter(h), degree(k), exps(graded_exponents<Dim>(k)) {
    assert(h > 0.0);
  }

  int size() const { return static_cast<int>(exps.size()); }

  /// Values of all basis monomials at x.
  Eigen::VectorXd eval(const Point& x) const {
    const Point u = (x - centroid) / diameter;
    std::array<std::array<double, 16>, Dim> pw{};
    for (int i = 0; i < Dim; ++i) {
      pw[i][0] = 1.0;
      for (int p = 1; p <= degree; ++p) pw[i][p] = pw[i][p - 1] * u[i];
    }
    Eigen::VectorXd v(size());
    for (int j = 0; j < size(); ++j) {
      double prod = 1.0;
      for (int i = 0; i < Dim; ++i) prod *= pw[i][exps[j][i]];
      v[j] = prod;
    }
    return v;
  }

  /// Gradients of all basis monomials at x (rows: monomials, cols: d/dx_i).
  Eigen::MatrixXd eval_gradient(const Point& x) const {
    const Point u = (x - centroid) / diameter;
    std::array<std::array<double, 16>, Dim> pw{};
    for (int i = 0; i < Dim; ++i) {
      pw[i][0] = 1.0;
      for (int p = 1; p <= degree; ++p) pw[i][p] = pw[i][p - 1] * u[i];
    }
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(size(), Dim);
    for (int j = 0; j < size(); ++j) {
      for (int d = 0; d < Dim; ++d) {
        if (exps[j][d] == 0) continue;
        double prod = exps[j][d] / diameter;
        for (int i = 0; i < Dim; ++i) {
          const int e = (i == d) ? exps[j][i] - 1 : exps[j][i];
          prod *= pw[i][e];
        }
        g(j, d) = prod;
      }
    }
    return g;
  }

  double eval_poly(const Eigen::VectorXd& coef, const Point& x) const {
    return coef.dot(eval(x).head(coef.size()));
  }

  Eigen::Matrix<double, Dim, 1> eval_poly_gradient(const Eigen::VectorXd& coef,
                                                   const Point& x) const {
    const Eigen::MatrixXd g = eval_gradient(x);
    Eigen::Matrix<double, Dim, 1> out = Eigen::Matrix<double, Dim, 1>::Zero();
    for (int j = 0; j < coef.size(); ++j) out += coef[j] * g.row(j).transpose();
    return out;
  }
};

/// d/dx_axis in coefficient space: input coefficients over P_deg, output over
/// P_{deg-1} (same graded ordering, shorter vector).
template <int Dim>
Eigen::VectorXd poly_derivative(const std::vector<Exponents<Dim>>& exps,
                                const Eigen::VectorXd& coef, double h, int axis) {
  int deg = 0;
  for (int j = 0; j < coef.size(); ++j) deg = std::max(deg, total_degree<Dim>(exps[j]));
  Eigen::VectorXd out = Eigen::VectorXd::Zero(poly_space_dim(Dim, deg - 1));
  for (int j = 0; j < coef.size(); ++j) {
    if (coef[j] == 0.0 || exps[j][axis] == 0) continue;
    Exponents<Dim> a = exps[j];
    const int p = a[axis];
    a[axis] -= 1;
    out[graded_index<Dim>(a)] += coef[j] * p / h;
  }
  return out;
}

/// Product of two polynomials given in the same scaled-monomial family.
template <int Dim>
Eigen::VectorXd poly_product(const std::vector<Exponents<Dim>>& ea,
                             const Eigen::VectorXd& ca,
                             const std::vector<Exponents<Dim>>& eb,
                             const Eigen::VectorXd& cb, int out_degree) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(poly_space_dim(Dim, out_degree));
  for (int i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0.0) continue;
    for (int j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0.0) continue;
      Exponents<Dim> s{};
      for (int d = 0; d < Dim; ++d) s[d] = ea[i][d] + eb[j][d];
      assert(total_degree<Dim>(s) <= out_degree);
      out[graded_index<Dim>(s)] += ca[i] * cb[j];
    }
  }
  return out;
}

/// Moment of the 1D reference monomial: int_{-1/2}^{1/2} s^j ds.
inline double segment_reference_moment(int j) {
  if (j % 2 == 1) return 0.0;
  return std::pow(0.5, j) / (j + 1);
}

}  // namespace polyvem
