#include "supg/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace supg {

namespace {

// Gauss-Legendre abscissae/weights on [-1,1] for 1..8 points
// (k points integrate degree 2k-1).
struct Gl {
  std::vector<double> x;
  std::vector<double> w;
};

Gl gauss_legendre(int npts) {
  switch (npts) {
    case 1:
      return {{0.0}, {2.0}};
    case 2:
      return {{-0.57735026918962576, 0.57735026918962576}, {1.0, 1.0}};
    case 3:
      return {{-0.77459666924148338, 0.0, 0.77459666924148338},
              {0.55555555555555556, 0.88888888888888889, 0.55555555555555556}};
    case 4:
      return {{-0.86113631159405258, -0.33998104358485626, 0.33998104358485626,
               0.86113631159405258},
              {0.34785484513745386, 0.65214515486254614, 0.65214515486254614,
               0.34785484513745386}};
    case 5:
      return {{-0.90617984593866399, -0.53846931010568309, 0.0,
               0.53846931010568309, 0.90617984593866399},
              {0.23692688505618909, 0.47862867049936647, 0.56888888888888889,
               0.47862867049936647, 0.23692688505618909}};
    case 6:
      return {{-0.93246951420315203, -0.66120938646626451, -0.23861918608319691,
               0.23861918608319691, 0.66120938646626451, 0.93246951420315203},
              {0.17132449237917035, 0.36076157304813861, 0.46791393457269105,
               0.46791393457269105, 0.36076157304813861, 0.17132449237917035}};
    case 7:
      return {{-0.94910791234275852, -0.74153118559939444, -0.40584515137739717,
               0.0, 0.40584515137739717, 0.74153118559939444,
               0.94910791234275852},
              {0.12948496616886969, 0.27970539148927667, 0.38183005050511894,
               0.41795918367346939, 0.38183005050511894, 0.27970539148927667,
               0.12948496616886969}};
    case 8:
      return {{-0.96028985649753623, -0.79666647741362674, -0.52553240991632899,
               -0.18343464249564980, 0.18343464249564980, 0.52553240991632899,
               0.79666647741362674, 0.96028985649753623},
              {0.10122853629037626, 0.22238103445337447, 0.31370664587788729,
               0.36268378337836198, 0.36268378337836198, 0.31370664587788729,
               0.22238103445337447, 0.10122853629037626}};
    default:
      throw std::invalid_argument("gauss_legendre: unsupported point count");
  }
}

void append_symmetric_orbit(QuadratureRule& rule, double l1, double l2, double l3,
                            double w) {
  // Barycentric orbit of a point under the full permutation group; the
  // reference triangle maps barycentric (l1,l2,l3) to (x,y) = (l2,l3).
  const std::array<std::array<double, 3>, 6> perms = {{{l1, l2, l3},
                                                       {l2, l3, l1},
                                                       {l3, l1, l2},
                                                       {l1, l3, l2},
                                                       {l3, l2, l1},
                                                       {l2, l1, l3}}};
  auto contains = [&rule](double x, double y) {
    for (const auto& p : rule.points) {
      if (std::abs(p[0] - x) < 1e-14 && std::abs(p[1] - y) < 1e-14) return true;
    }
    return false;
  };
  for (const auto& p : perms) {
    const double x = p[1];
    const double y = p[2];
    if (!contains(x, y)) {
      rule.points.push_back({x, y});
      rule.weights.push_back(w);
    }
  }
}

// Tabulated symmetric rules (weights normalized to triangle area 1/2).
QuadratureRule triangle_table_rule(int degree) {
  QuadratureRule rule;
  rule.dim = 2;
  rule.degree = degree;
  const double third = 1.0 / 3.0;
  switch (degree) {
    case 1:
      append_symmetric_orbit(rule, third, third, third, 0.5);
      break;
    case 2:
      append_symmetric_orbit(rule, 2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0);
      break;
    case 4: {
      const double a1 = 0.445948490915965;
      const double a2 = 0.091576213509771;
      append_symmetric_orbit(rule, 1 - 2 * a1, a1, a1, 0.5 * 0.223381589678011);
      append_symmetric_orbit(rule, 1 - 2 * a2, a2, a2, 0.5 * 0.109951743655322);
      break;
    }
    case 5: {
      const double a1 = 0.470142064105115;
      const double a2 = 0.101286507323456;
      append_symmetric_orbit(rule, third, third, third, 0.5 * 0.225);
      append_symmetric_orbit(rule, 1 - 2 * a1, a1, a1, 0.5 * 0.132394152788506);
      append_symmetric_orbit(rule, 1 - 2 * a2, a2, a2, 0.5 * 0.125939180544827);
      break;
    }
    case 6: {
      const double a1 = 0.249286745170910;
      const double a2 = 0.063089014491502;
      const double b = 0.310352451033785;
      const double c = 0.053145049844816;
      append_symmetric_orbit(rule, 1 - 2 * a1, a1, a1, 0.5 * 0.116786275726379);
      append_symmetric_orbit(rule, 1 - 2 * a2, a2, a2, 0.5 * 0.050844906370207);
      append_symmetric_orbit(rule, 1 - b - c, b, c, 0.5 * 0.082851075618374);
      break;
    }
    default:
      throw std::invalid_argument("triangle_table_rule: no table for degree");
  }
  return rule;
}

// Conical-product Gauss rule (Duffy map x=u, y=v(1-u), Jacobian 1-u)
// symmetrized over the vertex permutations of the triangle. With q points
// per direction the base rule is exact for total degree 2q-2; symmetry is
// restored by averaging over the barycentric orbit of each point.
QuadratureRule triangle_conical_rule(int degree) {
  const int q = (degree + 3) / 2;  // 2q-1 >= degree+1
  const Gl gl = gauss_legendre(q);
  QuadratureRule rule;
  rule.dim = 2;
  rule.degree = degree;
  rule.points.reserve(static_cast<std::size_t>(6) * q * q);
  rule.weights.reserve(rule.points.capacity());
  for (int i = 0; i < q; ++i) {
    const double u = 0.5 * (gl.x[i] + 1.0);
    const double wu = 0.5 * gl.w[i];
    for (int j = 0; j < q; ++j) {
      const double v = 0.5 * (gl.x[j] + 1.0);
      const double wv = 0.5 * gl.w[j];
      const double x = u;
      const double y = v * (1.0 - u);
      const double w = wu * wv * (1.0 - u) / 6.0;
      const double l1 = 1.0 - x - y;
      // all six barycentric images, weight split evenly
      const std::array<std::array<double, 2>, 6> images = {{{x, y},
                                                            {y, l1},
                                                            {l1, x},
                                                            {y, x},
                                                            {x, l1},
                                                            {l1, y}}};
      for (const auto& p : images) {
        rule.points.push_back(p);
        rule.weights.push_back(w);
      }
    }
  }
  return rule;
}

}  // namespace

QuadratureRule interval_rule(int degree) {
  if (degree < 0) throw std::invalid_argument("interval_rule: negative degree");
  const int npts = degree / 2 + 1;  // 2*npts - 1 >= degree
  const Gl gl = gauss_legendre(npts);
  QuadratureRule rule;
  rule.dim = 1;
  rule.degree = degree;
  rule.points.resize(npts);
  rule.weights.resize(npts);
  for (int i = 0; i < npts; ++i) {
    rule.points[i] = {0.5 * (gl.x[i] + 1.0), 0.0};
    rule.weights[i] = 0.5 * gl.w[i];
  }
  return rule;
}

QuadratureRule triangle_rule(int degree) {
  if (degree < 0) throw std::invalid_argument("triangle_rule: negative degree");
  if (degree <= 2) return triangle_table_rule(degree <= 1 ? 1 : 2);
  if (degree <= 6) return triangle_table_rule(degree <= 4 ? 4 : (degree == 5 ? 5 : 6));
  return triangle_conical_rule(degree);
}

QuadratureRule cell_rule(int dim, int fe_degree) {
  const int degree = 2 * fe_degree + 2;
  return dim == 1 ? interval_rule(degree) : triangle_rule(degree);
}

}  // namespace supg
