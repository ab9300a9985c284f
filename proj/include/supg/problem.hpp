#ifndef SUPG_PROBLEM_HPP
#define SUPG_PROBLEM_HPP

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <string>

namespace supg {

using Point = Eigen::Vector2d;
using ScalarField = std::function<double(const Point&)>;
using VectorField = std::function<Eigen::Vector2d(const Point&)>;

/// Closed-form solution with gradient, used for errors and Dirichlet data.
struct ExactField {
  ScalarField value;
  VectorField gradient;
};

/// Convention for the fine-grid reference solve of problems without a
/// closed-form solution.
struct ReferenceSpec {
  int n = 400;
  int r = 1;
  double tau = 0.0;
};

/// Advection-diffusion problem -div(mu grad u) + beta . grad u = f on the
/// unit interval/square with Dirichlet data g. beta is uniform; beta_div
/// carries div(beta) for the general SUPG test operator (zero throughout
/// the catalog).
struct ProblemSpec {
  std::string id;
  int dim = 1;
  double mu = 1.0;
  Eigen::Vector2d beta = Eigen::Vector2d::Zero();
  double beta_div = 0.0;
  ScalarField forcing;
  ScalarField dirichlet;
  std::optional<ExactField> exact;
  double char_length = 1.0;
  std::optional<double> theta;
  std::optional<ReferenceSpec> reference;

  double beta_norm() const { return dim == 1 ? std::abs(beta[0]) : beta.norm(); }
};

/// 1D boundary-layer problem: f = 0, u(0) = 0, u(1) = 1.
ProblemSpec make_1d_validation(double mu, double beta);

/// 2D problem with exact solution split into two 1D boundary layers,
/// beta = (1,1), f = 0.
ProblemSpec make_2d_training(double mu);

/// 2D problem with f = 1, beta = (1,1), same boundary-layer structure plus
/// a linear ramp.
ProblemSpec make_2d_constant_forcing(double mu);

/// Same exact solution as make_2d_constant_forcing but advection rotated to
/// angle theta with |beta| = beta_norm; the forcing is derived accordingly.
/// Components within 1e-12 of an integer are snapped so symmetric angles
/// reproduce the axis-aligned problems exactly.
ProblemSpec make_2d_forcing_at_angle(double mu, double theta,
                                     double beta_norm = 1.4142135623730951);

/// f = 1, beta = (1,1), g = 0; no exact solution, compared against a
/// fine-grid reference solve (see ReferenceSpec).
ProblemSpec make_2d_homogeneous(double mu);

/// Smooth ring profile -atan((x-1/2)^2 + (y-1/2)^2 - 1/16)/sqrt(mu) with
/// analytically derived non-constant forcing, beta = (1,1).
ProblemSpec make_2d_atan(double mu);

/// Resolves a problem id from the CLI catalog:
/// val1d, train2d, forced2d, homog2d, atan2d.
ProblemSpec make_problem(const std::string& id, double mu,
                         std::optional<double> theta = std::nullopt);

}  // namespace supg

#endif
