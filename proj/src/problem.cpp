#include "supg/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace supg {

namespace {

void require_positive_mu(double mu, const char* where) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument(std::string(where) + ": mu must be positive");
  }
}

// e^{(t-1)/mu}: the only exponential shape needed by the boundary-layer
// solutions; the exponent is <= 0 on [0,1], so it never overflows.
double layer(double t, double mu) { return std::exp((t - 1.0) / mu); }

double snap_to_integer(double v) {
  const double r = std::round(v);
  return std::abs(v - r) < 1e-12 ? r : v;
}

}  // namespace

ProblemSpec make_1d_validation(double mu, double beta) {
  require_positive_mu(mu, "make_1d_validation");
  if (!(beta > 0.0)) {
    throw std::invalid_argument("make_1d_validation: beta must be positive");
  }
  ProblemSpec p;
  p.id = "val1d";
  p.dim = 1;
  p.mu = mu;
  p.beta = {beta, 0.0};
  p.forcing = [](const Point&) { return 0.0; };
  // u(x) = (e^{b x/mu} - 1)/(e^{b/mu} - 1) written with negative exponents:
  // (e^{b(x-1)/mu} - e^{-b/mu})/(1 - e^{-b/mu}).
  const double q = std::exp(-beta / mu);
  auto value = [mu, beta, q](const Point& x) {
    return (std::exp(beta * (x[0] - 1.0) / mu) - q) / (1.0 - q);
  };
  auto gradient = [mu, beta, q](const Point& x) {
    return Eigen::Vector2d{(beta / mu) * std::exp(beta * (x[0] - 1.0) / mu) / (1.0 - q),
                           0.0};
  };
  p.exact = ExactField{value, gradient};
  p.dirichlet = value;
  return p;
}

ProblemSpec make_2d_training(double mu) {
  require_positive_mu(mu, "make_2d_training");
  ProblemSpec p;
  p.id = "train2d";
  p.dim = 2;
  p.mu = mu;
  p.beta = {1.0, 1.0};
  p.forcing = [](const Point&) { return 0.0; };
  const double q = std::exp(-1.0 / mu);
  auto value = [mu, q](const Point& x) {
    return (layer(x[0], mu) - q) / (1.0 - q) + (layer(x[1], mu) - q) / (1.0 - q);
  };
  auto gradient = [mu, q](const Point& x) {
    return Eigen::Vector2d{layer(x[0], mu) / (mu * (1.0 - q)),
                           layer(x[1], mu) / (mu * (1.0 - q))};
  };
  p.exact = ExactField{value, gradient};
  p.dirichlet = value;
  return p;
}

ProblemSpec make_2d_forcing_at_angle(double mu, double theta, double beta_norm) {
  require_positive_mu(mu, "make_2d_forcing_at_angle");
  const double bx = snap_to_integer(beta_norm * std::cos(theta));
  const double by = snap_to_integer(beta_norm * std::sin(theta));
  ProblemSpec p;
  p.id = "forced2d";
  p.dim = 2;
  p.mu = mu;
  p.beta = {bx, by};
  p.theta = theta;
  const double q = std::exp(-1.0 / mu);
  // u = (x+y)/2 + (1 - (e^{x/mu} + e^{y/mu})/2)/(e^{1/mu} - 1), rewritten
  // with negative exponents only.
  auto value = [mu, q](const Point& x) {
    return 0.5 * (x[0] + x[1]) +
           (q - 0.5 * (layer(x[0], mu) + layer(x[1], mu))) / (1.0 - q);
  };
  auto gradient = [mu, q](const Point& x) {
    return Eigen::Vector2d{0.5 - layer(x[0], mu) / (2.0 * mu * (1.0 - q)),
                           0.5 - layer(x[1], mu) / (2.0 * mu * (1.0 - q))};
  };
  // f = -mu lap(u) + beta . grad(u)
  //   = (bx + by)/2 + ((1-bx) e^{x/mu} + (1-by) e^{y/mu}) / (2 mu (e^{1/mu}-1));
  // for beta = (1,1) this collapses to the constant 1.
  auto forcing = [mu, q, bx, by](const Point& x) {
    return 0.5 * (bx + by) + ((1.0 - bx) * layer(x[0], mu) +
                              (1.0 - by) * layer(x[1], mu)) /
                                 (2.0 * mu * (1.0 - q));
  };
  p.forcing = forcing;
  p.exact = ExactField{value, gradient};
  p.dirichlet = value;
  return p;
}

ProblemSpec make_2d_constant_forcing(double mu) {
  // pi/4 with the default |beta| = sqrt(2) snaps to beta = (1,1), f = 1
  ProblemSpec p = make_2d_forcing_at_angle(mu, std::atan(1.0));
  p.theta.reset();
  return p;
}

ProblemSpec make_2d_homogeneous(double mu) {
  require_positive_mu(mu, "make_2d_homogeneous");
  ProblemSpec p;
  p.id = "homog2d";
  p.dim = 2;
  p.mu = mu;
  p.beta = {1.0, 1.0};
  p.forcing = [](const Point&) { return 1.0; };
  p.dirichlet = [](const Point&) { return 0.0; };
  p.reference = ReferenceSpec{};
  return p;
}

ProblemSpec make_2d_atan(double mu) {
  require_positive_mu(mu, "make_2d_atan");
  ProblemSpec p;
  p.id = "atan2d";
  p.dim = 2;
  p.mu = mu;
  p.beta = {1.0, 1.0};
  const double sqmu = std::sqrt(mu);
  auto value = [sqmu](const Point& x) {
    const double s = (x[0] - 0.5) * (x[0] - 0.5) + (x[1] - 0.5) * (x[1] - 0.5) -
                     1.0 / 16.0;
    return -std::atan(s) / sqmu;
  };
  auto gradient = [sqmu](const Point& x) {
    const double s = (x[0] - 0.5) * (x[0] - 0.5) + (x[1] - 0.5) * (x[1] - 0.5) -
                     1.0 / 16.0;
    const double c = -1.0 / (sqmu * (1.0 + s * s));
    return Eigen::Vector2d{c * 2.0 * (x[0] - 0.5), c * 2.0 * (x[1] - 0.5)};
  };
  // f = -mu lap(u) + beta . grad(u) for beta = (1,1):
  //   lap(u) = -(4(1+s^2) - 8 s rho^2) / (sqrt(mu) (1+s^2)^2), rho^2 the
  //   squared distance from the center.
  auto forcing = [mu, sqmu](const Point& x) {
    const double rho2 = (x[0] - 0.5) * (x[0] - 0.5) + (x[1] - 0.5) * (x[1] - 0.5);
    const double s = rho2 - 1.0 / 16.0;
    const double d = 1.0 + s * s;
    const double lap = -(4.0 * d - 8.0 * s * rho2) / (sqmu * d * d);
    const double adv = -2.0 * ((x[0] - 0.5) + (x[1] - 0.5)) / (sqmu * d);
    return -mu * lap + adv;
  };
  p.forcing = forcing;
  p.exact = ExactField{value, gradient};
  p.dirichlet = value;
  return p;
}

ProblemSpec make_problem(const std::string& id, double mu, std::optional<double> theta) {
  if (id == "val1d") return make_1d_validation(mu, 1.0);
  if (id == "train2d") return make_2d_training(mu);
  if (id == "forced2d") {
    return theta ? make_2d_forcing_at_angle(mu, *theta) : make_2d_constant_forcing(mu);
  }
  if (id == "homog2d") return make_2d_homogeneous(mu);
  if (id == "atan2d") return make_2d_atan(mu);
  throw std::invalid_argument("make_problem: unknown problem id '" + id + "'");
}

}  // namespace supg
