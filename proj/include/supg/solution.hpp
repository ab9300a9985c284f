#ifndef SUPG_SOLUTION_HPP
#define SUPG_SOLUTION_HPP

#include <Eigen/Core>
#include <memory>
#include <string>
#include <vector>

#include "supg/assembly.hpp"
#include "supg/fe_space.hpp"
#include "supg/problem.hpp"

namespace supg {

/// Discrete field: coefficient per dof over an FE space.
struct DiscreteSolution {
  std::shared_ptr<const FeSpace> space;
  Eigen::VectorXd coefficients;
  double tau_used = 0.0;
};

/// Assemble + constrain + solve in one step.
DiscreteSolution solve_supg(const ProblemSpec& problem,
                            std::shared_ptr<const FeSpace> space, double tau);

/// Point value of the piecewise-polynomial interpolant; the containing cell
/// comes from structured-grid arithmetic. Points within 1e-12 of the domain
/// are clamped; anything farther out throws OutOfDomain.
double evaluate(const DiscreteSolution& solution, const Point& point);

struct LineSample {
  double coord = 0.0;
  double value = 0.0;
};

/// Uniform endpoint-inclusive sampling along an axis-aligned segment.
/// fixed_axis 0 holds x = fixed_value and varies y in [lo, hi]; fixed_axis 1
/// holds y. For 1D solutions pass fixed_axis = 1, fixed_value = 0.
std::vector<LineSample> extract_line(const DiscreteSolution& solution, int fixed_axis,
                                     double fixed_value, double lo, double hi,
                                     int samples);

/// Fine-grid reference solution for problems without a closed form, per
/// their ReferenceSpec convention. With a cache directory the coefficient
/// vector is stored and reloaded bit-exactly.
DiscreteSolution solve_reference(const ProblemSpec& problem,
                                 const std::string& cache_dir = "");

}  // namespace supg

#endif
