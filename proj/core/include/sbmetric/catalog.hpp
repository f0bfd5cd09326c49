#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sbmetric/metric.hpp"

namespace sbm {

// Built-in ternary metrics. Names are stable identifiers used by the CLI.

/// ex2_1: S(x,y,z) = (|x-y| + |y-z| + |x-z|)^2 / 16 on R, claimed b = 4,
/// symmetric. Fails the coefficient-free ternary triangle inequality.
SbMetric make_ex2_1();

/// ex2_2: S(x,y,z) = [d(x,y) + d(y,z) + d(x,z)]^p for an ordinary metric d
/// and exponent p > 1; symmetric. Claimed coefficient 3^(p-1) (power-mean
/// bound on the p-th power of a coefficient-free ternary metric).
SbMetric make_ex2_2(double p = 2.0);
SbMetric make_ex2_2(const BMetric& base, double p);

/// ex2_3: on R, S(0,0,1) = 2, S(1,1,0) = 4, 0 on the diagonal, 1 otherwise.
/// Claimed b = 2, not symmetric.
SbMetric make_ex2_3();

/// ex2_5: S(x,y,z) = |x-z| + |x+z-2y| on R; b = 1, symmetric. Not induced
/// by any binary metric.
SbMetric make_ex2_5();

/// ex2_6: scale * (|x-z| + |x+z-2y|) with scale >= 1; claimed b = scale,
/// symmetric. Not induced by any b-metric.
SbMetric make_ex2_6(double scale = 1.0);

/// s1: S(x,y,z) = sum_i |x_i-z_i| + sum_i |y_i-z_i| on R^n; b = 1,
/// symmetric. Equals induce_s_metric(l1).
SbMetric make_s1(std::size_t dim = 1);

// Built-in binary metrics.

BMetric make_abs_metric();                       // |x-y| on R, b = 1
BMetric make_squared_diff_metric();              // |x-y|^2 on R, b = 2
BMetric make_l1_metric(std::size_t dim = 1);     // sum |x_i-y_i|, b = 1

/// Look up a ternary metric by name. Parametric entries accept a suffix:
/// "ex2_2:3" (exponent p), "ex2_6:2" (scale), "s1:4" (dimension).
/// Throws std::invalid_argument for unknown names or bad parameters.
SbMetric builtin_sb(const std::string& spec);

/// Binary lookup: "abs", "sqdiff", "l1", "l1:4".
BMetric builtin_b(const std::string& spec);

std::vector<std::string> catalog_sb_names();
std::vector<std::string> catalog_b_names();

/// One-line description for listings.
std::string catalog_describe(const std::string& name);

}  // namespace sbm
