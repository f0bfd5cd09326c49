#pragma once

#include <string>

namespace sbm {

/// Format a double with 17 significant digits ("%.17g"): enough to
/// round-trip IEEE doubles and stable across runs, which keeps report
/// and trace output byte-identical for identical inputs.
std::string fmt_double(double v);

/// Parse "p/q", a plain decimal, or an integer. Rational input avoids
/// decimal roundoff in sign-sensitive thresholds such as 1/18.
/// Throws std::invalid_argument on malformed input.
double parse_rational(const std::string& text);

/// |a - b| <= abs_tol + rel_tol * max(|a|, |b|)
bool approx_equal(double a, double b, double abs_tol, double rel_tol = 0.0);

}  // namespace sbm
