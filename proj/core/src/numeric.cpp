#include "sbmetric/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace sbm {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

double parse_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + text.size())
        throw std::invalid_argument("malformed number: '" + text + "'");
    return v;
}

}  // namespace

double parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return parse_decimal(text);
    double num = parse_decimal(text.substr(0, slash));
    double den = parse_decimal(text.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return num / den;
}

bool approx_equal(double a, double b, double abs_tol, double rel_tol) {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= abs_tol + rel_tol * scale;
}

}  // namespace sbm
