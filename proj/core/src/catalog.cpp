#include "sbmetric/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "sbmetric/numeric.hpp"

namespace sbm {

namespace {

double sc(const Point& p) { return p.coord(0); }

}  // namespace

SbMetric make_ex2_1() {
    return SbMetric("ex2_1", Carrier::reals(1), 4.0, true,
                    [](const Point& x, const Point& y, const Point& z) {
                        double s = std::abs(sc(x) - sc(y)) + std::abs(sc(y) - sc(z)) +
                                   std::abs(sc(x) - sc(z));
                        return s * s / 16.0;
                    });
}

SbMetric make_ex2_2(double p) { return make_ex2_2(make_abs_metric(), p); }

SbMetric make_ex2_2(const BMetric& base, double p) {
    if (!(p > 1.0)) throw std::invalid_argument("ex2_2 exponent must satisfy p > 1");
    if (base.b() != 1.0)
        throw std::invalid_argument("ex2_2 needs an ordinary base metric (b = 1)");
    // The perimeter sum is itself a coefficient-free ternary metric; its
    // p-th power picks up 3^(p-1) through the power-mean inequality.
    BMetric d = base;
    return SbMetric("ex2_2", base.carrier(), std::pow(3.0, p - 1.0), true,
                    [d, p](const Point& x, const Point& y, const Point& z) {
                        return std::pow(d(x, y) + d(y, z) + d(x, z), p);
                    });
}

SbMetric make_ex2_3() {
    return SbMetric("ex2_3", Carrier::reals(1), 2.0, false,
                    [](const Point& x, const Point& y, const Point& z) {
                        double a = sc(x), b = sc(y), c = sc(z);
                        if (a == 0.0 && b == 0.0 && c == 1.0) return 2.0;
                        if (a == 1.0 && b == 1.0 && c == 0.0) return 4.0;
                        if (a == b && b == c) return 0.0;
                        return 1.0;
                    });
}

SbMetric make_ex2_5() {
    return SbMetric("ex2_5", Carrier::reals(1), 1.0, true,
                    [](const Point& x, const Point& y, const Point& z) {
                        return std::abs(sc(x) - sc(z)) + std::abs(sc(x) + sc(z) - 2.0 * sc(y));
                    });
}

SbMetric make_ex2_6(double scale) {
    if (!(scale >= 1.0)) throw std::invalid_argument("ex2_6 scale must be >= 1");
    return SbMetric("ex2_6", Carrier::reals(1), scale, true,
                    [scale](const Point& x, const Point& y, const Point& z) {
                        return scale * (std::abs(sc(x) - sc(z)) +
                                        std::abs(sc(x) + sc(z) - 2.0 * sc(y)));
                    });
}

SbMetric make_s1(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("s1 dimension must be >= 1");
    return SbMetric("s1", Carrier::reals(dim), 1.0, true,
                    [](const Point& x, const Point& y, const Point& z) {
                        double s = 0.0;
                        for (std::size_t i = 0; i < x.dimension(); ++i)
                            s += std::abs(x.coord(i) - z.coord(i)) +
                                 std::abs(y.coord(i) - z.coord(i));
                        return s;
                    });
}

BMetric make_abs_metric() {
    return BMetric("abs", Carrier::reals(1), 1.0,
                   [](const Point& x, const Point& y) { return std::abs(sc(x) - sc(y)); });
}

BMetric make_squared_diff_metric() {
    return BMetric("sqdiff", Carrier::reals(1), 2.0, [](const Point& x, const Point& y) {
        double d = sc(x) - sc(y);
        return d * d;
    });
}

BMetric make_l1_metric(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("l1 dimension must be >= 1");
    return BMetric("l1", Carrier::reals(dim), 1.0, [](const Point& x, const Point& y) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.dimension(); ++i) s += std::abs(x.coord(i) - y.coord(i));
        return s;
    });
}

namespace {

struct NameParam {
    std::string name;
    std::string param;  // empty when absent
};

NameParam split_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return {spec, ""};
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

std::size_t parse_dim(const std::string& text) {
    double v = parse_rational(text);
    auto n = static_cast<std::size_t>(v);
    if (v <= 0 || static_cast<double>(n) != v)
        throw std::invalid_argument("dimension must be a positive integer: '" + text + "'");
    return n;
}

[[noreturn]] void unknown(const std::string& spec) {
    throw std::invalid_argument("unknown metric '" + spec + "'");
}

}  // namespace

SbMetric builtin_sb(const std::string& spec) {
    auto [name, param] = split_spec(spec);
    if (name == "ex2_1") return make_ex2_1();
    if (name == "ex2_2") return param.empty() ? make_ex2_2() : make_ex2_2(parse_rational(param));
    if (name == "ex2_3") return make_ex2_3();
    if (name == "ex2_5") return make_ex2_5();
    if (name == "ex2_6") return param.empty() ? make_ex2_6() : make_ex2_6(parse_rational(param));
    if (name == "s1") return param.empty() ? make_s1() : make_s1(parse_dim(param));
    unknown(spec);
}

BMetric builtin_b(const std::string& spec) {
    auto [name, param] = split_spec(spec);
    if (name == "abs") return make_abs_metric();
    if (name == "sqdiff") return make_squared_diff_metric();
    if (name == "l1") return param.empty() ? make_l1_metric() : make_l1_metric(parse_dim(param));
    unknown(spec);
}

std::vector<std::string> catalog_sb_names() {
    return {"ex2_1", "ex2_2", "ex2_3", "ex2_5", "ex2_6", "s1"};
}

std::vector<std::string> catalog_b_names() { return {"abs", "sqdiff", "l1"}; }

std::string catalog_describe(const std::string& name) {
    if (name == "ex2_1") return "(|x-y|+|y-z|+|x-z|)^2/16 on R, b=4, symmetric";
    if (name == "ex2_2") return "(|x-y|+|y-z|+|x-z|)^p on R, p>1 (default 2, suffix :p), b=3^(p-1), symmetric";
    if (name == "ex2_3") return "four-case metric on R (S(0,0,1)=2, S(1,1,0)=4, diag 0, else 1), b=2, non-symmetric";
    if (name == "ex2_5") return "|x-z|+|x+z-2y| on R, b=1, symmetric";
    if (name == "ex2_6") return "c*(|x-z|+|x+z-2y|) on R, c>=1 (default 1, suffix :c), b=c, symmetric";
    if (name == "s1") return "sum|x_i-z_i| + sum|y_i-z_i| on R^n (default n=1, suffix :n), b=1, symmetric";
    if (name == "abs") return "|x-y| on R, b=1";
    if (name == "sqdiff") return "|x-y|^2 on R, b=2";
    if (name == "l1") return "sum|x_i-y_i| on R^n (default n=1, suffix :n), b=1";
    unknown(name);
}

}  // namespace sbm
