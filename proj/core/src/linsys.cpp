#include "sbmetric/linsys.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sbmetric/catalog.hpp"
#include "sbmetric/numeric.hpp"

namespace sbm {

Matrix::Matrix(std::size_t n, double fill) : n_(n), a_(n * n, fill) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

LinearSystem make_system(Matrix a, std::vector<double> rhs, SystemForm form) {
    if (a.size() == 0) throw std::invalid_argument("linear system needs n >= 1");
    if (rhs.size() != a.size())
        throw std::invalid_argument("right-hand side length does not match the matrix order");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!std::isfinite(rhs[i])) throw std::invalid_argument("non-finite right-hand side entry");
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!std::isfinite(a.at(i, j))) throw std::invalid_argument("non-finite matrix entry");
    }
    return LinearSystem{std::move(a), std::move(rhs), form};
}

double column_sum_norm(const Matrix& a) {
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a.at(i, j));
        worst = std::max(worst, s);
    }
    return worst;
}

LinearSystem to_fixed_point_form(const LinearSystem& sys) {
    if (sys.form != SystemForm::standard)
        throw std::invalid_argument("to_fixed_point_form expects a standard-form system");
    const std::size_t n = sys.a.size();
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = (i == j ? 1.0 : 0.0) - sys.a.at(i, j);
    return LinearSystem{std::move(a), sys.rhs, SystemForm::fixed_point};
}

std::vector<double> direct_solve(Matrix c, std::vector<double> d) {
    const std::size_t n = c.size();
    if (n == 0 || d.size() != n)
        throw std::invalid_argument("direct_solve: empty system or size mismatch");
    constexpr double pivot_floor = 1e-12;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(c.at(i, k)) > std::abs(c.at(pivot, k))) pivot = i;
        if (std::abs(c.at(pivot, k)) <= pivot_floor)
            throw std::runtime_error("direct_solve: singular matrix (pivot below threshold)");
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(c.at(k, j), c.at(pivot, j));
            std::swap(d[k], d[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            double f = c.at(i, k) / c.at(k, k);
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) c.at(i, j) -= f * c.at(k, j);
            d[i] -= f * d[k];
        }
    }

    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = d[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= c.at(i, j) * x[j];
        x[i] = s / c.at(i, i);
    }
    return x;
}

SelfMap make_linear_map(const Matrix& a, const std::vector<double>& offset) {
    if (offset.size() != a.size())
        throw std::invalid_argument("linear map offset length does not match the matrix order");
    Matrix m = a;
    std::vector<double> off = offset;
    return {"linear:" + std::to_string(a.size()), [m, off](const Point& x) {
                const std::size_t n = m.size();
                std::vector<double> out(n);
                for (std::size_t i = 0; i < n; ++i) {
                    double s = off[i];
                    for (std::size_t j = 0; j < n; ++j) s += m.at(i, j) * x.coord(j);
                    out[i] = s;
                }
                return Point::real_unchecked(std::move(out));
            }};
}

IterativeSolveResult solve_iterative(const LinearSystem& sys, double eps, std::size_t max_iters) {
    if (sys.form != SystemForm::fixed_point)
        throw std::invalid_argument(
            "solve_iterative expects fixed-point form; convert with to_fixed_point_form");

    IterativeSolveResult res;
    res.h = column_sum_norm(sys.a);
    res.certified = res.h < 1.0;

    SbMetric metric = make_s1(sys.a.size());
    SelfMap map = make_linear_map(sys.a, sys.rhs);
    if (res.certified) res.certificate = make_certificate(CertKind::banach, 1.0, res.h);

    res.trace = picard(metric, map, Point::real(sys.rhs), res.certificate, eps, max_iters);
    if (!res.certified)
        res.trace.warning = "column-sum norm " + fmt_double(res.h) +
                            " >= 1: no contraction certificate, heuristic stopping";
    if (res.trace.fixed_point) res.solution = res.trace.fixed_point->coords();
    return res;
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::invalid_argument("parse error: " + what);
}

double next_number(std::istringstream& in, const std::string& what) {
    std::string tok;
    if (!(in >> tok)) parse_fail("missing " + what);
    try {
        return parse_rational(tok);
    } catch (const std::invalid_argument&) {
        parse_fail("bad " + what + " '" + tok + "'");
    }
}

void expect_end(std::istringstream& in, const std::string& what) {
    std::string tok;
    if (in >> tok) parse_fail("trailing data in " + what + ": '" + tok + "'");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

Matrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok)) parse_fail("empty matrix file");
    long n = 0;
    try {
        std::size_t used = 0;
        n = std::stol(tok, &used);
        if (used != tok.size()) parse_fail("matrix order '" + tok + "'");
    } catch (const std::exception&) {
        parse_fail("matrix order '" + tok + "'");
    }
    if (n < 1) parse_fail("matrix order must be >= 1");

    Matrix m(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) m.at(i, j) = next_number(in, "matrix entry");
    expect_end(in, "matrix file");
    return m;
}

std::vector<double> parse_vector_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<double> v;
    std::string tok;
    while (in >> tok) {
        try {
            v.push_back(parse_rational(tok));
        } catch (const std::invalid_argument&) {
            parse_fail("bad vector entry '" + tok + "'");
        }
    }
    if (v.empty()) parse_fail("empty vector file");
    return v;
}

Matrix read_matrix_file(const std::string& path) { return parse_matrix_text(slurp(path)); }

std::vector<double> read_vector_file(const std::string& path) {
    return parse_vector_text(slurp(path));
}

std::string format_solution(const std::vector<double>& x) {
    std::string out;
    for (double v : x) {
        out += fmt_double(v);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace sbm
