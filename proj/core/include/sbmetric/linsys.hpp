#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sbmetric/fixpoint.hpp"

namespace sbm {

/// Dense square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0);
    static Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    [[nodiscard]] double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

enum class SystemForm {
    fixed_point,  // x = A x + rhs
    standard,     // A x = rhs
};

struct LinearSystem {
    Matrix a;
    std::vector<double> rhs;
    SystemForm form = SystemForm::fixed_point;
};

/// Validates shape and finiteness; throws std::invalid_argument.
LinearSystem make_system(Matrix a, std::vector<double> rhs,
                         SystemForm form = SystemForm::fixed_point);

/// max over columns j of sum_i |a_ij|. Strictly below 1 it is a
/// contraction constant for x -> Ax + rhs in the s1 metric.
double column_sum_norm(const Matrix& a);

/// Rewrite C x = d as x = (I - C) x + d, which has the same solutions.
/// Throws std::invalid_argument unless the input form is standard.
LinearSystem to_fixed_point_form(const LinearSystem& sys);

/// Gaussian elimination with partial pivoting; the independent check for
/// the iterative path. Throws std::invalid_argument on shape mismatch and
/// std::runtime_error when a pivot magnitude falls to 1e-12 or below.
std::vector<double> direct_solve(Matrix c, std::vector<double> d);

/// x -> A x + offset on R^n.
SelfMap make_linear_map(const Matrix& a, const std::vector<double>& offset);

struct IterativeSolveResult {
    std::vector<double> solution;  // empty unless the trace converged
    IterationTrace trace;
    ContractionCertificate certificate;  // kind none when h >= 1
    double h = 0.0;                      // column_sum_norm of the iterated matrix
    bool certified = false;
};

/// Solve x = A x + rhs by iteration in the s1 metric from x0 = rhs.
/// When column_sum_norm(A) < 1 the run carries a banach certificate with
/// b = 1 and certified stopping; otherwise it runs heuristically and the
/// trace carries a warning. The system must be in fixed_point form.
IterativeSolveResult solve_iterative(const LinearSystem& sys, double eps = 1e-10,
                                     std::size_t max_iters = 10000);

// File formats.
//
// Matrix file: first token is the order n, followed by n rows of n
// whitespace-separated decimals. Vector file: whitespace-separated
// decimals, newlines permitted. Solutions are written one component per
// line with 17 significant digits.

Matrix read_matrix_file(const std::string& path);
std::vector<double> read_vector_file(const std::string& path);

Matrix parse_matrix_text(const std::string& text);
std::vector<double> parse_vector_text(const std::string& text);

std::string format_solution(const std::vector<double>& x);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sbm
