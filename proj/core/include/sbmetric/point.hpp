#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace sbm {

/// An element of a carrier space: either a real vector of fixed dimension
/// or a labeled element of a finite set.
///
/// Point equality is exact (coordinate-wise ==, or label identity).
/// Tolerances apply to distance values, never to point identity.
class Point {
public:
    Point() = default;

    /// Real-vector point; throws std::invalid_argument on NaN/infinite
    /// coordinates or an empty coordinate list.
    static Point real(std::vector<double> coords);

    /// Same as real() but without the finiteness check. Iteration engines
    /// use this so that a diverging orbit can be observed and reported
    /// instead of throwing inside the map.
    static Point real_unchecked(std::vector<double> coords);

    static Point scalar(double x);
    static Point label(std::string id);

    [[nodiscard]] bool is_label() const noexcept;
    [[nodiscard]] bool is_real() const noexcept;

    /// Coordinate count; 0 for labeled points.
    [[nodiscard]] std::size_t dimension() const noexcept;

    [[nodiscard]] const std::vector<double>& coords() const;
    [[nodiscard]] double coord(std::size_t i) const;
    [[nodiscard]] const std::string& label_id() const;

    /// True when all coordinates are finite (labels are always finite).
    [[nodiscard]] bool finite() const noexcept;

    /// Stable text form: "4", "1,2.5,-3", or the label id.
    [[nodiscard]] std::string to_text() const;

    bool operator==(const Point& other) const;
    bool operator!=(const Point& other) const { return !(*this == other); }

private:
    std::variant<std::vector<double>, std::string> value_;
};

/// Max-norm distance between coordinate vectors. For labels: 0 when equal,
/// +infinity otherwise (distinct labels are never "close").
[[nodiscard]] double coord_distance_inf(const Point& a, const Point& b);

/// The domain a metric is defined over: R^n or an explicit finite set.
class Carrier {
public:
    static Carrier reals(std::size_t dimension);
    static Carrier finite(std::vector<Point> elements);

    [[nodiscard]] bool is_finite_set() const noexcept { return finite_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<Point>& elements() const;

    /// Membership test: dimension/kind match for R^n (finite coordinates
    /// required), exact element-of for finite sets.
    [[nodiscard]] bool contains(const Point& p) const;

    [[nodiscard]] std::string to_text() const;  // "R^1", "finite(3)"

private:
    Carrier() = default;
    bool finite_ = false;
    std::size_t dim_ = 1;
    std::vector<Point> elements_;
};

}  // namespace sbm
