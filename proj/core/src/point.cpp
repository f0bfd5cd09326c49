#include "sbmetric/point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sbmetric/numeric.hpp"

namespace sbm {

Point Point::real(std::vector<double> coords) {
    if (coords.empty()) throw std::invalid_argument("point needs at least one coordinate");
    for (double c : coords)
        if (!std::isfinite(c)) throw std::invalid_argument("point coordinates must be finite");
    Point p;
    p.value_ = std::move(coords);
    return p;
}

Point Point::real_unchecked(std::vector<double> coords) {
    Point p;
    p.value_ = std::move(coords);
    return p;
}

Point Point::scalar(double x) { return real({x}); }

Point Point::label(std::string id) {
    if (id.empty()) throw std::invalid_argument("empty label");
    Point p;
    p.value_ = std::move(id);
    return p;
}

bool Point::is_label() const noexcept { return std::holds_alternative<std::string>(value_); }
bool Point::is_real() const noexcept { return !is_label(); }

std::size_t Point::dimension() const noexcept {
    if (is_label()) return 0;
    return std::get<std::vector<double>>(value_).size();
}

const std::vector<double>& Point::coords() const {
    if (is_label()) throw std::invalid_argument("labeled point has no coordinates");
    return std::get<std::vector<double>>(value_);
}

double Point::coord(std::size_t i) const { return coords().at(i); }

const std::string& Point::label_id() const {
    if (!is_label()) throw std::invalid_argument("coordinate point has no label");
    return std::get<std::string>(value_);
}

bool Point::finite() const noexcept {
    if (is_label()) return true;
    for (double c : std::get<std::vector<double>>(value_))
        if (!std::isfinite(c)) return false;
    return true;
}

std::string Point::to_text() const {
    if (is_label()) return label_id();
    const auto& c = coords();
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += fmt_double(c[i]);
    }
    return out;
}

bool Point::operator==(const Point& other) const {
    if (is_label() != other.is_label()) return false;
    if (is_label()) return label_id() == other.label_id();
    return std::get<std::vector<double>>(value_) == std::get<std::vector<double>>(other.value_);
}

double coord_distance_inf(const Point& a, const Point& b) {
    if (a.is_label() || b.is_label()) {
        if (a == b) return 0.0;
        return std::numeric_limits<double>::infinity();
    }
    const auto& ca = a.coords();
    const auto& cb = b.coords();
    if (ca.size() != cb.size()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < ca.size(); ++i) d = std::max(d, std::abs(ca[i] - cb[i]));
    return d;
}

Carrier Carrier::reals(std::size_t dimension) {
    if (dimension == 0) throw std::invalid_argument("carrier dimension must be >= 1");
    Carrier c;
    c.finite_ = false;
    c.dim_ = dimension;
    return c;
}

Carrier Carrier::finite(std::vector<Point> elements) {
    if (elements.empty()) throw std::invalid_argument("finite carrier must be nonempty");
    Carrier c;
    c.finite_ = true;
    c.dim_ = elements.front().dimension();
    for (const auto& e : elements)
        if (e.dimension() != c.dim_)
            throw std::invalid_argument("finite carrier elements must share one dimension");
    c.elements_ = std::move(elements);
    return c;
}

const std::vector<Point>& Carrier::elements() const {
    if (!finite_) throw std::invalid_argument("continuous carrier has no element list");
    return elements_;
}

bool Carrier::contains(const Point& p) const {
    if (finite_) return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
    return p.is_real() && p.dimension() == dim_ && p.finite();
}

std::string Carrier::to_text() const {
    if (finite_) return "finite(" + std::to_string(elements_.size()) + ")";
    return "R^" + std::to_string(dim_);
}

}  // namespace sbm
