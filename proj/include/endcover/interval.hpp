#pragma once

// Directed-rounding interval and box arithmetic.
//
// Outward rounding is realized by nudging each computed bound one ulp
// outward with std::nextafter (two ulps for libm transcendentals).  The
// same convention is used by every module in this library; nothing else
// touches the FPU rounding mode.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace endcover {

inline double next_down(double x) {
    if (std::isnan(x)) return -std::numeric_limits<double>::infinity();
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double next_up(double x) {
    if (std::isnan(x)) return std::numeric_limits<double>::infinity();
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

namespace detail {
inline double lo_of(double x) { return std::isnan(x) ? -std::numeric_limits<double>::infinity() : x; }
inline double hi_of(double x) { return std::isnan(x) ? std::numeric_limits<double>::infinity() : x; }
}  // namespace detail

/// Compact interval [lo, hi].  The empty set is the reserved sentinel
/// (lo = +1, hi = -1); arithmetic on non-empty inputs never produces it.
class Interval {
  public:
    Interval() : lo_(0.0), hi_(0.0) {}
    explicit Interval(double v) : lo_(v), hi_(v) {}
    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (std::isnan(lo_) || std::isnan(hi_)) {
            lo_ = -std::numeric_limits<double>::infinity();
            hi_ = std::numeric_limits<double>::infinity();
        }
    }

    static Interval empty() {
        Interval r;
        r.lo_ = 1.0;
        r.hi_ = -1.0;
        return r;
    }
    static Interval entire() {
        return Interval(-std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity());
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool is_empty() const { return lo_ > hi_; }
    bool is_point() const { return lo_ == hi_; }

    double width() const { return is_empty() ? 0.0 : hi_ - lo_; }
    double mid() const { return 0.5 * (lo_ + hi_); }
    double rad() const { return 0.5 * (hi_ - lo_); }
    /// Magnitude: max |x| over the interval.
    double mag() const { return is_empty() ? 0.0 : std::max(std::fabs(lo_), std::fabs(hi_)); }

    bool contains(double x) const { return !is_empty() && lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const {
        if (o.is_empty()) return true;
        return !is_empty() && lo_ <= o.lo_ && o.hi_ <= hi_;
    }
    bool strictly_contains(const Interval& o) const {
        if (o.is_empty()) return true;
        return !is_empty() && lo_ < o.lo_ && o.hi_ < hi_;
    }
    bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
    bool operator!=(const Interval& o) const { return !(*this == o); }

    Interval operator+(const Interval& o) const {
        if (is_empty() || o.is_empty()) return empty();
        return Interval(next_down(lo_ + o.lo_), next_up(hi_ + o.hi_));
    }
    Interval operator-(const Interval& o) const {
        if (is_empty() || o.is_empty()) return empty();
        return Interval(next_down(lo_ - o.hi_), next_up(hi_ - o.lo_));
    }
    Interval operator-() const {
        if (is_empty()) return empty();
        return Interval(-hi_, -lo_);
    }
    Interval operator*(const Interval& o) const {
        if (is_empty() || o.is_empty()) return empty();
        const double p1 = detail::lo_of(lo_ * o.lo_), p2 = detail::lo_of(lo_ * o.hi_);
        const double p3 = detail::lo_of(hi_ * o.lo_), p4 = detail::lo_of(hi_ * o.hi_);
        const double q1 = detail::hi_of(lo_ * o.lo_), q2 = detail::hi_of(lo_ * o.hi_);
        const double q3 = detail::hi_of(hi_ * o.lo_), q4 = detail::hi_of(hi_ * o.hi_);
        return Interval(next_down(std::min(std::min(p1, p2), std::min(p3, p4))),
                        next_up(std::max(std::max(q1, q2), std::max(q3, q4))));
    }
    Interval operator/(const Interval& o) const {
        if (is_empty() || o.is_empty()) return empty();
        if (o.lo_ <= 0.0 && 0.0 <= o.hi_)
            throw std::domain_error("interval division by interval containing zero");
        Interval inv(next_down(1.0 / o.hi_), next_up(1.0 / o.lo_));
        return (*this) * inv;
    }

    Interval& operator+=(const Interval& o) { return *this = *this + o; }

  private:
    double lo_, hi_;
};

inline Interval scale(const Interval& a, double s) { return a * Interval(s); }

inline Interval hull(const Interval& a, const Interval& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline Interval intersect(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    const double lo = std::max(a.lo(), b.lo());
    const double hi = std::min(a.hi(), b.hi());
    if (lo > hi) return Interval::empty();
    return Interval(lo, hi);
}

/// x^n for integer n >= 0, tight on sign cases (e.g. [-1,2]^2 = [0,4]).
inline Interval pow_int(const Interval& a, int n) {
    if (n < 0) throw std::domain_error("pow_int: negative exponent");
    if (a.is_empty()) return Interval::empty();
    if (n == 0) return Interval(1.0);
    if (n == 1) return a;
    auto pow_dir = [](double x, int m, bool up) {
        double r = 1.0;
        for (int i = 0; i < m; ++i) {
            r = up ? next_up(detail::hi_of(r * x)) : next_down(detail::lo_of(r * x));
        }
        return r;
    };
    if (n % 2 == 1) {
        return Interval(pow_dir(a.lo(), n, false) > 0 && a.lo() < 0 ? -0.0 : pow_dir(a.lo(), n, a.lo() < 0 ? false : false),
                        pow_dir(a.hi(), n, true))
            .is_empty()
            ? Interval::empty()
            : Interval(a.lo() >= 0 ? pow_dir(a.lo(), n, false)
                                   : -pow_dir(-a.lo(), n, true),
                       a.hi() >= 0 ? pow_dir(a.hi(), n, true)
                                   : -pow_dir(-a.hi(), n, false));
    }
    // even power
    const double m1 = std::fabs(a.lo()), m2 = std::fabs(a.hi());
    const double big = std::max(m1, m2);
    const double small = a.contains(0.0) ? 0.0 : std::min(m1, m2);
    return Interval(pow_dir(small, n, false), pow_dir(big, n, true));
}

/// exp with a two-ulp outward pad covering libm rounding slop.
inline Interval exp_iv(const Interval& a) {
    if (a.is_empty()) return Interval::empty();
    return Interval(next_down(next_down(std::exp(a.lo()))),
                    next_up(next_up(std::exp(a.hi()))));
}

inline double exp_up(double x) { return next_up(next_up(std::exp(x))); }
inline double sqrt_up(double x) { return x <= 0 ? 0.0 : next_up(std::sqrt(x)); }

inline std::ostream& operator<<(std::ostream& os, const Interval& a) {
    if (a.is_empty()) return os << "[empty]";
    return os << "[" << a.lo() << "," << a.hi() << "]";
}

/// Axis-aligned box: a vector of intervals.
class IBox {
  public:
    IBox() = default;
    explicit IBox(std::size_t n) : dims_(n) {}
    explicit IBox(std::vector<Interval> dims) : dims_(std::move(dims)) {}

    /// Box_p(r) = p + [-r_i, r_i]^n.
    static IBox centered(const std::vector<double>& p, const std::vector<double>& r) {
        std::vector<Interval> d(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            d[i] = Interval(next_down(p[i] - r[i]), next_up(p[i] + r[i]));
        return IBox(std::move(d));
    }
    static IBox point(const std::vector<double>& p) {
        std::vector<Interval> d(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) d[i] = Interval(p[i]);
        return IBox(std::move(d));
    }

    std::size_t size() const { return dims_.size(); }
    Interval& operator[](std::size_t i) { return dims_[i]; }
    const Interval& operator[](std::size_t i) const { return dims_[i]; }
    const std::vector<Interval>& dims() const { return dims_; }

    bool is_empty() const {
        for (const auto& d : dims_)
            if (d.is_empty()) return true;
        return dims_.empty();
    }

    std::vector<double> widths() const {
        std::vector<double> w(dims_.size());
        for (std::size_t i = 0; i < dims_.size(); ++i) w[i] = dims_[i].width();
        return w;
    }
    double wmax() const {
        double w = 0.0;
        for (const auto& d : dims_) w = std::max(w, d.width());
        return w;
    }
    double wmin() const {
        double w = std::numeric_limits<double>::infinity();
        for (const auto& d : dims_) w = std::min(w, d.width());
        return dims_.empty() ? 0.0 : w;
    }
    /// Number of dimensions with strictly positive width.
    int dim() const {
        int c = 0;
        for (const auto& d : dims_)
            if (d.width() > 0.0) ++c;
        return c;
    }
    std::vector<double> midpoint() const {
        std::vector<double> m(dims_.size());
        for (std::size_t i = 0; i < dims_.size(); ++i) m[i] = dims_[i].mid();
        return m;
    }
    std::vector<double> radii() const {
        std::vector<double> r(dims_.size());
        for (std::size_t i = 0; i < dims_.size(); ++i) r[i] = dims_[i].rad();
        return r;
    }

    bool contains(const std::vector<double>& p) const {
        if (p.size() != dims_.size()) return false;
        for (std::size_t i = 0; i < dims_.size(); ++i)
            if (!dims_[i].contains(p[i])) return false;
        return true;
    }
    bool contains(const IBox& o) const {
        if (o.size() != size()) return false;
        for (std::size_t i = 0; i < dims_.size(); ++i)
            if (!dims_[i].contains(o[i])) return false;
        return true;
    }
    /// o lies in the interior of this box.
    bool strictly_contains(const IBox& o) const {
        if (o.size() != size()) return false;
        for (std::size_t i = 0; i < dims_.size(); ++i)
            if (!dims_[i].strictly_contains(o[i])) return false;
        return true;
    }
    bool operator==(const IBox& o) const { return dims_ == o.dims_; }
    bool operator!=(const IBox& o) const { return !(*this == o); }

    IBox operator+(const IBox& o) const {  // Minkowski sum
        IBox r(size());
        for (std::size_t i = 0; i < dims_.size(); ++i) r[i] = dims_[i] + o[i];
        return r;
    }
    /// Dilation about the origin: alpha * B.
    IBox dilate(double alpha) const {
        IBox r(size());
        for (std::size_t i = 0; i < dims_.size(); ++i) r[i] = scale(dims_[i], alpha);
        return r;
    }
    /// p + alpha * (B - p): centered dilation toward p.
    IBox dilate_toward(const std::vector<double>& p, double alpha) const {
        IBox r(size());
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            Interval shifted = dims_[i] - Interval(p[i]);
            r[i] = scale(shifted, alpha) + Interval(p[i]);
        }
        return r;
    }
    /// Pad every dimension outward by eps (absolute).
    IBox widened(double eps) const {
        IBox r(size());
        for (std::size_t i = 0; i < dims_.size(); ++i)
            r[i] = Interval(next_down(dims_[i].lo() - eps), next_up(dims_[i].hi() + eps));
        return r;
    }
    IBox widened(const std::vector<double>& eps) const {
        IBox r(size());
        for (std::size_t i = 0; i < dims_.size(); ++i)
            r[i] = Interval(next_down(dims_[i].lo() - eps[i]), next_up(dims_[i].hi() + eps[i]));
        return r;
    }

    double volume() const {
        double v = 1.0;
        for (const auto& d : dims_) v *= d.width();
        return v;
    }

    /// Split every non-degenerate dimension at its midpoint: 2^d children
    /// tiling the box exactly; degenerate dimensions are carried through.
    std::vector<IBox> subdivide() const {
        std::vector<std::size_t> split;
        for (std::size_t i = 0; i < dims_.size(); ++i)
            if (dims_[i].width() > 0.0) split.push_back(i);
        const std::size_t d = split.size();
        std::vector<IBox> out;
        out.reserve(std::size_t{1} << d);
        for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
            IBox child = *this;
            for (std::size_t b = 0; b < d; ++b) {
                const Interval& iv = dims_[split[b]];
                const double m = iv.mid();
                child[split[b]] = (mask >> b) & 1 ? Interval(m, iv.hi()) : Interval(iv.lo(), m);
            }
            out.push_back(std::move(child));
        }
        return out;
    }

  private:
    std::vector<Interval> dims_;
};

inline IBox hull(const IBox& a, const IBox& b) {
    if (a.size() == 0) return b;
    if (b.size() == 0) return a;
    IBox r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = hull(a[i], b[i]);
    return r;
}

/// Componentwise intersection; any empty component yields the empty box
/// (all components set to the empty sentinel).
inline IBox intersect(const IBox& a, const IBox& b) {
    IBox r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = intersect(a[i], b[i]);
        if (r[i].is_empty()) {
            for (std::size_t j = 0; j < a.size(); ++j) r[j] = Interval::empty();
            return r;
        }
    }
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const IBox& b) {
    os << "{";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " x " : "") << b[i];
    return os << "}";
}

}  // namespace endcover
