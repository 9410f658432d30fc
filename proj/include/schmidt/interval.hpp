/**
 * @file interval.hpp
 * @brief Closed balls on R (Interval) and on R^d under the sup norm (BallD),
 *        stored as (center, radius) with exact rational endpoints.
 */
#pragma once

#include "schmidt/rational.hpp"

#include <vector>

namespace schmidt {

struct Interval {
    Rat center;
    Rat radius; // >= 0

    Interval() : center(0), radius(0) {}
    Interval(Rat c, Rat r) : center(std::move(c)), radius(std::move(r)) {
        if (radius < 0) throw std::domain_error("Interval: negative radius");
    }
    static Interval from_endpoints(const Rat& lo, const Rat& hi) {
        if (lo > hi) throw std::domain_error("Interval: lo > hi");
        return Interval((lo + hi) / 2, (hi - lo) / 2);
    }

    Rat lo() const { return center - radius; }
    Rat hi() const { return center + radius; }
    Rat diam() const { return 2 * radius; }

    bool contains(const Rat& x) const { return lo() <= x && x <= hi(); }
    bool contains(const Interval& other) const { return lo() <= other.lo() && other.hi() <= hi(); }
    bool properly_contains(const Interval& other) const {
        return contains(other) && !(lo() == other.lo() && hi() == other.hi());
    }
    bool intersects(const Interval& other) const { return lo() <= other.hi() && other.lo() <= hi(); }

    /// Distance from the ball to a point (0 inside).
    Rat dist(const Rat& x) const {
        if (x < lo()) return lo() - x;
        if (x > hi()) return x - hi();
        return Rat(0);
    }

    bool operator==(const Interval& other) const {
        return center == other.center && radius == other.radius;
    }
};

/// Closed sup-norm ball in R^d: the product of per-coordinate intervals.
struct BallD {
    std::vector<Rat> center;
    Rat radius; // > 0
    int dim;

    BallD(std::vector<Rat> c, Rat r)
        : center(std::move(c)), radius(std::move(r)), dim(static_cast<int>(center.size())) {
        if (dim < 1) throw std::domain_error("BallD: dimension must be positive");
        if (radius <= 0) throw std::domain_error("BallD: radius must be positive");
    }

    Rat lo(int i) const { return center[static_cast<size_t>(i)] - radius; }
    Rat hi(int i) const { return center[static_cast<size_t>(i)] + radius; }

    Interval axis(int i) const { return Interval(center[static_cast<size_t>(i)], radius); }

    bool contains(const BallD& other) const {
        if (other.dim != dim) return false;
        for (int i = 0; i < dim; ++i)
            if (!(lo(i) <= other.lo(i) && other.hi(i) <= hi(i))) return false;
        return true;
    }

    bool operator==(const BallD& other) const {
        return dim == other.dim && radius == other.radius && center == other.center;
    }
};

} // namespace schmidt
