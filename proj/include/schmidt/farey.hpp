/**
 * @file farey.hpp
 * @brief Farey sequences on [0,1) and on R, mediants, minimal-order Farey
 *        elements of short intervals, half Farey partitions and their covers,
 *        and Farey half-intervals.
 *
 * A FareyFraction is a reduced p/q together with an integer translate k, so
 * its value is p/q + k. The Farey sequence of order n in R is the union of
 * the integer translates of F_n \ {1/1}; an interval I with 0 < diam(I) < 1
 * meets a unique lowest-order translate element, its minimal-order Farey
 * element, written anchor(I). Around the anchor sit two mediant chains (the
 * half Farey partition); consecutive partition gaps lie strictly between
 * 1/(6 q^2) and 1/q^2 for anchor order q.
 */
#pragma once

#include "schmidt/interval.hpp"
#include "schmidt/rational.hpp"

#include <vector>

namespace schmidt {

struct FareyFraction {
    Int p; // 0 <= p < q, or (p,q) = (0,1)
    Int q; // > 0, gcd(p,q) = 1
    Int k; // integer translate

    FareyFraction() : p(0), q(1), k(0) {}
    FareyFraction(Int p_, Int q_, Int k_);

    /// Canonical form of an arbitrary reduced value num/den.
    static FareyFraction from_value(const Rat& value);

    Rat value() const { return make_rat(p + k * q, q); }

    bool operator==(const FareyFraction& o) const { return p == o.p && q == o.q && k == o.k; }
    bool operator<(const FareyFraction& o) const { return value() < o.value(); }
};

/// F_n: ascending reduced fractions in [0,1) with q <= n, plus 1/1 (as 0/1+1).
std::vector<FareyFraction> farey_sequence(long n);

/// Mediant (p+p')/(q+q') of x < y written over a common translate.
FareyFraction mediant(const FareyFraction& x, const FareyFraction& y);

/// All reduced p/q + k in the closed interval [lo, hi] with q <= qmax, ascending.
std::vector<FareyFraction> fractions_in_interval(const Rat& lo, const Rat& hi, const Int& qmax);

/// The minimal-order Farey element of I and its order. Requires 0 < diam(I) < 1.
std::pair<FareyFraction, Int> minimal_order_farey_element(const Interval& I);

struct HalfFareyPartition {
    FareyFraction anchor;
    std::vector<FareyFraction> left_chain;  // ascending, anchor excluded
    std::vector<FareyFraction> right_chain; // ascending, anchor excluded
    Rat l; // q/b for F_q^Z neighbors a/b, p/q, c/d (1 for anchor order 1)
    Rat r; // q/d
    Interval cover;

    /// Ascending merged partition: left chain, anchor, right chain.
    std::vector<FareyFraction> ascending() const;
};

HalfFareyPartition half_farey_partition(const Interval& I);

struct FareyHalfInterval {
    FareyFraction anchor;
    Rat L; // anchor - left endpoint of I
    Rat R; // right endpoint of I - anchor
    Interval interval; // [anchor - L/2, anchor + R/2], diam = diam(I)/2
};

FareyHalfInterval farey_half_interval(const Interval& I);

} // namespace schmidt
