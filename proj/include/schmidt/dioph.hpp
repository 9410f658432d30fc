/**
 * @file dioph.hpp
 * @brief Finite-depth membership diagnostics for Bad(delta) and Dir(delta):
 *        continued fractions, convergents, witness enumeration, and the
 *        complement identity |x - p/q| < delta/q^2 vs >= delta/q^2.
 */
#pragma once

#include "schmidt/rational.hpp"

#include <vector>

namespace schmidt {

/// Euclidean continued fraction [a0; a1, ...] with the last term >= 2 for
/// non-integers. Reconstructing the convergent returns x exactly.
std::vector<Int> continued_fraction(const Rat& x);

/// Exact value of a finite continued fraction [a0; a1, ...].
Rat cf_value(const std::vector<Int>& terms);

/// Convergents p_k/q_k of x, ascending in k (the last equals x).
std::vector<Rat> convergents(const Rat& x);

/// A real given exactly (rational) or as a finite continued-fraction
/// truncation with an explicit enclosure radius.
struct RealSpec {
    enum class Kind { Rational, CfTerms };
    Kind kind;
    Rat rational;
    std::vector<Int> terms;

    static RealSpec from_rational(Rat x) {
        return RealSpec{Kind::Rational, std::move(x), {}};
    }
    static RealSpec from_cf(std::vector<Int> t) {
        if (t.empty()) throw std::domain_error("RealSpec: empty continued fraction");
        return RealSpec{Kind::CfTerms, Rat(0), std::move(t)};
    }

    Rat value() const { return kind == Kind::Rational ? rational : cf_value(terms); }

    /// 0 for exact rationals; the gap to the previous convergent otherwise.
    Rat enclosure() const;
};

struct DirWitness {
    Int p, q;
    Rat dist;     // |x - p/q| on the (truncated) value
    bool certain; // verdict stable under the enclosure radius
};

/// All reduced p/q with q <= q_max and |x - p/q| < delta/q^2 (strict).
std::vector<DirWitness> dir_witnesses(const RealSpec& x, const Rat& delta, const Int& q_max);

/// True iff |x - p/q| >= delta/q^2 for every reduced p/q with Q <= q <= q_max.
bool bad_check(const RealSpec& x, const Rat& delta, const Int& Q, const Int& q_max);

} // namespace schmidt
