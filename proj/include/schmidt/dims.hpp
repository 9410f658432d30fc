/**
 * @file dims.hpp
 * @brief Closed-form Hausdorff-dimension bounds, the per-step hole counts N
 *        and N_R, the auxiliary count inequality, the one-level cover
 *        construction on R, and parameter-transfer helpers.
 */
#pragma once

#include "schmidt/decimal.hpp"
#include "schmidt/interval.hpp"
#include "schmidt/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schmidt {

struct BoundInputs {
    int d;    // >= 1
    long s;   // >= d
    long j;   // >= 2
    Rat beta; // in (0, 1/2]

    BoundInputs(int d_, long s_, long j_, Rat beta_) : d(d_), s(s_), j(j_), beta(std::move(beta_)) {
        if (d < 1) throw std::domain_error("BoundInputs: d must be >= 1");
        if (s < d) throw std::domain_error("BoundInputs: s must be >= d");
        if (j < 2) throw std::domain_error("BoundInputs: j must be >= 2");
        if (!(0 < beta && beta <= make_rat(1, 2)))
            throw std::domain_error("BoundInputs: beta must lie in (0, 1/2]");
    }

    bool integer_inv_beta() const { return beta.get_num() == 1; }
};

enum class HoleVariant { IntegerBeta, General };

/// N = (j^s b^-s-1 + 1)^d - j^sd b^-sd (IntegerBeta, needs 1/beta integral)
/// or N_R = (ceil(j^s b^-s-1) + 1)^d - (floor(j^s b^-s) - 1)^d (General).
Int hole_count(const BoundInputs& in, HoleVariant variant);

/// A rendered high-precision value plus a double approximation for callers
/// that only compare magnitudes.
struct DecimalValue {
    std::string text;
    double approx;
    long precision;
};

struct UpperBound {
    Int n_real;
    std::optional<Int> n_int;
    DecimalValue zeta_general;                // from N_R
    std::optional<DecimalValue> zeta_integer; // from N, when 1/beta is integral
    std::string expr_general;
    std::string expr_integer;
};

/// Upper bound for dim_H of a (1/j, beta)-ubiquitously losing set; both
/// variants are strictly < d (guaranteed by the exact count inequality).
UpperBound upper_bound_ubiq_losing(const BoundInputs& in, long digits = 50);

/// d * log(floor(1/beta)) / (-log(alpha*beta)); 0 when floor(1/beta) = 1.
DecimalValue lower_bound_winning(int d, const Rat& alpha, const Rat& beta, long digits = 50);

struct BadDeltaBounds {
    std::optional<DecimalValue> lower;              // delta < 1/18 only
    std::optional<DecimalValue> upper;              // general form
    std::optional<DecimalValue> upper_integer_case; // sharper, 18/delta integral
    bool empty_set; // 5*delta^2 >= 1: the set is empty
    long precision;
};

BadDeltaBounds bad_delta_bounds(const Rat& delta, long digits = 50);

/// N log(floor((1/(18 delta 3^{N-1}))^{1/N})) / log(1/(6 delta)).
DecimalValue intersection_bound(long n_translates, const Rat& delta, long digits = 50);

/// Exact check: j^d * N_R(d,s,j,beta) < j^{(s+1)d} * beta^{-(s+1)d}.
bool aux_inequality_holds(const BoundInputs& in);

enum class TransferMode { LosingInvariance, BiggerAlpha, BilipschitzK, BilipschitzKL };

struct TransferResult {
    Rat alpha;
    Rat beta; // beta or beta0, per mode
};

/// alpha*beta = alpha'*beta' with beta' <= beta.
TransferResult transfer_losing_invariance(const Rat& alpha, const Rat& beta, const Rat& alpha_new);
/// (alpha | beta0) -> (alpha' | alpha*beta0/alpha') for alpha < alpha'.
TransferResult transfer_bigger_alpha(const Rat& alpha, const Rat& beta0, const Rat& alpha_new);
/// (alpha | beta0) -> (alpha*K^2 | beta0*K^-2), bilipschitz constant K >= 1.
TransferResult transfer_bilipschitz_k(const Rat& alpha, const Rat& beta0, const Rat& K);
/// (alpha | beta0) -> (alpha*K*L | beta0*(K*L)^-1), Lipschitz constants K, L.
TransferResult transfer_bilipschitz_kl(const Rat& alpha, const Rat& beta0, const Rat& K, const Rat& L);

struct CoverLevel {
    int t;
    Rat cell_radius;                    // R'_t
    std::vector<Interval> cells;        // the collection C_t, |C_t| = (j*N)^t
    std::vector<Interval> holes;        // removed balls at this level
    std::vector<Interval> remaining;    // F_t as a closed-interval union
};

struct CoverBuild {
    HoleVariant variant;
    Int per_hole_count; // N or N_R
    std::vector<CoverLevel> levels;
    std::vector<Interval> shifted_initial_balls; // the 3 translated copies of B_1
};

/// The level-by-level cover construction on R (d = 1, j = 2): Alice's
/// j-refinement cells, Farey-strategy holes, and the per-hole cover of
/// exactly N (or N_R) grid cells of radius R'_t. Requires T <= 4 and
/// rho(B_1) <= 1/2.
CoverBuild build_cover_levels(const Interval& B1, const BoundInputs& in, int T);

} // namespace schmidt
