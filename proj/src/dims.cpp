#include "schmidt/dims.hpp"

#include "schmidt/strategies.hpp"

#include <algorithm>

namespace schmidt {

namespace {

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

DecimalValue render(const Decimal& d) { return {d.fixed(), d.approx(), d.digits()}; }

DecimalValue zero_value(long digits) { return render(Decimal(digits)); }

// ratio j^s * beta^{-s-1} and j^s * beta^{-s}
Rat outer_ratio(const BoundInputs& in) { return pow_rat(Rat(in.j), in.s) * pow_rat(in.beta, -(in.s + 1)); }
Rat inner_ratio(const BoundInputs& in) { return pow_rat(Rat(in.j), in.s) * pow_rat(in.beta, -in.s); }

} // namespace

Int hole_count(const BoundInputs& in, HoleVariant variant) {
    const unsigned long d = static_cast<unsigned long>(in.d);
    if (variant == HoleVariant::IntegerBeta) {
        if (!in.integer_inv_beta())
            throw std::domain_error("hole_count: integer_beta variant requires 1/beta integral");
        const Rat K = outer_ratio(in), M = inner_ratio(in);
        return ipow(K.get_num() + 1, d) - ipow(M.get_num(), d);
    }
    return ipow(ceil_rat(outer_ratio(in)) + 1, d) - ipow(floor_rat(inner_ratio(in)) - 1, d);
}

UpperBound upper_bound_ubiq_losing(const BoundInputs& in, long digits) {
    UpperBound out;
    out.n_real = hole_count(in, HoleVariant::General);
    const Rat scale = Rat(in.j) / in.beta; // per-step shrink factor base
    const std::string denom_expr = std::to_string(in.s + 1) + "*log(" + rat_str(scale) + ")";
    const Decimal log_scale = Decimal::log_of(scale, digits);
    const Decimal denom = Decimal::from_rat(Rat(in.s + 1), digits) * log_scale;
    const Decimal dlogj = Decimal::from_rat(Rat(in.d), digits) * Decimal::log_of(Rat(in.j), digits);

    out.zeta_general = render((dlogj + Decimal::log_of(Rat(out.n_real), digits)) / denom);
    out.expr_general =
        "(" + std::to_string(in.d) + "*log(" + std::to_string(in.j) + ") + log(" + out.n_real.get_str() +
        ")) / (" + denom_expr + ")";
    if (in.integer_inv_beta()) {
        out.n_int = hole_count(in, HoleVariant::IntegerBeta);
        out.zeta_integer = render((dlogj + Decimal::log_of(Rat(*out.n_int), digits)) / denom);
        out.expr_integer =
            "(" + std::to_string(in.d) + "*log(" + std::to_string(in.j) + ") + log(" +
            out.n_int->get_str() + ")) / (" + denom_expr + ")";
    }
    return out;
}

DecimalValue lower_bound_winning(int d, const Rat& alpha, const Rat& beta, long digits) {
    if (d < 1) throw std::domain_error("lower_bound_winning: d must be >= 1");
    if (!(0 < alpha && alpha < 1 && 0 < beta && beta < 1))
        throw std::domain_error("lower_bound_winning: alpha, beta must lie in (0,1)");
    const Int f = floor_rat(1 / beta);
    if (f == 1) return zero_value(digits);
    const Decimal num = Decimal::from_rat(Rat(d), digits) * Decimal::log_of(Rat(f), digits);
    const Decimal den = Decimal::log_of(1 / (alpha * beta), digits);
    return render(num / den);
}

BadDeltaBounds bad_delta_bounds(const Rat& delta, long digits) {
    if (delta <= 0) throw std::domain_error("bad_delta_bounds: delta must be positive");
    BadDeltaBounds out;
    out.precision = digits;
    out.empty_set = 5 * delta * delta >= 1;
    if (delta < make_rat(1, 18)) {
        const Int f = floor_rat(1 / (18 * delta));
        const Decimal den = Decimal::log_of(1 / (6 * delta), digits);
        out.lower = render(Decimal::log_of(Rat(f), digits) / den);
    }
    if (delta <= 9) {
        const Decimal den =
            Decimal::from_rat(Rat(2), digits) * Decimal::log_of(36 / delta, digits);
        const Int C = ceil_rat(648 / (delta * delta)) - floor_rat(36 / delta) + 2;
        out.upper = render((Decimal::log_of(Rat(2), digits) + Decimal::log_of(Rat(C), digits)) / den);
        const Rat ratio = 18 / delta;
        if (ratio.get_den() == 1) {
            const Rat E = 1 - delta / 18 + delta * delta / 648;
            out.upper_integer_case =
                render(Decimal::from_rat(Rat(1), digits) + Decimal::log_of(E, digits) / den);
        }
    }
    return out;
}

DecimalValue intersection_bound(long n_translates, const Rat& delta, long digits) {
    if (n_translates < 1) throw std::domain_error("intersection_bound: N must be >= 1");
    const Rat limit = pow_rat(Rat(3), 1 - n_translates) / 18;
    if (!(0 < delta && delta < limit))
        throw std::domain_error("intersection_bound: requires 0 < delta < 3^(1-N)/18");
    const Rat arg = 1 / (18 * delta * pow_rat(Rat(3), n_translates - 1));
    const Int f = root_floor(arg, static_cast<unsigned long>(n_translates));
    if (f == 1) return zero_value(digits);
    const Decimal num =
        Decimal::from_rat(Rat(n_translates), digits) * Decimal::log_of(Rat(f), digits);
    return render(num / Decimal::log_of(1 / (6 * delta), digits));
}

bool aux_inequality_holds(const BoundInputs& in) {
    const Int lhs = ipow(Int(in.j), static_cast<unsigned long>(in.d)) *
                    hole_count(in, HoleVariant::General);
    const Rat rhs = pow_rat(Rat(in.j) / in.beta, (in.s + 1) * in.d);
    return Rat(lhs) < rhs;
}

TransferResult transfer_losing_invariance(const Rat& alpha, const Rat& beta, const Rat& alpha_new) {
    if (!(0 < alpha && alpha < 1 && 0 < beta && beta < 1))
        throw std::domain_error("transfer: alpha, beta must lie in (0,1)");
    if (!(0 < alpha_new && alpha_new < 1)) throw std::domain_error("transfer: alpha' must lie in (0,1)");
    const Rat beta_new = alpha * beta / alpha_new;
    if (!(beta_new <= beta))
        throw std::domain_error("transfer: beta' <= beta fails for this alpha'");
    if (!(beta_new < 1)) throw std::domain_error("transfer: beta' must lie in (0,1)");
    return {alpha_new, beta_new};
}

TransferResult transfer_bigger_alpha(const Rat& alpha, const Rat& beta0, const Rat& alpha_new) {
    if (!(0 < alpha && alpha < alpha_new && alpha_new < 1))
        throw std::domain_error("transfer: requires 0 < alpha < alpha' < 1");
    if (!(0 < beta0 && beta0 < 1)) throw std::domain_error("transfer: beta0 must lie in (0,1)");
    return {alpha_new, alpha * beta0 / alpha_new};
}

TransferResult transfer_bilipschitz_k(const Rat& alpha, const Rat& beta0, const Rat& K) {
    if (K < 1) throw std::domain_error("transfer: bilipschitz constant K must be >= 1");
    if (!(0 < alpha && alpha * K * K < 1))
        throw std::domain_error("transfer: requires alpha*K^2 < 1");
    if (!(0 < beta0 && beta0 < 1)) throw std::domain_error("transfer: beta0 must lie in (0,1)");
    return {alpha * K * K, beta0 / (K * K)};
}

TransferResult transfer_bilipschitz_kl(const Rat& alpha, const Rat& beta0, const Rat& K, const Rat& L) {
    if (K <= 0 || L <= 0) throw std::domain_error("transfer: K, L must be positive");
    if (K * L < 1) throw std::domain_error("transfer: K*L must be >= 1");
    if (!(0 < alpha && alpha * K * L < 1))
        throw std::domain_error("transfer: requires alpha*K*L < 1");
    if (!(0 < beta0 && beta0 < 1)) throw std::domain_error("transfer: beta0 must lie in (0,1)");
    return {alpha * K * L, beta0 / (K * L)};
}

namespace {

// Closed-interval union minus a closed ball (closure kept, degenerates dropped).
std::vector<Interval> subtract_hole(const std::vector<Interval>& set, const Interval& hole) {
    std::vector<Interval> out;
    for (const Interval& f : set) {
        if (hole.hi() <= f.lo() || hole.lo() >= f.hi()) {
            out.push_back(f);
            continue;
        }
        if (f.lo() < hole.lo()) out.push_back(Interval::from_endpoints(f.lo(), hole.lo()));
        if (hole.hi() < f.hi()) out.push_back(Interval::from_endpoints(hole.hi(), f.hi()));
    }
    return out;
}

std::vector<Interval> merge_union(std::vector<Interval> xs) {
    std::sort(xs.begin(), xs.end(), [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
    std::vector<Interval> out;
    for (const Interval& x : xs) {
        if (!out.empty() && x.lo() <= out.back().hi()) {
            if (x.hi() > out.back().hi())
                out.back() = Interval::from_endpoints(out.back().lo(), x.hi());
        } else {
            out.push_back(x);
        }
    }
    return out;
}

bool subset_of_union(const std::vector<Interval>& fs, const std::vector<Interval>& cover) {
    const auto merged = merge_union(cover);
    for (const Interval& f : fs) {
        bool inside = false;
        for (const Interval& m : merged) {
            if (m.lo() <= f.lo() && f.hi() <= m.hi()) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

} // namespace

CoverBuild build_cover_levels(const Interval& B1, const BoundInputs& in, int T) {
    if (in.d != 1) throw std::domain_error("build_cover_levels: implemented for d = 1");
    if (in.j != 2) throw std::domain_error("build_cover_levels: hole strategy requires j = 2");
    if (T < 1 || T > 4) throw std::domain_error("build_cover_levels: requires 1 <= T <= 4");
    if (!(0 < B1.radius && B1.radius <= make_rat(1, 2)))
        throw std::domain_error("build_cover_levels: requires 0 < rho(B_1) <= 1/2");

    CoverBuild out;
    out.variant = in.integer_inv_beta() ? HoleVariant::IntegerBeta : HoleVariant::General;
    out.per_hole_count = hole_count(in, out.variant);

    const Rat r_out = outer_ratio(in), r_in = inner_ratio(in);
    Int side_out, side_in;
    if (out.variant == HoleVariant::IntegerBeta) {
        side_out = r_out.get_num() + 1;
        side_in = r_in.get_num();
    } else {
        side_out = ceil_rat(r_out) + 1;
        side_in = floor_rat(r_in) - 1;
    }
    if (side_out - side_in != out.per_hole_count)
        throw std::logic_error("build_cover_levels: side counts disagree with the hole count");

    const Rat rho1 = B1.radius;
    for (const int sh : {-1, 0, 1})
        out.shifted_initial_balls.emplace_back(B1.center + Rat(sh) * 2 * rho1 / 3, rho1);

    const GameParams params(make_rat(1, in.j), in.beta);
    std::vector<Interval> F = {B1};
    std::vector<Interval> parents = {B1};

    for (int t = 1; t <= T; ++t) {
        CoverLevel level;
        level.t = t;
        level.cell_radius = rho1 * pow_rat(in.beta / Rat(in.j), t * (in.s + 1));
        const Rat& Rp = level.cell_radius;
        for (const Interval& C : parents) {
            for (const int half : {-1, 1}) {
                const Interval A(C.center + Rat(half) * C.radius / 2, C.radius / 2);
                BobFarey bob(params);
                const Interval hole = bob.move(A, in.beta * A.radius);
                const Rat base = out.variant == HoleVariant::IntegerBeta && r_in.get_num() % 2 == 0
                                     ? Rat(hole.center - Rp)
                                     : hole.center;
                // outer: minimal covering range of A, extended leftward to side_out
                Int lo = floor_rat((A.lo() - base + Rp) / (2 * Rp));
                Int hi = ceil_rat((A.hi() - base - Rp) / (2 * Rp));
                if (hi - lo + 1 > side_out)
                    throw std::logic_error("build_cover_levels: outer cover exceeds side count");
                lo -= side_out - (hi - lo + 1);
                hi = lo + side_out - 1;
                // inner: maximal contained range of the hole, shrunk to side_in
                Int li = ceil_rat((hole.lo() - base + Rp) / (2 * Rp));
                Int hi2 = floor_rat((hole.hi() - base - Rp) / (2 * Rp));
                if (hi2 - li + 1 < side_in)
                    throw std::logic_error("build_cover_levels: inner block short of side count");
                hi2 = li + side_in - 1;
                if (li < lo || hi2 > hi)
                    throw std::logic_error("build_cover_levels: inner block outside the outer block");
                for (Int m = lo; m <= hi; ++m) {
                    if (li <= m && m <= hi2) continue;
                    level.cells.emplace_back(base + 2 * Rat(m) * Rp, Rp);
                }
                level.holes.push_back(hole);
            }
        }
        for (const Interval& hole : level.holes) F = subtract_hole(F, hole);
        level.remaining = F;
        if (!subset_of_union(F, level.cells))
            throw std::logic_error("build_cover_levels: F_t escaped the cover");
        parents = level.cells;
        out.levels.push_back(std::move(level));
    }
    return out;
}

} // namespace schmidt
