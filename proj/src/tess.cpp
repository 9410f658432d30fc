#include "schmidt/tess.hpp"

#include <algorithm>
#include <functional>

namespace schmidt {

namespace {

bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Enumerate the cartesian product of per-axis index choices [from_i, to_i].
void product_scan(const std::vector<Int>& from, const std::vector<Int>& to,
                  const std::function<void(const std::vector<Int>&)>& fn) {
    const size_t d = from.size();
    std::vector<Int> cur = from;
    for (;;) {
        fn(cur);
        size_t i = 0;
        while (i < d) {
            ++cur[i];
            if (cur[i] <= to[i]) break;
            cur[i] = from[i];
            ++i;
        }
        if (i == d) return;
    }
}

} // namespace

BallD CompleteTess::cell(const std::vector<Int>& m) const {
    if (static_cast<int>(m.size()) != dim) throw std::domain_error("CompleteTess::cell: index dimension");
    std::vector<Rat> c(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i)
        c[static_cast<size_t>(i)] = base[static_cast<size_t>(i)] + 2 * Rat(m[static_cast<size_t>(i)]) * cell_radius;
    return BallD(std::move(c), cell_radius);
}

bool CompleteTess::same_as(const CompleteTess& other) const {
    if (dim != other.dim || cell_radius != other.cell_radius) return false;
    for (int i = 0; i < dim; ++i) {
        const Rat t = (base[static_cast<size_t>(i)] - other.base[static_cast<size_t>(i)]) / (2 * cell_radius);
        if (!is_integer(t)) return false;
    }
    return true;
}

Int TessBlock::cardinality() const {
    Int n = 1;
    for (size_t i = 0; i < lo.size(); ++i) n *= hi[i] - lo[i] + 1;
    return n;
}

std::vector<Int> TessBlock::side_counts() const {
    std::vector<Int> s;
    for (size_t i = 0; i < lo.size(); ++i) s.push_back(hi[i] - lo[i] + 1);
    return s;
}

bool TessBlock::is_tessellation() const {
    const auto s = side_counts();
    return std::all_of(s.begin(), s.end(), [&](const Int& v) { return v == s.front(); });
}

BallD TessBlock::bounding_ball() const {
    std::vector<Rat> c(lo.size());
    Rat radius = 0;
    for (size_t i = 0; i < lo.size(); ++i) {
        const Rat left = parent.base[i] + (2 * Rat(lo[i]) - 1) * parent.cell_radius;
        const Rat right = parent.base[i] + (2 * Rat(hi[i]) + 1) * parent.cell_radius;
        c[i] = (left + right) / 2;
        radius = std::max(radius, Rat((right - left) / 2));
    }
    return BallD(std::move(c), radius);
}

bool TessBlock::covers(const BallD& ball) const {
    for (int i = 0; i < ball.dim; ++i) {
        const size_t j = static_cast<size_t>(i);
        const Rat left = parent.base[j] + (2 * Rat(lo[j]) - 1) * parent.cell_radius;
        const Rat right = parent.base[j] + (2 * Rat(hi[j]) + 1) * parent.cell_radius;
        if (!(left <= ball.lo(i) && ball.hi(i) <= right)) return false;
    }
    return true;
}

bool TessBlock::contained_in(const BallD& ball) const {
    for (int i = 0; i < ball.dim; ++i) {
        const size_t j = static_cast<size_t>(i);
        const Rat left = parent.base[j] + (2 * Rat(lo[j]) - 1) * parent.cell_radius;
        const Rat right = parent.base[j] + (2 * Rat(hi[j]) + 1) * parent.cell_radius;
        if (!(ball.lo(i) <= left && right <= ball.hi(i))) return false;
    }
    return true;
}

bool TessBlock::subset_of(const TessBlock& other) const {
    if (!parent.same_as(other.parent)) return false;
    // translate indices when the base points differ by a lattice vector
    for (size_t i = 0; i < lo.size(); ++i) {
        const Rat shift = (parent.base[i] - other.parent.base[i]) / (2 * parent.cell_radius);
        const Int s = shift.get_num(); // integer by same_as
        if (!(other.lo[i] <= lo[i] + s && hi[i] + s <= other.hi[i])) return false;
    }
    return true;
}

bool TessBlock::same_cells(const TessBlock& other) const {
    return subset_of(other) && other.subset_of(*this);
}

std::vector<BallD> m_tessellation(const BallD& ball, long M) {
    if (M < 1) throw std::domain_error("m_tessellation: M must be >= 1");
    std::vector<BallD> cells;
    const Rat r = ball.radius / M;
    std::vector<Int> from(static_cast<size_t>(ball.dim), Int(1));
    std::vector<Int> to(static_cast<size_t>(ball.dim), Int(M));
    product_scan(from, to, [&](const std::vector<Int>& m) {
        std::vector<Rat> c(static_cast<size_t>(ball.dim));
        for (int i = 0; i < ball.dim; ++i) {
            const size_t j = static_cast<size_t>(i);
            c[j] = ball.lo(i) + (2 * Rat(m[j]) - 1) * r;
        }
        cells.emplace_back(std::move(c), r);
    });
    return cells;
}

CompleteTess completion(const BallD& ball, long M) {
    if (M < 1) throw std::domain_error("completion: M must be >= 1");
    const Rat r = ball.radius / M;
    std::vector<Rat> base = ball.center;
    if (M % 2 == 0)
        for (Rat& x : base) x -= r;
    return CompleteTess(std::move(base), r);
}

Representation is_representable(const BallD& ball, const CompleteTess& tess) {
    if (ball.dim != tess.dim) throw std::domain_error("is_representable: dimension mismatch");
    if (ball.radius < tess.cell_radius) throw std::domain_error("is_representable: requires R >= R'");
    const Rat ratio = ball.radius / tess.cell_radius;
    if (!is_integer(ratio)) return {false, std::nullopt};
    const Int M = ratio.get_num();
    const bool odd = mpz_odd_p(M.get_mpz_t()) != 0;
    std::vector<Int> lo(static_cast<size_t>(ball.dim)), hi(static_cast<size_t>(ball.dim));
    for (int i = 0; i < ball.dim; ++i) {
        const size_t j = static_cast<size_t>(i);
        const Rat offset = odd ? Rat(ball.center[j] - tess.base[j])
                               : Rat(ball.center[j] - tess.base[j] - tess.cell_radius);
        const Rat t = offset / (2 * tess.cell_radius);
        if (!is_integer(t)) return {false, std::nullopt};
        const Int ti = t.get_num();
        if (odd) {
            const Int u = (M - 1) / 2;
            lo[j] = ti - u;
            hi[j] = ti + u;
        } else {
            const Int u = M / 2;
            lo[j] = ti - u + 1;
            hi[j] = ti + u;
        }
    }
    return {true, TessBlock{tess, std::move(lo), std::move(hi)}};
}

std::vector<TessBlock> minimal_tessellations(const BallD& ball, const CompleteTess& tess) {
    if (ball.dim != tess.dim) throw std::domain_error("minimal_tessellations: dimension mismatch");
    if (ball.radius < tess.cell_radius) throw std::domain_error("minimal_tessellations: requires R >= R'");
    const size_t d = static_cast<size_t>(ball.dim);
    std::vector<Int> lo(d), hi(d), counts(d);
    Int side = 0;
    for (size_t i = 0; i < d; ++i) {
        // largest m with left edge <= ball.lo, least m with right edge >= ball.hi
        lo[i] = floor_rat((ball.lo(static_cast<int>(i)) - tess.base[i] + tess.cell_radius) /
                          (2 * tess.cell_radius));
        hi[i] = ceil_rat((ball.hi(static_cast<int>(i)) - tess.base[i] - tess.cell_radius) /
                         (2 * tess.cell_radius));
        counts[i] = hi[i] - lo[i] + 1;
        side = std::max(side, counts[i]);
    }
    std::vector<Int> from(d), to(d);
    for (size_t i = 0; i < d; ++i) {
        from[i] = hi[i] - side + 1;
        to[i] = lo[i];
    }
    std::vector<TessBlock> out;
    product_scan(from, to, [&](const std::vector<Int>& start) {
        std::vector<Int> bhi(d);
        for (size_t i = 0; i < d; ++i) bhi[i] = start[i] + side - 1;
        out.push_back(TessBlock{tess, start, std::move(bhi)});
    });
    return out;
}

std::vector<TessBlock> maximal_tessellations(const BallD& ball, const CompleteTess& tess) {
    if (ball.dim != tess.dim) throw std::domain_error("maximal_tessellations: dimension mismatch");
    if (ball.radius < 2 * tess.cell_radius)
        throw std::domain_error("maximal_tessellations: requires R >= 2R'");
    const size_t d = static_cast<size_t>(ball.dim);
    std::vector<Int> lo(d), hi(d);
    Int side = 0;
    bool first = true;
    for (size_t i = 0; i < d; ++i) {
        lo[i] = ceil_rat((ball.lo(static_cast<int>(i)) - tess.base[i] + tess.cell_radius) /
                         (2 * tess.cell_radius));
        hi[i] = floor_rat((ball.hi(static_cast<int>(i)) - tess.base[i] - tess.cell_radius) /
                          (2 * tess.cell_radius));
        const Int c = hi[i] - lo[i] + 1;
        if (first || c < side) side = c;
        first = false;
    }
    if (side < 1) throw std::logic_error("maximal_tessellations: no full cell inside the ball");
    std::vector<Int> from(d), to(d);
    for (size_t i = 0; i < d; ++i) {
        from[i] = lo[i];
        to[i] = hi[i] - side + 1;
    }
    std::vector<TessBlock> out;
    product_scan(from, to, [&](const std::vector<Int>& start) {
        std::vector<Int> bhi(d);
        for (size_t i = 0; i < d; ++i) bhi[i] = start[i] + side - 1;
        out.push_back(TessBlock{tess, start, std::move(bhi)});
    });
    return out;
}

std::vector<TessBlock> brute_force_blocks(const BallD& ball, const CompleteTess& tess, BlockMode mode,
                                          const Rat& ratio_bound) {
    if (ball.dim != tess.dim) throw std::domain_error("brute_force_blocks: dimension mismatch");
    if (ball.radius / tess.cell_radius > ratio_bound)
        throw std::domain_error("brute_force_blocks: ratio exceeds the feasibility bound");
    const size_t d = static_cast<size_t>(ball.dim);
    std::vector<Int> from(d), to(d);
    Int span = 0;
    for (size_t i = 0; i < d; ++i) {
        from[i] = floor_rat((ball.lo(static_cast<int>(i)) - tess.base[i]) / (2 * tess.cell_radius)) - 2;
        to[i] = ceil_rat((ball.hi(static_cast<int>(i)) - tess.base[i]) / (2 * tess.cell_radius)) + 2;
        span = std::max(span, Int(to[i] - from[i] + 1));
    }
    std::vector<TessBlock> candidates;
    for (Int side = 1; side <= span; ++side) {
        std::vector<Int> sfrom(d), sto(d);
        bool feasible = true;
        for (size_t i = 0; i < d; ++i) {
            sfrom[i] = from[i];
            sto[i] = to[i] - side + 1;
            if (sto[i] < sfrom[i]) feasible = false;
        }
        if (!feasible) continue;
        product_scan(sfrom, sto, [&](const std::vector<Int>& start) {
            std::vector<Int> bhi(d);
            for (size_t i = 0; i < d; ++i) bhi[i] = start[i] + side - 1;
            TessBlock blk{tess, start, std::move(bhi)};
            const bool keep = mode == BlockMode::Cover ? blk.covers(ball) : blk.contained_in(ball);
            if (keep) candidates.push_back(std::move(blk));
        });
    }
    std::vector<TessBlock> out;
    for (const auto& b : candidates) {
        bool extremal = true;
        for (const auto& other : candidates) {
            if (&other == &b) continue;
            const bool dominated = mode == BlockMode::Cover
                                       ? (other.subset_of(b) && !b.subset_of(other))
                                       : (b.subset_of(other) && !other.subset_of(b));
            if (dominated) {
                extremal = false;
                break;
            }
        }
        if (extremal) out.push_back(b);
    }
    return out;
}

} // namespace schmidt
