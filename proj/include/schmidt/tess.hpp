/**
 * @file tess.hpp
 * @brief Sup-norm tessellation geometry on R^d: M-tessellations of a ball,
 *        complete tessellations of R^d, representability, and the minimal
 *        outer / maximal inner blocks of grid cells for a ball.
 *
 * Blocks are stored by integer index ranges of the parent complete
 * tessellation; every geometric predicate reduces to exact rational endpoint
 * comparisons.
 */
#pragma once

#include "schmidt/interval.hpp"
#include "schmidt/rational.hpp"

#include <optional>
#include <vector>

namespace schmidt {

/// The doubly infinite grid of sup-norm balls of radius cell_radius with
/// cell m at center base + 2*m*cell_radius (per axis).
struct CompleteTess {
    std::vector<Rat> base;
    Rat cell_radius;
    int dim;

    CompleteTess(std::vector<Rat> base_point, Rat radius)
        : base(std::move(base_point)), cell_radius(std::move(radius)),
          dim(static_cast<int>(base.size())) {
        if (dim < 1) throw std::domain_error("CompleteTess: dimension must be positive");
        if (cell_radius <= 0) throw std::domain_error("CompleteTess: cell radius must be positive");
    }

    BallD cell(const std::vector<Int>& m) const;

    /// Same family iff the base points differ by an element of 2R'Z^d.
    bool same_as(const CompleteTess& other) const;
};

/// An axis-aligned block of cells, indices lo_i..hi_i per axis. It is a
/// tessellation (of its bounding ball) exactly when all side counts agree.
struct TessBlock {
    CompleteTess parent;
    std::vector<Int> lo, hi;

    Int cardinality() const;
    std::vector<Int> side_counts() const;
    bool is_tessellation() const; // equal side counts
    BallD bounding_ball() const;

    bool covers(const BallD& ball) const;       // ball inside the block union
    bool contained_in(const BallD& ball) const; // block union inside the ball
    bool subset_of(const TessBlock& other) const;
    bool same_cells(const TessBlock& other) const;
};

/// The M^d cells of the M-tessellation of a ball, radius R/M each.
std::vector<BallD> m_tessellation(const BallD& ball, long M);

/// The unique complete tessellation containing the M-tessellation of `ball`.
CompleteTess completion(const BallD& ball, long M);

struct Representation {
    bool representable;
    std::optional<TessBlock> block; // the (R/R')-tessellation of the ball
};

/// Representability characterization: R/R' an odd integer with aligned base,
/// or an even integer with half-cell-shifted base. Requires R >= R'.
Representation is_representable(const BallD& ball, const CompleteTess& tess);

/// All inclusion-minimal covering blocks for the ball. Requires R >= R'.
std::vector<TessBlock> minimal_tessellations(const BallD& ball, const CompleteTess& tess);

/// All inclusion-maximal blocks contained in the ball. Requires R >= 2R'.
std::vector<TessBlock> maximal_tessellations(const BallD& ball, const CompleteTess& tess);

enum class BlockMode { Cover, Packing };

/// Brute-force oracle: enumerate every equal-side block within a margin of
/// two cells around the ball and keep the inclusion-minimal covering
/// (or -maximal contained) ones. Requires R/R' <= ratio_bound.
std::vector<TessBlock> brute_force_blocks(const BallD& ball, const CompleteTess& tess, BlockMode mode,
                                          const Rat& ratio_bound = Rat(8));

} // namespace schmidt
