#include "schmidt/tess.hpp"

#include <doctest.h>

#include <random>

using namespace schmidt;

namespace {

BallD ball1(const Rat& c, const Rat& r) { return BallD({c}, r); }

bool blocks_match(std::vector<TessBlock> a, std::vector<TessBlock> b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        bool found = false;
        for (const auto& y : b)
            if (x.same_cells(y)) found = true;
        if (!found) return false;
    }
    return true;
}

Rat random_rat(std::mt19937_64& rng, long den_max) {
    const long d = static_cast<long>(rng() % static_cast<uint64_t>(den_max)) + 1;
    const long n = static_cast<long>(rng() % static_cast<uint64_t>(4 * d)) - 2 * d;
    return make_rat(n, d);
}

} // namespace

TEST_CASE("m_tessellation cells") {
    const auto cells = m_tessellation(ball1(Rat(0), Rat(1)), 2);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0].lo(0) == -1);
    CHECK(cells[0].hi(0) == 0);
    CHECK(cells[1].lo(0) == 0);
    CHECK(cells[1].hi(0) == 1);

    const BallD b2({Rat(0), Rat(0)}, Rat(1));
    const auto cells2 = m_tessellation(b2, 3);
    CHECK(cells2.size() == 9);
    for (const auto& c : cells2) CHECK(c.radius == make_rat(1, 3));
    CHECK_THROWS_AS(m_tessellation(b2, 0), std::domain_error);
}

TEST_CASE("refinement composition equals the product tessellation") {
    for (int d = 1; d <= 2; ++d) {
        for (long M = 1; M <= 6; ++M) {
            for (long N = 1; N <= 6; ++N) {
                if (M * N > 12) continue;
                const BallD ball(std::vector<Rat>(static_cast<size_t>(d), make_rat(1, 3)), make_rat(5, 7));
                const auto coarse = m_tessellation(ball, M);
                std::vector<BallD> refined;
                for (const auto& c : coarse)
                    for (const auto& f : m_tessellation(c, N)) refined.push_back(f);
                const auto direct = m_tessellation(ball, M * N);
                REQUIRE(refined.size() == direct.size());
                for (const auto& f : refined) {
                    bool found = false;
                    for (const auto& g : direct)
                        if (f == g) found = true;
                    CHECK(found);
                }
            }
        }
    }
}

TEST_CASE("complete tessellation tiling on a window") {
    const CompleteTess tess({make_rat(1, 5)}, make_rat(1, 3));
    // cells m = -3..3 tile [base - 7/3 + ..]: check cover and disjoint interiors
    for (Int m = -3; m <= 3; ++m) {
        const BallD c = tess.cell({m});
        const BallD next = tess.cell({m + 1});
        CHECK(c.hi(0) == next.lo(0)); // adjacent cells share exactly the boundary
    }
}

TEST_CASE("extrapolation: families sharing a cell are identical") {
    const CompleteTess t1({make_rat(1, 5)}, make_rat(1, 3));
    const CompleteTess t2({make_rat(1, 5) + Rat(4) * make_rat(2, 3)}, make_rat(1, 3));
    CHECK(t1.same_as(t2));
    const CompleteTess t3({make_rat(1, 5) + make_rat(1, 3)}, make_rat(1, 3));
    CHECK_FALSE(t1.same_as(t3));
}

TEST_CASE("completion uniqueness from any cell") {
    for (long M : {1L, 2L, 3L, 4L, 5L, 6L}) {
        const BallD ball({make_rat(2, 7)}, make_rat(3, 5));
        const CompleteTess comp = completion(ball, M);
        for (const auto& cell : m_tessellation(ball, M)) {
            const CompleteTess from_cell({cell.center[0]}, cell.radius);
            CHECK(from_cell.same_as(comp));
        }
    }
}

TEST_CASE("representability characterization examples") {
    const CompleteTess tess({Rat(0)}, make_rat(1, 2));

    const auto odd = is_representable(ball1(Rat(0), make_rat(3, 2)), tess);
    REQUIRE(odd.representable);
    CHECK(odd.block->lo[0] == -1);
    CHECK(odd.block->hi[0] == 1);
    CHECK(odd.block->cardinality() == 3);
    CHECK(odd.block->covers(ball1(Rat(0), make_rat(3, 2))));
    CHECK(odd.block->contained_in(ball1(Rat(0), make_rat(3, 2))));

    const auto even = is_representable(ball1(make_rat(1, 2), Rat(1)), tess);
    REQUIRE(even.representable);
    CHECK(even.block->cardinality() == 2);
    CHECK(even.block->covers(ball1(make_rat(1, 2), Rat(1))));
    CHECK(even.block->contained_in(ball1(make_rat(1, 2), Rat(1))));

    CHECK_FALSE(is_representable(ball1(make_rat(1, 5), make_rat(4, 5)), tess).representable);
    CHECK_THROWS_AS(is_representable(ball1(Rat(0), make_rat(1, 4)), tess), std::domain_error);
}

TEST_CASE("minimal tessellation examples") {
    const CompleteTess tess({Rat(0)}, make_rat(1, 2));

    // representable: unique, equals the representation
    const auto rep_min = minimal_tessellations(ball1(Rat(0), make_rat(3, 2)), tess);
    REQUIRE(rep_min.size() == 1);
    CHECK(rep_min[0].cardinality() == 3);
    CHECK(rep_min[0].same_cells(*is_representable(ball1(Rat(0), make_rat(3, 2)), tess).block));

    // ratio 1.6 over [-0.6, 1.0]: unique minimal cover with 3 = ceil(1.6)+1 cells
    const BallD b = BallD({make_rat(1, 5)}, make_rat(4, 5));
    const auto mins = minimal_tessellations(b, tess);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].cardinality() == 3);
    CHECK(mins[0].lo[0] == -1);
    CHECK(mins[0].hi[0] == 1);
}

TEST_CASE("maximal tessellation examples") {
    const CompleteTess tess({Rat(0)}, make_rat(1, 2));

    // ratio 2.2 over [-0.9, 1.3]: unique maximal block, 1 = floor(2.2)-1 cell
    const auto maxs = maximal_tessellations(BallD({make_rat(1, 5)}, make_rat(11, 10)), tess);
    REQUIRE(maxs.size() == 1);
    CHECK(maxs[0].cardinality() == 1);
    CHECK(maxs[0].lo[0] == 0);
    CHECK(maxs[0].hi[0] == 0);

    // representable ratio 3: unique with 3 cells
    const auto rep_max = maximal_tessellations(ball1(Rat(0), make_rat(3, 2)), tess);
    REQUIRE(rep_max.size() == 1);
    CHECK(rep_max[0].cardinality() == 3);

    // integer non-representable ratio 2: 1 = (2-1) cell
    const auto int_max = maximal_tessellations(ball1(make_rat(1, 5), Rat(1)), tess);
    for (const auto& blk : int_max) CHECK(blk.cardinality() == 1);
    CHECK_FALSE(int_max.empty());

    CHECK_THROWS_AS(maximal_tessellations(ball1(Rat(0), make_rat(3, 4)), tess), std::domain_error);
}

TEST_CASE("sub-block membership: interior overlap forces membership") {
    const CompleteTess tess({make_rat(1, 7)}, make_rat(2, 5));
    const TessBlock blk{tess, {Int(-2)}, {Int(3)}};
    for (Int m = -4; m <= 5; ++m) {
        const BallD cell = tess.cell({m});
        const bool member = -2 <= m && m <= 3;
        // interior of the cell meets the block union iff the cell belongs to it
        const BallD u = blk.bounding_ball();
        const bool overlaps = cell.lo(0) < u.hi(0) && u.lo(0) < cell.hi(0);
        CHECK(overlaps == member);
    }
}

TEST_CASE("minimal/maximal constructions agree with brute force, d = 1") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 120; ++it) {
        const Rat rp = make_rat(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 9) + 9);
        const Rat ratio = make_rat(static_cast<long>(rng() % 50) + 10, 10); // in [1, 6]
        const BallD ball({random_rat(rng, 30)}, rp * ratio);
        const CompleteTess tess({random_rat(rng, 30)}, rp);

        const auto mins = minimal_tessellations(ball, tess);
        CHECK(blocks_match(mins, brute_force_blocks(ball, tess, BlockMode::Cover)));
        if (ball.radius >= 2 * tess.cell_radius) {
            const auto maxs = maximal_tessellations(ball, tess);
            CHECK(blocks_match(maxs, brute_force_blocks(ball, tess, BlockMode::Packing)));
        }
    }
}

TEST_CASE("cardinality case lists, d = 2") {
    std::mt19937_64 rng(102);
    for (int it = 0; it < 40; ++it) {
        const Rat rp = make_rat(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 5) + 5);
        const Rat ratio = make_rat(static_cast<long>(rng() % 40) + 20, 10); // in [2, 6]
        const BallD ball({random_rat(rng, 20), random_rat(rng, 20)}, rp * ratio);
        const CompleteTess tess({random_rat(rng, 20), random_rat(rng, 20)}, rp);
        const bool rep = is_representable(ball, tess).representable;
        const Rat r = ball.radius / tess.cell_radius;

        const auto mins = minimal_tessellations(ball, tess);
        CHECK(blocks_match(mins, brute_force_blocks(ball, tess, BlockMode::Cover)));
        for (const auto& blk : mins) {
            CHECK(blk.is_tessellation());
            if (rep) {
                CHECK(blk.cardinality() == pow_rat(r, 2));
            } else if (r.get_den() != 1) {
                const Int c = ceil_rat(r);
                CHECK((blk.cardinality() == c * c || blk.cardinality() == (c + 1) * (c + 1)));
            } else {
                const Int c = r.get_num() + 1;
                CHECK(blk.cardinality() == c * c);
            }
        }
        if (rep) CHECK(mins.size() == 1);

        const auto maxs = maximal_tessellations(ball, tess);
        CHECK(blocks_match(maxs, brute_force_blocks(ball, tess, BlockMode::Packing)));
        for (const auto& blk : maxs) {
            if (rep) {
                CHECK(blk.cardinality() == pow_rat(r, 2));
            } else if (r.get_den() != 1) {
                const Int f = floor_rat(r);
                CHECK((blk.cardinality() == f * f || blk.cardinality() == (f - 1) * (f - 1)));
            } else {
                const Int f = r.get_num() - 1;
                CHECK(blk.cardinality() == f * f);
            }
        }
    }
}

TEST_CASE("representable instances produce the unique representation in both modes") {
    std::mt19937_64 rng(103);
    for (int it = 0; it < 30; ++it) {
        const Rat rp = make_rat(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 7) + 4);
        const long M = static_cast<long>(rng() % 5) + 2; // ratio in [2, 6]
        const Rat base = random_rat(rng, 25);
        // center congruent to the base per the parity characterization
        const Rat center = M % 2 == 1 ? base + 2 * rp * Rat(static_cast<long>(rng() % 7))
                                      : base + rp + 2 * rp * Rat(static_cast<long>(rng() % 7));
        const BallD ball({center}, rp * M);
        const CompleteTess tess({base}, rp);
        const auto rep = is_representable(ball, tess);
        REQUIRE(rep.representable);
        const auto mins = minimal_tessellations(ball, tess);
        const auto maxs = maximal_tessellations(ball, tess);
        REQUIRE(mins.size() == 1);
        REQUIRE(maxs.size() == 1);
        CHECK(mins[0].same_cells(*rep.block));
        CHECK(maxs[0].same_cells(*rep.block));
        CHECK(brute_force_blocks(ball, tess, BlockMode::Cover).size() == 1);
        CHECK(brute_force_blocks(ball, tess, BlockMode::Packing).size() == 1);
    }
}

TEST_CASE("minimal covers stay within 4R' of the ball") {
    std::mt19937_64 rng(104);
    for (int it = 0; it < 60; ++it) {
        const Rat rp = make_rat(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 9) + 6);
        const Rat ratio = make_rat(static_cast<long>(rng() % 50) + 10, 10);
        const BallD ball({random_rat(rng, 30)}, rp * ratio);
        const CompleteTess tess({random_rat(rng, 30)}, rp);
        for (const auto& blk : minimal_tessellations(ball, tess)) {
            const BallD u = blk.bounding_ball();
            CHECK(ball.lo(0) - u.lo(0) < 4 * rp);
            CHECK(u.hi(0) - ball.hi(0) < 4 * rp);
        }
    }
}

TEST_CASE("brute force feasibility bound") {
    const CompleteTess tess({Rat(0)}, make_rat(1, 10));
    CHECK_THROWS_AS(brute_force_blocks(ball1(Rat(0), Rat(1)), tess, BlockMode::Cover),
                    std::domain_error);
}
