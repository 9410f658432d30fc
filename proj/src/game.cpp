#include "schmidt/game.hpp"

namespace schmidt {

namespace {

long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::domain_error("acceleration term too large");
    return v.get_si();
}

// The power l >= 1 with ratio = (alpha*beta)^l, or -1 if there is none.
long power_of_alpha_beta(const Rat& ratio, const Rat& ab) {
    if (ratio >= 1 || ratio <= 0) return -1;
    Rat x = ratio;
    long l = 0;
    while (x < 1) {
        x /= ab;
        ++l;
        if (l > 1000000) return -1;
    }
    return x == 1 ? l : -1;
}

// Dyadic witness between bob_ball and next_ball: same center as next_ball
// when containment permits, else the leftmost valid placement.
Interval canonical_alice(const GameParams& params, const Interval& bob_ball, const Interval& next_ball) {
    const Rat r = params.alpha * bob_ball.radius;
    Interval centered(next_ball.center, r);
    if (bob_ball.contains(centered) && centered.contains(next_ball)) return centered;
    Rat c = bob_ball.lo() + r;
    if (c < next_ball.hi() - r) c = next_ball.hi() - r;
    Interval leftmost(c, r);
    if (!(bob_ball.contains(leftmost) && leftmost.contains(next_ball)))
        throw std::logic_error("canonical_alice: no valid dyadic witness");
    return leftmost;
}

} // namespace

Rat bob_required_radius(const GameParams& params, const AccelSeq& accel, size_t n, const Rat& alice_radius) {
    return params.beta * pow_rat(params.alpha_beta(), to_long(accel.term(n))) * alice_radius;
}

bool validate_move(const Play& prefix, const Interval& proposed, Mover mover) {
    if (prefix.next_mover() != mover) return false;
    if (mover == Mover::Alice) {
        if (prefix.bob.empty()) return false;
        const Interval& B = prefix.bob.back();
        return proposed.radius == prefix.params.alpha * B.radius && B.contains(proposed);
    }
    if (prefix.alice.empty()) return false;
    const Interval& A = prefix.alice.back();
    const Rat r = bob_required_radius(prefix.params, prefix.accel, prefix.alice.size(), A.radius);
    return proposed.radius == r && A.contains(proposed);
}

Play run_game(const GameParams& params, const AccelSeq& accel, Strategy& bob, Strategy& alice,
              int depth, const Interval& initial_ball) {
    if (depth < 1) throw std::domain_error("run_game: depth must be >= 1");
    if (initial_ball.radius <= 0) throw std::domain_error("run_game: initial ball must have positive radius");
    Play play(params, accel);
    play.bob.push_back(initial_ball);
    for (size_t n = 1; n <= static_cast<size_t>(depth); ++n) {
        const Interval& B = play.bob.back();
        Interval A = alice.move(B, params.alpha * B.radius);
        if (!validate_move(play, A, Mover::Alice)) throw StrategyFault(Mover::Alice, n);
        play.alice.push_back(A);
        if (n == static_cast<size_t>(depth)) break;
        const Rat r = bob_required_radius(params, accel, n, A.radius);
        Interval B2 = bob.move(A, r);
        if (!validate_move(play, B2, Mover::Bob)) throw StrategyFault(Mover::Bob, n + 1);
        play.bob.push_back(B2);
    }
    return play;
}

std::pair<Play, AccelSeq> insert_ball(const Play& play, const Interval& B) {
    const size_t k = play.depth();
    if (k < 2 || play.alice.size() != k)
        throw NotInsertable("insert_ball: play must be a complete play of depth >= 2");
    const long l = power_of_alpha_beta(B.radius / play.bob.front().radius, play.params.alpha_beta());
    if (l < 1) throw NotInsertable("insert_ball: radius is not rho(B_1)*(alpha*beta)^l with l >= 1");
    size_t m = 0; // insertion index, 1-based
    for (size_t i = 1; i < k; ++i) {
        if (play.bob[i - 1].properly_contains(B) && B.properly_contains(play.bob[i])) {
            m = i;
            break;
        }
    }
    if (m == 0) throw NotInsertable("insert_ball: no insertion index");

    const AccelSeq& s = play.accel;
    std::vector<Int> terms;
    const size_t len = std::max(s.terms.size() + 1, m + 1);
    terms.reserve(len);
    for (size_t j = 1; j <= len; ++j) {
        if (j < m)
            terms.push_back(s.term(j));
        else if (j == m)
            terms.push_back(Int(l) - s.partial_sum(m - 1) - 1);
        else if (j == m + 1)
            terms.push_back(s.partial_sum(m) - Int(l) - 1);
        else
            terms.push_back(s.term(j - 1));
    }
    AccelSeq induced{terms};

    Play out(play.params, induced);
    out.bob = play.bob;
    out.bob.insert(out.bob.begin() + static_cast<long>(m), B);
    out.alice.reserve(k + 1);
    for (size_t j = 1; j <= k + 1; ++j) {
        if (j <= m - 1)
            out.alice.push_back(play.alice[j - 1]);
        else if (j == m || j == m + 1)
            out.alice.push_back(canonical_alice(play.params, out.bob[j - 1], out.bob[j]));
        else
            out.alice.push_back(play.alice[j - 2]);
    }
    return {out, induced};
}

std::pair<Play, AccelSeq> append_ball(const Play& play, const Interval& B, const AccelSeq& s_star) {
    const size_t k = play.depth();
    if (k < 1 || play.alice.size() != k)
        throw NotInsertable("append_ball: play must be a complete play");
    const long l = power_of_alpha_beta(B.radius / play.bob.front().radius, play.params.alpha_beta());
    if (l < 1) throw NotInsertable("append_ball: radius is not rho(B_1)*(alpha*beta)^l with l >= 1");
    if (!play.bob.back().properly_contains(B))
        throw NotInsertable("append_ball: ball is not strictly inside the end ball");
    const AccelSeq& s = play.accel;
    if (!(s.partial_sum(k - 1) < l))
        throw NotInsertable("append_ball: accumulated sum does not leave room for l");

    std::vector<Int> terms;
    const size_t len = k + std::max<size_t>(s_star.terms.size(), 1);
    terms.reserve(len);
    for (size_t j = 1; j <= len; ++j) {
        if (j <= k - 1)
            terms.push_back(s.term(j));
        else if (j == k)
            terms.push_back(Int(l) - s.partial_sum(k - 1) - 1);
        else
            terms.push_back(s_star.term(j - k));
    }
    AccelSeq induced{terms};

    Play out(play.params, induced);
    out.bob = play.bob;
    out.bob.push_back(B);
    out.alice.reserve(k + 1);
    for (size_t j = 1; j <= k - 1; ++j) out.alice.push_back(play.alice[j - 1]);
    out.alice.push_back(canonical_alice(play.params, out.bob[k - 1], B));
    out.alice.emplace_back(B.center, play.params.alpha * B.radius); // centered end witness
    return {out, induced};
}

std::pair<Play, AccelSeq> restrict_play(const Play& play, const std::vector<size_t>& indices) {
    if (indices.empty()) throw std::domain_error("restrict_play: empty index list");
    if (indices.front() != 1) throw std::domain_error("restrict_play: indices must start at 1");
    if (play.alice.size() != play.depth()) throw std::domain_error("restrict_play: incomplete play");
    for (size_t i = 0; i + 1 < indices.size(); ++i)
        if (indices[i] >= indices[i + 1]) throw std::domain_error("restrict_play: indices must ascend");
    if (indices.back() > play.depth()) throw std::domain_error("restrict_play: index out of range");

    std::vector<Int> terms;
    for (size_t j = 0; j + 1 < indices.size(); ++j) {
        Int gap = 0;
        for (size_t i = indices[j]; i < indices[j + 1]; ++i) gap += play.accel.term(i) + 1;
        terms.push_back(gap - 1);
    }
    AccelSeq induced{terms};

    Play out(play.params, induced);
    for (size_t idx : indices) out.bob.push_back(play.bob[idx - 1]);
    for (size_t j = 0; j < indices.size(); ++j) {
        if (j + 1 < indices.size() && indices[j + 1] == indices[j] + 1)
            out.alice.push_back(play.alice[indices[j] - 1]); // adjacent: original witness
        else if (j + 1 < indices.size())
            out.alice.push_back(canonical_alice(play.params, out.bob[j], out.bob[j + 1]));
        else
            out.alice.push_back(play.alice[indices[j] - 1]);
    }
    return {out, induced};
}

} // namespace schmidt
