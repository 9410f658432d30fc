/**
 * @file game.hpp
 * @brief Schmidt (alpha, beta)-games and accelerated (alpha, beta^{s_n})-games
 *        on R: move validation, plays, the insert/append play surgery, and
 *        restrictions.
 *
 * In a play B_1 > A_1 > B_2 > A_2 > ... the radius rules are
 *   rho(A_n) = alpha * rho(B_n),
 *   rho(B_{n+1}) = beta * (alpha*beta)^{s_n} * rho(A_n),
 * with acceleration sequence {s_n} (all-zero = the plain game). All
 * containment and radius comparisons are exact.
 */
#pragma once

#include "schmidt/interval.hpp"
#include "schmidt/rational.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace schmidt {

struct GameParams {
    Rat alpha;
    Rat beta;

    GameParams(Rat a, Rat b) : alpha(std::move(a)), beta(std::move(b)) {
        if (!(0 < alpha && alpha < 1 && 0 < beta && beta < 1))
            throw std::domain_error("GameParams: alpha, beta must lie in (0,1)");
    }
    Rat alpha_beta() const { return alpha * beta; }
};

/// Acceleration sequence (s_1, s_2, ...) with an implicit all-zero tail.
struct AccelSeq {
    std::vector<Int> terms;

    AccelSeq() = default;
    explicit AccelSeq(std::vector<Int> t) : terms(std::move(t)) {
        for (const Int& s : terms)
            if (s < 0) throw std::domain_error("AccelSeq: terms must be >= 0");
    }

    /// s_n for 1-based n (0 beyond the materialized prefix).
    Int term(size_t n) const {
        if (n == 0) throw std::domain_error("AccelSeq: terms are 1-based");
        return n <= terms.size() ? terms[n - 1] : Int(0);
    }

    /// sum_{i<=n} (s_i + 1); partial_sum(0) = 0.
    Int partial_sum(size_t n) const {
        Int acc = 0;
        for (size_t i = 1; i <= n; ++i) acc += term(i) + 1;
        return acc;
    }

    bool same_as(const AccelSeq& o) const {
        const size_t len = std::max(terms.size(), o.terms.size());
        for (size_t i = 1; i <= len; ++i)
            if (term(i) != o.term(i)) return false;
        return true;
    }
};

enum class Mover { Alice, Bob };

/// An alternating nested play; alice may trail bob by one ball mid-round.
struct Play {
    GameParams params;
    AccelSeq accel;
    std::vector<Interval> bob;   // B_1 .. B_k
    std::vector<Interval> alice; // A_1 .. A_k (or A_1 .. A_{k-1})

    explicit Play(GameParams p, AccelSeq a = AccelSeq()) : params(std::move(p)), accel(std::move(a)) {}

    size_t depth() const { return bob.size(); }
    Mover next_mover() const { return alice.size() == bob.size() ? Mover::Bob : Mover::Alice; }
};

struct StrategyFault : std::runtime_error {
    Mover mover;
    size_t move_index;
    StrategyFault(Mover m, size_t idx)
        : std::runtime_error(std::string(m == Mover::Alice ? "alice" : "bob") +
                             " strategy produced an invalid ball at move " + std::to_string(idx)),
          mover(m),
          move_index(idx) {}
};

/// A positional strategy: a function of the opponent's last ball and the
/// radius required by the rules.
class Strategy {
  public:
    virtual ~Strategy() = default;
    virtual Interval move(const Interval& opponent_ball, const Rat& required_radius) = 0;
};

/// Radius Bob's next ball must have after Alice played A_n at move n.
Rat bob_required_radius(const GameParams&, const AccelSeq&, size_t n, const Rat& alice_radius);

/// True iff `proposed` is a legal next ball for `mover` after the prefix.
bool validate_move(const Play& prefix, const Interval& proposed, Mover mover);

/// Run a depth-round game (each round one Bob ball then one Alice ball;
/// B_1 = initial_ball). Throws StrategyFault on an illegal strategy ball.
Play run_game(const GameParams& params, const AccelSeq& accel, Strategy& bob, Strategy& alice,
              int depth, const Interval& initial_ball);

struct NotInsertable : std::domain_error {
    using std::domain_error::domain_error;
};

/// Splice B between B_m and B_{m+1}; returns the induced play and sequence.
std::pair<Play, AccelSeq> insert_ball(const Play& play, const Interval& B);

/// Append B after the end ball; tail acceleration taken from s_star.
std::pair<Play, AccelSeq> append_ball(const Play& play, const Interval& B, const AccelSeq& s_star);

/// Restriction to a subsequence of move indices (1-based, ascending, first = 1).
std::pair<Play, AccelSeq> restrict_play(const Play& play, const std::vector<size_t>& indices);

} // namespace schmidt
