/**
 * @file strategies.hpp
 * @brief Constructive strategies for the (alpha, beta)-game on R.
 *
 * AliceWinning: for alpha <= 1/3 keeps the play away from every reduced p/q
 * with q at the scale of the current ball, so the intersection point x ends
 * with |x - p/q| >= delta/q^2 (delta = alpha*beta/6) for all q above a
 * starting order Q. certify_bad checks that guarantee on a finite play.
 *
 * BobFarey: for alpha = 1/2, beta <= 1/2 steers the play into Farey
 * half-intervals, forcing rational points nu with |x - nu| < 2*beta/q^2 or
 * 18*beta/q'^2 for every point x of a recorded ball (witnesses).
 *
 * Both reindex internally while the current radius exceeds 1/2, playing
 * centered balls until the working scale is reached.
 */
#pragma once

#include "schmidt/farey.hpp"
#include "schmidt/game.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>

namespace schmidt {

/// Deterministic stream of exact rationals in [0,1) (k/2^64 draws).
class SeededRng {
  public:
    explicit SeededRng(uint64_t seed) : eng_(seed) {}
    uint64_t raw() { return eng_(); }
    Rat unit() {
        const uint64_t k = eng_();
        return make_rat(Int(static_cast<unsigned long>(k)), Int(1) << 64);
    }

  private:
    std::mt19937_64 eng_;
};

enum class AdversaryKind { Random, TargetRational, AvoidAnchor };

/// Rule-valid seeded adversary; target is used by TargetRational only.
std::unique_ptr<Strategy> make_adversary(AdversaryKind kind, uint64_t seed, Rat target = Rat(0));

struct AliceState {
    GameParams params;
    Rat delta;        // alpha*beta/6
    bool initialized; // false until rho(B_n) <= 1/2 seen
    Rat rho;          // rho of the reindexed first ball
    Int Q;            // ceil_sqrt(alpha*beta/(2*rho)); the set Q is {p/q : q <= Q-1}
    explicit AliceState(GameParams p)
        : params(std::move(p)), delta(params.alpha * params.beta / 6), initialized(false), rho(0), Q(0) {}
};

class AliceWinning : public Strategy {
  public:
    explicit AliceWinning(GameParams params);
    Interval move(const Interval& bob_ball, const Rat& required_radius) override;
    const AliceState& state() const { return st_; }

  private:
    AliceState st_;
    bool first_effective_move_ = true;
};

struct BobWitness {
    int step;          // recursion step m
    FareyFraction nu;  // the rational approximant nu(m)
    size_t ball_index; // 1-based index of the recorded ball in play.bob
    Rat bound;         // 2*beta/q^2 or 18*beta/q'^2
};

class BobFarey : public Strategy {
  public:
    explicit BobFarey(GameParams params); // requires alpha == 1/2, beta <= 1/2
    Interval move(const Interval& alice_ball, const Rat& required_radius) override;
    const std::vector<BobWitness>& witnesses() const { return witnesses_; }
    const std::vector<FareyFraction>& anchors() const { return anchors_; }

  private:
    enum class Phase { Fresh, Descend, Force };
    GameParams params_;
    bool initialized_ = false;
    Phase phase_ = Phase::Fresh;
    int step_ = 0;
    size_t next_index_ = 2; // index of the ball the next move() call creates
    // Descend payload
    Int descend_q_;
    HalfFareyPartition descend_partition_;
    // Force payload
    FareyFraction force_nu_;
    Rat force_bound_;
    std::vector<BobWitness> witnesses_;
    std::vector<FareyFraction> anchors_;

    Interval fresh_move(const Interval& A, const Rat& r);
};

struct Certificate {
    Int q_bound;
    bool ok = true;
    struct Violation {
        Int p, q;
        Rat dist;      // dist(B_n, p/q)
        Rat threshold; // delta/q^2
    };
    std::vector<Violation> violations;
};

/// Check |x - p/q| >= delta/q^2 for all reduced p/q with Q <= q <= q_bound
/// near the depth-n ball (default: the play's full depth).
Certificate certify_bad(const Play& play, const Rat& delta, size_t depth = 0);

struct WitnessReport {
    std::vector<BobWitness> witnesses;
    std::vector<FareyFraction> anchors; // gamma(m), weakly increasing order
    bool stabilized = false;            // anchors pin a rational inside the end ball
    std::optional<FareyFraction> limit;
    bool complete = true; // replay matched every recorded Bob ball
};

/// Recover witnesses by deterministically replaying BobFarey against the
/// recorded Alice balls; best-effort (complete = false) on foreign plays.
WitnessReport extract_witnesses(const Play& play);

/// Longest strictly increasing subsequence length of witness denominators.
size_t increasing_denominator_run(const std::vector<BobWitness>& ws);

} // namespace schmidt
