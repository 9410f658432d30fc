#include "schmidt/strategies.hpp"

#include "schmidt/dioph.hpp"

#include <algorithm>

namespace schmidt {

namespace {

Rat clamp(const Rat& x, const Rat& lo, const Rat& hi) {
    if (x < lo) return lo;
    if (x > hi) return hi;
    return x;
}

// Ball of the given radius inside `box` whose center is closest to `target`.
Interval place_in(const Interval& box, const Rat& radius, const Rat& target_center) {
    const Rat lo = box.lo() + radius, hi = box.hi() - radius;
    if (lo > hi) throw std::logic_error("place_in: box too small");
    return Interval(clamp(target_center, lo, hi), radius);
}

class RandomStrategy : public Strategy {
  public:
    explicit RandomStrategy(uint64_t seed) : rng_(seed) {}
    Interval move(const Interval& opp, const Rat& r) override {
        const Rat lo = opp.lo() + r, hi = opp.hi() - r;
        return Interval(lo + (hi - lo) * rng_.unit(), r);
    }

  private:
    SeededRng rng_;
};

class TargetStrategy : public Strategy {
  public:
    explicit TargetStrategy(Rat target) : target_(std::move(target)) {}
    Interval move(const Interval& opp, const Rat& r) override { return place_in(opp, r, target_); }

  private:
    Rat target_;
};

class AvoidAnchorStrategy : public Strategy {
  public:
    Interval move(const Interval& opp, const Rat& r) override {
        const Rat d = opp.diam();
        if (!(0 < d && d < 1)) return Interval(opp.center, r);
        const Rat anchor = minimal_order_farey_element(opp).first.value();
        const Rat lo = opp.lo() + r, hi = opp.hi() - r;
        // farther admissible endpoint from the anchor, ties toward the smaller
        const Rat dlo = anchor >= lo ? anchor - lo : lo - anchor;
        const Rat dhi = anchor >= hi ? anchor - hi : hi - anchor;
        return Interval(dlo >= dhi ? lo : hi, r);
    }
};

} // namespace

std::unique_ptr<Strategy> make_adversary(AdversaryKind kind, uint64_t seed, Rat target) {
    switch (kind) {
    case AdversaryKind::Random: return std::make_unique<RandomStrategy>(seed);
    case AdversaryKind::TargetRational: return std::make_unique<TargetStrategy>(std::move(target));
    case AdversaryKind::AvoidAnchor: return std::make_unique<AvoidAnchorStrategy>();
    }
    throw std::domain_error("make_adversary: unknown kind");
}

AliceWinning::AliceWinning(GameParams params) : st_(std::move(params)) {
    if (st_.params.alpha > make_rat(1, 3))
        throw std::domain_error("AliceWinning: requires alpha <= 1/3");
}

Interval AliceWinning::move(const Interval& B, const Rat& required_radius) {
    const Rat rhoB = B.radius;
    if (!st_.initialized) {
        if (rhoB > make_rat(1, 2)) return Interval(B.center, required_radius);
        st_.initialized = true;
        st_.rho = rhoB;
        st_.Q = ceil_sqrt(st_.params.alpha_beta() / (2 * st_.rho));
    }
    const Rat ab = st_.params.alpha_beta();
    // window of orders handled at this ball: alpha*beta/(2 rho) <= q^2 < 1/(2 rho)
    const Rat w_lo = ab / (2 * rhoB), w_hi = Rat(1) / (2 * rhoB);
    const Int q_min = ceil_sqrt(w_lo);
    const Int q_max = ceil_sqrt(w_hi) - 1; // largest q with q^2 < w_hi

    Interval target = B; // fallback: the whole ball (centered placement)
    bool have_target = false;

    if (q_max >= q_min && q_max >= 1) {
        auto cands = fractions_in_interval(B.center - 3 * rhoB / 2, B.center + 3 * rhoB / 2, q_max);
        std::erase_if(cands, [&](const FareyFraction& f) { return !in_sqrt_window(f.q, w_lo, w_hi); });
        if (!cands.empty()) {
            const FareyFraction* inside = nullptr;
            for (const auto& f : cands) {
                if (B.contains(f.value())) {
                    if (inside) throw std::logic_error("alice_move: two window fractions inside the ball");
                    inside = &f;
                }
            }
            if (inside) {
                // Case 1: a unique window fraction inside the ball
                const Rat fv = inside->value();
                target = fv <= B.center
                             ? Interval::from_endpoints(fv + rhoB / 3, fv + rhoB)
                             : Interval::from_endpoints(fv - rhoB, fv - rhoB / 3);
                have_target = true;
            } else {
                // Case 2: window fractions flank the ball
                std::optional<Rat> below, above;
                for (const auto& f : cands) {
                    const Rat v = f.value();
                    if (v < B.lo() && (!below || v > *below)) below = v;
                    if (v > B.hi() && (!above || v < *above)) above = v;
                }
                const Rat third = rhoB / 3;
                const Rat eps = below ? std::min(Rat(B.lo() - *below), third) : third;
                const Rat epsp = above ? std::min(Rat(*above - B.hi()), third) : third;
                target = Interval::from_endpoints(B.center - 2 * rhoB / 3 - eps,
                                                  B.center + 2 * rhoB / 3 + epsp);
                have_target = true;
                if (first_effective_move_ && st_.Q >= 2) {
                    auto excluded = fractions_in_interval(target.lo(), target.hi(), st_.Q - 1);
                    if (excluded.size() > 1)
                        throw std::logic_error("alice_move: several excluded fractions in reach");
                    if (!excluded.empty()) {
                        target = excluded.front().value() < B.center
                                     ? Interval::from_endpoints(B.center + epsp,
                                                                B.center + 2 * rhoB / 3 + epsp)
                                     : Interval::from_endpoints(B.center - 2 * rhoB / 3 - eps,
                                                                B.center - eps);
                    }
                }
            }
        }
    }
    first_effective_move_ = false;
    Interval A = place_in(target, required_radius, target.center);
    if (have_target && !B.contains(A)) throw std::logic_error("alice_move: target left the ball");
    return A;
}

BobFarey::BobFarey(GameParams params) : params_(std::move(params)) {
    if (params_.alpha != make_rat(1, 2))
        throw std::domain_error("BobFarey: requires alpha = 1/2");
    if (params_.beta > make_rat(1, 2))
        throw std::domain_error("BobFarey: requires beta <= 1/2");
}

Interval BobFarey::fresh_move(const Interval& A, const Rat& r) {
    auto [anchor, ord] = minimal_order_farey_element(A);
    anchors_.push_back(anchor);
    ++step_;
    const Rat inv_q2 = make_rat(Int(1), ord * ord);
    if (A.radius < inv_q2) {
        // witness directly: next ball sits in the Farey half-interval around the anchor
        const Interval F = farey_half_interval(A).interval;
        const Rat av = anchor.value();
        const Rat lo = std::max(Rat(F.lo() + r), Rat(av - r));
        const Rat hi = std::min(Rat(F.hi() - r), Rat(av + r));
        if (lo > hi) throw std::logic_error("bob_move: no ball in the half-interval contains the anchor");
        Interval next(clamp(F.center, lo, hi), r);
        witnesses_.push_back({step_, anchor, next_index_, 2 * params_.beta / Rat(ord * ord)});
        return next;
    }
    HalfFareyPartition part = half_farey_partition(A);
    if (r < 2 * inv_q2) {
        // commit: center on a partition element near the middle, then force it
        const Interval J(A.center, A.radius / 2);
        const FareyFraction* pick = nullptr;
        Rat best;
        for (const auto& f : part.ascending()) {
            const Rat v = f.value();
            if (!J.contains(v)) continue;
            const Rat d = v >= A.center ? v - A.center : A.center - v;
            if (!pick || d < best || (d == best && v < pick->value())) {
                pick = &f;
                best = d;
            }
        }
        if (!pick) throw std::logic_error("bob_move: no partition element in the middle half");
        force_nu_ = *pick;
        force_bound_ = 18 * params_.beta / Rat(pick->q * pick->q);
        phase_ = Phase::Force;
        return Interval(pick->value(), r);
    }
    // descend inside the Farey half-interval until the scale 2/q^2 is reached
    descend_q_ = ord;
    descend_partition_ = part;
    phase_ = Phase::Descend;
    const Interval F = farey_half_interval(A).interval;
    return place_in(F, r, F.center);
}

Interval BobFarey::move(const Interval& A, const Rat& r) {
    struct IndexBump {
        size_t& idx;
        ~IndexBump() { ++idx; }
    } bump{next_index_};
    if (!initialized_) {
        if (A.radius > make_rat(1, 4)) return Interval(A.center, r); // reindexing: rho(B_n) > 1/2
        initialized_ = true;
    }
    switch (phase_) {
    case Phase::Fresh: return fresh_move(A, r);
    case Phase::Force: {
        const Rat nu = force_nu_.value();
        if (!A.contains(nu)) throw std::logic_error("bob_move: forced point escaped the play");
        const Rat lo = std::max(Rat(A.lo() + r), Rat(nu - r));
        const Rat hi = std::min(Rat(A.hi() - r), Rat(nu + r));
        if (lo > hi) throw std::logic_error("bob_move: cannot keep the forced point");
        Interval next(clamp(A.center, lo, hi), r);
        witnesses_.push_back({step_, force_nu_, next_index_, force_bound_});
        phase_ = Phase::Fresh;
        return next;
    }
    case Phase::Descend: {
        const Rat threshold = make_rat(Int(2), descend_q_ * descend_q_);
        if (r < threshold) {
            const Interval K(A.center, A.radius / 2);
            const FareyFraction* pick = nullptr;
            Rat best;
            for (const auto& f : descend_partition_.ascending()) {
                const Rat v = f.value();
                if (!K.contains(v)) continue;
                const Rat d = v >= A.center ? v - A.center : A.center - v;
                if (!pick || d < best || (d == best && v < pick->value())) {
                    pick = &f;
                    best = d;
                }
            }
            if (!pick) throw std::logic_error("bob_move: no partition element at descent scale");
            force_nu_ = *pick;
            force_bound_ = 18 * params_.beta / Rat(pick->q * pick->q);
            phase_ = Phase::Force;
            return Interval(pick->value(), r);
        }
        return Interval(A.center, r);
    }
    }
    throw std::logic_error("bob_move: unreachable");
}

Certificate certify_bad(const Play& play, const Rat& delta, size_t depth) {
    if (depth == 0) depth = play.depth();
    if (depth > play.depth()) throw std::domain_error("certify_bad: depth exceeds the play");
    const Rat ab = play.params.alpha_beta();
    Certificate cert;
    cert.q_bound = 0;

    size_t start = 0; // 1-based index of the reindexed first ball
    for (size_t i = 1; i <= depth; ++i) {
        if (play.bob[i - 1].radius <= make_rat(1, 2)) {
            start = i;
            break;
        }
    }
    if (start == 0) return cert; // vacuous: still above the working scale

    const Rat rho = play.bob[start - 1].radius;
    const Int Q = ceil_sqrt(ab / (2 * rho));
    const Interval& Bn = play.bob[depth - 1];

    // largest q with q^2 < alpha*beta/(2 rho(B_n))
    const Rat bound2 = ab / (2 * Bn.radius);
    const Int qb = ceil_sqrt(bound2) - 1;
    cert.q_bound = qb;
    if (qb < Q) return cert;

    // Pruned candidates are best approximations of the center (see module
    // notes), so the convergent list is exhaustive.
    for (const Rat& conv : convergents(Bn.center)) {
        const Int q = conv.get_den();
        if (q < Q || q > qb) continue;
        const Rat threshold = delta / Rat(q * q);
        const Rat c_dist = Bn.center >= conv ? Bn.center - conv : conv - Bn.center;
        if (c_dist > threshold + 2 * Bn.radius) continue;
        const Rat d = Bn.dist(conv);
        if (d < threshold) {
            cert.ok = false;
            cert.violations.push_back({conv.get_num(), q, d, threshold});
        }
    }
    return cert;
}

WitnessReport extract_witnesses(const Play& play) {
    WitnessReport rep;
    BobFarey bob(play.params);
    for (size_t n = 1; n < play.depth(); ++n) {
        const size_t w_before = bob.witnesses().size();
        const size_t a_before = bob.anchors().size();
        Interval expected(0, 0);
        bool faulted = false;
        try {
            expected = bob.move(play.alice[n - 1],
                                bob_required_radius(play.params, play.accel, n, play.alice[n - 1].radius));
        } catch (const std::logic_error&) {
            faulted = true;
        }
        if (faulted || !(expected == play.bob[n])) {
            rep.complete = false;
            rep.witnesses.assign(bob.witnesses().begin(), bob.witnesses().begin() + static_cast<long>(w_before));
            rep.anchors.assign(bob.anchors().begin(), bob.anchors().begin() + static_cast<long>(a_before));
            break;
        }
    }
    if (rep.complete) {
        rep.witnesses = bob.witnesses();
        rep.anchors = bob.anchors();
    }
    if (!rep.anchors.empty()) {
        const FareyFraction& last = rep.anchors.back();
        const bool trailing_equal =
            rep.anchors.size() < 2 || rep.anchors[rep.anchors.size() - 2] == last;
        if (trailing_equal && play.bob.back().contains(last.value())) {
            rep.stabilized = true;
            rep.limit = last;
        }
    }
    return rep;
}

size_t increasing_denominator_run(const std::vector<BobWitness>& ws) {
    std::vector<size_t> best(ws.size(), 1);
    size_t ans = ws.empty() ? 0 : 1;
    for (size_t i = 0; i < ws.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (ws[j].nu.q < ws[i].nu.q) best[i] = std::max(best[i], best[j] + 1);
        ans = std::max(ans, best[i]);
    }
    return ans;
}

} // namespace schmidt
