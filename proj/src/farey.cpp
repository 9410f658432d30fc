#include "schmidt/farey.hpp"

#include <algorithm>

namespace schmidt {

FareyFraction::FareyFraction(Int p_, Int q_, Int k_) : p(std::move(p_)), q(std::move(q_)), k(std::move(k_)) {
    if (q <= 0) throw std::domain_error("FareyFraction: order must be positive");
    if (p < 0 || p >= q) {
        if (!(p == 0 && q == 1)) throw std::domain_error("FareyFraction: p out of [0, q)");
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (p != 0 && g != 1) throw std::domain_error("FareyFraction: not reduced");
}

FareyFraction FareyFraction::from_value(const Rat& value) {
    Int k = floor_rat(value);
    Rat frac = value - Rat(k);
    return FareyFraction(frac.get_num(), frac.get_den(), k);
}

std::vector<FareyFraction> farey_sequence(long n) {
    if (n < 1) throw std::domain_error("farey_sequence: order must be >= 1");
    std::vector<FareyFraction> out;
    out.emplace_back(Int(0), Int(1), Int(0));
    if (n == 1) {
        out.emplace_back(Int(0), Int(1), Int(1)); // 1/1
        return out;
    }
    // next-term recurrence on consecutive Farey pairs
    Int pa = 0, qa = 1, pb = 1, qb(n);
    for (;;) {
        if (pb == qb) {
            out.emplace_back(Int(0), Int(1), Int(1)); // 1/1
            break;
        }
        out.emplace_back(pb, qb, Int(0));
        Int k = (Int(n) + qa) / qb;
        Int pc = k * pb - pa, qc = k * qb - qa;
        pa = pb;
        qa = qb;
        pb = pc;
        qb = qc;
    }
    return out;
}

FareyFraction mediant(const FareyFraction& x, const FareyFraction& y) {
    if (!(x.value() < y.value())) throw std::domain_error("mediant: requires x < y");
    Int k = x.k < y.k ? x.k : y.k;
    Int px = x.p + (x.k - k) * x.q;
    Int py = y.p + (y.k - k) * y.q;
    Rat m = make_rat(px + py, x.q + y.q) + Rat(k);
    return FareyFraction::from_value(m);
}

namespace {

// Fractions strictly between the Stern-Brocot neighbors pl/ql < pr/qr, lying
// in [u, v] with denominator <= qmax, appended ascending. u, v in [0, 1].
void sb_enum(const Rat& u, const Rat& v, const Int& qmax, Int pl, Int ql, Int pr, Int qr,
             std::vector<Rat>& out) {
    for (;;) {
        Int pm = pl + pr, qm = ql + qr;
        if (qm > qmax) return;
        Rat m = make_rat(pm, qm); // mediants of SB neighbors are reduced
        if (m < u) {
            // consecutive right-descents: largest t with (pl+t*pr)/(ql+t*qr) < u
            Int A = pr * u.get_den() - u.get_num() * qr;
            Int B = u.get_num() * ql - pl * u.get_den();
            Int t;
            mpz_cdiv_q(t.get_mpz_t(), B.get_mpz_t(), A.get_mpz_t());
            t -= 1;
            if (t < 1) t = 1;
            pl += t * pr;
            ql += t * qr;
        } else if (m > v) {
            Int A = v.get_num() * qr - pr * v.get_den();
            Int B = pl * v.get_den() - v.get_num() * ql;
            Int t;
            mpz_cdiv_q(t.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
            t -= 1;
            if (t < 1) t = 1;
            pr += t * pl;
            qr += t * ql;
        } else {
            if (m > u) sb_enum(u, m, qmax, pl, ql, pm, qm, out);
            out.push_back(m);
            if (m < v) sb_enum(m, v, qmax, pm, qm, pr, qr, out);
            return;
        }
    }
}

} // namespace

std::vector<FareyFraction> fractions_in_interval(const Rat& lo, const Rat& hi, const Int& qmax) {
    if (qmax < 1) throw std::domain_error("fractions_in_interval: qmax must be >= 1");
    if (lo > hi) throw std::domain_error("fractions_in_interval: lo > hi");
    std::vector<std::pair<Rat, FareyFraction>> found;
    for (Int k = ceil_rat(lo); k <= floor_rat(hi); ++k)
        found.emplace_back(Rat(k), FareyFraction(Int(0), Int(1), k));
    if (qmax >= 2) {
        for (Int k = floor_rat(lo); Rat(k) < hi; ++k) {
            Rat u = lo - Rat(k), v = hi - Rat(k);
            if (u < 0) u = 0;
            if (v > 1) v = 1;
            if (u >= 1 || v <= 0 || u > v) continue;
            std::vector<Rat> vals;
            sb_enum(u, v, qmax, Int(0), Int(1), Int(1), Int(1), vals);
            for (const Rat& m : vals)
                found.emplace_back(Rat(m + Rat(k)), FareyFraction(m.get_num(), m.get_den(), k));
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<FareyFraction> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(f.second);
    return out;
}

std::pair<FareyFraction, Int> minimal_order_farey_element(const Interval& I) {
    const Rat D = I.diam();
    if (!(0 < D && D < 1)) throw std::domain_error("minimal_order_farey_element: requires 0 < diam < 1");
    if (ceil_rat(I.lo()) <= floor_rat(I.hi())) {
        FareyFraction f(Int(0), Int(1), ceil_rat(I.lo()));
        return {f, Int(1)};
    }
    const Int k = floor_rat(I.lo());
    const Rat u = I.lo() - Rat(k), v = I.hi() - Rat(k);
    Int pl = 0, ql = 1, pr = 1, qr = 1;
    for (;;) {
        Int pm = pl + pr, qm = ql + qr;
        Rat m = make_rat(pm, qm);
        if (u <= m && m <= v) return {FareyFraction(pm, qm, k), qm};
        if (m < u) {
            Int A = pr * u.get_den() - u.get_num() * qr;
            Int B = u.get_num() * ql - pl * u.get_den();
            Int t;
            mpz_cdiv_q(t.get_mpz_t(), B.get_mpz_t(), A.get_mpz_t());
            t -= 1;
            if (t < 1) t = 1;
            pl += t * pr;
            ql += t * qr;
        } else {
            Int A = v.get_num() * qr - pr * v.get_den();
            Int B = pl * v.get_den() - v.get_num() * ql;
            Int t;
            mpz_cdiv_q(t.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
            t -= 1;
            if (t < 1) t = 1;
            pr += t * pl;
            qr += t * ql;
        }
    }
}

std::vector<FareyFraction> HalfFareyPartition::ascending() const {
    std::vector<FareyFraction> out = left_chain;
    out.push_back(anchor);
    out.insert(out.end(), right_chain.begin(), right_chain.end());
    return out;
}

HalfFareyPartition half_farey_partition(const Interval& I) {
    auto [anchor, ord] = minimal_order_farey_element(I);
    HalfFareyPartition part;
    part.anchor = anchor;
    const Int k = anchor.k;
    if (ord == 1) {
        part.l = 1;
        part.r = 1;
        part.left_chain = {FareyFraction(Int(1), Int(2), k - 1)};
        part.right_chain = {FareyFraction(Int(1), Int(2), k)};
        part.cover = Interval(Rat(k), make_rat(1, 2));
        return part;
    }
    const Int p = anchor.p, q = anchor.q;
    // F_q^Z neighbors a/b + k, p/q + k, c/d + k: b = p^{-1} mod q, mediant identity
    Int b;
    if (mpz_invert(b.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t()) == 0)
        throw std::logic_error("half_farey_partition: no modular inverse");
    Int a = (p * b - 1) / q;
    Int d = q - b;
    Int c = p - a;
    part.l = make_rat(q, b);
    part.r = make_rat(q, d);
    const Int lc = ceil_rat(part.l), rc = ceil_rat(part.r);
    for (Int j = lc; j >= 1; --j)
        part.left_chain.emplace_back(j * a + p, j * b + q, k);
    for (Int j = 1; j <= rc; ++j)
        part.right_chain.emplace_back(p + j * c, q + j * d, k);
    part.cover = Interval::from_endpoints(part.left_chain.front().value(),
                                          part.right_chain.back().value());
    return part;
}

FareyHalfInterval farey_half_interval(const Interval& I) {
    const Rat D = I.diam();
    if (!(0 < D && D < 1)) throw std::domain_error("farey_half_interval: requires 0 < diam < 1");
    auto [anchor, ord] = minimal_order_farey_element(I);
    (void)ord;
    FareyHalfInterval f;
    f.anchor = anchor;
    const Rat av = anchor.value();
    f.L = av - I.lo();
    f.R = I.hi() - av;
    f.interval = Interval::from_endpoints(av - f.L / 2, av + f.R / 2);
    return f;
}

} // namespace schmidt
