#include "schmidt/dioph.hpp"

namespace schmidt {

std::vector<Int> continued_fraction(const Rat& x) {
    std::vector<Int> terms;
    Int num = x.get_num(), den = x.get_den();
    while (den != 0) {
        Int a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        terms.push_back(a);
        num = den;
        den = r;
    }
    return terms;
}

Rat cf_value(const std::vector<Int>& terms) {
    if (terms.empty()) throw std::domain_error("cf_value: empty expansion");
    Rat v(terms.back());
    for (size_t i = terms.size() - 1; i-- > 0;) v = Rat(terms[i]) + 1 / v;
    return v;
}

namespace {

std::vector<Rat> convergents_from(const std::vector<Int>& terms) {
    std::vector<Rat> out;
    Int p_prev = 1, q_prev = 0; // p_{-1}/q_{-1}
    Int p = 0, q = 1;
    bool first = true;
    for (const Int& a : terms) {
        if (first) {
            p = a;
            q = 1;
            first = false;
        } else {
            Int pn = a * p + p_prev, qn = a * q + q_prev;
            p_prev = p;
            q_prev = q;
            p = pn;
            q = qn;
        }
        out.push_back(make_rat(p, q));
    }
    return out;
}

} // namespace

std::vector<Rat> convergents(const Rat& x) { return convergents_from(continued_fraction(x)); }

Rat RealSpec::enclosure() const {
    if (kind == Kind::Rational) return Rat(0);
    auto conv = convergents_from(terms);
    if (conv.size() < 2) return Rat(0);
    const Rat d = conv[conv.size() - 1] - conv[conv.size() - 2];
    return d >= 0 ? d : Rat(-d);
}

namespace {

Rat abs_rat(const Rat& x) { return x >= 0 ? x : Rat(-x); }

} // namespace

std::vector<DirWitness> dir_witnesses(const RealSpec& x, const Rat& delta, const Int& q_max) {
    if (q_max < 1) throw std::domain_error("dir_witnesses: q_max must be >= 1");
    if (delta <= 0) throw std::domain_error("dir_witnesses: delta must be positive");
    const Rat v = x.value();
    const Rat enc = x.enclosure();
    std::vector<DirWitness> out;
    for (Int q = 1; q <= q_max; ++q) {
        const Rat step = delta / Rat(q * q);
        // candidates p with |v - p/q| < delta/q^2
        const Int p_lo = ceil_rat((v - step) * Rat(q));
        const Int p_hi = floor_rat((v + step) * Rat(q));
        for (Int p = p_lo; p <= p_hi; ++p) {
            Int g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (q == 1) g = 1; // 0 is relatively prime to 1
            if (g != 1) continue;
            const Rat d = abs_rat(v - make_rat(p, q));
            if (d < step) out.push_back({p, q, d, d + enc < step});
        }
    }
    return out;
}

bool bad_check(const RealSpec& x, const Rat& delta, const Int& Q, const Int& q_max) {
    if (Q < 1 || q_max < Q) throw std::domain_error("bad_check: requires 1 <= Q <= q_max");
    if (delta <= 0) throw std::domain_error("bad_check: delta must be positive");
    const Rat v = x.value();
    const Rat enc = x.enclosure();
    for (Int q = Q; q <= q_max; ++q) {
        const Rat step = delta / Rat(q * q) + enc;
        const Int p_lo = ceil_rat((v - step) * Rat(q));
        const Int p_hi = floor_rat((v + step) * Rat(q));
        for (Int p = p_lo; p <= p_hi; ++p) {
            Int g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (q == 1) g = 1;
            if (g != 1) continue;
            if (abs_rat(v - make_rat(p, q)) < delta / Rat(q * q)) return false;
        }
    }
    return true;
}

} // namespace schmidt
