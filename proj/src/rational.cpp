#include "schmidt/rational.hpp"

namespace schmidt {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
}

std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    const bool inv = e < 0;
    const unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && base == 0) throw std::domain_error("pow_rat: zero base with negative exponent");
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
    return inv ? make_rat(den, num) : make_rat(num, den);
}

Int ceil_sqrt(const Rat& r) {
    if (r <= 0) throw std::domain_error("ceil_sqrt: argument must be positive");
    Int base = floor_rat(r);
    Int n;
    mpz_sqrt(n.get_mpz_t(), base.get_mpz_t()); // floor sqrt of floor(r)
    while (Rat(n * n) < r) ++n;
    while (n > 0 && Rat((n - 1) * (n - 1)) >= r) --n;
    return n;
}

bool in_sqrt_window(const Int& q, const Rat& lo, const Rat& hi) {
    if (!(0 < lo && lo < hi)) throw std::domain_error("in_sqrt_window: requires 0 < lo < hi");
    if (q < 1) throw std::domain_error("in_sqrt_window: q must be positive");
    const Rat q2(q * q);
    return lo <= q2 && q2 < hi;
}

Int root_floor(const Rat& r, unsigned long k) {
    if (r < 0) throw std::domain_error("root_floor: negative argument");
    if (k == 0) throw std::domain_error("root_floor: zero index");
    Int n;
    Int base = floor_rat(r);
    mpz_root(n.get_mpz_t(), base.get_mpz_t(), k);
    auto pw = [&](const Int& v) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), v.get_mpz_t(), k);
        return p;
    };
    while (Rat(pw(n + 1)) <= r) ++n;
    while (n > 0 && Rat(pw(n)) > r) --n;
    return n;
}

} // namespace schmidt
