#include "schmidt/decimal.hpp"

#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

namespace schmidt {

namespace {

mpfr_prec_t bits_for(long digits) {
    // digits * log2(10) plus guard bits
    return static_cast<mpfr_prec_t>(static_cast<double>(digits) * 3.3219280948873626) + 64;
}

} // namespace

Decimal::Decimal(long digits) : digits_(digits) {
    if (digits < 1) throw std::domain_error("Decimal: precision must be >= 1 digit");
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_zero(v_, 1);
}

Decimal::Decimal(const Decimal& other) : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Decimal::Decimal(Decimal&& other) noexcept : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

Decimal& Decimal::operator=(Decimal other) {
    mpfr_swap(v_, other.v_);
    std::swap(digits_, other.digits_);
    return *this;
}

Decimal::~Decimal() { mpfr_clear(v_); }

Decimal Decimal::from_rat(const Rat& x, long digits) {
    Decimal d(digits);
    mpfr_set_q(d.v_, x.get_mpq_t(), MPFR_RNDN);
    return d;
}

Decimal Decimal::log_of(const Rat& x, long digits) {
    if (x <= 0) throw std::domain_error("Decimal::log_of: argument must be positive");
    Decimal d = from_rat(x, digits);
    mpfr_log(d.v_, d.v_, MPFR_RNDN);
    return d;
}

Decimal Decimal::operator+(const Decimal& o) const {
    Decimal d(std::max(digits_, o.digits_));
    mpfr_add(d.v_, v_, o.v_, MPFR_RNDN);
    return d;
}

Decimal Decimal::operator-(const Decimal& o) const {
    Decimal d(std::max(digits_, o.digits_));
    mpfr_sub(d.v_, v_, o.v_, MPFR_RNDN);
    return d;
}

Decimal Decimal::operator*(const Decimal& o) const {
    Decimal d(std::max(digits_, o.digits_));
    mpfr_mul(d.v_, v_, o.v_, MPFR_RNDN);
    return d;
}

Decimal Decimal::operator/(const Decimal& o) const {
    Decimal d(std::max(digits_, o.digits_));
    mpfr_div(d.v_, v_, o.v_, MPFR_RNDN);
    return d;
}

bool Decimal::operator<(const Decimal& o) const { return mpfr_cmp(v_, o.v_) < 0; }

double Decimal::approx() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string Decimal::fixed() const {
    const int n = mpfr_snprintf(nullptr, 0, "%.*Rf", static_cast<int>(digits_), v_);
    std::vector<char> buf(static_cast<size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", static_cast<int>(digits_), v_);
    return std::string(buf.data());
}

} // namespace schmidt
