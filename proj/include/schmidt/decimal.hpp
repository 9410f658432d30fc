/**
 * @file decimal.hpp
 * @brief Thin RAII wrapper over MPFR for the few transcendental evaluations
 *        (natural logs and their quotients). Everything decidable in exact
 *        rational arithmetic is decided there; this type only renders values.
 */
#pragma once

#include "schmidt/rational.hpp"

#include <mpfr.h>

#include <string>

namespace schmidt {

class Decimal {
  public:
    explicit Decimal(long digits);
    Decimal(const Decimal& other);
    Decimal(Decimal&& other) noexcept;
    Decimal& operator=(Decimal other);
    ~Decimal();

    static Decimal from_rat(const Rat& x, long digits);
    static Decimal log_of(const Rat& x, long digits); // natural log, x > 0

    Decimal operator+(const Decimal&) const;
    Decimal operator-(const Decimal&) const;
    Decimal operator*(const Decimal&) const;
    Decimal operator/(const Decimal&) const;

    bool operator<(const Decimal&) const;

    long digits() const { return digits_; }
    double approx() const;
    /// Fixed-point rendering with `digits` fractional digits.
    std::string fixed() const;

  private:
    mpfr_t v_;
    long digits_;
};

} // namespace schmidt
