#pragma once

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <string>

namespace cobord {

/// An element of Z_(2): a reduced fraction whose denominator is odd and positive.
/// Zero is stored as 0/1. Units are exactly the elements with odd numerator.
class LocalInt2 {
public:
    static constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

    LocalInt2() = default;
    LocalInt2(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    explicit LocalInt2(mpz_class value) : num_(std::move(value)) {}
    /// Throws IntegralityError when `den` is even, std::domain_error when zero.
    LocalInt2(mpz_class num, mpz_class den);

    /// nullopt when the reduced denominator is even.
    static std::optional<LocalInt2> from_rational(const mpq_class& q);

    const mpz_class& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const { return sgn(num_) == 0; }
    bool is_unit() const { return mpz_odd_p(num_.get_mpz_t()) != 0; }
    bool is_integer() const { return den_ == 1; }

    /// 2-adic valuation; kInfiniteValuation for zero.
    int valuation() const;
    /// this / 2^valuation(); a unit. Zero maps to zero.
    LocalInt2 unit_part() const;
    /// Requires is_unit().
    LocalInt2 inverse() const;
    /// this / d when the quotient stays in Z_(2).
    std::optional<LocalInt2> exact_div(const LocalInt2& d) const;

    static LocalInt2 power_of_two(int e);

    mpq_class to_rational() const;
    std::string str() const;

    LocalInt2& operator+=(const LocalInt2& o);
    LocalInt2& operator-=(const LocalInt2& o);
    LocalInt2& operator*=(const LocalInt2& o);

    friend LocalInt2 operator+(LocalInt2 a, const LocalInt2& b) { return a += b; }
    friend LocalInt2 operator-(LocalInt2 a, const LocalInt2& b) { return a -= b; }
    friend LocalInt2 operator*(LocalInt2 a, const LocalInt2& b) { return a *= b; }
    friend LocalInt2 operator-(LocalInt2 a)
    {
        a.num_ = -a.num_;
        return a;
    }
    friend bool operator==(const LocalInt2& a, const LocalInt2& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();

    mpz_class num_{0};
    mpz_class den_{1};
};

}  // namespace cobord
