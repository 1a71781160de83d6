#include "cobord/local_int.hpp"

#include <stdexcept>

#include "cobord/errors.hpp"

namespace cobord {

LocalInt2::LocalInt2(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den))
{
    if (sgn(den_) == 0)
        throw std::domain_error("LocalInt2: zero denominator");
    normalize();
    if (mpz_even_p(den_.get_mpz_t()))
        throw IntegralityError("LocalInt2: denominator " + den_.get_str() + " is even");
}

std::optional<LocalInt2> LocalInt2::from_rational(const mpq_class& q)
{
    // mpq_class is canonical: positive denominator, reduced.
    if (mpz_even_p(q.get_den_mpz_t()))
        return std::nullopt;
    LocalInt2 r;
    r.num_ = q.get_num();
    r.den_ = q.get_den();
    return r;
}

void LocalInt2::normalize()
{
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (sgn(num_) == 0) {
        den_ = 1;
        return;
    }
    if (den_ == 1)
        return;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

int LocalInt2::valuation() const
{
    if (is_zero())
        return kInfiniteValuation;
    return static_cast<int>(mpz_scan1(num_.get_mpz_t(), 0));
}

LocalInt2 LocalInt2::unit_part() const
{
    if (is_zero())
        return {};
    LocalInt2 r = *this;
    mpz_fdiv_q_2exp(r.num_.get_mpz_t(), num_.get_mpz_t(), static_cast<mp_bitcnt_t>(valuation()));
    return r;
}

LocalInt2 LocalInt2::inverse() const
{
    if (!is_unit())
        throw std::domain_error("LocalInt2: " + str() + " is not a unit in Z_(2)");
    LocalInt2 r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

std::optional<LocalInt2> LocalInt2::exact_div(const LocalInt2& d) const
{
    if (d.is_zero())
        return std::nullopt;
    if (is_zero())
        return LocalInt2{};
    const int vd = d.valuation();
    if (valuation() < vd)
        return std::nullopt;
    // (a/b) / (2^vd u/w) with u odd: a w / (b u 2^vd)
    LocalInt2 r;
    r.num_ = num_ * d.den_;
    mpz_fdiv_q_2exp(r.num_.get_mpz_t(), r.num_.get_mpz_t(), static_cast<mp_bitcnt_t>(vd));
    mpz_class du;
    mpz_fdiv_q_2exp(du.get_mpz_t(), d.num_.get_mpz_t(), static_cast<mp_bitcnt_t>(vd));
    r.den_ = den_ * du;
    r.normalize();
    return r;
}

LocalInt2 LocalInt2::power_of_two(int e)
{
    LocalInt2 r;
    mpz_ui_pow_ui(r.num_.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

mpq_class LocalInt2::to_rational() const
{
    mpq_class q(num_, den_);
    q.canonicalize();
    return q;
}

std::string LocalInt2::str() const
{
    if (den_ == 1)
        return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

LocalInt2& LocalInt2::operator+=(const LocalInt2& o)
{
    if (o.is_zero())
        return *this;
    if (den_ == 1 && o.den_ == 1) {
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

LocalInt2& LocalInt2::operator-=(const LocalInt2& o)
{
    if (o.is_zero())
        return *this;
    if (den_ == 1 && o.den_ == 1) {
        num_ -= o.num_;
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

LocalInt2& LocalInt2::operator*=(const LocalInt2& o)
{
    num_ *= o.num_;
    if (o.den_ != 1)
        den_ *= o.den_;
    normalize();
    return *this;
}

}  // namespace cobord
