#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cobord/local_int.hpp"

namespace cobord {

/// Number of polynomial generators v_1..v_k when none is configured.
inline constexpr int kDefaultGeneratorCount = 4;

/// |v_i| = -2(2^i - 1).
constexpr int generator_degree(int i) { return -2 * ((1 << i) - 1); }

/// Lowest degree at which a computation with k generators is exact. Anything at
/// |v_{k+1}| or below would need the missing generator.
constexpr int capacity_floor(int k) { return generator_degree(k + 1) + 2; }

/// Throws CapacityError when a multiplier of degree `degree` would need v_{k+1}.
void require_capacity(int degree, int k, const char* context);

/// Monomial v_1^{e_1} ... v_n^{e_n}. Trailing zero exponents are never stored, so
/// equal monomials compare equal regardless of how many generators were in play.
class VMonomial {
public:
    VMonomial() = default;
    explicit VMonomial(std::vector<int> exponents);

    /// v_i (1-based).
    static VMonomial generator(int i);

    const std::vector<int>& exponents() const { return exps_; }
    int exponent(int i) const;  // 1-based
    int max_generator() const { return static_cast<int>(exps_.size()); }
    bool is_one() const { return exps_.empty(); }
    int degree() const;
    bool divides(const VMonomial& other) const;
    /// other / this; requires divides(other).
    VMonomial quotient_of(const VMonomial& other) const;

    std::string str(const char* var = "v") const;

    friend VMonomial operator*(const VMonomial& a, const VMonomial& b);
    friend bool operator==(const VMonomial&, const VMonomial&) = default;

private:
    void trim();
    std::vector<int> exps_;
};

int monomial_degree(const VMonomial& m);

/// Fixed global order: higher degree (closer to zero) first, then lexicographically
/// larger exponent vector first. Reports print terms in this order.
struct MonomialOrder {
    bool operator()(const VMonomial& a, const VMonomial& b) const;
};

/// Every monomial in v_1..v_k of exactly `degree`, in MonomialOrder. Odd or positive
/// degrees give an empty list.
std::vector<VMonomial> bp_basis(int degree, int k);

namespace detail {
inline bool coeff_is_zero(const LocalInt2& c) { return c.is_zero(); }
inline bool coeff_is_zero(const mpq_class& c) { return sgn(c) == 0; }
inline std::string coeff_str(const LocalInt2& c) { return c.str(); }
inline std::string coeff_str(const mpq_class& c) { return c.get_str(); }
inline bool coeff_is_one(const LocalInt2& c) { return c == LocalInt2(1); }
inline bool coeff_is_one(const mpq_class& c) { return c == 1; }
}  // namespace detail

/// Sparse polynomial over a coefficient ring C in the generators v_i (or any
/// generators graded like them). No stored coefficient is zero.
template <class C>
class GradedPoly {
public:
    using Terms = std::map<VMonomial, C, MonomialOrder>;

    GradedPoly() = default;
    GradedPoly(const C& c)  // NOLINT(google-explicit-constructor)
    {
        add_term(VMonomial{}, c);
    }
    static GradedPoly monomial(const VMonomial& m, const C& c = C(1))
    {
        GradedPoly p;
        p.add_term(m, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    C coefficient(const VMonomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const VMonomial& m, const C& c)
    {
        if (detail::coeff_is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (detail::coeff_is_zero(it->second))
                terms_.erase(it);
        }
    }

    /// Degree of the unique homogeneous component, or nullopt when the terms
    /// disagree. The zero polynomial counts as homogeneous of every degree and
    /// reports nullopt too; use is_homogeneous() for the predicate.
    std::optional<int> degree() const
    {
        if (terms_.empty())
            return std::nullopt;
        const int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d)
                return std::nullopt;
        return d;
    }
    bool is_homogeneous() const { return terms_.empty() || degree().has_value(); }

    int max_generator() const
    {
        int g = 0;
        for (const auto& [m, c] : terms_)
            g = std::max(g, m.max_generator());
        return g;
    }

    GradedPoly& operator+=(const GradedPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    GradedPoly& operator-=(const GradedPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator-(const GradedPoly& a)
    {
        GradedPoly r;
        for (const auto& [m, c] : a.terms_)
            r.terms_.emplace(m, -c);
        return r;
    }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b)
    {
        GradedPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }
    friend GradedPoly operator*(const C& s, const GradedPoly& a)
    {
        GradedPoly r;
        if (detail::coeff_is_zero(s))
            return r;
        for (const auto& [m, c] : a.terms_)
            r.add_term(m, s * c);
        return r;
    }
    friend bool operator==(const GradedPoly& a, const GradedPoly& b)
    {
        if (a.terms_.size() != b.terms_.size())
            return false;
        auto ib = b.terms_.begin();
        for (const auto& [m, c] : a.terms_) {
            if (!(m == ib->first) || !(c == ib->second))
                return false;
            ++ib;
        }
        return true;
    }

    /// Canonical text: "2*v1^2 + v2", "-58/7*v1^4 + 30/7*v1*v2", "0".
    std::string str(const char* var = "v") const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = detail::coeff_str(c);
            bool negative = !cs.empty() && cs[0] == '-';
            if (negative)
                cs.erase(0, 1);
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;
            if (m.is_one()) {
                out += cs;
            } else {
                if (cs != "1")
                    out += cs + "*";
                out += m.str(var);
            }
        }
        return out;
    }

private:
    Terms terms_;
};

/// Element of BP^* = Z_(2)[v_1, v_2, ...].
using BPElem = GradedPoly<LocalInt2>;
/// Same monomials with rational coefficients; used by the formal group law
/// construction before integrality is established.
using RatPoly = GradedPoly<mpq_class>;

/// Substitute generator i -> images[i-1] (a ring map into RatPoly).
RatPoly substitute(const RatPoly& p, const std::vector<RatPoly>& images);

/// nullopt if some coefficient has even denominator.
std::optional<BPElem> to_local(const RatPoly& p);
RatPoly to_rational(const BPElem& p);

}  // namespace cobord
