#include "doctest.h"

#include <bit>

#include "cobord/charclass.hpp"

using namespace cobord;

namespace {

// e_k of the roots by summing over all k-subsets, independent of total_chern_class.
RootPoly elementary_bruteforce(const std::vector<RootPoly>& roots, int k)
{
    RootPoly sum;
    const std::size_t n = roots.size();
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != k)
            continue;
        RootPoly prod = RootPoly::constant(1);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1U << i))
                prod = prod * roots[i];
        sum += prod;
    }
    return sum;
}

}  // namespace

TEST_CASE("root polynomials")
{
    CHECK(RootPoly::parse("2*b^2 - 2*a^2").str() == "-2*a^2 + 2*b^2");
    CHECK(RootPoly::parse("a + b") * RootPoly::parse("a - b") == RootPoly::parse("a^2 - b^2"));
    CHECK(RootPoly::parse("a*b - a*b").is_zero());
    CHECK(RootPoly::parse("-a*b").str() == "-a*b");
    CHECK(RootPoly::parse("3").str() == "3");
    CHECK_FALSE(RootPoly::parse("a*b").weyl_invariant());
    CHECK(RootPoly::parse("a^2*b^2 + 7").weyl_invariant());
    CHECK_THROWS_AS(RootPoly::parse("c"), std::invalid_argument);
}

TEST_CASE("restrictions")
{
    for (RepTag t : {RepTag::A, RepTag::B, RepTag::Trivial}) {
        CAPTURE(rep_tag_name(t));
        const auto r = restrict_rep(t);
        CHECK(r.sign_closed());
        const auto c = total_chern_class(r);
        CHECK(c.size() == r.roots.size() + 1);
        for (int k = 0; k <= static_cast<int>(r.roots.size()); ++k) {
            CHECK(chern_class(r, k) == elementary_bruteforce(r.roots, k));
            CHECK(chern_class(r, k).weyl_invariant());
        }
        CHECK(chern_class(r, 1).is_zero());
    }
    CHECK(total_chern_class(restrict_rep(RepTag::Trivial)) == std::vector<RootPoly>{RootPoly::constant(1)});
    CHECK(chern_class(restrict_rep(RepTag::B), 2) == RootPoly::parse("-2*a^2 - 2*b^2"));
    CHECK(chern_class(restrict_rep(RepTag::A), 2) == RootPoly::parse("-4*a^2"));
    CHECK(chern_class(restrict_rep(RepTag::A), 3).is_zero());
    CHECK(chern_class(restrict_rep(RepTag::B), 4) == RootPoly::parse("a^4 - 2*a^2*b^2 + b^4"));
}

TEST_CASE("Euler identity")
{
    const auto r = euler_identity_check();
    CHECK(r.epsilon == -1);
    CHECK(r.difference == RootPoly::parse("2*b^2 - 2*a^2"));
    CHECK(r.chi == RootPoly::parse("b^2 - a^2"));
    CHECK(r.identity_holds);
    CHECK(r.squared_identity_holds);
    CHECK(r.pass());
    // c4(B) = chi^2
    CHECK(chern_class(restrict_rep(RepTag::B), 4) == r.chi * r.chi);

    const auto flipped = euler_identity_check(1);
    CHECK_FALSE(flipped.identity_holds);
    CHECK(flipped.squared_identity_holds);
    CHECK_THROWS_AS(euler_identity_check(0), std::invalid_argument);
}

TEST_CASE("Atiyah-Hirzebruch obstruction")
{
    const SqAlgebra b = bso4_ring();
    const auto w4 = ah_obstruction(b.gen("w4"), b);
    CHECK(w4.verdict == ObstructionVerdict::Obstructed);
    CHECK(w4.sq3 == b.parse("w3*w4"));
    CHECK(verdict_name(w4.verdict) == "OBSTRUCTED");
    const auto zero = ah_obstruction(MGPoly(b.generators()), b);
    CHECK(zero.verdict == ObstructionVerdict::Undecided);
    CHECK(ah_obstruction(b.parse("w2^2"), b).verdict == ObstructionVerdict::Undecided);
    // Sq^3(w2 w3) = w2^2 Sq^1 w3 = 0 since w1 = 0
    CHECK(ah_obstruction(b.parse("w2*w3"), b).verdict == ObstructionVerdict::Undecided);
    CHECK(ah_obstruction(b.gen("w3"), b).sq3 == b.parse("w3^2"));
}
