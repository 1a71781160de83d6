#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cobord/steenrod.hpp"

namespace cobord {

/// Integer polynomial in the formal Chern roots a, b of SU(2) x SU(2) (each of
/// cohomological degree 2).
class RootPoly {
public:
    RootPoly() = default;
    static RootPoly constant(long c);
    /// ca * a + cb * b
    static RootPoly linear(long ca, long cb);
    static RootPoly monomial(long c, int i, int j);
    /// Parses "2*b^2 - 2*a^2", "a + b", "-a*b", "0".
    static RootPoly parse(const std::string& text);

    long coefficient(int i, int j) const;
    const std::map<std::pair<int, int>, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RootPoly negate_a() const;
    RootPoly negate_b() const;
    /// Invariant under a -> -a and under b -> -b.
    bool weyl_invariant() const;

    /// Higher total degree first, then higher power of a: "-2*a^2 - 2*b^2".
    std::string str() const;

    RootPoly& operator+=(const RootPoly& o);
    RootPoly& operator-=(const RootPoly& o);
    friend RootPoly operator+(RootPoly x, const RootPoly& y) { return x += y; }
    friend RootPoly operator-(RootPoly x, const RootPoly& y) { return x -= y; }
    friend RootPoly operator*(const RootPoly& x, const RootPoly& y);
    friend RootPoly operator*(long c, const RootPoly& x);
    friend bool operator==(const RootPoly&, const RootPoly&) = default;

private:
    void add(int i, int j, long c);
    std::map<std::pair<int, int>, long> terms_;  // (i, j) -> coefficient of a^i b^j, nonzero only
};

enum class RepTag { A, B, Trivial };
std::string rep_tag_name(RepTag t);

/// Restriction of a representation of SO(4) to the maximal torus of SU(2) x SU(2).
struct RepRestriction {
    RepTag tag;
    std::vector<RootPoly> roots;
    /// The multiset is stable under a -> -a and under b -> -b.
    bool sign_closed() const;
};

/// A: adjoint of the first SO(3) factor, roots {2a, 0, -2a}. B: the defining
/// representation, roots {a+b, a-b, -a+b, -a-b}. Trivial: no roots.
RepRestriction restrict_rep(RepTag tag);

/// c_k as the k-th elementary symmetric function of the roots (c_0 = 1).
RootPoly chern_class(const RepRestriction& r, int k);
/// c_0 .. c_{#roots}.
std::vector<RootPoly> total_chern_class(const RepRestriction& r);

/// Orientation sign of the Euler class pullback chi = eps * (a^2 - b^2). The
/// default makes 2 chi = c2(A) - c2(B) hold with a plus sign.
inline constexpr int kOrientationSign = -1;

struct EulerIdentityReport {
    RootPoly c2a;
    RootPoly c2b;
    RootPoly difference;  // c2(A) - c2(B)
    RootPoly chi;
    int epsilon = 0;
    bool identity_holds = false;        // 2 chi = c2(A) - c2(B)
    bool squared_identity_holds = false;  // (2 chi)^2 = (c2(A) - c2(B))^2
    bool weyl_invariant = false;         // every computed class
    bool c1_vanishes = false;            // for A and B
    bool pass() const { return identity_holds && squared_identity_holds && weyl_invariant && c1_vanishes; }
};
/// chi is the product of one root from each Pfaffian pair {a+b, -a-b}, {a-b, -a+b}
/// of B, times epsilon.
EulerIdentityReport euler_identity_check(int epsilon = kOrientationSign);

enum class ObstructionVerdict { Obstructed, Undecided };
std::string verdict_name(ObstructionVerdict v);

struct AHObstruction {
    MGPoly sq3;
    ObstructionVerdict verdict;
};
/// Sq^3 of a mod-2 class: nonzero means the class is not in the image of MU^* and
/// hence not an algebraic cycle class.
AHObstruction ah_obstruction(const MGPoly& cls, const SqAlgebra& a);

}  // namespace cobord
