#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cobord/fpmodule.hpp"
#include "cobord/linalg.hpp"

namespace cobord {

/// Abelian-group invariants of a graded module on the closed window [lo, hi].
class DegreewiseModule {
public:
    DegreewiseModule() = default;
    DegreewiseModule(int lo, int hi);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool in_window(int d) const { return d >= lo_ && d <= hi_; }

    /// Throws WindowError outside [lo, hi].
    const AbelianGroup& at(int d) const;
    void set(int d, AbelianGroup g);

    bool is_zero() const;
    /// Nonzero degrees only, ascending: "2: Z/2\n4: Z/2\n".
    std::string str() const;

    /// Notes on auxiliary degrees consulted (padding), for reports.
    std::vector<std::string> audit;

    /// Compares the window and the groups, not the audit notes.
    friend bool operator==(const DegreewiseModule& a, const DegreewiseModule& b)
    {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.groups_ == b.groups_;
    }

private:
    int lo_ = 0;
    int hi_ = -1;
    std::map<int, AbelianGroup> groups_;
};

/// Degreewise cokernel of the presentation.
DegreewiseModule realize(const FPModule& m, int lo, int hi, int k = kDefaultGeneratorCount);

/// Z_(2) (x)_{BP^*} M, i.e. M / (v_1, v_2, ...) M.
DegreewiseModule tensor_unit(const FPModule& m, int lo, int hi);
/// Z/2 (x)_{BP^*} M.
DegreewiseModule tensor_mod2(const FPModule& m, int lo, int hi);

/// M (x)_{BP^*} N as a presentation: generators g (x) h, relations r (x) h and g (x) s.
FPModule tensor_product(const FPModule& m, const FPModule& n);

/// Tor_1 grading: the class represented in algebraic degree d is reported in degree
/// d - 1, the degree of BP^*(X x Y) it contributes to.
inline constexpr int kTorShift = 1;

/// Tor_1(M, N) from the length-one resolution 0 -> F1 -> F0 -> N given by N's
/// presentation, which must be injective in every degree consulted (checked).
DegreewiseModule tor1_via_resolution(const FPModule& m, const FPModule& n, int lo, int hi,
                                     int k = kDefaultGeneratorCount);
/// Against the skeleton presentation of BP^*Y_{2n}.
DegreewiseModule tor1_via_resolution(const FPModule& m, int n, int lo, int hi, int k = kDefaultGeneratorCount);

/// Tor_1(M, N) by resolving M instead: H_1 of P1 (x) N -> P0 (x) N modulo the image
/// of the degreewise syzygies of M's relations. Uses nothing about N beyond its
/// presentation.
DegreewiseModule tor1_bruteforce(const FPModule& m, const FPModule& n, int lo, int hi,
                                 int k = kDefaultGeneratorCount);

/// The two outer terms of the Kunneth sequence
///   0 -> (M (x) N)^i -> BP^i(X x Y) -> Tor_1(M, N)^{i} -> 0
/// (Tor in the shifted grading above). The middle term is only known up to this
/// associated graded.
struct KunnethPieces {
    DegreewiseModule tensor;
    DegreewiseModule tor;
    std::string label = "associated graded";
};
KunnethPieces kunneth_pieces(const FPModule& m, int n, int lo, int hi, int k = kDefaultGeneratorCount);
KunnethPieces kunneth_pieces(const FPModule& m, const FPModule& n, int lo, int hi,
                             int k = kDefaultGeneratorCount);

/// Tor_1(M, BP^*Y_{2n}) in degree i is the set of tuples (x_1..x_n), x_j in
/// M^{i - (2j - 1)}, satisfying sum_{j <= m} a_{m-j+1} x_j = 0 for m = 1..n.
std::vector<int> tor_tuple_degrees(int i, int n);
/// The constraint rows as text, e.g. "2*x1 = 0", "2*x2 + v1*x1 = 0".
std::vector<std::string> tor_constraint_system(int n, const CSeries& series);

/// Seeded random presentation: 1..3 generators in even degrees [-4, 6] and 0..3
/// homogeneous relations with small coefficients in v_1, v_2.
FPModule random_fpmodule(std::uint64_t seed);

}  // namespace cobord
