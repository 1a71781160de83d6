#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cobord/f2.hpp"

namespace cobord {

/// Polynomial generators of a graded F_2-algebra. `weights` is an auxiliary grading
/// (the w4-exponent in the extraspecial ring); all zero when unused.
struct GeneratorSet {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<int> weights;

    std::size_t size() const { return names.size(); }
    std::optional<std::size_t> find(const std::string& name) const;
    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};
using GenSetPtr = std::shared_ptr<const GeneratorSet>;
GenSetPtr make_generators(std::vector<std::string> names, std::vector<int> degrees, std::vector<int> weights = {});

using Exponents = std::vector<int>;

/// Lexicographically larger exponent vectors first.
struct LexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};

/// Polynomial over F_2 in the generators of a GeneratorSet.
class MGPoly {
public:
    using Terms = std::set<Exponents, LexDesc>;

    MGPoly() = default;
    explicit MGPoly(GenSetPtr gens) : gens_(std::move(gens)) {}

    static MGPoly one(GenSetPtr gens);
    static MGPoly generator(GenSetPtr gens, std::size_t i);
    static MGPoly generator(GenSetPtr gens, const std::string& name);
    static MGPoly monomial(GenSetPtr gens, Exponents e);
    /// Parses "x1^2*x3 + w4 + 1" (whitespace ignored, "0" for zero).
    static MGPoly parse(GenSetPtr gens, const std::string& text);

    const GenSetPtr& generators() const { return gens_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Toggles a monomial (addition over F_2).
    void toggle(const Exponents& e);

    int monomial_degree(const Exponents& e) const;
    int monomial_weight(const Exponents& e) const;
    /// nullopt for zero or inhomogeneous polynomials.
    std::optional<int> degree() const;
    bool is_homogeneous() const;
    /// Sorted set of auxiliary weights occurring.
    std::set<int> weights() const;

    std::string str() const;

    MGPoly& operator+=(const MGPoly& o);
    friend MGPoly operator+(MGPoly a, const MGPoly& b) { return a += b; }
    friend MGPoly operator*(const MGPoly& a, const MGPoly& b);
    friend bool operator==(const MGPoly& a, const MGPoly& b);

private:
    GenSetPtr gens_;
    Terms terms_;
};

/// Every exponent vector of total degree d.
std::vector<Exponents> monomials_of_degree(const GeneratorSet& g, int d);

/// Quotient of the polynomial ring by an ideal, in one degree: all monomials, the
/// ideal's span, and the standard monomials (non-pivots) that form a basis of the
/// quotient.
class DegreewiseBasis {
public:
    DegreewiseBasis() = default;
    DegreewiseBasis(const GeneratorSet& g, int degree, const std::vector<MGPoly>& ideal);

    int degree() const { return degree_; }
    std::size_t dimension() const { return standard_.size(); }
    const std::vector<Exponents>& monomials() const { return monomials_; }
    /// Standard monomials, in basis order.
    const std::vector<Exponents>& standard() const { return standard_exps_; }

    /// Raw polynomial (homogeneous of this degree) to its coordinates in the
    /// ideal-reduced standard basis.
    BitVec coordinates(const MGPoly& p) const;
    MGPoly from_coordinates(const GenSetPtr& gens, const BitVec& c) const;
    /// Normal form: a sum of standard monomials. Idempotent.
    MGPoly reduce(const MGPoly& p) const;
    std::size_t ideal_rank() const { return ideal_.rank(); }

private:
    BitVec raw_vector(const MGPoly& p) const;

    int degree_ = 0;
    std::vector<Exponents> monomials_;
    std::map<Exponents, std::size_t> index_;
    F2Echelon ideal_;
    std::vector<std::size_t> standard_;
    std::vector<Exponents> standard_exps_;
};

/// Graded F_2-algebra F_2[generators]/ideal with Steenrod squares given on the
/// generators and extended by the Cartan formula. Computations are exact in every
/// degree <= degree_bound.
class SqAlgebra {
public:
    /// sq_table[g][k] = Sq^k(generator g) for 0 <= k <= deg g (raw polynomials).
    SqAlgebra(std::string name, GenSetPtr gens, std::vector<std::vector<MGPoly>> sq_table, std::vector<MGPoly> ideal,
              int degree_bound);

    const std::string& name() const { return name_; }
    const GenSetPtr& generators() const { return gens_; }
    const std::vector<MGPoly>& ideal() const { return ideal_; }
    int degree_bound() const { return bound_; }
    const std::vector<std::vector<MGPoly>>& sq_table() const { return table_; }

    /// Throws DegreeBoundError above the bound.
    const DegreewiseBasis& basis(int d) const;
    std::size_t dimension(int d) const { return basis(d).dimension(); }
    /// Dimensions in degrees 0..degree_bound.
    std::vector<std::size_t> poincare_series() const;

    MGPoly gen(const std::string& name) const { return MGPoly::generator(gens_, name); }
    MGPoly parse(const std::string& text) const { return MGPoly::parse(gens_, text); }
    MGPoly reduce(const MGPoly& p) const;
    /// Product in the quotient.
    MGPoly mul(const MGPoly& a, const MGPoly& b) const { return reduce(a * b); }

    /// Sq^k on a homogeneous polynomial; throws DegreeBoundError if deg f + k
    /// exceeds the bound.
    MGPoly sq(int k, const MGPoly& f) const;
    /// Columns: Sq^k of each standard basis element of degree d, in degree d + k
    /// coordinates.
    std::vector<BitVec> sq_matrix(int k, int d) const;

    /// Every Sq^k of every ideal generator, multiplied out to the bound, vanishes in
    /// the quotient. Returns the first offending (generator, k) description if not.
    std::optional<std::string> ideal_closure_violation() const;

    /// Copy with the ideal extended or a table entry replaced (negative controls).
    SqAlgebra with_extra_relation(const MGPoly& r) const;
    SqAlgebra with_sq_entry(const std::string& generator, int k, const MGPoly& value) const;

    /// Named classes attached by a constructor (e.g. "w2", "w3" in the extraspecial
    /// ring). Empty MGPoly when absent.
    std::map<std::string, MGPoly> named;

private:
    MGPoly raw_sq(int k, const Exponents& m) const;

    std::string name_;
    GenSetPtr gens_;
    std::vector<std::vector<MGPoly>> table_;
    std::vector<MGPoly> ideal_;
    int bound_;
    std::vector<DegreewiseBasis> bases_;
};

/// Sq^i(w_j) in H^*(BO(n)) (or BSO(n) when oriented: w_1 = 0) by the Wu formula
/// Sq^i w_j = sum_t binom(j - i + t - 1, t) w_{i-t} w_{j+t}. Generators are
/// w_1..w_n, or w_2..w_n when oriented.
MGPoly wu_sq_w(int i, int j, int n, bool oriented);
GenSetPtr stiefel_whitney_generators(int n, bool oriented);

/// F_2[w2, w3, w4] with the Wu action.
SqAlgebra bso4_ring(int degree_bound = 12);

/// Steenrod closure of the given polynomials (inside `base`), up to the bound.
/// Throws DegreeBoundError if new generators still appear in the top degree.
std::vector<MGPoly> steenrod_closure(const SqAlgebra& base, const std::vector<MGPoly>& seeds);

/// The lower Stiefel-Whitney classes of the 4-dimensional representation, restricted
/// to the x-subring, solved from their restrictions to the maximal elementary
/// abelian subgroups (one per totally singular plane of the quadratic form).
struct DetectionResult {
    MGPoly w2;
    MGPoly w3;
    std::size_t planes = 0;
    /// Dimensions of the kernel of joint restriction in degrees 2 and 3.
    std::size_t kernel_dim2 = 0;
    std::size_t kernel_dim3 = 0;
};
DetectionResult detect_lower_classes(const SqAlgebra& x_ring);

/// H^*(BG; F_2) for the order-32 extraspecial group of real type: generators
/// x1..x4 (Sq^1 x_i = x_i^2) and w4 (weight 1), ideal the Steenrod closure of
/// x1 x2 + x3 x4, Sq^k w4 from the Wu formula with w2, w3 replaced by the
/// detected classes. Named classes: q, w2, w3, w4.
SqAlgebra extraspecial_ring(int degree_bound = 10);

/// Freeness over the subalgebra generated by sub_generators (degrees 2, 3, 4).
struct FreenessReport {
    bool polynomial_subalgebra = true;
    bool free = true;
    std::optional<int> first_failing_degree;
    std::string dependency;  // offending relation, if any
    std::vector<std::size_t> module_generators;  // count per degree
    std::vector<std::size_t> algebra_dims;
    std::vector<std::size_t> predicted_dims;  // generators * 1/((1-t^2)(1-t^3)(1-t^4))
};
FreenessReport freeness_check(const SqAlgebra& a, const std::vector<MGPoly>& sub_generators, int degree_bound);

/// Sq^3(w4 + Sq^1 z) != 0 for every z of degree 3, with the weight checks.
struct TorsionShiftReport {
    bool degree3_weight_zero = false;  // every degree-3 basis element has weight 0
    bool sq3w4_weight_one = false;      // Sq^3 w4 is nonzero with only weight 1 terms
    bool all_nonzero = false;           // exhaustive enumeration of z
    std::uint64_t enumerated = 0;
    std::string sq3w4;
    std::optional<std::string> witness;  // a z with Sq^3(w4 + Sq^1 z) = 0
    bool in_image = false;               // cross-check: Sq^3 w4 in image of Sq^3 Sq^1
    bool pass() const { return degree3_weight_zero && sq3w4_weight_one && all_nonzero; }
};
TorsionShiftReport torsion_shift_check(const SqAlgebra& a);

/// Uniformly random element of degree d (a random subset of the standard basis).
MGPoly random_element(const SqAlgebra& a, int d, std::uint64_t& state);

/// Cartan formula Sq^k(fg) = sum Sq^i f Sq^{k-i} g and unstability (Sq^{deg f} f = f^2,
/// Sq^k f = 0 above) on random pairs f, g of degrees 1..4.
struct CartanReport {
    int samples = 0;
    std::size_t cartan_checked = 0;
    std::size_t unstability_checked = 0;
    std::optional<std::string> cartan_failure;
    std::optional<std::string> unstability_failure;
};
CartanReport cartan_unstability_check(const SqAlgebra& a, int samples, std::uint64_t seed);

}  // namespace cobord
