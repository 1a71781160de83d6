#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobord/bp_ring.hpp"
#include "cobord/charclass.hpp"
#include "cobord/f2.hpp"
#include "cobord/fpmodule.hpp"
#include "cobord/linalg.hpp"
#include "cobord/steenrod.hpp"

namespace cobord {

// Toggleable axioms. Every other axiom tag is consumed unconditionally in traces.
inline constexpr const char* kAxiomHOdd = "h-odd-elementary";
inline constexpr const char* kAxiomH7 = "h7-no-4torsion";

struct AxiomSet {
    bool h_odd_elementary = true;  // H^i(BG, Z) is elementary abelian for i = 1, 2, 3, 5, 6
    bool h7_no_4torsion = true;    // H^7 of the 7-skeleton has no element of order 4

    static AxiomSet all() { return {true, true}; }
    static AxiomSet none() { return {false, false}; }
    /// "all", "none", or a comma-separated list of tags; throws ConfigError.
    static AxiomSet parse(const std::string& list);
    /// Comma-separated enabled tags, or "none".
    std::string str() const;
    friend bool operator==(const AxiomSet&, const AxiomSet&) = default;
};

/// Registered fact identifiers (anchor id -> one-line statement) and axiom tags (tag ->
/// statement). Trace steps must cite one of these.
const std::map<std::string, std::string>& anchor_registry();
const std::map<std::string, std::string>& axiom_registry();

/// One cyclic summand Z/2^exponent. When !exact the exponent is only a lower bound (a
/// hole in the integral structure).
struct TorsionSummand {
    int exponent = 1;
    bool exact = true;
    friend bool operator==(const TorsionSummand&, const TorsionSummand&) = default;
};

/// H^s(X, Z_(2)) as free rank plus cyclic torsion summands. Generators are ordered free
/// first, then torsion in the listed order.
struct IntegralGroup {
    int free_rank = 0;
    std::vector<TorsionSummand> torsion;

    std::size_t generator_count() const { return static_cast<std::size_t>(free_rank) + torsion.size(); }
    bool exact() const;
    /// "Z(2) + Z/2^9 + Z/2^(>=2)".
    std::string str() const;
};

/// Integral cohomology of a complex of dimension <= 7 together with the integral Sq^3
/// maps, in the form the E-infinity rule consumes.
struct CohomologyInput {
    std::string name;
    int dimension = 7;
    std::vector<IntegralGroup> h;  // s = 0..dimension
    /// Mod-2 representative of each generator (empty polynomial when abstract) and a label.
    std::vector<std::vector<MGPoly>> representatives;
    std::vector<std::vector<std::string>> labels;
    /// sq3[s][j]: Sq^3 of generator j of H^s, in coordinates over the torsion summands of
    /// H^{s+3} (the element 2^{e-1} g of each summand). Empty when s + 3 > dimension.
    std::vector<std::vector<BitVec>> sq3;
    AxiomSet axioms;
    std::vector<std::string> notes;

    bool has_torsion() const;
    /// Non-exact torsion summands as (degree, index into h[degree].torsion).
    std::vector<std::pair<int, std::size_t>> holes() const;
};

/// From the extraspecial ring: mod-2 data from the ring, integral data from the first
/// Bockstein and the axiom flags, plus a free summand of rank h7_free_rank in H^7 (the
/// 7-skeleton's extra cells). Unset axioms leave holes instead of guessing.
CohomologyInput bg_cohomology_input(const SqAlgebra& ring, const AxiomSet& axioms, int h7_free_rank = 0);
/// A point: H^0 = Z(2).
CohomologyInput point_input();
/// Free groups of the given ranks, Sq^3 = 0.
CohomologyInput torsion_free_input(const std::vector<int>& ranks);

/// Status of a decision. NoObstruction: the input has no torsion, so there is nothing
/// to decide.
enum class Status { ForcedZero, NotForced, Nonzero, Undecided, NoObstruction };
std::string status_name(Status s);

struct TraceStep {
    std::string statement;
    std::string anchor;  // fact id, or empty
    std::string axiom;   // axiom tag, or empty
    std::string witness;
};

struct Verdict {
    Status status = Status::Undecided;
    std::optional<int> failed_stage;
    std::string failing_dependency;
    std::string witness;
    std::vector<TraceStep> trace;
};

/// Problems with a trace: steps citing neither a registered anchor nor a registered
/// axiom, or citing unknown ids. Empty when the trace is valid.
std::vector<std::string> validate_trace(const Verdict& v);

/// Sub-quotient of H^s presented on generators: the Z(2)-span of `gens` (columns, in
/// H^s generator coordinates) as Z^q / im(rel).
struct CellPresentation {
    Matrix gens;
    Matrix rel;
    AbelianGroup group;
};

struct EInftyCell {
    int s;
    VMonomial mu;
    bool v1_quotient;  // K_s / I_s (mu divisible by v1) rather than K_s
    AbelianGroup group;
    int total_degree() const { return s + mu.degree(); }
};

/// Associated graded of BP^* X after d_3 = Sq^3:
///   cell(s, mu) = ker Sq^3 on H^s           if v1 does not divide mu,
///               = ker Sq^3 / im Sq^3 on H^s if v1 divides mu,
/// for every cell with s + deg mu in [lo, hi]. Holes are completed by the given
/// exponents (default: their lower bounds).
class EInftyModel {
public:
    using Completion = std::map<std::pair<int, std::size_t>, int>;

    EInftyModel(const CohomologyInput& input, int lo, int hi, int k = kDefaultGeneratorCount,
                const Completion& completion = {});

    const CohomologyInput& input() const { return input_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int generator_count() const { return k_; }
    int dimension() const { return input_.dimension; }
    /// "" for no holes, else e.g. "H^7 summand 3 as Z/2^2".
    const std::string& completion_note() const { return completion_note_; }

    /// H^s with holes completed, and its relation matrix (generators x torsion).
    const AbelianGroup& group(int s) const { return groups_.at(static_cast<std::size_t>(s)); }
    const Matrix& relations(int s) const { return relations_.at(static_cast<std::size_t>(s)); }
    /// K_s and K_s / I_s on the same generators.
    const CellPresentation& kernel_part(int s) const { return kernel_.at(static_cast<std::size_t>(s)); }
    const CellPresentation& quotient_part(int s) const { return quotient_.at(static_cast<std::size_t>(s)); }
    const CellPresentation& cell(int s, const VMonomial& mu) const;

    /// Cells in the window, by descending total degree, then s, then MonomialOrder.
    const std::vector<EInftyCell>& cells() const { return cells_; }
    /// Monomials mu with cell(s, mu) in filtration s and BP-degree `row`. Throws
    /// WindowError if s + row is outside the window; empty for positive or odd rows.
    std::vector<VMonomial> row_monomials(int s, int row) const;

    /// Construction steps (d_3 = Sq^3, the E-infinity rule, no later differentials).
    const std::vector<TraceStep>& trace() const { return trace_; }

    /// Element of H^s given by generator coordinates c of the cell presentation, as text
    /// over the labels ("e1 + 2*e3", "0").
    std::string describe(int s, const std::vector<LocalInt2>& c) const;

private:
    CohomologyInput input_;
    int lo_;
    int hi_;
    int k_;
    std::string completion_note_;
    std::vector<AbelianGroup> groups_;
    std::vector<Matrix> relations_;
    std::vector<CellPresentation> kernel_;
    std::vector<CellPresentation> quotient_;
    std::vector<EInftyCell> cells_;
    std::vector<TraceStep> trace_;
};

EInftyModel build_einfty(const CohomologyInput& input, int lo, int hi, int k = kDefaultGeneratorCount);

/// The associated graded as a BP^*-module: generators of K_s in degree s, their torsion
/// relations, and v1 * I_s = 0.
FPModule einfty_as_fpmodule(const EInftyModel& model);

struct InjectivityReport {
    struct Entry {
        int s;
        VMonomial mu;
        int i;  // multiplication by v_i
        AbelianGroup kernel;
    };
    bool pass = true;
    std::size_t maps_checked = 0;
    std::vector<Entry> non_injective;  // every map with nonzero kernel
    std::optional<std::string> violation;
};
/// v_i for i >= 2 injective on every cell; v_1 injective except on cells over H^6 or H^7
/// whose monomial is prime to v_1.
InjectivityReport vi_injectivity_report(const EInftyModel& model);

/// The leading-term decision: every degree-8 x1 in Tor_1(BP^*X, BP^*Y_8) with
/// sum_i v_i x^(i) = 0 restricts to zero in Tor_1(BP^*X, BP^*Y_2). Runs once per hole
/// completion; NOT_FORCED carries the stage that failed and a witness. The window must
/// cover [-8, 8].
Verdict lemma64_decide(const CohomologyInput& input, int lo = -8, int hi = 8, int k = kDefaultGeneratorCount);
/// Single concrete model.
Verdict lemma64_decide(const EInftyModel& model);

/// k <= 2 (p^n + p^{n-1} + ... + 1).
bool wilson_bound(int k, int n, int p);

/// Everything the two nonvanishing conclusions depend on.
struct PropChainInputs {
    CohomologyInput input;
    std::optional<TorsionShiftReport> torsion_shift;
    std::optional<AHObstruction> sq3w4;  // in BSO(4)
    std::optional<EulerIdentityReport> euler;
    bool two_series_ok = false;
    bool resolutions_exact = false;
    bool y8_surjective = false;   // tensor_unit(BP^*Y_8) = H^*(Y_8)
    bool y2_c1_summand = false;   // c1 spans a Z/2 summand of BP^*Y_2 (x) Z(2)
    bool tor_oracles_agree = false;
    std::optional<Verdict> lemma64;
};

struct PropChainReport {
    Verdict prop61;  // C != 0 in BP^4 X_7 (x) Z/2
    Verdict prop62;  // C (x) c1 != 0 in BP^6 (X_7 x Y_8) (x) Z
};
PropChainReport prop_chain_report(const PropChainInputs& in);

/// Runs every dependency on the given ring (tor oracles on the E-infinity module against
/// Y_2 and Y_8 in the window [4, 8]).
PropChainInputs gather_prop_chain_inputs(const SqAlgebra& ring, const AxiomSet& axioms, int h7_free_rank = 0,
                                         int k = kDefaultGeneratorCount);

}  // namespace cobord
