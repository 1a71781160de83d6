#include "cobord/ahss.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cobord/errors.hpp"
#include "cobord/fgl.hpp"
#include "cobord/gmod.hpp"

namespace cobord {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

Matrix block_diag(const std::vector<const Matrix*>& blocks)
{
    std::size_t r = 0, c = 0;
    for (const Matrix* b : blocks) {
        r += b->rows();
        c += b->cols();
    }
    Matrix m(r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const Matrix* b : blocks) {
        for (std::size_t i = 0; i < b->rows(); ++i)
            for (std::size_t j = 0; j < b->cols(); ++j)
                m(r0 + i, c0 + j) = (*b)(i, j);
        r0 += b->rows();
        c0 += b->cols();
    }
    return m;
}

Matrix column_matrix(const std::vector<std::vector<LocalInt2>>& cols, std::size_t rows)
{
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    return m;
}

bool in_span(const Matrix& rel, const std::vector<LocalInt2>& v)
{
    if (v.empty())
        return true;
    Matrix b(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        b(i, 0) = v[i];
    if (rel.cols() == 0)
        return std::all_of(v.begin(), v.end(), [](const LocalInt2& x) { return x.is_zero(); });
    return solve(rel, b).has_value();
}

// Representative of v modulo 2^e in [0, 2^e).
mpz_class residue(const LocalInt2& v, int e)
{
    const mpz_class mod = mpz_class(1) << e;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), v.denominator().get_mpz_t(), mod.get_mpz_t());
    mpz_class r = v.numerator() * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    return r;
}

std::string torsion_name(int exponent, bool exact)
{
    if (!exact)
        return "Z/(>=" + mpz_class(mpz_class(1) << exponent).get_str() + ")";
    return "Z/" + mpz_class(mpz_class(1) << exponent).get_str();
}

}  // namespace

AxiomSet AxiomSet::parse(const std::string& list)
{
    const std::string t = trim(list);
    if (t == "all")
        return all();
    if (t == "none")
        return none();
    if (t.empty())
        throw ConfigError("axiom list is empty (use 'none')");
    AxiomSet a = none();
    std::stringstream ss(t);
    std::string tag;
    while (std::getline(ss, tag, ',')) {
        tag = trim(tag);
        if (tag == kAxiomHOdd)
            a.h_odd_elementary = true;
        else if (tag == kAxiomH7)
            a.h7_no_4torsion = true;
        else
            throw ConfigError("unknown axiom tag '" + tag + "'");
    }
    return a;
}

std::string AxiomSet::str() const
{
    std::vector<std::string> on;
    if (h_odd_elementary)
        on.emplace_back(kAxiomHOdd);
    if (h7_no_4torsion)
        on.emplace_back(kAxiomH7);
    return on.empty() ? "none" : join(on, ",");
}

const std::map<std::string, std::string>& anchor_registry()
{
    static const std::map<std::string, std::string> r{
        {"two-series", "[2](c1) = 2 c1 + v1 c1^2 + 2 v1^2 c1^3 + v2 c1^4 + ... in the v-basis"},
        {"skeleton-resolution",
         "BP^*Y_2n has generators 1, c1, .., c1^n, relations the truncated 2-series, and a length-one "
         "free resolution"},
        {"y8-surjective", "H^*(Y_8, Z) is generated by c1, so BP^*Y_8 -> H^*(Y_8, Z(2)) is onto"},
        {"kunneth-sequence",
         "for Y with BP^*Y -> H^*Y onto, BP^*(X x Y) is an extension of Tor_1(BP^*X, BP^*Y) by "
         "BP^*X (x) BP^*Y"},
        {"tor-tuples", "Tor_1(M, BP^*Y_2n) is the group of tuples (x_1..x_n) satisfying the 2-series rows"},
        {"restriction-to-y2", "Tor_1(M, BP^*Y_8) -> Tor_1(M, BP^*Y_2) keeps only x_1"},
        {"dimension-vanishing", "classes above the dimension of a complex vanish, so x_i = 0 for i >= 3 on X_7 x Y_8 "
                                "and for i >= 2 on X_7 x Y_2"},
        {"d3-sq3", "the first differential out of the top row is the integral Sq^3 = beta Sq^2 rho"},
        {"einfty-formula", "after d_3 the page is ker Sq^3 (x) BP^* modulo v1 * im Sq^3"},
        {"surjective-low-degree", "BP^i X -> H^i(X, Z(2)) is onto for i <= 2"},
        {"vi-injective", "v_i (i >= 2) is injective on E-infinity; v_1 is injective away from H^6 and H^7 times "
                         "monomials prime to v_1"},
        {"leading-term", "a nonzero element of BP^*X has a nonzero leading term in E-infinity at its filtration"},
        {"euler-identity", "on the maximal torus of SU(2) x SU(2), 2 chi = c2(A) - c2(B)"},
        {"sq3-w4", "Sq^3 w4 = w3 w4 in H^*(BSO(4), Z/2)"},
        {"torsion-shift", "Sq^3(chi + y) != 0 for every 2-torsion y in H^4(BG, Z)"},
        {"odd-ops-vanish", "classes in the image of BP^* -> H^* are permanent cycles, so Sq^3 vanishes on them"},
        {"mod2-vanishing", "C maps to 2 chi, which is zero in H^4(BG, Z/2)"},
        {"skeleton-restriction", "H^i(BG) -> H^i(X_7) is an isomorphism for i < 7 and injective for i = 7"},
        {"y2-summand", "c1 spans a Z/2 summand of BP^*Y_2 (x) Z(2) = Z(2) + Z/2"},
        {"c-nonzero", "C = sum v_i y_i with 2 chi lifted would make chi + (2-torsion) a permanent cycle"},
        {"cc1-nonzero", "C (x) c1 = sum v_i x_i with x_1 restricting to zero contradicts C (x) c1 != 0 over Y_2"},
        {"h6-vanishing", "C (x) c1 maps to 2 chi (x) c1 = chi (x) 2 c1 = 0 in H^6(X_7 x Y_8, Z)"},
        {"free-input", "torsion-free cohomology with Sq^3 = 0 gives a free E-infinity page and no obstruction"},
        {"model-completion", "holes in the integral input are completed by the stated exponents on this branch"},
        {"bockstein-rank", "the number of Z/2 summands of H^s(X, Z) equals the rank of Sq^1 into degree s"},
        {"formal-sum", "[2](x) = F(x, x) for the universal 2-typical formal group law"},
        {"cartan-formula", "Sq^k(xy) = sum_i Sq^i x Sq^(k-i) y, Sq^(deg x) x = x^2, and Sq^k x = 0 for k > deg x"},
        {"ideal-closure", "the relations of H^*(BG, Z/2) are closed under every Sq^k"},
        {"sw-freeness", "H^*(BG, Z/2) is a free module over F_2[w2, w3, w4]"},
        {"squared-identity", "(2 chi)^2 = (c2(A) - c2(B))^2 for either orientation"},
        {"c1-vanishing", "c1(A) = c1(B) = 0 on the maximal torus"},
    };
    return r;
}

const std::map<std::string, std::string>& axiom_registry()
{
    static const std::map<std::string, std::string> r{
        {kAxiomHOdd, "H^i(BG, Z) is an F_2-vector space for i = 1, 2, 3, 5, 6"},
        {kAxiomH7, "H^7 of the 7-skeleton is H^7(BG, Z) plus a free group, with no element of order 4"},
        {"bockstein-lift", "every 2-torsion class in H^4(BG, Z) is the Bockstein of a degree-3 mod-2 class"},
        {"euler-injection", "H^4(BSO(4), Z) -> H^4(BSU(2) x BSU(2), Z) is injective"},
        {"landweber-flatness", "BP^*BZ/2 is flat, so the Tor term vanishes on the infinite skeleton"},
        {"no-later-differentials", "the page after d_3 is generated by the top row and BP^*, which carry no further "
                                   "differentials"},
        {"quillen-detection", "H^*(BG, Z/2) is the x-ring modulo the Steenrod closure of q, tensored with "
                              "F_2[w4], with w2, w3 detected on elementary abelian subgroups"},
    };
    return r;
}

bool IntegralGroup::exact() const
{
    return std::all_of(torsion.begin(), torsion.end(), [](const TorsionSummand& t) { return t.exact; });
}

std::string IntegralGroup::str() const
{
    std::vector<std::string> parts;
    if (free_rank == 1)
        parts.emplace_back("Z(2)");
    else if (free_rank > 1)
        parts.push_back("Z(2)^" + std::to_string(free_rank));
    // runs of equal summands
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i])
            ++j;
        std::string p = torsion_name(torsion[i].exponent, torsion[i].exact);
        if (j - i > 1)
            p += "^" + std::to_string(j - i);
        parts.push_back(p);
        i = j;
    }
    return parts.empty() ? "0" : join(parts, " + ");
}

bool CohomologyInput::has_torsion() const
{
    return std::any_of(h.begin(), h.end(), [](const IntegralGroup& g) { return !g.torsion.empty(); });
}

std::vector<std::pair<int, std::size_t>> CohomologyInput::holes() const
{
    std::vector<std::pair<int, std::size_t>> out;
    for (std::size_t s = 0; s < h.size(); ++s)
        for (std::size_t i = 0; i < h[s].torsion.size(); ++i)
            if (!h[s].torsion[i].exact)
                out.emplace_back(static_cast<int>(s), i);
    return out;
}

CohomologyInput bg_cohomology_input(const SqAlgebra& ring, const AxiomSet& axioms, int h7_free_rank)
{
    constexpr int top = 7;
    if (h7_free_rank < 0)
        throw std::invalid_argument("bg_cohomology_input: negative free rank");
    if (ring.degree_bound() < top)
        throw std::invalid_argument("bg_cohomology_input: ring must be exact through degree 7");
    const GenSetPtr& gens = ring.generators();

    CohomologyInput in;
    in.name = ring.name();
    in.dimension = top;
    in.axioms = axioms;
    in.h.resize(top + 1);
    in.representatives.resize(top + 1);
    in.labels.resize(top + 1);
    in.sq3.resize(top + 1);

    std::vector<long> dim(top + 1), rank_in(top + 1, 0), t(top + 1, 0);
    std::vector<std::vector<BitVec>> sq1(top);
    for (int s = 0; s <= top; ++s)
        dim[s] = static_cast<long>(ring.dimension(s));
    for (int s = 0; s < top; ++s) {
        sq1[s] = ring.sq_matrix(1, s);
        rank_in[s + 1] = static_cast<long>(f2_rank(sq1[s]));
    }
    // Universal coefficients for BG: Z(2) in degree 0, torsion elsewhere.
    for (int s = 0; s < top; ++s) {
        t[s + 1] = dim[s] - (s == 0 ? 1 : 0) - t[s];
        if (t[s + 1] < rank_in[s + 1])
            throw std::logic_error("bg_cohomology_input: mod-2 dimensions inconsistent with a torsion-only BG");
    }

    in.h[0].free_rank = 1;
    in.representatives[0] = {MGPoly::one(gens)};
    in.labels[0] = {"1"};

    for (int s = 1; s <= top; ++s) {
        const DegreewiseBasis& basis = ring.basis(s);
        F2Echelon span(basis.dimension());
        std::vector<MGPoly> reps;
        for (const BitVec& c : sq1[s - 1])
            if (span.insert(c))
                reps.push_back(basis.from_coordinates(gens, c));
        const long higher = t[s] - rank_in[s];
        // Generators of higher summands reduce to classes in ker Sq^1 outside im Sq^1;
        // prefer polynomial generators of this degree (w4).
        if (higher > 0 && s + 1 <= ring.degree_bound()) {
            std::vector<BitVec> candidates;
            for (std::size_t g = 0; g < gens->size(); ++g)
                if (gens->degrees[g] == s)
                    candidates.push_back(basis.coordinates(MGPoly::generator(gens, g)));
            for (const BitVec& v : f2_kernel(ring.sq_matrix(1, s)))
                candidates.push_back(v);
            for (const BitVec& v : candidates) {
                if (static_cast<long>(reps.size()) == t[s])
                    break;
                const MGPoly p = basis.from_coordinates(gens, v);
                if (ring.sq(1, p).is_zero() && span.insert(v))
                    reps.push_back(p);
            }
        }
        while (static_cast<long>(reps.size()) < t[s])
            reps.emplace_back(gens);

        IntegralGroup& g = in.h[static_cast<std::size_t>(s)];
        std::vector<std::string>& labels = in.labels[static_cast<std::size_t>(s)];
        std::vector<MGPoly>& r = in.representatives[static_cast<std::size_t>(s)];
        const std::string where = "H^" + std::to_string(s);
        if (s == top) {
            g.free_rank = h7_free_rank;
            for (int j = 1; j <= h7_free_rank; ++j) {
                r.emplace_back(gens);
                labels.push_back("f" + std::to_string(j));
            }
        }
        const bool odd_governed = s != 4 && s != top;
        const bool axiom_on = odd_governed ? axioms.h_odd_elementary : (s == top ? axioms.h7_no_4torsion : false);
        if (axiom_on && higher > 0)
            throw std::logic_error("bg_cohomology_input: axiom contradicts the Bockstein ranks in " + where);
        for (long i = 0; i < t[s]; ++i) {
            const bool first_bockstein = i < rank_in[s];
            TorsionSummand ts;
            if (odd_governed || s == top) {
                ts = {1, axiom_on};
            } else {
                // degree 4: summands detected by Sq^1 have order 2; the rest order >= 4
                ts = first_bockstein ? TorsionSummand{1, true} : TorsionSummand{2, false};
            }
            g.torsion.push_back(ts);
            r.push_back(reps[static_cast<std::size_t>(i)]);
            labels.push_back(reps[static_cast<std::size_t>(i)].is_zero() ? "t" + std::to_string(s) + "_" +
                                                                               std::to_string(i + 1)
                                                                         : reps[static_cast<std::size_t>(i)].str());
        }
        std::ostringstream note;
        note << where << ": " << t[s] << " torsion summands, rank Sq^1 into degree " << s << " = " << rank_in[s];
        if (!axiom_on && (odd_governed || s == top))
            note << "; exponents left as lower bounds (axiom "
                 << (odd_governed ? kAxiomHOdd : kAxiomH7) << " unset)";
        if (s == 4 && higher > 0)
            note << "; " << higher << " summand(s) of order >= 4";
        in.notes.push_back(note.str());
    }

    // Integral Sq^3 through mod-2 reductions: it lands in 2-torsion, which reduction
    // sees through the im Sq^1 generators.
    for (int s = 0; s + 3 <= top; ++s) {
        const int d = s + 3;
        const DegreewiseBasis& tb = ring.basis(d);
        std::vector<BitVec> targets;
        for (long i = 0; i < rank_in[d]; ++i)
            targets.push_back(tb.coordinates(in.representatives[d][static_cast<std::size_t>(in.h[d].free_rank + i)]));
        const std::size_t nt = in.h[d].torsion.size();
        bool hits_hole = false;
        for (const MGPoly& rep : in.representatives[static_cast<std::size_t>(s)]) {
            BitVec col(nt);
            const MGPoly image = rep.is_zero() ? rep : ring.sq(3, rep);
            if (!image.is_zero()) {
                auto c = f2_solve(targets, tb.coordinates(image));
                if (!c)
                    throw std::logic_error("bg_cohomology_input: Sq^3 image outside im Sq^1 in degree " +
                                           std::to_string(d));
                for (std::size_t i : c->support()) {
                    col.set(i);
                    hits_hole = hits_hole || !in.h[d].torsion[i].exact;
                }
            }
            in.sq3[static_cast<std::size_t>(s)].push_back(col);
        }
        if (hits_hole)
            in.notes.push_back("Sq^3 into H^" + std::to_string(d) +
                               " computed on mod-2 reductions; target exponents are not known");
    }
    return in;
}

CohomologyInput point_input() { return torsion_free_input({1}); }

CohomologyInput torsion_free_input(const std::vector<int>& ranks)
{
    if (ranks.empty())
        throw std::invalid_argument("torsion_free_input: no degrees");
    CohomologyInput in;
    in.name = ranks.size() == 1 && ranks[0] == 1 ? "point" : "torsion-free";
    in.dimension = static_cast<int>(ranks.size()) - 1;
    in.h.resize(ranks.size());
    in.representatives.resize(ranks.size());
    in.labels.resize(ranks.size());
    in.sq3.resize(ranks.size());
    for (std::size_t s = 0; s < ranks.size(); ++s) {
        if (ranks[s] < 0)
            throw std::invalid_argument("torsion_free_input: negative rank");
        in.h[s].free_rank = ranks[s];
        for (int j = 1; j <= ranks[s]; ++j) {
            in.representatives[s].emplace_back();
            in.labels[s].push_back("e" + std::to_string(s) + "_" + std::to_string(j));
        }
        if (s + 3 < ranks.size())
            in.sq3[s].assign(static_cast<std::size_t>(ranks[s]), BitVec(0));
    }
    return in;
}

std::string status_name(Status s)
{
    switch (s) {
    case Status::ForcedZero:
        return "FORCED_ZERO";
    case Status::NotForced:
        return "NOT_FORCED";
    case Status::Nonzero:
        return "NONZERO";
    case Status::Undecided:
        return "UNDECIDED";
    case Status::NoObstruction:
        return "NO_OBSTRUCTION";
    }
    return "?";
}

std::vector<std::string> validate_trace(const Verdict& v)
{
    std::vector<std::string> problems;
    const auto& anchors = anchor_registry();
    const auto& axioms = axiom_registry();
    for (std::size_t i = 0; i < v.trace.size(); ++i) {
        const TraceStep& st = v.trace[i];
        const std::string at = "step " + std::to_string(i + 1);
        if (st.anchor.empty() && st.axiom.empty())
            problems.push_back(at + " cites neither an anchor nor an axiom");
        if (!st.anchor.empty() && !anchors.count(st.anchor))
            problems.push_back(at + " cites unknown anchor '" + st.anchor + "'");
        if (!st.axiom.empty() && !axioms.count(st.axiom))
            problems.push_back(at + " cites unknown axiom '" + st.axiom + "'");
    }
    return problems;
}

EInftyModel::EInftyModel(const CohomologyInput& input, int lo, int hi, int k, const Completion& completion)
    : input_(input), lo_(lo), hi_(hi), k_(k)
{
    if (lo > hi)
        throw std::invalid_argument("EInftyModel: empty window");
    if (k < 1)
        throw std::invalid_argument("EInftyModel: need at least one generator");
    const int dimension = input.dimension;
    if (static_cast<int>(input.h.size()) != dimension + 1 || input.sq3.size() != input.h.size())
        throw std::invalid_argument("EInftyModel: input shape does not match its dimension");

    std::vector<std::string> notes;
    for (const auto& [key, e] : completion) {
        const auto [s, i] = key;
        if (s < 0 || s > dimension || i >= input.h[static_cast<std::size_t>(s)].torsion.size())
            throw std::invalid_argument("EInftyModel: completion names no summand");
        const TorsionSummand& ts = input.h[static_cast<std::size_t>(s)].torsion[i];
        if (ts.exact && e != ts.exponent)
            throw std::invalid_argument("EInftyModel: completion changes an exact summand");
        if (e < ts.exponent)
            throw std::invalid_argument("EInftyModel: completion below the lower bound");
        if (!ts.exact)
            notes.push_back("H^" + std::to_string(s) + " summand " + std::to_string(i + 1) + " (" +
                            input.labels[static_cast<std::size_t>(s)][static_cast<std::size_t>(
                                input.h[static_cast<std::size_t>(s)].free_rank) + i] +
                            ") as " + torsion_name(e, true));
    }
    completion_note_ = join(notes, "; ");

    std::vector<std::vector<int>> exps(input.h.size());
    for (std::size_t s = 0; s < input.h.size(); ++s) {
        const IntegralGroup& g = input.h[s];
        for (std::size_t i = 0; i < g.torsion.size(); ++i) {
            auto it = completion.find({static_cast<int>(s), i});
            exps[s].push_back(it == completion.end() ? g.torsion[i].exponent : it->second);
        }
        const std::size_t m = g.generator_count();
        const auto fr = static_cast<std::size_t>(g.free_rank);
        Matrix rel(m, g.torsion.size());
        for (std::size_t i = 0; i < g.torsion.size(); ++i)
            rel(fr + i, i) = LocalInt2::power_of_two(exps[s][i]);
        relations_.push_back(rel);
        AbelianGroup ag{g.free_rank, exps[s]};
        std::sort(ag.torsion.begin(), ag.torsion.end());
        groups_.push_back(ag);
    }

    for (std::size_t s = 0; s < input.h.size(); ++s) {
        const IntegralGroup& g = input.h[s];
        const std::size_t m = g.generator_count();
        const auto fr = static_cast<std::size_t>(g.free_rank);
        const bool has_target = static_cast<int>(s) + 3 <= dimension;
        if (has_target && input.sq3[s].size() != m)
            throw std::invalid_argument("EInftyModel: Sq^3 columns do not match H^" + std::to_string(s));
        // ker Sq^3 = lifts of the mod-2 kernel + 2 H^s
        std::vector<BitVec> kb;
        if (has_target) {
            kb = f2_kernel(input.sq3[s]);
        } else {
            for (std::size_t j = 0; j < m; ++j)
                kb.push_back(BitVec::unit(m, j));
        }
        std::vector<std::vector<LocalInt2>> cols;
        for (const BitVec& v : kb) {
            std::vector<LocalInt2> c(m);
            for (std::size_t j : v.support())
                c[j] = 1;
            cols.push_back(c);
        }
        for (std::size_t j = 0; j < m; ++j) {
            // 2 g_j is redundant when g_j has order 2
            if (j >= fr && exps[s][j - fr] == 1)
                continue;
            std::vector<LocalInt2> c(m);
            c[j] = 2;
            cols.push_back(c);
        }
        CellPresentation kp;
        kp.gens = column_matrix(cols, m);
        const std::size_t q = cols.size();
        const Matrix sr = kp.gens.hconcat(relations_[s]);
        kp.rel = kernel_basis(sr).row_block(0, q);
        kp.group = cokernel(kp.rel);

        CellPresentation qp = kp;
        if (s >= 3 && !input.sq3[s - 3].empty()) {
            const std::size_t src = input.sq3[s - 3].size();
            Matrix image(m, src);
            for (std::size_t j = 0; j < src; ++j)
                for (std::size_t i : input.sq3[s - 3][j].support())
                    image(fr + i, j) = LocalInt2::power_of_two(exps[s][i] - 1);
            auto sol = solve(sr, image);
            if (!sol)
                throw std::logic_error("EInftyModel: im Sq^3 not inside ker Sq^3 in H^" + std::to_string(s));
            qp.rel = kp.rel.hconcat(sol->row_block(0, q));
            qp.group = cokernel(qp.rel);
        }
        kernel_.push_back(std::move(kp));
        quotient_.push_back(std::move(qp));
    }

    for (int s = 0; s <= dimension; ++s)
        for (int total = hi; total >= lo; --total) {
            const int row = total - s;
            if (row > 0 || row % 2 != 0)
                continue;
            for (const VMonomial& mu : bp_basis(row, k)) {
                const bool quot = mu.exponent(1) > 0;
                const CellPresentation& p = quot ? quotient_[static_cast<std::size_t>(s)]
                                                 : kernel_[static_cast<std::size_t>(s)];
                if (!p.group.is_zero())
                    cells_.push_back({s, mu, quot, p.group});
            }
        }
    std::stable_sort(cells_.begin(), cells_.end(), [](const EInftyCell& a, const EInftyCell& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() > b.total_degree();
        if (a.s != b.s)
            return a.s < b.s;
        return MonomialOrder{}(a.mu, b.mu);
    });

    std::vector<std::string> sq3_ranks, rows;
    for (int s = 0; s + 3 <= dimension; ++s)
        if (!input.sq3[static_cast<std::size_t>(s)].empty())
            sq3_ranks.push_back("H^" + std::to_string(s) + "->H^" + std::to_string(s + 3) + ": " +
                                std::to_string(f2_rank(input.sq3[static_cast<std::size_t>(s)])));
    for (int s = 0; s <= dimension; ++s)
        rows.push_back("s=" + std::to_string(s) + ": K=" + kernel_[static_cast<std::size_t>(s)].group.str() +
                       ", K/I=" + quotient_[static_cast<std::size_t>(s)].group.str());
    trace_.push_back({"d_3 on the top row is the integral Sq^3", "d3-sq3", "", "ranks " + join(sq3_ranks, ", ")});
    trace_.push_back({"E_4 is ker Sq^3 (x) BP^* with v1 * im Sq^3 removed", "einfty-formula", "", join(rows, "; ")});
    trace_.push_back({"a later differential d_r (r >= 5) into filtration <= 7 starts in H^i with i <= 2, where "
                      "BP^* -> H^* is onto",
                      "surjective-low-degree", "",
                      std::string("wilson_bound(6, 1, 2) = ") + (wilson_bound(6, 1, 2) ? "true" : "false")});
    trace_.push_back({"no differentials after d_3, so E_4 = E_infinity", "", "no-later-differentials", ""});
    if (!completion_note_.empty())
        trace_.push_back({"holes completed", "model-completion", "", completion_note_});
}

const CellPresentation& EInftyModel::cell(int s, const VMonomial& mu) const
{
    if (s < 0 || s > dimension())
        throw std::out_of_range("EInftyModel::cell: filtration out of range");
    return mu.exponent(1) > 0 ? quotient_part(s) : kernel_part(s);
}

std::vector<VMonomial> EInftyModel::row_monomials(int s, int row) const
{
    if (row > 0 || row % 2 != 0)
        return {};
    if (s + row < lo_ || s + row > hi_)
        throw WindowError("E-infinity cell of total degree " + std::to_string(s + row) + " outside window [" +
                          std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
    return bp_basis(row, k_);
}

std::string EInftyModel::describe(int s, const std::vector<LocalInt2>& c) const
{
    const CellPresentation& p = kernel_part(s);
    if (c.size() != p.gens.cols())
        throw std::invalid_argument("EInftyModel::describe: wrong coordinate count");
    const IntegralGroup& g = input_.h[static_cast<std::size_t>(s)];
    const auto fr = static_cast<std::size_t>(g.free_rank);
    const auto& labels = input_.labels[static_cast<std::size_t>(s)];
    std::vector<std::string> terms;
    for (std::size_t j = 0; j < p.gens.rows(); ++j) {
        LocalInt2 x;
        for (std::size_t i = 0; i < c.size(); ++i)
            x += p.gens(j, i) * c[i];
        std::string coeff;
        if (j < fr) {
            if (x.is_zero())
                continue;
            coeff = x.str();
        } else {
            const int e = relations_[static_cast<std::size_t>(s)](j, j - fr).valuation();
            const mpz_class r = residue(x, e);
            if (r == 0)
                continue;
            coeff = r.get_str();
        }
        const std::string label = "(" + labels[j] + ")";
        terms.push_back(coeff == "1" ? label : coeff + "*" + label);
    }
    return terms.empty() ? "0" : join(terms, " + ");
}

EInftyModel build_einfty(const CohomologyInput& input, int lo, int hi, int k) { return EInftyModel(input, lo, hi, k); }

FPModule einfty_as_fpmodule(const EInftyModel& model)
{
    struct Part {
        int s;
        SNFResult snf;
        std::vector<std::size_t> kept;
    };
    std::vector<Part> parts;
    std::vector<int> degrees;
    std::vector<std::string> names;
    for (int s = 0; s <= model.dimension(); ++s) {
        const CellPresentation& kp = model.kernel_part(s);
        Part p{s, snf(kp.rel), {}};
        for (std::size_t i = 0; i < kp.gens.cols(); ++i)
            if (i >= p.snf.rank || !p.snf.invariants[i].is_unit())
                p.kept.push_back(i);
        for (std::size_t n = 0; n < p.kept.size(); ++n) {
            degrees.push_back(s);
            names.push_back("k" + std::to_string(s) + "_" + std::to_string(n + 1));
        }
        parts.push_back(std::move(p));
    }
    FPModule m(degrees, names);
    std::size_t offset = 0;
    for (const Part& p : parts) {
        const std::size_t q = model.kernel_part(p.s).gens.cols();
        for (std::size_t n = 0; n < p.kept.size(); ++n) {
            const std::size_t i = p.kept[n];
            if (i < p.snf.rank) {
                std::vector<BPElem> coeffs(degrees.size());
                coeffs[offset + n] = BPElem(p.snf.invariants[i]);
                m.add_relation(coeffs, p.s);
            }
        }
        const Matrix& qrel = model.quotient_part(p.s).rel;
        const Matrix& krel = model.kernel_part(p.s).rel;
        for (std::size_t c = krel.cols(); c < qrel.cols(); ++c) {
            Matrix col(q, 1);
            for (std::size_t r = 0; r < q; ++r)
                col(r, 0) = qrel(r, c);
            const Matrix y = p.snf.U * col;
            std::vector<BPElem> coeffs(degrees.size());
            bool nonzero = false;
            for (std::size_t n = 0; n < p.kept.size(); ++n) {
                const LocalInt2& yi = y(p.kept[n], 0);
                if (yi.is_zero())
                    continue;
                coeffs[offset + n] = BPElem::monomial(VMonomial::generator(1), yi);
                nonzero = true;
            }
            if (nonzero)
                m.add_relation(coeffs, p.s + generator_degree(1));
        }
        offset += p.kept.size();
    }
    return m;
}

InjectivityReport vi_injectivity_report(const EInftyModel& model)
{
    InjectivityReport rep;
    std::map<std::tuple<int, bool, bool>, AbelianGroup> cache;
    for (const EInftyCell& c : model.cells()) {
        for (int i = 1; i <= model.generator_count(); ++i) {
            if (c.total_degree() + generator_degree(i) < model.lo())
                continue;
            const VMonomial target = c.mu * VMonomial::generator(i);
            const bool tq = target.exponent(1) > 0;
            const auto key = std::make_tuple(c.s, c.v1_quotient, tq);
            auto it = cache.find(key);
            if (it == cache.end()) {
                const CellPresentation& src = model.cell(c.s, c.mu);
                const CellPresentation& tgt = model.cell(c.s, target);
                const std::size_t q = src.gens.cols();
                it = cache.emplace(key, homology(Matrix(q, 0), src.rel, Matrix::identity(q), tgt.rel)).first;
            }
            ++rep.maps_checked;
            if (it->second.is_zero())
                continue;
            rep.non_injective.push_back({c.s, c.mu, i, it->second});
            const bool allowed = i == 1 && (c.s == 6 || c.s == 7) && !c.v1_quotient;
            if (!allowed && !rep.violation) {
                rep.pass = false;
                rep.violation = "v" + std::to_string(i) + " on H^" + std::to_string(c.s) + " * " + c.mu.str() +
                                " has kernel " + it->second.str();
            }
        }
    }
    return rep;
}

bool wilson_bound(int k, int n, int p)
{
    if (n < 0)
        throw std::invalid_argument("wilson_bound: n must be >= 0");
    if (p < 2)
        throw std::invalid_argument("wilson_bound: p must be prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("wilson_bound: p must be prime");
    long sum = 0, power = 1;
    for (int j = 0; j <= n; ++j) {
        sum += power;
        power *= p;
    }
    return k <= 2 * sum;
}

namespace {

// Direct sum of the cells in filtration s and BP-degree row, one block of the cell
// presentation's generators per monomial.
struct Piece {
    int s = 0;
    std::vector<VMonomial> monos;
    std::size_t q = 0;
    Matrix rel;
    std::size_t dim() const { return monos.size() * q; }
};

Piece make_piece(const EInftyModel& m, int s, int row)
{
    Piece p;
    p.s = s;
    if (s < 0 || s > m.dimension())
        return p;
    p.q = m.kernel_part(s).gens.cols();
    p.monos = m.row_monomials(s, row);
    std::vector<const Matrix*> blocks;
    for (const VMonomial& mu : p.monos)
        blocks.push_back(&m.cell(s, mu).rel);
    p.rel = blocks.empty() ? Matrix(0, 0) : block_diag(blocks);
    return p;
}

// Multiplication by a from P to Q; cells share generators, so each term is a scaled
// identity block.
Matrix multiply(const BPElem& a, const Piece& from, const Piece& to)
{
    Matrix out(to.dim(), from.dim());
    for (std::size_t b = 0; b < from.monos.size(); ++b)
        for (const auto& [nu, c] : a.terms()) {
            const VMonomial target = from.monos[b] * nu;
            auto it = std::find(to.monos.begin(), to.monos.end(), target);
            if (it == to.monos.end())
                throw std::logic_error("lemma64: product monomial missing from target cell");
            const auto tb = static_cast<std::size_t>(it - to.monos.begin());
            for (std::size_t i = 0; i < from.q; ++i)
                out(tb * to.q + i, b * from.q + i) = c;
        }
    return out;
}

bool is_zero_in(const Piece& p, const std::vector<LocalInt2>& v) { return in_span(p.rel, v); }

std::string describe_piece(const EInftyModel& m, const Piece& p, const std::vector<LocalInt2>& v)
{
    std::vector<std::string> terms;
    for (std::size_t b = 0; b < p.monos.size(); ++b) {
        const std::vector<LocalInt2> block(v.begin() + static_cast<long>(b * p.q),
                                           v.begin() + static_cast<long>((b + 1) * p.q));
        const Matrix& rel = m.cell(p.s, p.monos[b]).rel;
        if (in_span(rel, block))
            continue;
        std::string t = "[" + m.describe(p.s, block) + "]";
        if (!p.monos[b].is_one())
            t += "*" + p.monos[b].str();
        terms.push_back(t);
    }
    return terms.empty() ? "0" : join(terms, " + ");
}

std::vector<std::vector<LocalInt2>> nonzero_columns(const Matrix& cols, const Piece& p)
{
    std::vector<std::vector<LocalInt2>> out;
    for (std::size_t j = 0; j < cols.cols(); ++j) {
        const auto c = cols.column(j);
        if (!is_zero_in(p, c))
            out.push_back(c);
    }
    return out;
}

Verdict not_forced(Verdict v, int stage, std::string witness)
{
    v.status = Status::NotForced;
    v.failed_stage = stage;
    v.witness = std::move(witness);
    return v;
}

}  // namespace

Verdict lemma64_decide(const EInftyModel& model)
{
    if (model.lo() > -8 || model.hi() < 8)
        throw WindowError("lemma64: window [" + std::to_string(model.lo()) + ", " + std::to_string(model.hi()) +
                          "] does not cover [-8, 8]");
    const CohomologyInput& in = model.input();
    const int top = in.dimension;
    const int k = model.generator_count();
    const CSeries series = two_series(4, k);
    const BPElem v1 = BPElem::monomial(VMonomial::generator(1));
    const BPElem v2 = BPElem::monomial(VMonomial::generator(2));

    Verdict v;
    v.trace = model.trace();
    v.trace.push_back({"2-series coefficients", "two-series", "", series.str()});
    v.trace.push_back({"Tor_1(BP^*X, BP^*Y_8) in degree 8 is the group of tuples x1..x4 in BP^7, BP^5, BP^3, BP^1",
                       "tor-tuples", "", join(tor_constraint_system(4, series), "; ")});

    const InjectivityReport inj = vi_injectivity_report(model);
    if (!inj.pass)
        return not_forced(std::move(v), 1, "injectivity fails: " + inj.violation.value_or(""));
    v.trace.push_back({"v_i, i >= 2, injective; v_1 injective off H^6, H^7 times monomials prime to v_1",
                       "vi-injective", "",
                       std::to_string(inj.maps_checked) + " maps, " + std::to_string(inj.non_injective.size()) +
                           " non-injective v_1 maps, all in the allowed locus"});

    // Stage 1: x_r = v1^{-1}(sum_{i>=2} v_i x_r^i) has no room for a leading term.
    Matrix a4;  // admissible leading terms of x4 at the top filtration
    Piece e4;
    for (int r = 2; r <= 4; ++r) {
        const int n = 9 - 2 * r;  // x_r in BP^n
        for (int i = 3; i <= k; ++i)
            for (int s = 0; s <= top; ++s) {
                const int row = n - 2 - generator_degree(i) - s;
                if (row <= 0 && row % 2 == 0)
                    return not_forced(std::move(v), 1,
                                      "v" + std::to_string(i) + " term can be nonzero for x" + std::to_string(r));
            }
        std::vector<std::string> seen;
        for (int s = 0; s <= top; ++s) {
            const Piece e = make_piece(model, s, n - s);
            if (e.dim() == 0)
                continue;
            const Piece t = make_piece(model, s, n - 2 - s);
            const Piece f = make_piece(model, s, n - 2 - generator_degree(2) - s);
            Matrix beta = multiply(v1, e, t);
            if (f.dim() > 0)
                beta = beta.hconcat(multiply(v2, f, t));
            const Matrix rel_p = f.dim() > 0 ? block_diag({&e.rel, &f.rel}) : e.rel;
            const Matrix z = cycles(rel_p, beta, t.rel).row_block(0, e.dim());
            const auto admissible = nonzero_columns(z, e);
            seen.push_back("s=" + std::to_string(s) + ": " + std::to_string(admissible.size()));
            if (admissible.empty())
                continue;
            if (r < 4 || s < top)
                return not_forced(std::move(v), 1,
                                  "x" + std::to_string(r) + " may have leading term " +
                                      describe_piece(model, e, admissible.front()) + " in filtration " +
                                      std::to_string(s));
            a4 = column_matrix(admissible, e.dim());
            e4 = e;
        }
        std::string statement = r < 4 ? "x" + std::to_string(r) + " = 0: no admissible leading term"
                                       : "x4 has its leading term in filtration " + std::to_string(top) + " or is 0";
        if (r == 4 && a4.cols() > 0) {
            bool in_v2 = true;
            for (std::size_t j = 0; j < a4.cols(); ++j)
                for (std::size_t b = 0; b < e4.monos.size(); ++b) {
                    if (e4.monos[b].exponent(2) > 0)
                        continue;
                    const auto col = a4.column(j);
                    const std::vector<LocalInt2> block(col.begin() + static_cast<long>(b * e4.q),
                                                       col.begin() + static_cast<long>((b + 1) * e4.q));
                    in_v2 = in_v2 && in_span(model.cell(top, e4.monos[b]).rel, block);
                }
            statement += in_v2 ? ", inside H^" + std::to_string(top) + " * v2" : ", outside the v2 block";
        }
        v.trace.push_back({statement, "leading-term", "", "admissible counts " + join(seen, ", ")});
    }

    // Stage 2: with x2 = x3 = 0 the last row reads 2 x4 + v2 x1 = 0 in the bottom
    // filtration, where products agree with E-infinity.
    const int n1 = 7;
    for (int s = 0; s < top; ++s)
        if (make_piece(model, s, n1 - s).dim() > 0)
            return not_forced(std::move(v), 2, "BP^7 has a piece in filtration " + std::to_string(s));
    const Piece x = make_piece(model, top, n1 - top);
    if (x.dim() == 0) {
        v.trace.push_back({"BP^7 X = 0", "dimension-vanishing", "", "dimension " + std::to_string(top)});
        v.trace.push_back({"x1 = 0 restricts to zero over Y_2", "restriction-to-y2", "", ""});
        v.status = Status::ForcedZero;
        v.witness = "BP^7 = 0";
        return v;
    }
    const Piece e4full = make_piece(model, top, 1 - top);
    Matrix beta;
    const std::size_t na = a4.cols();
    Matrix x1;
    if (e4full.dim() > 0) {
        const Matrix two_x4 = na > 0 ? multiply(series.coefficient(1), e4, e4full) * a4 : Matrix(e4full.dim(), 0);
        beta = two_x4.hconcat(multiply(series.coefficient(4), x, e4full));
        const Matrix free_part(na, 0);
        const Matrix rel_p = block_diag({&free_part, &x.rel});
        x1 = cycles(rel_p, beta, e4full.rel).row_block(na, na + x.dim());
    } else {
        x1 = Matrix::identity(x.dim());
    }
    const Matrix twice = [&] {
        Matrix t(x.dim(), x.dim());
        for (std::size_t i = 0; i < x.dim(); ++i)
            t(i, i) = 2;
        return t.hconcat(x.rel);
    }();
    for (std::size_t j = 0; j < x1.cols(); ++j)
        if (!in_span(twice, x1.column(j)))
            return not_forced(std::move(v), 2, "x1 = " + describe_piece(model, x, x1.column(j)) +
                                                   " solves 2 x4 + v2 x1 = 0 without being a multiple of 2");
    v.trace.push_back({"2 x4 + v2 x1 = 0 with v2 injective makes x1 a multiple of 2 in H^" + std::to_string(top),
                       "leading-term", "", std::to_string(x1.cols()) + " solution generators checked"});

    // Stage 3: 2 x1 = 0 as well.
    const Matrix two_x1 = [&] {
        Matrix t = x1;
        for (std::size_t i = 0; i < t.rows(); ++i)
            for (std::size_t j = 0; j < t.cols(); ++j)
                t(i, j) = t(i, j) * LocalInt2(2);
        return t;
    }();
    const Matrix c = x1.cols() > 0 ? kernel_basis(two_x1.hconcat(x.rel)).row_block(0, x1.cols()) : Matrix(0, 0);
    if (c.cols() > 0) {
        const Matrix z = x1 * c;
        for (std::size_t j = 0; j < z.cols(); ++j) {
            const auto col = z.column(j);
            if (!is_zero_in(x, col)) {
                std::string w = "x1 = " + describe_piece(model, x, col) + " is a multiple of 2 with 2 x1 = 0";
                if (!model.completion_note().empty())
                    w += " (" + model.completion_note() + ")";
                return not_forced(std::move(v), 3, w);
            }
        }
    }
    const bool top_exact = in.h[static_cast<std::size_t>(top)].exact();
    if (in.axioms.h7_no_4torsion && top_exact)
        v.trace.push_back({"H^" + std::to_string(top) + " has no element of order 4, so 2 x1 = 0 and x1 in 2 H^" +
                               std::to_string(top) + " give x1 = 0",
                           "", kAxiomH7, model.group(top).str()});
    else
        v.trace.push_back({"no element of H^" + std::to_string(top) + " is both 2-divisible and of order 2 here",
                           "model-completion", "",
                           model.completion_note().empty() ? model.group(top).str() : model.completion_note()});
    v.trace.push_back({"x1 = 0, so the class restricts to zero over Y_2", "restriction-to-y2", "", ""});
    v.status = Status::ForcedZero;
    v.witness = "x1 = 0";
    return v;
}

Verdict lemma64_decide(const CohomologyInput& input, int lo, int hi, int k)
{
    if (lo > -8 || hi < 8)
        throw WindowError("lemma64: window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] does not cover [-8, 8]");
    Verdict base = lemma64_decide(EInftyModel(input, lo, hi, k));
    if (base.status != Status::ForcedZero)
        return base;
    auto holes = input.holes();
    std::stable_sort(holes.begin(), holes.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& hole : holes) {
        const int e = input.h[static_cast<std::size_t>(hole.first)].torsion[hole.second].exponent + 1;
        Verdict v = lemma64_decide(EInftyModel(input, lo, hi, k, {{hole, e}}));
        if (v.status != Status::ForcedZero)
            return v;
    }
    if (!holes.empty())
        base.trace.push_back({"every completion raising one hole by a factor of 2 gives the same verdict",
                              "model-completion", "", std::to_string(holes.size()) + " completions checked"});
    return base;
}

namespace {

Verdict undecided(std::vector<TraceStep> trace, const std::string& dependency, const std::string& witness)
{
    Verdict v;
    v.status = Status::Undecided;
    v.failing_dependency = dependency;
    v.witness = witness;
    v.trace = std::move(trace);
    return v;
}

}  // namespace

PropChainReport prop_chain_report(const PropChainInputs& in)
{
    PropChainReport rep;
    if (!in.input.has_torsion()) {
        Verdict v;
        v.status = Status::NoObstruction;
        v.witness = "input has no torsion";
        v.trace.push_back({"no torsion and Sq^3 = 0: nothing to obstruct", "free-input", "", in.input.name});
        rep.prop61 = v;
        rep.prop62 = v;
        return rep;
    }

    std::vector<TraceStep> t1;
    if (!in.euler || !in.euler->pass())
        rep.prop61 = undecided(t1, "charclass.euler_identity_check", "Euler identity not established");
    else {
        t1.push_back({"2 chi = c2(A) - c2(B) on the torus", "euler-identity", "", "2*chi = " + in.euler->difference.str()});
        t1.push_back({"so C, defined from c2(A) - c2(B), maps to 2 chi in H^4(BG, Z)", "", "euler-injection", ""});
        t1.push_back({"C vanishes in H^4(BG, Z/2)", "mod2-vanishing", "", ""});
        t1.push_back({"if C were sum v_i y_i, chi + (2-torsion) would be in the image of BP^4, killing its Sq^3",
                      "odd-ops-vanish", "", ""});
        t1.push_back({"every 2-torsion class of H^4 is a Bockstein", "", "bockstein-lift", ""});
        if (!in.torsion_shift || !in.torsion_shift->pass()) {
            std::string w = "torsion shift check missing";
            if (in.torsion_shift)
                w = in.torsion_shift->witness ? "Sq^3(w4 + Sq^1 z) = 0 for " + *in.torsion_shift->witness
                                              : "weight checks failed";
            rep.prop61 = undecided(t1, "steenrod.torsion_shift_check", w);
        } else {
            t1.push_back({"Sq^3(w4 + Sq^1 z) != 0 for every z", "torsion-shift", "",
                          std::to_string(in.torsion_shift->enumerated) + " z enumerated"});
            if (!in.sq3w4 || in.sq3w4->verdict != ObstructionVerdict::Obstructed)
                rep.prop61 = undecided(t1, "charclass.ah_obstruction", "Sq^3 w4 not shown nonzero");
            else {
                t1.push_back({"Sq^3 w4 = w3 w4 in BSO(4)", "sq3-w4", "", in.sq3w4->sq3.str()});
                t1.push_back({"the same classes live on the 7-skeleton", "skeleton-restriction", "", ""});
                t1.push_back({"C != 0 in BP^4 X_7 (x) Z/2", "c-nonzero", "", ""});
                rep.prop61.status = Status::Nonzero;
                rep.prop61.witness = "C != 0 in BP^4 X_7 (x) Z/2";
                rep.prop61.trace = t1;
            }
        }
    }

    std::vector<TraceStep> t2;
    auto fail2 = [&](const std::string& dep, const std::string& w) { rep.prop62 = undecided(t2, dep, w); };
    if (rep.prop61.status != Status::Nonzero) {
        fail2("prop-6.1 <- " + rep.prop61.failing_dependency, "C not shown nonzero");
        return rep;
    }
    if (!in.two_series_ok) {
        fail2("fgl.two_series", "2-series coefficients differ");
        return rep;
    }
    t2.push_back({"2-series to c1^4", "two-series", "", ""});
    if (!in.resolutions_exact) {
        fail2("fpmodule.resolution_exactness_check", "skeleton resolution not exact");
        return rep;
    }
    t2.push_back({"skeleton presentations are length-one resolutions", "skeleton-resolution", "", ""});
    if (!in.y8_surjective) {
        fail2("gmod.tensor_unit(Y_8)", "BP^*Y_8 (x) Z(2) differs from H^*(Y_8)");
        return rep;
    }
    t2.push_back({"BP^*Y_8 -> H^*(Y_8) onto", "y8-surjective", "", ""});
    if (!in.tor_oracles_agree) {
        fail2("gmod.tor1_bruteforce", "Tor oracles disagree");
        return rep;
    }
    t2.push_back({"Kunneth extension for X_7 x Y_8 and X_7 x Y_2", "kunneth-sequence", "", "tor oracles agree"});
    t2.push_back({"the Tor term dies on the infinite skeleton, so Y_8 is the test case", "", "landweber-flatness", ""});
    t2.push_back({"x_i = 0 for i >= 3 on X_7 x Y_8", "dimension-vanishing", "", ""});
    if (!in.lemma64 || in.lemma64->status != Status::ForcedZero) {
        fail2("lemma64", in.lemma64 ? status_name(in.lemma64->status) + ": " + in.lemma64->witness : "not run");
        return rep;
    }
    t2.push_back({"x1 restricts to zero in Tor_1(BP^*X_7, BP^*Y_2)", "restriction-to-y2", "", in.lemma64->witness});
    if (!in.y2_c1_summand) {
        fail2("gmod.tensor_unit(Y_2)", "c1 does not span a Z/2 summand");
        return rep;
    }
    t2.push_back({"c1 spans Z/2 in BP^*Y_2 (x) Z(2)", "y2-summand", "", ""});
    t2.push_back({"C (x) c1 = v1 x1 over Y_2 contradicts C != 0", "cc1-nonzero", "", "prop-6.1 NONZERO"});
    t2.push_back({"C (x) c1 maps to 0 in H^6", "h6-vanishing", "", ""});
    rep.prop62.status = Status::Nonzero;
    rep.prop62.witness = "C (x) c1 != 0 in BP^6(X_7 x Y_8) (x) Z";
    rep.prop62.trace = t2;
    return rep;
}

PropChainInputs gather_prop_chain_inputs(const SqAlgebra& ring, const AxiomSet& axioms, int h7_free_rank, int k)
{
    PropChainInputs p;
    p.input = bg_cohomology_input(ring, axioms, h7_free_rank);
    p.torsion_shift = torsion_shift_check(ring);
    const SqAlgebra bso4 = bso4_ring(12);
    p.sq3w4 = ah_obstruction(bso4.gen("w4"), bso4);
    p.euler = euler_identity_check();

    const CSeries series = two_series(4, k);
    const std::vector<BPElem> expected{
        BPElem(LocalInt2(2)), BPElem::monomial(VMonomial::generator(1)),
        BPElem::monomial(VMonomial({2}), LocalInt2(2)), BPElem::monomial(VMonomial::generator(2))};
    p.two_series_ok = series.coefficients() == expected;

    p.resolutions_exact = resolution_exactness_check(1, -16, 8, k).exact && resolution_exactness_check(4, -16, 8, k).exact;

    const DegreewiseModule y8 = tensor_unit(skeleton_presentation(4, k), 0, 8);
    p.y8_surjective = y8.at(0) == AbelianGroup{1, {}};
    for (int d = 1; d <= 8; ++d)
        p.y8_surjective = p.y8_surjective && y8.at(d) == (d % 2 == 0 ? AbelianGroup{0, {1}} : AbelianGroup{});
    const DegreewiseModule y2 = tensor_unit(skeleton_presentation(1, k), 0, 2);
    p.y2_c1_summand = y2.at(0) == AbelianGroup{1, {}} && y2.at(2) == AbelianGroup{0, {1}};

    const EInftyModel model(p.input, -8, 8, k);
    const FPModule m = einfty_as_fpmodule(model);
    p.tor_oracles_agree = true;
    for (int n : {1, 4})
        p.tor_oracles_agree = p.tor_oracles_agree &&
                              tor1_via_resolution(m, n, 4, 8, k) == tor1_bruteforce(m, skeleton_presentation(n, k), 4, 8, k);

    p.lemma64 = lemma64_decide(p.input, -8, 8, k);
    return p;
}

}  // namespace cobord
