#include "doctest.h"

#include <fstream>
#include <sstream>

#include "cobord/ahss.hpp"
#include "cobord/errors.hpp"
#include "cobord/gmod.hpp"

using namespace cobord;

namespace {

const SqAlgebra& ring()
{
    static const SqAlgebra r = extraspecial_ring(10);
    return r;
}

int log2_order(const AbelianGroup& g)
{
    int n = 0;
    for (int e : g.torsion)
        n += e;
    return n;
}

int lower_bound_exponents(const IntegralGroup& g)
{
    int n = 0;
    for (const auto& t : g.torsion)
        n += t.exponent;
    return n;
}

}  // namespace

TEST_CASE("axiom sets")
{
    CHECK(AxiomSet::parse("all") == AxiomSet::all());
    CHECK(AxiomSet::parse("none") == AxiomSet::none());
    const AxiomSet h7 = AxiomSet::parse(" h7-no-4torsion ");
    CHECK_FALSE(h7.h_odd_elementary);
    CHECK(h7.h7_no_4torsion);
    CHECK(h7.str() == "h7-no-4torsion");
    CHECK(AxiomSet::all().str() == "h-odd-elementary,h7-no-4torsion");
    CHECK(AxiomSet::none().str() == "none");
    CHECK(AxiomSet::parse(AxiomSet::all().str()) == AxiomSet::all());
    CHECK_THROWS_AS(AxiomSet::parse("h-even"), ConfigError);
    CHECK_THROWS_AS(AxiomSet::parse(""), ConfigError);
}

TEST_CASE("integral input from the extraspecial ring")
{
    const CohomologyInput in = bg_cohomology_input(ring(), AxiomSet::all());
    CHECK(in.dimension == 7);
    CHECK(in.h[0].str() == "Z(2)");
    CHECK(in.h[1].str() == "0");
    CHECK(in.h[2].str() == "Z/2^4");
    CHECK(in.h[4].str() == "Z/2^9 + Z/(>=4)");
    CHECK(in.h[7].str() == "Z/2^23");
    CHECK(in.holes() == std::vector<std::pair<int, std::size_t>>{{4, 9}});
    CHECK(in.labels[4][9] == "w4");
    CHECK(in.has_torsion());

    // Sq^3 w4 = w3 w4 lands on the H^7 summands spelling out w3 w4
    const BitVec& col = in.sq3[4][9];
    MGPoly sum(ring().generators());
    for (std::size_t i : col.support())
        sum += in.representatives[7][i];
    CHECK(sum == ring().mul(ring().named.at("w3"), ring().gen("w4")));
    for (std::size_t j = 0; j < 9; ++j)
        CHECK(in.sq3[4][j].is_zero());
    CHECK(f2_rank(in.sq3[3]) == 5);
    CHECK(in.sq3[5].empty());

    const CohomologyInput with_free = bg_cohomology_input(ring(), AxiomSet::all(), 3);
    CHECK(with_free.h[7].str() == "Z(2)^3 + Z/2^23");
    CHECK(with_free.labels[7][0] == "f1");

    const CohomologyInput bare = bg_cohomology_input(ring(), AxiomSet::none());
    CHECK(bare.h[3].str() == "Z/(>=2)^5");
    CHECK(bare.h[7].str() == "Z/(>=2)^23");
    CHECK(bare.holes().size() == 4 + 5 + 1 + 12 + 19 + 23);
    CHECK_THROWS_AS(bg_cohomology_input(ring(), AxiomSet::all(), -1), std::invalid_argument);
}

TEST_CASE("integral input and E-infinity orders match the frozen oracle")
{
    std::ifstream golden(COBORD_GOLDEN_DIR "/einfty_bg.txt");
    REQUIRE(golden.good());
    const CohomologyInput in = bg_cohomology_input(ring(), AxiomSet::all());
    const EInftyModel model(in, -8, 8);
    std::string line;
    int rows = 0;
    while (std::getline(golden, line)) {
        std::istringstream ls(line);
        int s, dim, sq1_in, t, higher, sq3_out, sq3_in, log_k, log_ki;
        ls >> s >> dim >> sq1_in >> t >> higher >> sq3_out >> sq3_in >> log_k >> log_ki;
        CAPTURE(s);
        const auto us = static_cast<std::size_t>(s);
        CHECK(ring().dimension(s) == static_cast<std::size_t>(dim));
        CHECK(f2_rank(ring().sq_matrix(1, s - 1)) == static_cast<std::size_t>(sq1_in));
        CHECK(in.h[us].torsion.size() == static_cast<std::size_t>(t));
        CHECK(lower_bound_exponents(in.h[us]) == t + higher);
        CHECK(static_cast<int>(in.sq3[us].empty() ? 0 : f2_rank(in.sq3[us])) == sq3_out);
        CHECK(static_cast<int>(s >= 3 && !in.sq3[us - 3].empty() ? f2_rank(in.sq3[us - 3]) : 0) == sq3_in);
        CHECK(log2_order(model.kernel_part(s).group) == log_k);
        CHECK(log2_order(model.quotient_part(s).group) == log_ki);
        ++rows;
    }
    CHECK(rows == 7);
}

TEST_CASE("E-infinity of a point and of torsion-free inputs")
{
    const EInftyModel pt(point_input(), -8, 8);
    for (const EInftyCell& c : pt.cells()) {
        CHECK(c.s == 0);
        CHECK(c.group == AbelianGroup{1, {}});
    }
    // BP^* in degrees 0, -2, .., -8 with k = 4: 1, 1, 1, 2, 2 monomials
    CHECK(pt.cells().size() == 7);
    CHECK(pt.cells().front().mu.is_one());

    const EInftyModel free(torsion_free_input({1, 0, 2, 0, 1}), -4, 4);
    for (const EInftyCell& c : free.cells())
        CHECK(c.group.torsion.empty());
    CHECK(vi_injectivity_report(free).non_injective.empty());
    CHECK_THROWS_AS(free.row_monomials(2, -8), WindowError);
    CHECK(free.row_monomials(2, 1).empty());
}

TEST_CASE("E-infinity model of the 7-skeleton")
{
    const EInftyModel m = build_einfty(bg_cohomology_input(ring(), AxiomSet::all()), -8, 8);
    CHECK(m.kernel_part(6).group.str() == "Z/2^19");
    CHECK(m.quotient_part(6).group.str() == "Z/2^14");
    CHECK(m.kernel_part(3).group.is_zero());
    CHECK(m.quotient_part(7).group.str() == "Z/2^22");
    CHECK(m.group(4).str() == "Z/2^9 + Z/4");
    CHECK(m.completion_note().empty());
    CHECK(validate_trace(Verdict{Status::ForcedZero, {}, "", "", m.trace()}).empty());

    const EInftyModel bumped(m.input(), -8, 8, 4, {{{4, 9}, 3}});
    CHECK(bumped.group(4).str() == "Z/2^9 + Z/8");
    CHECK(bumped.completion_note() == "H^4 summand 10 (w4) as Z/8");
    CHECK_THROWS_AS(EInftyModel(m.input(), -8, 8, 4, {{{4, 9}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(EInftyModel(m.input(), -8, 8, 4, {{{4, 0}, 2}}), std::invalid_argument);
}

TEST_CASE("v_i injectivity")
{
    const EInftyModel m(bg_cohomology_input(ring(), AxiomSet::all()), -8, 8);
    const InjectivityReport r = vi_injectivity_report(m);
    CHECK(r.pass);
    CHECK_FALSE(r.violation.has_value());
    CHECK(r.maps_checked > 0);
    REQUIRE_FALSE(r.non_injective.empty());
    for (const auto& e : r.non_injective) {
        CHECK(e.i == 1);
        CHECK((e.s == 6 || e.s == 7));
        CHECK(e.mu.exponent(1) == 0);
    }
}

TEST_CASE("the E-infinity page as a module")
{
    const EInftyModel m(bg_cohomology_input(ring(), AxiomSet::all()), -8, 8);
    const FPModule fp = einfty_as_fpmodule(m);
    // minimal generators: Z(2) in degree 0 plus the F_2-ranks of the K_s
    std::size_t expected = 1;
    for (int s = 1; s <= 7; ++s)
        expected += static_cast<std::size_t>(m.kernel_part(s).group.mod2_rank());
    CHECK(fp.generator_count() == expected);
    const DegreewiseModule z = tensor_unit(fp, 0, 7);
    for (int s = 0; s <= 7; ++s) {
        CAPTURE(s);
        CHECK(z.at(s).mod2_rank() == m.kernel_part(s).group.mod2_rank());
    }
}

TEST_CASE("lemma64 decision")
{
    for (int f = 0; f <= 4; ++f) {
        CAPTURE(f);
        const Verdict v = lemma64_decide(bg_cohomology_input(ring(), AxiomSet::all(), f));
        CHECK(v.status == Status::ForcedZero);
        CHECK(validate_trace(v).empty());
        CHECK_FALSE(v.failed_stage.has_value());
    }

    const Verdict ablated = lemma64_decide(bg_cohomology_input(ring(), AxiomSet::none()));
    CHECK(ablated.status == Status::NotForced);
    REQUIRE(ablated.failed_stage.has_value());
    CHECK(*ablated.failed_stage == 3);
    CHECK(ablated.witness.find("as Z/4") != std::string::npos);
    CHECK(validate_trace(ablated).empty());

    const Verdict h7_only = lemma64_decide(bg_cohomology_input(ring(), AxiomSet::parse("h-odd-elementary")));
    CHECK(h7_only.status == Status::NotForced);

    // H^7 = 0: nothing to restrict
    const Verdict empty = lemma64_decide(torsion_free_input({1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(empty.status == Status::ForcedZero);

    CHECK_THROWS_AS(lemma64_decide(bg_cohomology_input(ring(), AxiomSet::all()), -6, 8), WindowError);
    CHECK_THROWS_AS(lemma64_decide(bg_cohomology_input(ring(), AxiomSet::all()), -8, 4, 1), WindowError);
}

TEST_CASE("lemma64 fails on a concrete 4-torsion completion")
{
    const CohomologyInput in = bg_cohomology_input(ring(), AxiomSet::parse("h-odd-elementary"));
    const Verdict v = lemma64_decide(EInftyModel(in, -8, 8, 4, {{{7, 0}, 2}}));
    CHECK(v.status == Status::NotForced);
    CHECK(v.failed_stage == 3);
    CHECK(v.witness.rfind("x1 = [2*(", 0) == 0);
    const Verdict base = lemma64_decide(EInftyModel(in, -8, 8));
    CHECK(base.status == Status::ForcedZero);
}

TEST_CASE("Wilson bound")
{
    CHECK(wilson_bound(6, 1, 2));
    CHECK_FALSE(wilson_bound(8, 1, 2));
    CHECK(wilson_bound(0, 0, 3));
    CHECK(wilson_bound(2, 0, 2));
    CHECK_FALSE(wilson_bound(3, 0, 2));
    CHECK(wilson_bound(14, 2, 2));
    CHECK_THROWS_AS(wilson_bound(1, -1, 2), std::invalid_argument);
    CHECK_THROWS_AS(wilson_bound(1, 1, 4), std::invalid_argument);
}

TEST_CASE("trace validation")
{
    Verdict v;
    v.trace.push_back({"fine", "d3-sq3", "", ""});
    v.trace.push_back({"fine", "", "landweber-flatness", ""});
    CHECK(validate_trace(v).empty());
    v.trace.push_back({"untagged", "", "", ""});
    v.trace.push_back({"unknown", "no-such-fact", "", ""});
    const auto problems = validate_trace(v);
    REQUIRE(problems.size() == 2);
    CHECK(problems[0].find("step 3") != std::string::npos);
    CHECK(problems[1].find("no-such-fact") != std::string::npos);
    for (const auto& [id, text] : anchor_registry())
        CHECK_FALSE(text.empty());
    CHECK(axiom_registry().count(kAxiomHOdd) == 1);
    CHECK(axiom_registry().count(kAxiomH7) == 1);
}

TEST_CASE("nonvanishing chain")
{
    const PropChainInputs in = gather_prop_chain_inputs(ring(), AxiomSet::all());
    CHECK(in.two_series_ok);
    CHECK(in.resolutions_exact);
    CHECK(in.y8_surjective);
    CHECK(in.y2_c1_summand);
    CHECK(in.tor_oracles_agree);
    const PropChainReport r = prop_chain_report(in);
    CHECK(r.prop61.status == Status::Nonzero);
    CHECK(r.prop62.status == Status::Nonzero);
    CHECK(validate_trace(r.prop61).empty());
    CHECK(validate_trace(r.prop62).empty());

    PropChainInputs broken = in;
    broken.torsion_shift = torsion_shift_check(ring().with_sq_entry("w4", 3, MGPoly(ring().generators())));
    const PropChainReport b = prop_chain_report(broken);
    CHECK(b.prop61.status == Status::Undecided);
    CHECK(b.prop61.failing_dependency == "steenrod.torsion_shift_check");
    CHECK(b.prop62.status == Status::Undecided);
    CHECK(b.prop62.failing_dependency == "prop-6.1 <- steenrod.torsion_shift_check");

    PropChainInputs no_lemma = in;
    no_lemma.lemma64 = lemma64_decide(bg_cohomology_input(ring(), AxiomSet::none()));
    const PropChainReport nl = prop_chain_report(no_lemma);
    CHECK(nl.prop61.status == Status::Nonzero);
    CHECK(nl.prop62.status == Status::Undecided);
    CHECK(nl.prop62.failing_dependency == "lemma64");

    PropChainInputs free = in;
    free.input = torsion_free_input({1, 0, 1});
    const PropChainReport f = prop_chain_report(free);
    CHECK(f.prop61.status == Status::NoObstruction);
    CHECK(f.prop62.status == Status::NoObstruction);
    CHECK(status_name(f.prop62.status) == "NO_OBSTRUCTION");
}
