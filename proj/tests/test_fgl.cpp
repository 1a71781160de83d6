#include "doctest.h"

#include <chrono>
#include <fstream>
#include <sstream>

#include "cobord/errors.hpp"
#include "cobord/fgl.hpp"
#include "cobord/fpmodule.hpp"

using namespace cobord;

namespace {

std::vector<std::string> load_golden()
{
    std::ifstream in(COBORD_GOLDEN_DIR "/two_series_16.txt");
    REQUIRE(in.good());
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto tab = line.find('\t');
        const int j = std::stoi(line.substr(0, tab));
        CHECK(j == static_cast<int>(out.size()) + 1);
        out.push_back(line.substr(tab + 1));
    }
    return out;
}

const TwoTypicalFGL& fgl16()
{
    static const TwoTypicalFGL f(16);
    return f;
}

}  // namespace

TEST_CASE("two-series leading coefficients")
{
    const CSeries s = two_series(4, 2);
    CHECK(s.coefficient(1).str() == "2");
    CHECK(s.coefficient(2).str() == "v1");
    CHECK(s.coefficient(3).str() == "2*v1^2");
    CHECK(s.coefficient(4).str() == "v2");
    CHECK(s.str() == "2*c1 + v1*c1^2 + 2*v1^2*c1^3 + v2*c1^4");
}

TEST_CASE("two-series matches the frozen oracle through c1^16")
{
    const auto golden = load_golden();
    REQUIRE(golden.size() == 16);
    const CSeries s = fgl16().integral_two_series();
    CHECK(s.degrees_consistent());
    for (int j = 1; j <= 16; ++j) {
        CAPTURE(j);
        CHECK(s.coefficient(j).str() == golden[static_cast<std::size_t>(j - 1)]);
    }
}

TEST_CASE("formal group law self-consistency")
{
    const auto& f = fgl16();
    CHECK(f.generator_count() == 4);
    CHECK(f.formal_sum_consistent());
    CHECK(f.log_consistent());
    CHECK(f.basis_round_trip());
    // the linear m-term of v_i is (2 - 2^{2^i}) m_i
    CHECK(f.v_in_m()[0].coefficient(VMonomial::generator(1)) == mpq_class(-2));
    CHECK(f.v_in_m()[1].coefficient(VMonomial::generator(2)) == mpq_class(-14));
}

TEST_CASE("two-series capacity")
{
    CHECK_THROWS_AS(two_series(16, 3), CapacityError);
    CHECK_NOTHROW(two_series(15, 3));
    CHECK_THROWS_AS(two_series(0, 3), std::invalid_argument);
}

TEST_CASE("skeleton presentations")
{
    const FPModule y0 = skeleton_presentation(0);
    CHECK(y0.generator_count() == 1);
    CHECK(y0.relations().empty());

    const FPModule y2 = skeleton_presentation(1);
    REQUIRE(y2.relations().size() == 1);
    CHECK(y2.relations()[0].coeffs[0].is_zero());
    CHECK(y2.relations()[0].coeffs[1].str() == "2");

    const FPModule y8 = skeleton_presentation(4);
    CHECK(y8.generator_degrees() == std::vector<int>{0, 2, 4, 6, 8});
    REQUIRE(y8.relations().size() == 4);
    const auto& r1 = y8.relations()[0];
    CHECK(r1.degree == 2);
    CHECK(r1.coeffs[1].str() == "2");
    CHECK(r1.coeffs[2].str() == "v1");
    CHECK(r1.coeffs[3].str() == "2*v1^2");
    CHECK(r1.coeffs[4].str() == "v2");
    const auto& r4 = y8.relations()[3];
    CHECK(r4.degree == 8);
    CHECK(r4.coeffs[4].str() == "2");
    for (std::size_t g = 0; g < 4; ++g)
        CHECK(r4.coeffs[g].is_zero());
}

TEST_CASE("resolution exactness")
{
    CHECK(resolution_exactness_check(0, -20, 8).exact);
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        const auto rep = resolution_exactness_check(n, -30, 10);
        CHECK(rep.exact);
        CHECK_FALSE(rep.first_failing_degree.has_value());
    }
    // a relation map with a kernel: the same relation twice
    FPModule dup({0});
    dup.add_relation({BPElem(LocalInt2(2))});
    dup.add_relation({BPElem(LocalInt2(2))});
    const auto bad = resolution_exactness_check(dup, -4, 2, 3);
    CHECK_FALSE(bad.exact);
    CHECK(bad.first_failing_degree == -4);
    // k = 3 cannot see degree -30 from a generator in degree 8
    CHECK_THROWS_AS(resolution_exactness_check(4, -30, 10, 3), CapacityError);
}

TEST_CASE("FPModule homogeneity")
{
    FPModule m({0, 2});
    CHECK_THROWS_AS(m.add_relation({BPElem(LocalInt2(1)), BPElem(LocalInt2(1))}), std::invalid_argument);
    m.add_relation({BPElem::monomial(VMonomial::generator(1)), BPElem(LocalInt2(0))});
    CHECK(m.relations()[0].degree == -2);
}
