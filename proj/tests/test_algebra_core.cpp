#include "doctest.h"

#include <random>

#include "cobord/bp_ring.hpp"
#include "cobord/errors.hpp"
#include "cobord/f2.hpp"
#include "cobord/linalg.hpp"

using namespace cobord;

namespace {

// Determinant by cofactor expansion; only for tiny matrices.
mpz_class det(const std::vector<std::vector<long>>& a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    mpz_class d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c)
                    row.push_back(a[r][j]);
            minor.push_back(row);
        }
        const mpz_class t = a[0][c] * det(minor);
        d += (c % 2 == 0) ? t : mpz_class(-t);
    }
    return d;
}

int val2(const mpz_class& x)
{
    return sgn(x) == 0 ? LocalInt2::kInfiniteValuation : static_cast<int>(mpz_scan1(x.get_mpz_t(), 0));
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Elementary divisor exponents from determinantal divisors: the 2-adic valuation
// of the gcd of k x k minors is e_1 + ... + e_k.
std::vector<int> oracle_exponents(const std::vector<std::vector<long>>& a)
{
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::vector<int> e;
    int prev = 0;
    for (std::size_t k = 1; k <= std::min(m, n); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(m, k, 0, cur, rs);
        subsets(n, k, 0, cur, cs);
        int best = LocalInt2::kInfiniteValuation;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<long>> sub(k, std::vector<long>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub[i][j] = a[r[i]][c[j]];
                best = std::min(best, val2(det(sub)));
            }
        if (best == LocalInt2::kInfiniteValuation)
            break;
        e.push_back(best - prev);
        prev = best;
    }
    return e;
}

Matrix to_matrix(const std::vector<std::vector<long>>& a)
{
    Matrix m(a.size(), a.empty() ? 0 : a[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = LocalInt2(a[i][j]);
    return m;
}

Matrix diagonal(const SNFResult& s, std::size_t rows, std::size_t cols)
{
    Matrix d(rows, cols);
    for (std::size_t i = 0; i < s.invariants.size(); ++i)
        d(i, i) = s.invariants[i];
    return d;
}

BPElem random_elem(std::mt19937_64& rng, int degree, int k)
{
    const auto basis = bp_basis(degree, k);
    std::uniform_int_distribution<long> coef(-4, 4);
    BPElem e;
    for (const auto& m : basis)
        e.add_term(m, LocalInt2(coef(rng)));
    return e;
}

}  // namespace

TEST_CASE("LocalInt2 canonical form")
{
    LocalInt2 a(mpz_class(6), mpz_class(-9));
    CHECK(a.numerator() == -2);
    CHECK(a.denominator() == 3);
    CHECK(a.valuation() == 1);
    CHECK_FALSE(a.is_unit());
    CHECK(LocalInt2(0).denominator() == 1);
    CHECK_THROWS_AS(LocalInt2(mpz_class(1), mpz_class(4)), IntegralityError);
    CHECK_FALSE(LocalInt2::from_rational(mpq_class(1, 2)).has_value());
    CHECK(LocalInt2(mpz_class(3), mpz_class(5)).inverse().str() == "5/3");
    CHECK(LocalInt2(12).exact_div(LocalInt2(mpz_class(4), mpz_class(7)))->str() == "21");
    CHECK_FALSE(LocalInt2(2).exact_div(LocalInt2(4)).has_value());
    CHECK((LocalInt2(mpz_class(1), mpz_class(3)) + LocalInt2(mpz_class(2), mpz_class(3))) == LocalInt2(1));
}

TEST_CASE("monomial degrees")
{
    CHECK(monomial_degree(VMonomial::generator(1)) == -2);
    CHECK(monomial_degree(VMonomial{}) == 0);
    CHECK(monomial_degree(VMonomial({2, 1})) == -10);
    CHECK(generator_degree(4) == -30);
    CHECK(VMonomial({2, 1, 0, 0}) == VMonomial({2, 1}));
    CHECK(VMonomial({2, 1}).str() == "v1^2*v2");
}

TEST_CASE("bp_basis")
{
    CHECK(bp_basis(0, 3).size() == 1);
    CHECK(bp_basis(0, 3)[0].is_one());
    REQUIRE(bp_basis(-2, 1).size() == 1);
    CHECK(bp_basis(-2, 1)[0] == VMonomial::generator(1));
    const auto b6 = bp_basis(-6, 2);
    REQUIRE(b6.size() == 2);
    CHECK(b6[0] == VMonomial({3}));
    CHECK(b6[1] == VMonomial::generator(2));
    CHECK(bp_basis(-3, 3).empty());
    CHECK(bp_basis(4, 3).empty());

    // counts against the generating function prod_i 1/(1 - t^{2^i - 1})
    for (int k = 1; k <= 4; ++k) {
        const int top = 40;
        std::vector<long> series(top + 1, 0);
        series[0] = 1;
        for (int i = 1; i <= k; ++i) {
            const int part = (1 << i) - 1;
            for (int n = part; n <= top; ++n)
                series[n] += series[n - part];
        }
        for (int n = 0; n <= top; ++n)
            CHECK(static_cast<long>(bp_basis(-2 * n, k).size()) == series[n]);
    }
}

TEST_CASE("BPElem ring axioms on random elements")
{
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> deg(0, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const int da = -2 * deg(rng), db = -2 * deg(rng), dc = -2 * deg(rng);
        const BPElem a = random_elem(rng, da, 3);
        const BPElem b = random_elem(rng, db, 3);
        const BPElem c = random_elem(rng, dc, 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        const BPElem ab = a * b;
        CHECK(ab.is_homogeneous());
        if (!ab.is_zero())
            CHECK(*ab.degree() == da + db);
    }
    const BPElem mixed = BPElem::monomial(VMonomial::generator(1)) + BPElem(LocalInt2(1));
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK(mixed.str() == "1 + v1");
}

TEST_CASE("snf examples")
{
    auto inv = [](const Matrix& m) {
        std::vector<std::string> out;
        for (const auto& x : snf(m).invariants)
            out.push_back(x.str());
        return out;
    };
    CHECK(inv(Matrix{{1, 0}, {0, 1}}) == std::vector<std::string>{"1", "1"});
    CHECK(inv(Matrix{{3, 0}, {0, 2}}) == std::vector<std::string>{"1", "2"});
    CHECK(inv(Matrix{{2, 1}, {0, 2}}) == std::vector<std::string>{"1", "4"});
    CHECK(snf(Matrix(0, 3)).invariants.empty());
    CHECK(inv(Matrix{{0, 0}, {0, 6}}) == std::vector<std::string>{"2", "0"});
}

TEST_CASE("snf agrees with determinantal divisors and certificates hold")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<long> entry(-8, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = static_cast<std::size_t>(dim(rng));
        const std::size_t n = static_cast<std::size_t>(dim(rng));
        std::vector<std::vector<long>> a(m, std::vector<long>(n));
        for (auto& row : a)
            for (auto& x : row)
                x = entry(rng) * (trial % 3 == 0 ? 2 : 1);
        const Matrix am = to_matrix(a);
        const SNFResult s = snf(am);
        CHECK(s.exponents() == oracle_exponents(a));
        CHECK(s.U * am * s.V == diagonal(s, m, n));
        for (std::size_t i = 0; i < s.rank; ++i)
            CHECK(s.invariants[i] == LocalInt2::power_of_two(s.invariants[i].valuation()));
        for (std::size_t i = s.rank; i < s.invariants.size(); ++i)
            CHECK(s.invariants[i].is_zero());
    }
}

TEST_CASE("kernel, solve, cokernel, homology")
{
    const Matrix a{{2, 4, 6}, {1, 2, 3}};
    const Matrix k = kernel_basis(a);
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());

    const Matrix b{{2}, {1}};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    CHECK_FALSE(solve(a, Matrix{{1}, {1}}).has_value());

    CHECK(cokernel(Matrix{{2, 0}, {0, 4}, {0, 0}}).str() == "Z(2) + Z/2 + Z/4");
    CHECK(cokernel(Matrix(2, 0)).str() == "Z(2)^2");

    // span{(1,0),(0,1)} / span{(2,0),(0,2)} = (Z/2)^2
    CHECK(subquotient(Matrix{{1, 0}, {0, 1}}, Matrix{{2, 0}, {0, 2}}).str() == "Z/2^2");

    // Z --2--> Z --0--> Z : homology at the middle is Z/2
    CHECK(homology(Matrix{{2}}, Matrix(1, 0), Matrix{{0}}, Matrix(1, 0)).str() == "Z/2");
    // multiplication by 2 on Z/4: kernel {0, 2} = Z/2
    CHECK(homology(Matrix(1, 0), Matrix{{4}}, Matrix{{2}}, Matrix{{4}}).str() == "Z/2");
}

TEST_CASE("F2 echelon")
{
    BitVec a(5), b(5), c(5);
    a.set(0);
    a.set(3);
    b.set(3);
    c.set(0);
    CHECK(f2_rank({a, b, c}) == 2);
    const auto ker = f2_kernel({a, b, c});
    REQUIRE(ker.size() == 1);
    CHECK(ker[0].str() == "111");
    auto sol = f2_solve({a, b}, c);
    REQUIRE(sol.has_value());
    CHECK(sol->str() == "11");
    F2Echelon e(5);
    e.insert(a);
    CHECK(e.reduce(e.reduce(c)) == e.reduce(c));
    CHECK(e.free_indices() == std::vector<std::size_t>{0, 1, 2, 4});
}
