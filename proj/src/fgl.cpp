#include "cobord/fgl.hpp"

#include <stdexcept>

#include "cobord/errors.hpp"

namespace cobord {

namespace {

RatPoly m_gen(int i) { return RatPoly::monomial(VMonomial::generator(i)); }

std::string c_power(int j) { return j == 1 ? "c1" : "c1^" + std::to_string(j); }

// x^{2^i} positions that carry a generator, for 1 <= i and 2^i <= n.
int generators_below(int n)
{
    int i = 0;
    while ((1 << (i + 1)) <= n)
        ++i;
    return i;
}

mpz_class binomial(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

RatSeries series_mul(const RatSeries& a, const RatSeries& b, int n)
{
    RatSeries c(static_cast<std::size_t>(n + 1));
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= n; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= n; ++j)
            if (!b[j].is_zero())
                c[i + j] += a[i] * b[j];
    }
    return c;
}

RatSeries series_compose(const RatSeries& f, const RatSeries& g, int n)
{
    if (!g.empty() && !g[0].is_zero())
        throw std::invalid_argument("series_compose: inner series has a constant term");
    RatSeries out(static_cast<std::size_t>(n + 1));
    if (!f.empty())
        out[0] = f[0];
    RatSeries power(static_cast<std::size_t>(n + 1));
    power[0] = RatPoly(mpq_class(1));
    for (int k = 1; k <= n && k < static_cast<int>(f.size()); ++k) {
        power = series_mul(power, g, n);
        if (f[static_cast<std::size_t>(k)].is_zero())
            continue;
        for (int j = k; j <= n; ++j)
            if (!power[static_cast<std::size_t>(j)].is_zero())
                out[static_cast<std::size_t>(j)] += f[static_cast<std::size_t>(k)] * power[static_cast<std::size_t>(j)];
    }
    return out;
}

bool CSeries::degrees_consistent() const
{
    for (int j = 1; j <= truncation(); ++j) {
        const BPElem& c = coefficient(j);
        if (c.is_zero())
            continue;
        auto d = c.degree();
        if (!d || *d != 2 - 2 * j)
            return false;
    }
    return true;
}

std::string CSeries::str() const
{
    std::string out;
    for (int j = 1; j <= truncation(); ++j) {
        const BPElem& c = coefficient(j);
        if (c.is_zero())
            continue;
        std::string term;
        bool negative = false;
        if (c.size() == 1) {
            const auto& [m, coef] = *c.terms().begin();
            std::string cs = coef.str();
            negative = cs[0] == '-';
            if (negative)
                cs.erase(0, 1);
            if (cs != "1")
                term += cs + "*";
            if (!m.is_one())
                term += m.str() + "*";
        } else {
            term = "(" + c.str() + ")*";
        }
        term += c_power(j);
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

TwoTypicalFGL::TwoTypicalFGL(int n) : n_(n)
{
    if (n < 1)
        throw std::invalid_argument("TwoTypicalFGL: truncation must be >= 1");
    const auto sz = static_cast<std::size_t>(n + 1);
    const int gens = generators_below(n);

    log_.assign(sz, RatPoly{});
    log_[1] = RatPoly(mpq_class(1));
    for (int i = 1; i <= gens; ++i)
        log_[static_cast<std::size_t>(1 << i)] = m_gen(i);

    // exp = log^{-1}. With E = x + b_2 x^2 + ..., log(E) = x forces
    // b_n = -sum_i m_i [x^n] E^{2^i}, and [x^n] E^{2^i} only involves b_1..b_{n-1}.
    // powers[i] holds the coefficients of E^{2^i} computed so far.
    exp_.assign(sz, RatPoly{});
    exp_[1] = RatPoly(mpq_class(1));
    std::vector<RatSeries> powers(static_cast<std::size_t>(gens + 1), RatSeries(sz));
    powers[0][1] = exp_[1];
    for (int i = 1; i <= gens; ++i)
        powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(1 << i)] = RatPoly(mpq_class(1));
    for (int c = 2; c <= n; ++c) {
        const auto cc = static_cast<std::size_t>(c);
        RatPoly bn;
        for (int i = 1; i <= gens; ++i) {
            auto& pi = powers[static_cast<std::size_t>(i)];
            const auto& prev = powers[static_cast<std::size_t>(i - 1)];
            const int lo = 1 << (i - 1);
            if (c > (1 << i)) {
                RatPoly acc;
                for (int a = lo; a <= c - lo; ++a)
                    acc += prev[static_cast<std::size_t>(a)] * prev[static_cast<std::size_t>(c - a)];
                pi[cc] = acc;
            }
            bn -= m_gen(i) * pi[cc];
        }
        exp_[cc] = bn;
        powers[0][cc] = bn;
    }

    RatSeries two_log = log_;
    for (auto& c : two_log)
        c = mpq_class(2) * c;
    two_m_ = series_compose(exp_, two_log, n);

    for (int i = 1; i <= gens; ++i)
        v_in_m_.push_back(two_m_[static_cast<std::size_t>(1 << i)]);

    // v_i = (2 - 2^{2^i}) m_i + (terms in m_1..m_{i-1}); solve for m_i.
    for (int i = 1; i <= gens; ++i) {
        const RatPoly& vi = v_in_m_[static_cast<std::size_t>(i - 1)];
        const VMonomial mi = VMonomial::generator(i);
        const mpq_class lead = vi.coefficient(mi);
        if (sgn(lead) == 0)
            throw std::logic_error("TwoTypicalFGL: v_" + std::to_string(i) + " has no linear m-term");
        RatPoly rest = vi;
        rest.add_term(mi, -lead);
        const RatPoly rest_v = substitute(rest, m_in_v_);
        const mpq_class inv = 1 / lead;
        m_in_v_.push_back(inv * (m_gen(i) - rest_v));
    }

    two_v_.assign(sz, RatPoly{});
    for (std::size_t j = 0; j < sz; ++j)
        two_v_[j] = substitute(two_m_[j], m_in_v_);
}

CSeries TwoTypicalFGL::integral_two_series() const
{
    std::vector<BPElem> coeffs;
    for (int j = 1; j <= n_; ++j) {
        auto l = to_local(two_v_[static_cast<std::size_t>(j)]);
        if (!l)
            throw IntegralityError("two_series: coefficient of " + c_power(j) + " is not 2-local: " +
                                   two_v_[static_cast<std::size_t>(j)].str());
        coeffs.push_back(std::move(*l));
    }
    return CSeries(std::move(coeffs));
}

bool TwoTypicalFGL::formal_sum_consistent() const
{
    const int n = n_;
    // lam[k] = (log x)^k
    std::vector<RatSeries> lam(static_cast<std::size_t>(n + 1));
    lam[0].assign(static_cast<std::size_t>(n + 1), RatPoly{});
    lam[0][0] = RatPoly(mpq_class(1));
    for (int k = 1; k <= n; ++k)
        lam[static_cast<std::size_t>(k)] = series_mul(lam[static_cast<std::size_t>(k - 1)], log_, n);

    // F(x, y) = sum_m b_m (log x + log y)^m, coefficient of x^a y^b.
    auto coeff_ab = [&](int a, int b) {
        RatPoly total;
        for (int m = 1; m <= a + b; ++m) {
            const RatPoly& bm = exp_[static_cast<std::size_t>(m)];
            if (bm.is_zero())
                continue;
            RatPoly inner;
            for (int k = 0; k <= m; ++k) {
                const RatPoly& xa = lam[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
                const RatPoly& yb = lam[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(b)];
                if (xa.is_zero() || yb.is_zero())
                    continue;
                inner += mpq_class(binomial(m, k)) * (xa * yb);
            }
            if (!inner.is_zero())
                total += bm * inner;
        }
        return total;
    };

    std::vector<std::vector<RatPoly>> f(static_cast<std::size_t>(n + 1));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            f[static_cast<std::size_t>(a)].push_back(coeff_ab(a, b));

    // F(x, 0) = x and symmetry
    for (int a = 0; a <= n; ++a) {
        const RatPoly expect = a == 1 ? RatPoly(mpq_class(1)) : RatPoly{};
        if (!(f[static_cast<std::size_t>(a)][0] == expect))
            return false;
        for (int b = 0; a + b <= n; ++b)
            if (!(f[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ==
                  f[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]))
                return false;
    }
    for (int j = 0; j <= n; ++j) {
        RatPoly diag;
        for (int a = 0; a <= j; ++a)
            diag += f[static_cast<std::size_t>(a)][static_cast<std::size_t>(j - a)];
        if (!(diag == two_m_[static_cast<std::size_t>(j)]))
            return false;
    }
    return true;
}

bool TwoTypicalFGL::log_consistent() const
{
    const int n = n_;
    const auto sz = static_cast<std::size_t>(n + 1);
    RatSeries lhs = two_v_;
    RatSeries power = two_v_;
    for (std::size_t i = 0; i < m_in_v_.size(); ++i) {
        power = series_mul(power, power, n);  // [2](x)^{2^{i+1}}
        for (std::size_t j = 0; j < sz; ++j)
            if (!power[j].is_zero())
                lhs[j] += m_in_v_[i] * power[j];
    }
    for (std::size_t j = 0; j < sz; ++j) {
        RatPoly rhs;
        if (j == 1)
            rhs = RatPoly(mpq_class(2));
        for (std::size_t i = 0; i < m_in_v_.size(); ++i)
            if (j == (std::size_t{1} << (i + 1)))
                rhs = mpq_class(2) * m_in_v_[i];
        if (!(lhs[j] == rhs))
            return false;
    }
    return true;
}

bool TwoTypicalFGL::basis_round_trip() const
{
    for (std::size_t i = 0; i < m_in_v_.size(); ++i) {
        const RatPoly gen = m_gen(static_cast<int>(i) + 1);
        if (!(substitute(m_in_v_[i], v_in_m_) == gen))
            return false;
        if (!(substitute(v_in_m_[i], m_in_v_) == gen))
            return false;
    }
    return true;
}

CSeries two_series(int n, int k)
{
    if (n < 1)
        throw std::invalid_argument("two_series: truncation must be >= 1");
    if (k < 1 || generators_below(n) > k)
        throw CapacityError("two_series: c1^" + std::to_string(n) + " needs v" +
                            std::to_string(generators_below(n)) + " but only " + std::to_string(k) +
                            " generators are configured");
    return TwoTypicalFGL(n).integral_two_series();
}

}  // namespace cobord
