#pragma once

#include <string>
#include <vector>

#include "cobord/bp_ring.hpp"

namespace cobord {

/// Power series in one variable with coefficients in a graded polynomial ring,
/// truncated above x^N. coeffs[j] is the coefficient of x^j, j = 0..N.
using RatSeries = std::vector<RatPoly>;

RatSeries series_mul(const RatSeries& a, const RatSeries& b, int n);
/// f(g(x)) with g(0) = 0, truncated at x^n.
RatSeries series_compose(const RatSeries& f, const RatSeries& g, int n);

/// [2](c_1) in the v-basis: coefficient j (1..N) has degree 2 - 2j.
class CSeries {
public:
    CSeries() = default;
    explicit CSeries(std::vector<BPElem> coeffs) : coeffs_(std::move(coeffs)) {}

    int truncation() const { return static_cast<int>(coeffs_.size()); }
    /// Coefficient of c1^j, 1 <= j <= truncation().
    const BPElem& coefficient(int j) const { return coeffs_.at(static_cast<std::size_t>(j - 1)); }
    const std::vector<BPElem>& coefficients() const { return coeffs_; }

    /// True when every coefficient j is homogeneous of degree 2 - 2j.
    bool degrees_consistent() const;

    /// "2*c1 + v1*c1^2 + 2*v1^2*c1^3 + v2*c1^4"
    std::string str() const;

private:
    std::vector<BPElem> coeffs_;
};

/// The universal 2-typical formal group law to x^N, built from the logarithm
/// log(x) = sum_i m_i x^{2^i} (m_0 = 1) over Q[m_1, m_2, ...] and re-expressed in
/// generators v_i := coefficient of x^{2^i} in [2](x).
class TwoTypicalFGL {
public:
    explicit TwoTypicalFGL(int n);

    int truncation() const { return n_; }
    /// Number of generators v_i with 2^i <= N.
    int generator_count() const { return static_cast<int>(v_in_m_.size()); }

    const RatSeries& log_m() const { return log_; }
    const RatSeries& exp_m() const { return exp_; }
    const RatSeries& two_series_m() const { return two_m_; }
    /// v_i as a polynomial in m_1..m_i.
    const std::vector<RatPoly>& v_in_m() const { return v_in_m_; }
    /// m_i as a polynomial in v_1..v_i.
    const std::vector<RatPoly>& m_in_v() const { return m_in_v_; }
    /// [2](x) with coefficients rewritten in the v_i (still rational).
    const RatSeries& two_series_v() const { return two_v_; }

    /// [2](x) as a CSeries; throws IntegralityError if a coefficient leaves Z_(2)[v].
    CSeries integral_two_series() const;

    /// Coefficientwise F(x, x) == [2](x), F(x, y) = exp(log x + log y) expanded as a
    /// two-variable series and then restricted to the diagonal.
    bool formal_sum_consistent() const;
    /// log([2](x)) == 2 log(x) with everything written in the v-basis.
    bool log_consistent() const;
    /// m -> v -> m and v -> m -> v are identities on generators.
    bool basis_round_trip() const;

private:
    int n_;
    RatSeries log_;
    RatSeries exp_;
    RatSeries two_m_;
    std::vector<RatPoly> v_in_m_;
    std::vector<RatPoly> m_in_v_;
    RatSeries two_v_;
};

/// [2](c_1) truncated at c_1^N, with k configured generators. Throws CapacityError
/// when v_{k+1} would be needed (2^{k+1} <= N) and IntegralityError if the
/// construction ever produces an even denominator.
CSeries two_series(int n, int k = kDefaultGeneratorCount);

}  // namespace cobord
