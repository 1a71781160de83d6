#include "cobord/bp_ring.hpp"

#include <algorithm>
#include <functional>

#include "cobord/errors.hpp"

namespace cobord {

void require_capacity(int degree, int k, const char* context)
{
    if (degree <= 0 && degree % 2 == 0 && degree < capacity_floor(k))
        throw CapacityError(std::string(context) + ": multiplier degree " + std::to_string(degree) +
                            " needs v" + std::to_string(k + 1) + " but only " + std::to_string(k) +
                            " generators are configured");
}

VMonomial::VMonomial(std::vector<int> exponents) : exps_(std::move(exponents))
{
    for (int e : exps_)
        if (e < 0)
            throw std::invalid_argument("VMonomial: negative exponent");
    trim();
}

VMonomial VMonomial::generator(int i)
{
    if (i < 1)
        throw std::invalid_argument("VMonomial::generator: index must be >= 1");
    std::vector<int> e(static_cast<std::size_t>(i), 0);
    e.back() = 1;
    return VMonomial(std::move(e));
}

void VMonomial::trim()
{
    while (!exps_.empty() && exps_.back() == 0)
        exps_.pop_back();
}

int VMonomial::exponent(int i) const
{
    if (i < 1 || i > static_cast<int>(exps_.size()))
        return 0;
    return exps_[static_cast<std::size_t>(i - 1)];
}

int VMonomial::degree() const
{
    int d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        d += exps_[i] * generator_degree(static_cast<int>(i) + 1);
    return d;
}

bool VMonomial::divides(const VMonomial& other) const
{
    if (exps_.size() > other.exps_.size())
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

VMonomial VMonomial::quotient_of(const VMonomial& other) const
{
    std::vector<int> e = other.exps_;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] -= exps_[i];
    return VMonomial(std::move(e));
}

std::string VMonomial::str(const char* var) const
{
    if (exps_.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += var + std::to_string(i + 1);
        if (exps_[i] > 1)
            out += "^" + std::to_string(exps_[i]);
    }
    return out;
}

VMonomial operator*(const VMonomial& a, const VMonomial& b)
{
    std::vector<int> e(std::max(a.exps_.size(), b.exps_.size()), 0);
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        e[i] += a.exps_[i];
    for (std::size_t i = 0; i < b.exps_.size(); ++i)
        e[i] += b.exps_[i];
    return VMonomial(std::move(e));
}

int monomial_degree(const VMonomial& m) { return m.degree(); }

bool MonomialOrder::operator()(const VMonomial& a, const VMonomial& b) const
{
    const int da = a.degree();
    const int db = b.degree();
    if (da != db)
        return da > db;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    const std::size_t n = std::max(ea.size(), eb.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int x = i < ea.size() ? ea[i] : 0;
        const int y = i < eb.size() ? eb[i] : 0;
        if (x != y)
            return x > y;
    }
    return false;
}

std::vector<VMonomial> bp_basis(int degree, int k)
{
    std::vector<VMonomial> out;
    if (degree > 0 || degree % 2 != 0 || k < 1)
        return out;
    // Lexicographically descending exponent vectors = MonomialOrder within a degree.
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == k - 1) {
            const int g = -generator_degree(i + 1);
            if (remaining % g == 0) {
                e[static_cast<std::size_t>(i)] = remaining / g;
                out.emplace_back(e);
            }
            return;
        }
        const int g = -generator_degree(i + 1);
        for (int x = remaining / g; x >= 0; --x) {
            e[static_cast<std::size_t>(i)] = x;
            rec(i + 1, remaining - x * g);
        }
        e[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, -degree);
    return out;
}

RatPoly substitute(const RatPoly& p, const std::vector<RatPoly>& images)
{
    // powers[i][e] = images[i]^e, built on demand
    std::vector<std::vector<RatPoly>> powers(images.size());
    auto power = [&](std::size_t i, int e) -> const RatPoly& {
        auto& pw = powers[i];
        if (pw.empty())
            pw.emplace_back(mpq_class(1));
        while (static_cast<int>(pw.size()) <= e)
            pw.push_back(pw.back() * images[i]);
        return pw[static_cast<std::size_t>(e)];
    };
    RatPoly out;
    for (const auto& [m, c] : p.terms()) {
        RatPoly term(c);
        const auto& ex = m.exponents();
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (ex[i] == 0)
                continue;
            if (i >= images.size())
                throw std::out_of_range("substitute: no image for generator " + std::to_string(i + 1));
            term = term * power(i, ex[i]);
        }
        out += term;
    }
    return out;
}

std::optional<BPElem> to_local(const RatPoly& p)
{
    BPElem out;
    for (const auto& [m, c] : p.terms()) {
        auto l = LocalInt2::from_rational(c);
        if (!l)
            return std::nullopt;
        out.add_term(m, *l);
    }
    return out;
}

RatPoly to_rational(const BPElem& p)
{
    RatPoly out;
    for (const auto& [m, c] : p.terms())
        out.add_term(m, c.to_rational());
    return out;
}

}  // namespace cobord
