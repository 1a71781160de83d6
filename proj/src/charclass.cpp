#include "cobord/charclass.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cobord {

RootPoly RootPoly::constant(long c) { return monomial(c, 0, 0); }

RootPoly RootPoly::linear(long ca, long cb)
{
    RootPoly p;
    p.add(1, 0, ca);
    p.add(0, 1, cb);
    return p;
}

RootPoly RootPoly::monomial(long c, int i, int j)
{
    if (i < 0 || j < 0)
        throw std::invalid_argument("RootPoly: negative exponent");
    RootPoly p;
    p.add(i, j, c);
    return p;
}

RootPoly RootPoly::parse(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    RootPoly p;
    if (s.empty() || s == "0")
        return p;
    std::size_t pos = 0;
    auto fail = [&]() { throw std::invalid_argument("RootPoly::parse: cannot read '" + text + "'"); };
    while (pos < s.size()) {
        long sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        const std::size_t end = s.find_first_of("+-", pos);
        const std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end;
        if (term.empty())
            fail();
        long coeff = sign;
        int i = 0, j = 0;
        std::size_t q = 0;
        while (q <= term.size()) {
            const std::size_t star = term.find('*', q);
            const std::string f = term.substr(q, star == std::string::npos ? std::string::npos : star - q);
            q = star == std::string::npos ? term.size() + 1 : star + 1;
            if (f.empty())
                fail();
            if (std::isdigit(static_cast<unsigned char>(f[0]))) {
                coeff *= std::stol(f);
                continue;
            }
            int power = 1;
            if (f.size() > 1) {
                if (f[1] != '^')
                    fail();
                power = std::stoi(f.substr(2));
            }
            if (f[0] == 'a')
                i += power;
            else if (f[0] == 'b')
                j += power;
            else
                fail();
        }
        p.add(i, j, coeff);
    }
    return p;
}

void RootPoly::add(int i, int j, long c)
{
    if (c == 0)
        return;
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

long RootPoly::coefficient(int i, int j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? 0 : it->second;
}

RootPoly RootPoly::negate_a() const
{
    RootPoly p;
    for (const auto& [e, c] : terms_)
        p.add(e.first, e.second, e.first % 2 ? -c : c);
    return p;
}

RootPoly RootPoly::negate_b() const
{
    RootPoly p;
    for (const auto& [e, c] : terms_)
        p.add(e.first, e.second, e.second % 2 ? -c : c);
    return p;
}

bool RootPoly::weyl_invariant() const { return negate_a() == *this && negate_b() == *this; }

std::string RootPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<std::pair<int, int>, long>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        const int dx = x.first.first + x.first.second;
        const int dy = y.first.first + y.first.second;
        return dx != dy ? dx > dy : x.first.first > y.first.first;
    });
    std::string out;
    for (const auto& [e, c] : sorted) {
        std::string mono;
        auto var = [&](const char* v, int p) {
            if (p == 0)
                return;
            if (!mono.empty())
                mono += "*";
            mono += v;
            if (p > 1)
                mono += "^" + std::to_string(p);
        };
        var("a", e.first);
        var("b", e.second);
        const long mag = c < 0 ? -c : c;
        std::string body;
        if (mono.empty())
            body = std::to_string(mag);
        else
            body = mag == 1 ? mono : std::to_string(mag) + "*" + mono;
        if (out.empty())
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
    }
    return out;
}

RootPoly& RootPoly::operator+=(const RootPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add(e.first, e.second, c);
    return *this;
}

RootPoly& RootPoly::operator-=(const RootPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add(e.first, e.second, -c);
    return *this;
}

RootPoly operator*(const RootPoly& x, const RootPoly& y)
{
    RootPoly p;
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_)
            p.add(ex.first + ey.first, ex.second + ey.second, cx * cy);
    return p;
}

RootPoly operator*(long c, const RootPoly& x) { return RootPoly::constant(c) * x; }

std::string rep_tag_name(RepTag t)
{
    switch (t) {
    case RepTag::A:
        return "A";
    case RepTag::B:
        return "B";
    case RepTag::Trivial:
        return "trivial";
    }
    return "?";
}

namespace {

std::vector<std::string> sorted_strings(const std::vector<RootPoly>& v)
{
    std::vector<std::string> s;
    for (const auto& r : v)
        s.push_back(r.str());
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

bool RepRestriction::sign_closed() const
{
    std::vector<RootPoly> na, nb;
    for (const auto& r : roots) {
        na.push_back(r.negate_a());
        nb.push_back(r.negate_b());
    }
    const auto base = sorted_strings(roots);
    return sorted_strings(na) == base && sorted_strings(nb) == base;
}

RepRestriction restrict_rep(RepTag tag)
{
    RepRestriction r{tag, {}};
    switch (tag) {
    case RepTag::A:
        r.roots = {RootPoly::linear(2, 0), RootPoly{}, RootPoly::linear(-2, 0)};
        break;
    case RepTag::B:
        r.roots = {RootPoly::linear(1, 1), RootPoly::linear(1, -1), RootPoly::linear(-1, 1), RootPoly::linear(-1, -1)};
        break;
    case RepTag::Trivial:
        break;
    }
    return r;
}

std::vector<RootPoly> total_chern_class(const RepRestriction& r)
{
    // coefficients of prod (1 + root)
    std::vector<RootPoly> c{RootPoly::constant(1)};
    for (const auto& root : r.roots) {
        std::vector<RootPoly> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += c[k];
            next[k + 1] += c[k] * root;
        }
        c = std::move(next);
    }
    return c;
}

RootPoly chern_class(const RepRestriction& r, int k)
{
    if (k < 0)
        throw std::invalid_argument("chern_class: negative index");
    const auto c = total_chern_class(r);
    return static_cast<std::size_t>(k) < c.size() ? c[static_cast<std::size_t>(k)] : RootPoly{};
}

EulerIdentityReport euler_identity_check(int epsilon)
{
    if (epsilon != 1 && epsilon != -1)
        throw std::invalid_argument("euler_identity_check: orientation sign must be +1 or -1");
    const RepRestriction a = restrict_rep(RepTag::A);
    const RepRestriction b = restrict_rep(RepTag::B);
    EulerIdentityReport rep;
    rep.epsilon = epsilon;
    rep.c2a = chern_class(a, 2);
    rep.c2b = chern_class(b, 2);
    rep.difference = rep.c2a - rep.c2b;
    rep.chi = epsilon * (RootPoly::linear(1, 1) * RootPoly::linear(1, -1));
    const RootPoly two_chi = 2 * rep.chi;
    rep.identity_holds = two_chi == rep.difference;
    rep.squared_identity_holds = two_chi * two_chi == rep.difference * rep.difference;
    rep.c1_vanishes = chern_class(a, 1).is_zero() && chern_class(b, 1).is_zero();
    rep.weyl_invariant = true;
    for (const RepRestriction* r : {&a, &b})
        for (const auto& c : total_chern_class(*r))
            rep.weyl_invariant = rep.weyl_invariant && c.weyl_invariant();
    rep.weyl_invariant = rep.weyl_invariant && rep.chi.weyl_invariant() && rep.difference.weyl_invariant();
    return rep;
}

std::string verdict_name(ObstructionVerdict v) { return v == ObstructionVerdict::Obstructed ? "OBSTRUCTED" : "UNDECIDED"; }

AHObstruction ah_obstruction(const MGPoly& cls, const SqAlgebra& a)
{
    AHObstruction r{a.sq(3, a.reduce(cls)), ObstructionVerdict::Undecided};
    if (!r.sq3.is_zero())
        r.verdict = ObstructionVerdict::Obstructed;
    return r;
}

}  // namespace cobord
