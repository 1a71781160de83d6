#include "cobord/steenrod.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "cobord/errors.hpp"

namespace cobord {

std::optional<std::size_t> GeneratorSet::find(const std::string& name) const
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return i;
    return std::nullopt;
}

GenSetPtr make_generators(std::vector<std::string> names, std::vector<int> degrees, std::vector<int> weights)
{
    if (weights.empty())
        weights.assign(names.size(), 0);
    if (degrees.size() != names.size() || weights.size() != names.size())
        throw std::invalid_argument("make_generators: size mismatch");
    for (int d : degrees)
        if (d <= 0)
            throw std::invalid_argument("make_generators: degrees must be positive");
    return std::make_shared<const GeneratorSet>(GeneratorSet{std::move(names), std::move(degrees), std::move(weights)});
}

namespace {

void require_same(const GenSetPtr& a, const GenSetPtr& b)
{
    if (a && b && a != b && !(*a == *b))
        throw std::invalid_argument("MGPoly: generator sets differ");
}

}  // namespace

MGPoly MGPoly::one(GenSetPtr gens)
{
    Exponents e(gens->size(), 0);
    return monomial(std::move(gens), std::move(e));
}

MGPoly MGPoly::generator(GenSetPtr gens, std::size_t i)
{
    Exponents e(gens->size(), 0);
    e.at(i) = 1;
    return monomial(std::move(gens), std::move(e));
}

MGPoly MGPoly::generator(GenSetPtr gens, const std::string& name)
{
    auto i = gens->find(name);
    if (!i)
        throw std::invalid_argument("MGPoly: unknown generator " + name);
    return generator(std::move(gens), *i);
}

MGPoly MGPoly::monomial(GenSetPtr gens, Exponents e)
{
    if (e.size() != gens->size())
        throw std::invalid_argument("MGPoly: exponent vector has the wrong length");
    MGPoly p(std::move(gens));
    p.terms_.insert(std::move(e));
    return p;
}

MGPoly MGPoly::parse(GenSetPtr gens, const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    MGPoly p(gens);
    if (s.empty() || s == "0")
        return p;
    std::stringstream terms(s);
    std::string term;
    while (std::getline(terms, term, '+')) {
        if (term.empty())
            throw std::invalid_argument("MGPoly::parse: empty term in '" + text + "'");
        Exponents e(gens->size(), 0);
        std::stringstream factors(term);
        std::string f;
        while (std::getline(factors, f, '*')) {
            if (f == "1")
                continue;
            std::string name = f;
            int power = 1;
            if (auto caret = f.find('^'); caret != std::string::npos) {
                name = f.substr(0, caret);
                power = std::stoi(f.substr(caret + 1));
            }
            auto i = gens->find(name);
            if (!i || power < 0)
                throw std::invalid_argument("MGPoly::parse: bad factor '" + f + "'");
            e[*i] += power;
        }
        p.toggle(e);
    }
    return p;
}

void MGPoly::toggle(const Exponents& e)
{
    auto [it, inserted] = terms_.insert(e);
    if (!inserted)
        terms_.erase(it);
}

int MGPoly::monomial_degree(const Exponents& e) const
{
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += e[i] * gens_->degrees[i];
    return d;
}

int MGPoly::monomial_weight(const Exponents& e) const
{
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        w += e[i] * gens_->weights[i];
    return w;
}

std::optional<int> MGPoly::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    const int d = monomial_degree(*terms_.begin());
    for (const auto& e : terms_)
        if (monomial_degree(e) != d)
            return std::nullopt;
    return d;
}

bool MGPoly::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

std::set<int> MGPoly::weights() const
{
    std::set<int> w;
    for (const auto& e : terms_)
        w.insert(monomial_weight(e));
    return w;
}

std::string MGPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& e : terms_) {
        if (!out.empty())
            out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += gens_->names[i];
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

MGPoly& MGPoly::operator+=(const MGPoly& o)
{
    require_same(gens_, o.gens_);
    if (!gens_)
        gens_ = o.gens_;
    for (const auto& e : o.terms_)
        toggle(e);
    return *this;
}

MGPoly operator*(const MGPoly& a, const MGPoly& b)
{
    require_same(a.gens_, b.gens_);
    MGPoly r(a.gens_ ? a.gens_ : b.gens_);
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            Exponents e(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                e[i] = x[i] + y[i];
            r.toggle(e);
        }
    return r;
}

bool operator==(const MGPoly& a, const MGPoly& b) { return a.terms_ == b.terms_; }

std::vector<Exponents> monomials_of_degree(const GeneratorSet& g, int d)
{
    std::vector<Exponents> out;
    if (d < 0)
        return out;
    Exponents e(g.size(), 0);
    // lexicographically descending: larger exponents of earlier generators first
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == g.size()) {
            if (remaining == 0)
                out.push_back(e);
            return;
        }
        for (int x = remaining / g.degrees[i]; x >= 0; --x) {
            e[i] = x;
            self(self, i + 1, remaining - x * g.degrees[i]);
        }
        e[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

DegreewiseBasis::DegreewiseBasis(const GeneratorSet& g, int degree, const std::vector<MGPoly>& ideal)
    : degree_(degree), monomials_(monomials_of_degree(g, degree))
{
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        index_.emplace(monomials_[i], i);
    ideal_ = F2Echelon(monomials_.size());
    for (const auto& r : ideal) {
        auto rd = r.degree();
        if (!rd)
            throw std::invalid_argument("DegreewiseBasis: ideal generators must be homogeneous and nonzero");
        if (*rd > degree)
            continue;
        for (const auto& m : monomials_of_degree(g, degree - *rd)) {
            BitVec v(monomials_.size());
            for (const auto& t : r.terms()) {
                Exponents e = t;
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] += m[i];
                v.flip(index_.at(e));
            }
            ideal_.insert(v);
        }
    }
    standard_ = ideal_.free_indices();
    for (std::size_t i : standard_)
        standard_exps_.push_back(monomials_[i]);
}

BitVec DegreewiseBasis::raw_vector(const MGPoly& p) const
{
    BitVec v(monomials_.size());
    for (const auto& e : p.terms()) {
        auto it = index_.find(e);
        if (it == index_.end())
            throw std::invalid_argument("DegreewiseBasis: term of degree other than " + std::to_string(degree_));
        v.flip(it->second);
    }
    return v;
}

BitVec DegreewiseBasis::coordinates(const MGPoly& p) const
{
    const BitVec r = ideal_.reduce(raw_vector(p));
    BitVec c(standard_.size());
    for (std::size_t i = 0; i < standard_.size(); ++i)
        if (r.get(standard_[i]))
            c.set(i);
    return c;
}

MGPoly DegreewiseBasis::from_coordinates(const GenSetPtr& gens, const BitVec& c) const
{
    MGPoly p(gens);
    for (std::size_t i : c.support())
        p.toggle(standard_exps_[i]);
    return p;
}

MGPoly DegreewiseBasis::reduce(const MGPoly& p) const { return from_coordinates(p.generators(), coordinates(p)); }

SqAlgebra::SqAlgebra(std::string name, GenSetPtr gens, std::vector<std::vector<MGPoly>> sq_table,
                     std::vector<MGPoly> ideal, int degree_bound)
    : name_(std::move(name)),
      gens_(std::move(gens)),
      table_(std::move(sq_table)),
      ideal_(std::move(ideal)),
      bound_(degree_bound)
{
    if (table_.size() != gens_->size())
        throw std::invalid_argument("SqAlgebra: one Sq table row per generator");
    for (std::size_t g = 0; g < table_.size(); ++g) {
        const int d = gens_->degrees[g];
        if (static_cast<int>(table_[g].size()) != d + 1)
            throw std::invalid_argument("SqAlgebra: Sq table row must cover 0..deg");
        const MGPoly x = MGPoly::generator(gens_, g);
        if (!(table_[g][0] == x) || !(table_[g][static_cast<std::size_t>(d)] == x * x))
            throw std::invalid_argument("SqAlgebra: Sq^0 g = g and Sq^deg g = g^2 must hold for " +
                                        gens_->names[g]);
        for (int k = 0; k <= d; ++k) {
            auto& e = table_[g][static_cast<std::size_t>(k)];
            require_same(e.generators(), gens_);
            if (!e.is_zero() && e.degree() != d + k)
                throw std::invalid_argument("SqAlgebra: Sq^" + std::to_string(k) + " " + gens_->names[g] +
                                            " has the wrong degree");
        }
    }
    for (int d = 0; d <= bound_; ++d)
        bases_.emplace_back(*gens_, d, ideal_);
}

const DegreewiseBasis& SqAlgebra::basis(int d) const
{
    if (d < 0 || d > bound_)
        throw DegreeBoundError(name_ + ": degree " + std::to_string(d) + " outside 0.." + std::to_string(bound_));
    return bases_[static_cast<std::size_t>(d)];
}

std::vector<std::size_t> SqAlgebra::poincare_series() const
{
    std::vector<std::size_t> out;
    for (const auto& b : bases_)
        out.push_back(b.dimension());
    return out;
}

MGPoly SqAlgebra::reduce(const MGPoly& p) const
{
    std::map<int, MGPoly> parts;
    for (const auto& e : p.terms()) {
        const int d = p.monomial_degree(e);
        auto [it, _] = parts.try_emplace(d, MGPoly(gens_));
        it->second.toggle(e);
    }
    MGPoly out(gens_);
    for (const auto& [d, part] : parts)
        out += basis(d).reduce(part);
    return out;
}

MGPoly SqAlgebra::raw_sq(int k, const Exponents& m) const
{
    // acc[t] = degree-t part of the total square of the factors so far
    std::vector<MGPoly> acc(static_cast<std::size_t>(k + 1), MGPoly(gens_));
    acc[0] = MGPoly::one(gens_);
    for (std::size_t g = 0; g < m.size(); ++g)
        for (int copy = 0; copy < m[g]; ++copy) {
            std::vector<MGPoly> next(static_cast<std::size_t>(k + 1), MGPoly(gens_));
            for (int t = 0; t <= k; ++t) {
                if (acc[static_cast<std::size_t>(t)].is_zero())
                    continue;
                const auto& row = table_[g];
                for (int j = 0; j < static_cast<int>(row.size()) && t + j <= k; ++j)
                    if (!row[static_cast<std::size_t>(j)].is_zero())
                        next[static_cast<std::size_t>(t + j)] +=
                            acc[static_cast<std::size_t>(t)] * row[static_cast<std::size_t>(j)];
            }
            acc = std::move(next);
        }
    return acc[static_cast<std::size_t>(k)];
}

MGPoly SqAlgebra::sq(int k, const MGPoly& f) const
{
    if (k < 0)
        throw std::invalid_argument("sq: negative index");
    if (f.is_zero())
        return MGPoly(gens_);
    auto d = f.degree();
    if (!d)
        throw std::invalid_argument("sq: inhomogeneous argument " + f.str());
    if (*d + k > bound_)
        throw DegreeBoundError(name_ + ": Sq^" + std::to_string(k) + " of a degree-" + std::to_string(*d) +
                               " class exceeds the bound " + std::to_string(bound_));
    MGPoly out(gens_);
    for (const auto& e : f.terms())
        out += raw_sq(k, e);
    return reduce(out);
}

std::vector<BitVec> SqAlgebra::sq_matrix(int k, int d) const
{
    const auto& src = basis(d);
    const auto& dst = basis(d + k);
    std::vector<BitVec> cols;
    for (const auto& e : src.standard())
        cols.push_back(dst.coordinates(sq(k, MGPoly::monomial(gens_, e))));
    return cols;
}

std::optional<std::string> SqAlgebra::ideal_closure_violation() const
{
    for (const auto& r : ideal_) {
        const int d = *r.degree();
        for (int k = 1; d + k <= bound_; ++k) {
            const MGPoly s = sq(k, r);
            if (!s.is_zero())
                return "Sq^" + std::to_string(k) + "(" + r.str() + ") = " + s.str();
        }
    }
    return std::nullopt;
}

SqAlgebra SqAlgebra::with_extra_relation(const MGPoly& r) const
{
    auto ideal = ideal_;
    ideal.push_back(r);
    SqAlgebra a(name_ + "+relation", gens_, table_, ideal, bound_);
    a.named = named;
    return a;
}

SqAlgebra SqAlgebra::with_sq_entry(const std::string& generator, int k, const MGPoly& value) const
{
    auto g = gens_->find(generator);
    if (!g)
        throw std::invalid_argument("with_sq_entry: unknown generator " + generator);
    auto table = table_;
    MGPoly v = value;
    if (v.generators() == nullptr)
        v = MGPoly(gens_);
    table.at(*g).at(static_cast<std::size_t>(k)) = v;
    SqAlgebra a(name_ + "+mutated", gens_, table, ideal_, bound_);
    a.named = named;
    return a;
}

namespace {

int binomial_mod2(int m, int t)
{
    if (t == 0)
        return 1;
    if (m < t || m < 0)
        return 0;
    // Lucas: C(m, t) is odd iff t's bits are a subset of m's
    return (m & t) == t ? 1 : 0;
}

}  // namespace

GenSetPtr stiefel_whitney_generators(int n, bool oriented)
{
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (int i = oriented ? 2 : 1; i <= n; ++i) {
        names.push_back("w" + std::to_string(i));
        degrees.push_back(i);
    }
    return make_generators(names, degrees);
}

MGPoly wu_sq_w(int i, int j, int n, bool oriented)
{
    if (i < 0 || i > j || j > n || j < 1)
        throw std::invalid_argument("wu_sq_w: need 0 <= i <= j <= n");
    const GenSetPtr gens = stiefel_whitney_generators(n, oriented);
    auto w = [&](int idx) -> std::optional<MGPoly> {
        if (idx == 0)
            return MGPoly::one(gens);
        if (idx > n || (oriented && idx == 1))
            return std::nullopt;
        return MGPoly::generator(gens, "w" + std::to_string(idx));
    };
    MGPoly out(gens);
    if (!w(j))
        return out;
    for (int t = 0; t <= i; ++t) {
        if (binomial_mod2(j - i + t - 1, t) == 0)
            continue;
        auto a = w(i - t);
        auto b = w(j + t);
        if (a && b)
            out += *a * *b;
    }
    return out;
}

SqAlgebra bso4_ring(int degree_bound)
{
    const GenSetPtr gens = stiefel_whitney_generators(4, true);
    std::vector<std::vector<MGPoly>> table;
    for (int j = 2; j <= 4; ++j) {
        std::vector<MGPoly> row;
        for (int k = 0; k <= j; ++k)
            row.push_back(wu_sq_w(k, j, 4, true));
        table.push_back(row);
    }
    SqAlgebra a("BSO(4)", gens, table, {}, degree_bound);
    for (int j = 2; j <= 4; ++j)
        a.named["w" + std::to_string(j)] = a.gen("w" + std::to_string(j));
    return a;
}

std::vector<MGPoly> steenrod_closure(const SqAlgebra& base, const std::vector<MGPoly>& seeds)
{
    std::vector<MGPoly> gens = seeds;
    const int bound = base.degree_bound();
    for (;;) {
        const SqAlgebra cur(base.name(), base.generators(), base.sq_table(), gens, bound);
        std::optional<MGPoly> found;
        for (const auto& r : gens) {
            const int d = *r.degree();
            for (int k = 1; d + k <= bound && !found; ++k) {
                MGPoly s = cur.sq(k, r);
                if (!s.is_zero())
                    found = s;
            }
            if (found)
                break;
        }
        if (!found)
            return gens;
        if (*found->degree() == bound)
            throw DegreeBoundError("steenrod_closure: still growing in degree " + std::to_string(bound) +
                                   "; enlarge the bound");
        gens.push_back(*found);
    }
}

namespace {

// Homogeneous polynomials of degree d in F_2[a, b] as bit vectors: bit j is the
// coefficient of a^{d-j} b^j.
BitVec ab_mul(const BitVec& x, const BitVec& y)
{
    BitVec r(x.size() + y.size() - 1);
    for (std::size_t i : x.support())
        for (std::size_t j : y.support())
            r.flip(i + j);
    return r;
}

struct Plane {
    std::vector<int> e;
    std::vector<int> f;
};

// Totally singular planes of Q(v) = v1 v2 + v3 v4 on F_2^4.
std::vector<Plane> singular_planes()
{
    auto q = [](unsigned v) { return ((v & 1) & ((v >> 1) & 1)) ^ (((v >> 2) & 1) & ((v >> 3) & 1)); };
    auto bits = [](unsigned v) { return std::vector<int>{int(v & 1), int((v >> 1) & 1), int((v >> 2) & 1), int((v >> 3) & 1)}; };
    std::vector<Plane> out;
    std::set<std::set<unsigned>> seen;
    for (unsigned e = 1; e < 16; ++e)
        for (unsigned f = e + 1; f < 16; ++f) {
            if ((e ^ f) == 0 || q(e) || q(f) || q(e ^ f))
                continue;
            std::set<unsigned> key{e, f, e ^ f};
            if (!seen.insert(key).second)
                continue;
            out.push_back({bits(e), bits(f)});
        }
    return out;
}

// Restriction of a monomial in x1..x4 (first four exponents) to a plane.
BitVec restrict_monomial(const Exponents& m, const Plane& p)
{
    BitVec acc(1);
    acc.set(0);
    for (std::size_t i = 0; i < 4; ++i) {
        BitVec lin(2);
        if (p.e[i])
            lin.set(0);  // a
        if (p.f[i])
            lin.set(1);  // b
        for (int c = 0; c < m[i]; ++c)
            acc = ab_mul(acc, lin);
    }
    return acc;
}

}  // namespace

DetectionResult detect_lower_classes(const SqAlgebra& x_ring)
{
    const auto planes = singular_planes();
    const GenSetPtr& gens = x_ring.generators();
    DetectionResult res;
    res.planes = planes.size();

    auto solve_degree = [&](int d, const BitVec& target_ab, std::size_t& kernel_dim) {
        const auto monos = monomials_of_degree(*gens, d);
        const std::size_t block = static_cast<std::size_t>(d + 1);
        std::vector<BitVec> cols;
        for (const auto& m : monos) {
            BitVec c(block * planes.size());
            for (std::size_t p = 0; p < planes.size(); ++p) {
                const BitVec r = restrict_monomial(m, planes[p]);
                for (std::size_t j : r.support())
                    c.set(p * block + j);
            }
            cols.push_back(c);
        }
        BitVec target(block * planes.size());
        for (std::size_t p = 0; p < planes.size(); ++p)
            for (std::size_t j : target_ab.support())
                target.set(p * block + j);
        kernel_dim = monos.size() - f2_rank(cols);
        auto sol = f2_solve(cols, target);
        if (!sol)
            throw std::logic_error("detect_lower_classes: no class restricts correctly in degree " +
                                   std::to_string(d));
        MGPoly w(gens);
        for (std::size_t i : sol->support())
            w.toggle(monos[i]);
        return x_ring.reduce(w);
    };

    // prod over nonzero l in the plane's dual of (1 + l) = 1 + (a^2 + ab + b^2) + (a^2 b + a b^2)
    BitVec t2(3), t3(4);
    t2.set(0);
    t2.set(1);
    t2.set(2);
    t3.set(1);
    t3.set(2);
    res.w2 = solve_degree(2, t2, res.kernel_dim2);
    res.w3 = solve_degree(3, t3, res.kernel_dim3);
    return res;
}

namespace {

MGPoly embed(const MGPoly& p, const GenSetPtr& target)
{
    MGPoly out(target);
    for (const auto& e : p.terms()) {
        Exponents f(target->size(), 0);
        std::copy(e.begin(), e.end(), f.begin());
        out.toggle(f);
    }
    return out;
}

}  // namespace

SqAlgebra extraspecial_ring(int degree_bound)
{
    if (degree_bound < 8)
        throw std::invalid_argument("extraspecial_ring: degree bound must be >= 8");
    const GenSetPtr xg = make_generators({"x1", "x2", "x3", "x4"}, {1, 1, 1, 1});
    std::vector<std::vector<MGPoly>> xt;
    for (std::size_t i = 0; i < 4; ++i) {
        const MGPoly x = MGPoly::generator(xg, i);
        xt.push_back({x, x * x});
    }
    const SqAlgebra polynomial("F2[x1..x4]", xg, xt, {}, degree_bound);
    const MGPoly q = polynomial.parse("x1*x2 + x3*x4");
    const auto closure = steenrod_closure(polynomial, {q});
    const SqAlgebra x_ring("H*(E)/J", xg, xt, closure, degree_bound);
    const DetectionResult det = detect_lower_classes(x_ring);

    const GenSetPtr g = make_generators({"x1", "x2", "x3", "x4", "w4"}, {1, 1, 1, 1, 4}, {0, 0, 0, 0, 1});
    std::vector<std::vector<MGPoly>> table;
    for (std::size_t i = 0; i < 4; ++i) {
        const MGPoly x = MGPoly::generator(g, i);
        table.push_back({x, x * x});
    }
    const MGPoly w4 = MGPoly::generator(g, "w4");
    const MGPoly w2 = embed(det.w2, g);
    const MGPoly w3 = embed(det.w3, g);
    // Wu in BSO(4) with w2, w3 restricted: Sq^1 w4 = 0, Sq^2 w4 = w2 w4, Sq^3 w4 = w3 w4
    table.push_back({w4, MGPoly(g), w2 * w4, w3 * w4, w4 * w4});
    std::vector<MGPoly> ideal;
    for (const auto& r : closure)
        ideal.push_back(embed(r, g));
    SqAlgebra a("BG", g, table, ideal, degree_bound);
    a.named["q"] = embed(q, g);
    a.named["w2"] = a.reduce(w2);
    a.named["w3"] = a.reduce(w3);
    a.named["w4"] = w4;
    return a;
}

namespace {

struct SubMonomial {
    int a, b, c;  // exponents of f2, f3, f4
};

std::vector<SubMonomial> sub_monomials(int d)
{
    std::vector<SubMonomial> out;
    for (int c = d / 4; c >= 0; --c)
        for (int b = (d - 4 * c) / 3; b >= 0; --b) {
            const int rest = d - 4 * c - 3 * b;
            if (rest % 2 == 0)
                out.push_back({rest / 2, b, c});
        }
    return out;
}

std::string sub_name(const SubMonomial& m)
{
    std::string s;
    auto add = [&](const char* n, int e) {
        if (e == 0)
            return;
        if (!s.empty())
            s += "*";
        s += n;
        if (e > 1)
            s += "^" + std::to_string(e);
    };
    add("f2", m.a);
    add("f3", m.b);
    add("f4", m.c);
    return s.empty() ? "1" : s;
}

}  // namespace

FreenessReport freeness_check(const SqAlgebra& a, const std::vector<MGPoly>& sub, int degree_bound)
{
    if (sub.size() != 3)
        throw std::invalid_argument("freeness_check: three sub-generators expected");
    for (int i = 0; i < 3; ++i) {
        const MGPoly& f = sub[static_cast<std::size_t>(i)];
        if (!f.is_zero() && f.degree() != i + 2)
            throw std::invalid_argument("freeness_check: sub-generators must have degrees 2, 3, 4");
    }
    if (degree_bound > a.degree_bound())
        throw DegreeBoundError("freeness_check: bound above the algebra's degree bound");

    FreenessReport rep;
    const GenSetPtr& g = a.generators();
    // powers[i][e] = f_i^e reduced
    std::vector<std::vector<MGPoly>> powers(3);
    for (int i = 0; i < 3; ++i) {
        powers[static_cast<std::size_t>(i)].push_back(MGPoly::one(g));
        for (int e = 1; e * (i + 2) <= degree_bound; ++e)
            powers[static_cast<std::size_t>(i)].push_back(
                a.mul(powers[static_cast<std::size_t>(i)].back(), sub[static_cast<std::size_t>(i)]));
    }
    auto sub_value = [&](const SubMonomial& m) {
        return a.mul(a.mul(powers[0][static_cast<std::size_t>(m.a)], powers[1][static_cast<std::size_t>(m.b)]),
                     powers[2][static_cast<std::size_t>(m.c)]);
    };

    struct Gen {
        int degree;
        MGPoly value;
    };
    std::vector<Gen> gens;
    rep.module_generators.assign(static_cast<std::size_t>(degree_bound + 1), 0);
    for (int d = 0; d <= degree_bound; ++d) {
        const DegreewiseBasis& basis = a.basis(d);
        const auto subs = sub_monomials(d);
        rep.algebra_dims.push_back(basis.dimension());

        if (rep.polynomial_subalgebra) {
            F2Echelon e(basis.dimension(), subs.size());
            for (std::size_t i = 0; i < subs.size(); ++i)
                if (!e.insert(basis.coordinates(sub_value(subs[i])), i)) {
                    rep.polynomial_subalgebra = false;
                    std::string dep;
                    for (std::size_t j : e.last_dependency().support())
                        dep += (dep.empty() ? "" : " + ") + sub_name(subs[j]);
                    if (rep.free) {
                        rep.free = false;
                        rep.first_failing_degree = d;
                        rep.dependency = dep + " = 0";
                    }
                    break;
                }
        }

        // products sub-monomial * module generator landing in degree d
        std::vector<std::string> labels;
        std::vector<BitVec> vecs;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const int e = d - gens[gi].degree;
            if (e < 0)
                continue;
            for (const auto& m : sub_monomials(e)) {
                vecs.push_back(basis.coordinates(a.mul(sub_value(m), gens[gi].value)));
                labels.push_back(sub_name(m) + "*(" + gens[gi].value.str() + ")");
            }
        }
        F2Echelon span(basis.dimension(), vecs.size());
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if (!span.insert(vecs[i], i) && rep.free) {
                rep.free = false;
                rep.first_failing_degree = d;
                std::string dep;
                for (std::size_t j : span.last_dependency().support())
                    dep += (dep.empty() ? "" : " + ") + labels[j];
                rep.dependency = dep + " = 0";
            }
        std::size_t predicted = 0;
        for (std::size_t gi = 0; gi < gens.size(); ++gi)
            if (d - gens[gi].degree >= 0)
                predicted += sub_monomials(d - gens[gi].degree).size();
        // greedy completion by standard basis elements
        for (std::size_t i = 0; i < basis.dimension(); ++i) {
            const BitVec u = BitVec::unit(basis.dimension(), i);
            if (span.contains(u))
                continue;
            span.insert(u, 0);
            gens.push_back({d, basis.from_coordinates(g, u)});
            ++rep.module_generators[static_cast<std::size_t>(d)];
            ++predicted;
        }
        rep.predicted_dims.push_back(predicted);
    }
    if (rep.free && rep.algebra_dims != rep.predicted_dims) {
        rep.free = false;
        for (std::size_t d = 0; d < rep.algebra_dims.size(); ++d)
            if (rep.algebra_dims[d] != rep.predicted_dims[d]) {
                rep.first_failing_degree = static_cast<int>(d);
                break;
            }
        rep.dependency = "Poincare series mismatch";
    }
    return rep;
}

TorsionShiftReport torsion_shift_check(const SqAlgebra& a)
{
    TorsionShiftReport rep;
    const GenSetPtr& g = a.generators();
    const DegreewiseBasis& b3 = a.basis(3);
    const DegreewiseBasis& b7 = a.basis(7);

    rep.degree3_weight_zero = true;
    for (const auto& e : b3.standard())
        if (MGPoly::monomial(g, e).weights() != std::set<int>{0})
            rep.degree3_weight_zero = false;

    const MGPoly w4 = a.gen("w4");
    const MGPoly s = a.sq(3, w4);
    rep.sq3w4 = s.str();
    rep.sq3w4_weight_one = !s.is_zero() && s.weights() == std::set<int>{1};

    // columns: Sq^3 Sq^1 of each degree-3 basis element
    std::vector<BitVec> cols;
    for (const auto& e : b3.standard())
        cols.push_back(b7.coordinates(a.sq(3, a.sq(1, MGPoly::monomial(g, e)))));
    const BitVec target = b7.coordinates(s);
    rep.in_image = f2_solve(cols, target).has_value();

    // Gray-code walk over every z; v tracks Sq^3(w4 + Sq^1 z)
    const std::size_t n = cols.size();
    BitVec v = target;
    BitVec z(n);
    rep.all_nonzero = true;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 0; step < total; ++step) {
        if (step > 0) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(step));
            v ^= cols[bit];
            z.flip(bit);
        }
        ++rep.enumerated;
        if (v.is_zero() && rep.all_nonzero) {
            rep.all_nonzero = false;
            rep.witness = "z = " + b3.from_coordinates(g, z).str();
        }
    }
    return rep;
}

MGPoly random_element(const SqAlgebra& a, int d, std::uint64_t& state)
{
    std::mt19937_64 rng(state);
    const auto& b = a.basis(d);
    BitVec c(b.dimension());
    for (std::size_t i = 0; i < b.dimension(); ++i)
        if (rng() & 1U)
            c.set(i);
    state = rng();
    return b.from_coordinates(a.generators(), c);
}

CartanReport cartan_unstability_check(const SqAlgebra& a, int samples, std::uint64_t seed)
{
    CartanReport rep;
    rep.samples = samples;
    const int top = a.degree_bound();
    std::uint64_t state = seed;
    for (int trial = 0; trial < samples; ++trial) {
        const int df = 1 + static_cast<int>(state % 4);
        const int dg = 1 + static_cast<int>((state >> 8) % 4);
        const MGPoly f = random_element(a, df, state);
        const MGPoly g = random_element(a, dg, state);
        const MGPoly fg = a.mul(f, g);
        for (int k = 0; df + dg + k <= top; ++k) {
            MGPoly rhs(a.generators());
            for (int i = 0; i <= k; ++i)
                if (df + i <= top && dg + k - i <= top)
                    rhs += a.mul(a.sq(i, f), a.sq(k - i, g));
            ++rep.cartan_checked;
            if (!rep.cartan_failure && !(a.sq(k, fg) == rhs))
                rep.cartan_failure = "Sq^" + std::to_string(k) + "((" + f.str() + ")(" + g.str() + "))";
        }
        ++rep.unstability_checked;
        if (!rep.unstability_failure && !(a.sq(df, f) == a.mul(f, f)))
            rep.unstability_failure = "Sq^" + std::to_string(df) + "(" + f.str() + ") != square";
        for (int k = df + 1; df + k <= top; ++k) {
            ++rep.unstability_checked;
            if (!rep.unstability_failure && !a.sq(k, f).is_zero())
                rep.unstability_failure = "Sq^" + std::to_string(k) + "(" + f.str() + ") != 0";
        }
    }
    return rep;
}

}  // namespace cobord
