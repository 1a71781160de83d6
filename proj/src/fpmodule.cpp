#include "cobord/fpmodule.hpp"

#include <map>
#include <stdexcept>

#include "cobord/errors.hpp"

namespace cobord {

FreeMap::FreeMap(std::vector<int> source_degrees, std::vector<int> target_degrees)
    : src_(std::move(source_degrees)),
      tgt_(std::move(target_degrees)),
      entries_(tgt_.size(), std::vector<BPElem>(src_.size()))
{
}

void FreeMap::set_entry(std::size_t t, std::size_t s, BPElem e)
{
    if (!e.is_zero()) {
        auto d = e.degree();
        if (!d || *d != src_[s] - tgt_[t])
            throw std::invalid_argument("FreeMap: entry " + e.str() + " has the wrong degree");
    }
    entries_[t][s] = std::move(e);
}

std::vector<FreeBasisElem> FreeMap::degree_basis(const std::vector<int>& degrees, int d, int k)
{
    std::vector<FreeBasisElem> out;
    for (std::size_t g = 0; g < degrees.size(); ++g) {
        const int md = d - degrees[g];
        require_capacity(md, k, "free module basis");
        for (auto& m : bp_basis(md, k))
            out.push_back({g, std::move(m)});
    }
    return out;
}

std::optional<std::size_t> find_basis_index(const std::vector<FreeBasisElem>& basis, std::size_t generator,
                                            const VMonomial& m)
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].generator == generator && basis[i].monomial == m)
            return i;
    return std::nullopt;
}

Matrix FreeMap::degree_matrix(int d, int k) const
{
    const auto sb = degree_basis(src_, d, k);
    const auto tb = degree_basis(tgt_, d, k);
    std::vector<std::map<VMonomial, std::size_t, MonomialOrder>> index(tgt_.size());
    for (std::size_t i = 0; i < tb.size(); ++i)
        index[tb[i].generator].emplace(tb[i].monomial, i);

    Matrix m(tb.size(), sb.size());
    for (std::size_t j = 0; j < sb.size(); ++j) {
        const auto& [s, mu] = sb[j];
        for (std::size_t t = 0; t < tgt_.size(); ++t)
            for (const auto& [nu, c] : entries_[t][s].terms()) {
                const VMonomial prod = mu * nu;
                auto it = index[t].find(prod);
                if (it == index[t].end())
                    throw CapacityError("FreeMap::degree_matrix: monomial " + prod.str() +
                                        " is outside the configured generators");
                m(it->second, j) += c;
            }
    }
    return m;
}

FPModule::FPModule(std::vector<int> generator_degrees, std::vector<std::string> names)
    : gens_(std::move(generator_degrees)), names_(std::move(names))
{
    if (names_.empty())
        for (std::size_t g = 0; g < gens_.size(); ++g)
            names_.push_back("g" + std::to_string(g));
    if (names_.size() != gens_.size())
        throw std::invalid_argument("FPModule: one name per generator");
}

void FPModule::add_relation(std::vector<BPElem> coeffs)
{
    std::optional<int> degree;
    for (std::size_t g = 0; g < coeffs.size(); ++g) {
        if (coeffs[g].is_zero())
            continue;
        auto d = coeffs[g].degree();
        if (!d)
            throw std::invalid_argument("FPModule: inhomogeneous relation coefficient");
        degree = *d + gens_.at(g);
        break;
    }
    if (!degree)
        throw std::invalid_argument("FPModule: zero relation needs an explicit degree");
    add_relation(std::move(coeffs), *degree);
}

void FPModule::add_relation(std::vector<BPElem> coeffs, int degree)
{
    if (coeffs.size() != gens_.size())
        throw std::invalid_argument("FPModule: relation length differs from generator count");
    for (std::size_t g = 0; g < coeffs.size(); ++g) {
        if (coeffs[g].is_zero())
            continue;
        auto d = coeffs[g].degree();
        if (!d || *d + gens_[g] != degree)
            throw std::invalid_argument("FPModule: relation is not homogeneous of degree " +
                                        std::to_string(degree));
    }
    rels_.push_back({std::move(coeffs), degree});
}

FreeMap FPModule::presentation_map() const
{
    std::vector<int> rd;
    for (const auto& r : rels_)
        rd.push_back(r.degree);
    FreeMap f(rd, gens_);
    for (std::size_t s = 0; s < rels_.size(); ++s)
        for (std::size_t g = 0; g < gens_.size(); ++g)
            f.set_entry(g, s, rels_[s].coeffs[g]);
    return f;
}

std::string FPModule::str() const
{
    std::string out = "generators:";
    for (std::size_t g = 0; g < gens_.size(); ++g)
        out += " " + names_[g] + "[" + std::to_string(gens_[g]) + "]";
    out += "\nrelations:";
    if (rels_.empty())
        out += " none";
    for (const auto& r : rels_) {
        std::string line;
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            if (r.coeffs[g].is_zero())
                continue;
            if (!line.empty())
                line += " + ";
            const std::string c = r.coeffs[g].str();
            line += (r.coeffs[g].size() > 1 ? "(" + c + ")" : c) + "*" + names_[g];
        }
        out += "\n  [" + std::to_string(r.degree) + "] " + line + " = 0";
    }
    return out;
}

FPModule skeleton_presentation(int n, const CSeries& series)
{
    if (n < 0)
        throw std::invalid_argument("skeleton_presentation: n must be >= 0");
    if (series.truncation() < n)
        throw std::invalid_argument("skeleton_presentation: series truncated below c1^" + std::to_string(n));
    std::vector<int> degrees;
    std::vector<std::string> names;
    for (int e = 0; e <= n; ++e) {
        degrees.push_back(2 * e);
        names.push_back(e == 0 ? "1" : (e == 1 ? "c1" : "c1^" + std::to_string(e)));
    }
    FPModule m(degrees, names);
    for (int j = 1; j <= n; ++j) {
        std::vector<BPElem> coeffs(static_cast<std::size_t>(n + 1));
        for (int i = 1; j - 1 + i <= n; ++i)
            coeffs[static_cast<std::size_t>(j - 1 + i)] = series.coefficient(i);
        m.add_relation(std::move(coeffs), 2 * j);
    }
    return m;
}

FPModule skeleton_presentation(int n, int k)
{
    if (n == 0)
        return FPModule({0}, {"1"});
    return skeleton_presentation(n, two_series(n, k));
}

ExactnessReport resolution_exactness_check(const FPModule& m, int lo, int hi, int k)
{
    ExactnessReport rep;
    const FreeMap f = m.presentation_map();
    for (int d = lo; d <= hi; ++d) {
        const Matrix a = f.degree_matrix(d, k);
        const std::size_t r = snf(a).rank;
        rep.rows.push_back({d, a.cols(), r});
        if (r != a.cols() && rep.exact) {
            rep.exact = false;
            rep.first_failing_degree = d;
        }
    }
    return rep;
}

ExactnessReport resolution_exactness_check(int n, int lo, int hi, int k)
{
    return resolution_exactness_check(skeleton_presentation(n, k), lo, hi, k);
}

}  // namespace cobord
