#include "cobord/gmod.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cobord/errors.hpp"

namespace cobord {

DegreewiseModule::DegreewiseModule(int lo, int hi) : lo_(lo), hi_(hi)
{
    if (hi < lo)
        throw std::invalid_argument("DegreewiseModule: empty window");
    for (int d = lo; d <= hi; ++d)
        groups_[d] = AbelianGroup{};
}

const AbelianGroup& DegreewiseModule::at(int d) const
{
    if (!in_window(d))
        throw WindowError("degree " + std::to_string(d) + " outside window [" + std::to_string(lo_) + ", " +
                          std::to_string(hi_) + "]");
    return groups_.at(d);
}

void DegreewiseModule::set(int d, AbelianGroup g)
{
    if (!in_window(d))
        throw WindowError("degree " + std::to_string(d) + " outside window");
    std::sort(g.torsion.begin(), g.torsion.end());
    groups_[d] = std::move(g);
}

bool DegreewiseModule::is_zero() const
{
    return std::all_of(groups_.begin(), groups_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

std::string DegreewiseModule::str() const
{
    std::string out;
    for (const auto& [d, g] : groups_)
        if (!g.is_zero())
            out += std::to_string(d) + ": " + g.str() + "\n";
    return out.empty() ? "0\n" : out;
}

DegreewiseModule realize(const FPModule& m, int lo, int hi, int k)
{
    DegreewiseModule out(lo, hi);
    const FreeMap f = m.presentation_map();
    for (int d = lo; d <= hi; ++d)
        out.set(d, cokernel(f.degree_matrix(d, k)));
    return out;
}

namespace {

// Constant-term matrix of the relations in degree d: rows are the generators of
// degree d, columns the relations of degree d.
Matrix constant_part(const FPModule& m, int d)
{
    std::vector<std::size_t> gens, rels;
    for (std::size_t g = 0; g < m.generator_count(); ++g)
        if (m.generator_degrees()[g] == d)
            gens.push_back(g);
    for (std::size_t r = 0; r < m.relations().size(); ++r)
        if (m.relations()[r].degree == d)
            rels.push_back(r);
    Matrix a(gens.size(), rels.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < rels.size(); ++j)
            a(i, j) = m.relations()[rels[j]].coeffs[gens[i]].coefficient(VMonomial{});
    return a;
}

// Degree piece of a module: the free cover's basis in degree x and the relation
// matrix landing there.
struct Piece {
    std::vector<FreeBasisElem> basis;
    std::vector<std::map<VMonomial, std::size_t, MonomialOrder>> index;
    Matrix rel;
};

Piece make_piece(const FPModule& m, const FreeMap& pres, int x, int k)
{
    Piece p;
    p.basis = FreeMap::degree_basis(m.generator_degrees(), x, k);
    p.index.resize(m.generator_count());
    for (std::size_t i = 0; i < p.basis.size(); ++i)
        p.index[p.basis[i].generator].emplace(p.basis[i].monomial, i);
    p.rel = pres.degree_matrix(x, k);
    return p;
}

// Direct sum of pieces laid out one after another.
struct BlockSum {
    std::vector<Piece> pieces;
    std::vector<std::size_t> offset;
    std::size_t dim = 0;
    std::size_t rel_cols = 0;

    void add(Piece p)
    {
        offset.push_back(dim);
        dim += p.basis.size();
        rel_cols += p.rel.cols();
        pieces.push_back(std::move(p));
    }
    Matrix relations() const
    {
        Matrix r(dim, rel_cols);
        std::size_t c0 = 0;
        for (std::size_t b = 0; b < pieces.size(); ++b) {
            const Matrix& rb = pieces[b].rel;
            for (std::size_t i = 0; i < rb.rows(); ++i)
                for (std::size_t j = 0; j < rb.cols(); ++j)
                    r(offset[b] + i, c0 + j) = rb(i, j);
            c0 += rb.cols();
        }
        return r;
    }
    std::size_t locate(std::size_t block, std::size_t generator, const VMonomial& mono) const
    {
        const auto& idx = pieces[block].index[generator];
        auto it = idx.find(mono);
        if (it == idx.end())
            throw CapacityError("block sum: monomial " + mono.str() + " outside the configured generators");
        return offset[block] + it->second;
    }
};

// X (x) F1 -> X (x) F0 in degree d for a BP-matrix phi: F1 -> F0 and a module X.
// Source block s is X in degree d - deg(F1_s), target block t is X in d - deg(F0_t).
struct TensoredMap {
    BlockSum source;
    BlockSum target;
    Matrix beta;
};

TensoredMap tensor_free_map(const FPModule& x, const FreeMap& phi, int d, int k)
{
    const FreeMap xp = x.presentation_map();
    TensoredMap t;
    for (int deg : phi.source_degrees())
        t.source.add(make_piece(x, xp, d - deg, k));
    for (int deg : phi.target_degrees())
        t.target.add(make_piece(x, xp, d - deg, k));
    t.beta = Matrix(t.target.dim, t.source.dim);
    for (std::size_t s = 0; s < phi.source_degrees().size(); ++s) {
        const Piece& ps = t.source.pieces[s];
        for (std::size_t i = 0; i < ps.basis.size(); ++i) {
            const std::size_t col = t.source.offset[s] + i;
            for (std::size_t tt = 0; tt < phi.target_degrees().size(); ++tt)
                for (const auto& [nu, c] : phi.entry(tt, s).terms())
                    t.beta(t.target.locate(tt, ps.basis[i].generator, ps.basis[i].monomial * nu), col) += c;
        }
    }
    return t;
}

std::string window_note(const char* what, int lo, int hi)
{
    return std::string(what) + " consulted in degrees [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

int min_or(const std::vector<int>& v, int fallback)
{
    return v.empty() ? fallback : *std::min_element(v.begin(), v.end());
}
int max_or(const std::vector<int>& v, int fallback)
{
    return v.empty() ? fallback : *std::max_element(v.begin(), v.end());
}

}  // namespace

DegreewiseModule tensor_unit(const FPModule& m, int lo, int hi)
{
    DegreewiseModule out(lo, hi);
    for (int d = lo; d <= hi; ++d)
        out.set(d, cokernel(constant_part(m, d)));
    return out;
}

DegreewiseModule tensor_mod2(const FPModule& m, int lo, int hi)
{
    DegreewiseModule out(lo, hi);
    for (int d = lo; d <= hi; ++d) {
        const Matrix a = constant_part(m, d);
        const SNFResult s = snf(a);
        std::size_t units = 0;
        for (std::size_t i = 0; i < s.rank; ++i)
            if (s.invariants[i].valuation() == 0)
                ++units;
        AbelianGroup g;
        g.torsion.assign(a.rows() - units, 1);
        out.set(d, g);
    }
    return out;
}

FPModule tensor_product(const FPModule& m, const FPModule& n)
{
    const std::size_t a = m.generator_count();
    const std::size_t b = n.generator_count();
    std::vector<int> degrees;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) {
            degrees.push_back(m.generator_degrees()[i] + n.generator_degrees()[j]);
            names.push_back(m.generator_name(i) + "@" + n.generator_name(j));
        }
    FPModule t(degrees, names);
    for (const auto& r : m.relations())
        for (std::size_t j = 0; j < b; ++j) {
            std::vector<BPElem> c(a * b);
            for (std::size_t i = 0; i < a; ++i)
                c[i * b + j] = r.coeffs[i];
            t.add_relation(std::move(c), r.degree + n.generator_degrees()[j]);
        }
    for (const auto& s : n.relations())
        for (std::size_t i = 0; i < a; ++i) {
            std::vector<BPElem> c(a * b);
            for (std::size_t j = 0; j < b; ++j)
                c[i * b + j] = s.coeffs[j];
            t.add_relation(std::move(c), s.degree + m.generator_degrees()[i]);
        }
    return t;
}

DegreewiseModule tor1_via_resolution(const FPModule& m, const FPModule& n, int lo, int hi, int k)
{
    const FreeMap phi = n.presentation_map();
    DegreewiseModule out(lo, hi);
    for (int i = lo; i <= hi; ++i) {
        const int d = i + kTorShift;
        const Matrix pd = phi.degree_matrix(d, k);
        if (snf(pd).rank != pd.cols())
            throw std::logic_error("tor1_via_resolution: presentation of N is not injective in degree " +
                                   std::to_string(d));
        const TensoredMap t = tensor_free_map(m, phi, d, k);
        out.set(i, homology(Matrix(t.source.dim, 0), t.source.relations(), t.beta, t.target.relations()));
    }
    const auto& rd = n.presentation_map().source_degrees();
    out.audit.push_back(window_note("M", lo + kTorShift - max_or(rd, 0), hi + kTorShift - min_or(rd, 0)));
    return out;
}

DegreewiseModule tor1_via_resolution(const FPModule& m, int n, int lo, int hi, int k)
{
    return tor1_via_resolution(m, skeleton_presentation(n, k), lo, hi, k);
}

DegreewiseModule tor1_bruteforce(const FPModule& m, const FPModule& n, int lo, int hi, int k)
{
    const FreeMap pm = m.presentation_map();
    std::vector<int> rel_degrees;
    for (const auto& r : m.relations())
        rel_degrees.push_back(r.degree);
    DegreewiseModule out(lo, hi);
    for (int i = lo; i <= hi; ++i) {
        const int d = i + kTorShift;
        // P1 (x) N -> P0 (x) N with P1 -> P0 the presentation of M
        const TensoredMap t = tensor_free_map(n, pm, d, k);
        // boundaries: syzygy s of M's relations in degree d - |h|, tensored with
        // each generator h of N
        std::vector<std::vector<LocalInt2>> cols;
        for (std::size_t h = 0; h < n.generator_count(); ++h) {
            const int e = d - n.generator_degrees()[h];
            const Matrix ker = kernel_basis(pm.degree_matrix(e, k));
            const auto p1 = FreeMap::degree_basis(rel_degrees, e, k);
            for (std::size_t c = 0; c < ker.cols(); ++c) {
                std::vector<LocalInt2> col(t.source.dim);
                for (std::size_t row = 0; row < p1.size(); ++row) {
                    if (ker(row, c).is_zero())
                        continue;
                    col[t.source.locate(p1[row].generator, h, p1[row].monomial)] += ker(row, c);
                }
                cols.push_back(std::move(col));
            }
        }
        Matrix alpha(t.source.dim, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < t.source.dim; ++r)
                alpha(r, c) = cols[c][r];
        out.set(i, homology(alpha, t.source.relations(), t.beta, t.target.relations()));
    }
    out.audit.push_back(window_note("N", lo + kTorShift - max_or(rel_degrees, 0),
                                    hi + kTorShift - min_or(m.generator_degrees(), 0)));
    return out;
}

KunnethPieces kunneth_pieces(const FPModule& m, const FPModule& n, int lo, int hi, int k)
{
    KunnethPieces p;
    p.tensor = realize(tensor_product(m, n), lo, hi, k);
    p.tor = tor1_via_resolution(m, n, lo, hi, k);
    return p;
}

KunnethPieces kunneth_pieces(const FPModule& m, int n, int lo, int hi, int k)
{
    return kunneth_pieces(m, skeleton_presentation(n, k), lo, hi, k);
}

std::vector<int> tor_tuple_degrees(int i, int n)
{
    std::vector<int> out;
    for (int j = 1; j <= n; ++j)
        out.push_back(i - (2 * j - 1));
    return out;
}

std::vector<std::string> tor_constraint_system(int n, const CSeries& series)
{
    std::vector<std::string> rows;
    for (int m = 1; m <= n; ++m) {
        std::string row;
        // highest-index unknown first, as in 2*x2 + v1*x1
        for (int j = m; j >= 1; --j) {
            const BPElem& a = series.coefficient(m - j + 1);
            if (a.is_zero())
                continue;
            std::string c = a.str();
            if (a.size() > 1)
                c = "(" + c + ")";
            if (!row.empty())
                row += " + ";
            row += (c == "1" ? "" : c + "*") + "x" + std::to_string(j);
        }
        rows.push_back(row + " = 0");
    }
    return rows;
}

FPModule random_fpmodule(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto uniform = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
    const int ngens = uniform(1, 3);
    std::vector<int> degrees;
    for (int g = 0; g < ngens; ++g)
        degrees.push_back(2 * uniform(-2, 3));
    std::sort(degrees.begin(), degrees.end());
    FPModule m(degrees);
    static const long kCoeffs[] = {1, -1, 2, -2, 4, 3, 6};
    const int nrels = uniform(0, 3);
    for (int attempt = 0, made = 0; made < nrels && attempt < 20; ++attempt) {
        const int d = 2 * uniform(degrees.front() / 2 - 3, degrees.back() / 2);
        std::vector<BPElem> coeffs(degrees.size());
        bool nonzero = false;
        for (std::size_t g = 0; g < degrees.size(); ++g) {
            for (const auto& mono : bp_basis(d - degrees[g], 2)) {
                if (uniform(0, 1) == 0)
                    continue;
                coeffs[g].add_term(mono, LocalInt2(kCoeffs[uniform(0, 6)]));
                nonzero = true;
            }
        }
        if (!nonzero)
            continue;
        m.add_relation(std::move(coeffs), d);
        ++made;
    }
    return m;
}

}  // namespace cobord
