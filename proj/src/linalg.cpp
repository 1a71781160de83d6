#include "cobord/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cobord {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("Matrix: ragged initializer");
        for (long v : r)
            data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = LocalInt2(1);
    return m;
}

std::vector<LocalInt2> Matrix::column(std::size_t j) const
{
    std::vector<LocalInt2> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const LocalInt2& x) { return x.is_zero(); });
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::hconcat(const Matrix& other) const
{
    if (other.rows_ != rows_)
        throw std::invalid_argument("Matrix::hconcat: row counts differ");
    Matrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j)
            m(i, cols_ + j) = other(i, j);
    }
    return m;
}

Matrix Matrix::row_block(std::size_t r0, std::size_t r1) const
{
    Matrix m(r1 - r0, cols_);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(i - r0, j) = (*this)(i, j);
    return m;
}

void Matrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const LocalInt2& s)
{
    if (s.is_zero())
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(src, j).is_zero())
            (*this)(dst, j) += s * (*this)(src, j);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const LocalInt2& s)
{
    if (s.is_zero())
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        if (!(*this)(i, src).is_zero())
            (*this)(i, dst) += s * (*this)(i, src);
}

void Matrix::scale_row(std::size_t r, const LocalInt2& s)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(r, j) *= s;
}

void Matrix::scale_col(std::size_t c, const LocalInt2& s)
{
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, c) *= s;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const LocalInt2& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    c(i, j) += x * b(k, j);
        }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const
{
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out += ", ";
            out += (*this)(i, j).str();
        }
        out += "]\n";
    }
    return out;
}

std::vector<int> SNFResult::exponents() const
{
    std::vector<int> e;
    for (std::size_t i = 0; i < rank; ++i)
        e.push_back(invariants[i].valuation());
    return e;
}

SNFResult snf(const Matrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Matrix d = a;
    SNFResult res;
    res.U = Matrix::identity(m);
    res.V = Matrix::identity(n);
    const std::size_t steps = std::min(m, n);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        // Pivot: an entry of least 2-adic valuation in the trailing block. Every
        // other entry is then a Z_(2)-multiple of it, so elimination stays exact
        // and the divisibility chain comes for free.
        std::size_t pi = m, pj = n;
        int best = LocalInt2::kInfiniteValuation;
        for (std::size_t i = t; i < m && best > 0; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const auto& x = d(i, j);
                if (x.is_zero())
                    continue;
                const int v = x.valuation();
                if (v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    if (v == 0)
                        break;
                }
            }
        if (pi == m)
            break;
        d.swap_rows(t, pi);
        res.U.swap_rows(t, pi);
        d.swap_cols(t, pj);
        res.V.swap_cols(t, pj);

        const LocalInt2 u_inv = d(t, t).unit_part().inverse();
        d.scale_row(t, u_inv);
        res.U.scale_row(t, u_inv);
        const LocalInt2 pivot = d(t, t);

        for (std::size_t i = t + 1; i < m; ++i) {
            if (d(i, t).is_zero())
                continue;
            const LocalInt2 f = -*d(i, t).exact_div(pivot);
            d.add_row_multiple(i, t, f);
            res.U.add_row_multiple(i, t, f);
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (d(t, j).is_zero())
                continue;
            const LocalInt2 f = -*d(t, j).exact_div(pivot);
            d.add_col_multiple(j, t, f);
            res.V.add_col_multiple(j, t, f);
        }
    }
    res.rank = t;
    res.invariants.resize(steps);
    for (std::size_t i = 0; i < steps; ++i)
        res.invariants[i] = d(i, i);
    return res;
}

Matrix kernel_basis(const Matrix& a)
{
    const SNFResult s = snf(a);
    const std::size_t n = a.cols();
    Matrix k(n, n - s.rank);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = s.rank; j < n; ++j)
            k(i, j - s.rank) = s.V(i, j);
    return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve: row counts differ");
    const SNFResult s = snf(a);
    const Matrix ub = s.U * b;
    Matrix y(a.cols(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const LocalInt2& rhs = ub(i, c);
            if (i < s.rank) {
                auto q = rhs.exact_div(s.invariants[i]);
                if (!q)
                    return std::nullopt;
                y(i, c) = *q;
            } else if (!rhs.is_zero()) {
                return std::nullopt;
            }
        }
    }
    return s.V * y;
}

std::string AbelianGroup::str() const
{
    if (is_zero())
        return "0";
    std::string out;
    auto append = [&](const std::string& s) {
        if (!out.empty())
            out += " + ";
        out += s;
    };
    if (free_rank == 1)
        append("Z(2)");
    else if (free_rank > 1)
        append("Z(2)^" + std::to_string(free_rank));
    // group equal exponents: Z/2^3 means three copies of Z/2
    std::size_t i = 0;
    while (i < torsion.size()) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i])
            ++j;
        std::string order = "Z/" + LocalInt2::power_of_two(torsion[i]).str();
        if (j - i > 1)
            order += "^" + std::to_string(j - i);
        append(order);
        i = j;
    }
    return out;
}

AbelianGroup cokernel(const Matrix& a)
{
    AbelianGroup g;
    const SNFResult s = snf(a);
    g.free_rank = static_cast<int>(a.rows() - s.rank);
    for (std::size_t i = 0; i < s.rank; ++i) {
        const int e = s.invariants[i].valuation();
        if (e > 0)
            g.torsion.push_back(e);
    }
    return g;
}

AbelianGroup subquotient(const Matrix& s, const Matrix& b)
{
    // span(S) = Z^k / ker S, and span(B) is the image of C with S C = B, so the
    // quotient is Z^k / (ker S + im C).
    const std::size_t k = s.cols();
    if (k == 0)
        return {};
    Matrix c(k, 0);
    if (b.cols() > 0) {
        auto sol = solve(s, b);
        if (!sol)
            throw std::logic_error("subquotient: denominator not contained in numerator");
        c = *sol;
    }
    return cokernel(kernel_basis(s).hconcat(c));
}

Matrix cycles(const Matrix& rel_p, const Matrix& beta, const Matrix& rel_q)
{
    const std::size_t p = beta.cols();
    if (rel_p.rows() != p || beta.rows() != rel_q.rows())
        throw std::invalid_argument("cycles: shape mismatch");
    const Matrix k = kernel_basis(beta.hconcat(rel_q));
    return k.row_block(0, p);
}

AbelianGroup homology(const Matrix& alpha, const Matrix& rel_p, const Matrix& beta, const Matrix& rel_q)
{
    const std::size_t p = beta.cols();
    if (alpha.rows() != p)
        throw std::invalid_argument("homology: shape mismatch");
    const Matrix z = cycles(rel_p, beta, rel_q);
    return subquotient(z, alpha.hconcat(rel_p));
}

}  // namespace cobord
