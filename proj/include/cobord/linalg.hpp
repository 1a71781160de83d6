#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cobord/local_int.hpp"

namespace cobord {

/// Dense matrix over Z_(2), row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    LocalInt2& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const LocalInt2& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<LocalInt2> column(std::size_t j) const;
    bool is_zero() const;

    Matrix transpose() const;
    /// [this | other]; row counts must agree.
    Matrix hconcat(const Matrix& other) const;
    /// Rows [r0, r1).
    Matrix row_block(std::size_t r0, std::size_t r1) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += s * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const LocalInt2& s);
    /// col[dst] += s * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const LocalInt2& s);
    void scale_row(std::size_t r, const LocalInt2& s);
    void scale_col(std::size_t c, const LocalInt2& s);

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<LocalInt2> data_;
};

/// U * A * V = D with D diagonal, D(i,i) = invariants[i]. Invariants are powers of
/// two (valuation nondecreasing) followed by zeros; U and V are invertible over Z_(2).
struct SNFResult {
    std::vector<LocalInt2> invariants;  // length min(rows, cols)
    std::size_t rank = 0;
    Matrix U;
    Matrix V;

    /// Valuations of the nonzero invariants.
    std::vector<int> exponents() const;
};

SNFResult snf(const Matrix& a);

/// Columns span { x : A x = 0 }.
Matrix kernel_basis(const Matrix& a);

/// Some X with A X = B, or nullopt if a column of B is outside the Z_(2)-span of A.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Finitely generated Z_(2)-module: free part plus cyclic 2-power torsion.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<int> torsion;  // exponents e of Z/2^e summands, ascending

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    /// Number of summands after tensoring with Z/2.
    int mod2_rank() const { return free_rank + static_cast<int>(torsion.size()); }
    /// "0", "Z(2)", "Z/2", "Z(2)^2 + Z/2^2 + Z/4".
    std::string str() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Z_(2)^{rows} / (column span of A).
AbelianGroup cokernel(const Matrix& a);

/// span(S) / span(B), where every column of B lies in span(S). Both have the same
/// row count.
AbelianGroup subquotient(const Matrix& s, const Matrix& b);

/// Homology at P of  Z^a --alpha--> P --beta--> Q  where P = Z^p / im(rel_p) and
/// Q = Z^q / im(rel_q), and alpha, beta are lifts to free modules. beta must
/// respect the relations and beta*alpha must land in im(rel_q).
AbelianGroup homology(const Matrix& alpha, const Matrix& rel_p, const Matrix& beta, const Matrix& rel_q);

/// Generators (as columns of Z^p) of ker(P -> Q) with P, Q, beta as in homology().
Matrix cycles(const Matrix& rel_p, const Matrix& beta, const Matrix& rel_q);

}  // namespace cobord
