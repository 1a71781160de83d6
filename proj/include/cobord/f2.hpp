#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cobord {

/// Fixed-length vector over F_2.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitVec unit(std::size_t n, std::size_t i)
    {
        BitVec v(n);
        v.set(i);
        return v;
    }

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value = true)
    {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o)
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend bool operator==(const BitVec&, const BitVec&) = default;

    bool is_zero() const;
    std::size_t count() const;
    /// Highest set index, or size() if zero.
    std::size_t leading() const;
    std::vector<std::size_t> support() const;
    std::string str() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Incrementally built reduced row echelon basis of a subspace of F_2^dim, keyed by
/// leading (highest) index. Optionally records each basis row as a combination of
/// the inserted vectors.
class F2Echelon {
public:
    explicit F2Echelon(std::size_t dim = 0, std::size_t track = 0) : dim_(dim), track_(track) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Inserts v (the `index`-th tracked input when tracking). Returns false when v is
    /// already in the span; its dependency is then available from last_dependency().
    bool insert(const BitVec& v, std::size_t index = 0);
    const BitVec& last_dependency() const { return last_dep_; }

    /// Fully reduced representative of v modulo the span. Idempotent.
    BitVec reduce(const BitVec& v) const;
    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }
    /// Tracked combination of inserted vectors summing to v, if v is in the span.
    std::optional<BitVec> express(const BitVec& v) const;

    bool is_pivot(std::size_t i) const;
    /// Indices that are not pivots, ascending.
    std::vector<std::size_t> free_indices() const;

private:
    struct Row {
        std::size_t lead;
        BitVec v;
        BitVec combo;
    };
    std::size_t dim_;
    std::size_t track_;
    std::vector<Row> rows_;  // sorted by lead, descending
    BitVec last_dep_;
};

/// Rank of the span of the given vectors.
std::size_t f2_rank(const std::vector<BitVec>& vectors);

/// Basis of { c in F_2^{columns.size()} : sum c_j columns[j] = 0 }.
std::vector<BitVec> f2_kernel(const std::vector<BitVec>& columns);

/// A combination c with sum c_j columns[j] = target.
std::optional<BitVec> f2_solve(const std::vector<BitVec>& columns, const BitVec& target);

}  // namespace cobord
