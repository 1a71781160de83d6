#include "cobord/f2.hpp"

#include <algorithm>
#include <bit>

namespace cobord {

bool BitVec::is_zero() const
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVec::count() const
{
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVec::leading() const
{
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w])
            return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return n_;
}

std::vector<std::size_t> BitVec::support() const
{
    std::vector<std::size_t> s;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t x = words_[w];
        while (x) {
            s.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return s;
}

std::string BitVec::str() const
{
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

bool F2Echelon::insert(const BitVec& v, std::size_t index)
{
    BitVec r = v;
    BitVec combo(track_);
    if (track_)
        combo.set(index);
    for (const auto& row : rows_)
        if (r.get(row.lead)) {
            r ^= row.v;
            if (track_)
                combo ^= row.combo;
        }
    if (r.is_zero()) {
        last_dep_ = combo;
        return false;
    }
    const std::size_t lead = r.leading();
    // keep the basis fully reduced: clear the new pivot from existing rows
    for (auto& row : rows_)
        if (row.v.get(lead)) {
            row.v ^= r;
            if (track_)
                row.combo ^= combo;
        }
    auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const Row& x) { return x.lead < lead; });
    rows_.insert(pos, Row{lead, std::move(r), std::move(combo)});
    return true;
}

BitVec F2Echelon::reduce(const BitVec& v) const
{
    BitVec r = v;
    for (const auto& row : rows_)
        if (r.get(row.lead))
            r ^= row.v;
    return r;
}

std::optional<BitVec> F2Echelon::express(const BitVec& v) const
{
    BitVec r = v;
    BitVec combo(track_);
    for (const auto& row : rows_)
        if (r.get(row.lead)) {
            r ^= row.v;
            combo ^= row.combo;
        }
    if (!r.is_zero())
        return std::nullopt;
    return combo;
}

bool F2Echelon::is_pivot(std::size_t i) const
{
    return std::any_of(rows_.begin(), rows_.end(), [&](const Row& r) { return r.lead == i; });
}

std::vector<std::size_t> F2Echelon::free_indices() const
{
    std::vector<bool> pivot(dim_, false);
    for (const auto& r : rows_)
        pivot[r.lead] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim_; ++i)
        if (!pivot[i])
            out.push_back(i);
    return out;
}

std::size_t f2_rank(const std::vector<BitVec>& vectors)
{
    if (vectors.empty())
        return 0;
    F2Echelon e(vectors.front().size());
    for (const auto& v : vectors)
        e.insert(v);
    return e.rank();
}

std::vector<BitVec> f2_kernel(const std::vector<BitVec>& columns)
{
    std::vector<BitVec> out;
    if (columns.empty())
        return out;
    F2Echelon e(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        if (!e.insert(columns[j], j))
            out.push_back(e.last_dependency());
    return out;
}

std::optional<BitVec> f2_solve(const std::vector<BitVec>& columns, const BitVec& target)
{
    if (columns.empty())
        return target.is_zero() ? std::optional<BitVec>(BitVec(0)) : std::nullopt;
    F2Echelon e(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        e.insert(columns[j], j);
    return e.express(target);
}

}  // namespace cobord
