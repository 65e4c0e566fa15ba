#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "metset/vertex_set.hpp"

namespace metset {

/// Exact non-negative model count.
using BigCount = boost::multiprecision::cpp_int;

/// A 012-row: a subcube of subsets of {1..n}. Position v is 1 (member of
/// every set in the row), 0 (member of none) or 2 (free).
///
/// Stored as two bitplanes; `pending` is the index of the next constraint
/// the engine has to impose on this row.
struct Row012 {
    VertexSet ones;
    VertexSet zeros;
    int n = 0;
    std::uint32_t pending = 0;

    /// The all-2 row of length n (the full power set).
    static Row012 full(int n);
    /// Parses a word over {0,1,2}; throws std::invalid_argument.
    static Row012 parse(std::string_view word);

    [[nodiscard]] VertexSet twos() const { return VertexSet::prefix(n) - ones - zeros; }
    [[nodiscard]] int symbol(int v) const { return ones.contains(v) ? 1 : zeros.contains(v) ? 0 : 2; }
    void set(int v, int symbol);

    [[nodiscard]] int ones_count() const { return ones.count(); }
    [[nodiscard]] int twos_count() const { return n - ones.count() - zeros.count(); }
    [[nodiscard]] bool contains(const VertexSet& x) const { return ones.subset_of(x) && !zeros.intersects(x); }

    [[nodiscard]] std::string to_string() const;

    /// Compares the symbols only; `pending` is bookkeeping.
    friend bool operator==(const Row012& a, const Row012& b) {
        return a.n == b.n && a.ones == b.ones && a.zeros == b.zeros;
    }
};

/// 2^|twos(r)|
BigCount row_count(const Row012& r);

/// Members of r with at most k elements: sum_{j=0}^{k-|ones|} C(|twos|, j).
BigCount count_bounded(const Row012& r, int k);

/// Members of r with exactly k elements: C(|twos|, k-|ones|).
BigCount count_exact(const Row012& r, int k);

/// Some position is 0 in one row and 1 in the other. Throws
/// std::invalid_argument on length mismatch.
bool rows_disjoint(const Row012& a, const Row012& b);

/// Largest expansion expand_row will materialize by default.
inline constexpr std::size_t kDefaultExpansionCap = std::size_t{1} << 22;

/// All member sets, optionally restricted to size <= max_card. Throws
/// std::length_error when 2^|twos| exceeds `cap`.
std::vector<VertexSet> expand_row(const Row012& r, std::optional<int> max_card = std::nullopt,
                                  std::size_t cap = kDefaultExpansionCap);

/// Splits { x in base : x contains some term } into pairwise disjoint rows
/// refining `base`.
///
/// Terms must avoid the zeros of base, must not overlap its ones and must be
/// non-empty. Terms are processed smallest first; a term that contains an
/// earlier term is absorbed. Term i contributes the rows in which all of its
/// positions are 1 and, for every earlier term j, some position of
/// term j \ term i is 0 (chosen by the first-zero cascade).
std::vector<Row012> orthogonalize_terms(const Row012& base, std::span<const VertexSet> terms);

/// The binomial coefficient C(n, k) (0 when k < 0 or k > n).
BigCount binomial(int n, int k);

}  // namespace metset
