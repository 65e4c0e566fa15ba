#include "metset/row.hpp"

#include <algorithm>
#include <stdexcept>

namespace metset {

Row012 Row012::full(int n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("row length out of range");
    Row012 r;
    r.n = n;
    return r;
}

Row012 Row012::parse(std::string_view word) {
    Row012 r = full(static_cast<int>(word.size()));
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int v = static_cast<int>(i) + 1;
        switch (word[i]) {
            case '0': r.zeros.insert(v); break;
            case '1': r.ones.insert(v); break;
            case '2': break;
            default: throw std::invalid_argument("012-row contains '" + std::string(1, word[i]) + "'");
        }
    }
    return r;
}

void Row012::set(int v, int sym) {
    ones.erase(v);
    zeros.erase(v);
    if (sym == 1) ones.insert(v);
    else if (sym == 0) zeros.insert(v);
}

std::string Row012::to_string() const {
    std::string out(static_cast<std::size_t>(n), '2');
    ones.for_each([&](int v) { out[v - 1] = '1'; });
    zeros.for_each([&](int v) { out[v - 1] = '0'; });
    return out;
}

BigCount binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigCount c = 1;
    for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return c;
}

BigCount row_count(const Row012& r) {
    BigCount c = 1;
    return c << r.twos_count();
}

BigCount count_bounded(const Row012& r, int k) {
    const int free_slots = k - r.ones_count();
    if (free_slots < 0) return 0;
    const int t = r.twos_count();
    if (free_slots >= t) return row_count(r);
    BigCount total = 0;
    BigCount c = 1;  // C(t, j)
    for (int j = 0; j <= free_slots; ++j) {
        total += c;
        c = c * (t - j) / (j + 1);
    }
    return total;
}

BigCount count_exact(const Row012& r, int k) { return binomial(r.twos_count(), k - r.ones_count()); }

bool rows_disjoint(const Row012& a, const Row012& b) {
    if (a.n != b.n) throw std::invalid_argument("rows of different length");
    return a.ones.intersects(b.zeros) || a.zeros.intersects(b.ones);
}

std::vector<VertexSet> expand_row(const Row012& r, std::optional<int> max_card, std::size_t cap) {
    const std::vector<int> free = r.twos().to_vector();
    if (free.size() >= 63 || (std::size_t{1} << free.size()) > cap)
        throw std::length_error("row " + r.to_string() + " has 2^" + std::to_string(free.size()) +
                                " members, above the expansion cap");
    const int base = r.ones_count();
    std::vector<VertexSet> out;
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (max_card && base + std::popcount(mask) > *max_card) continue;
        VertexSet x = r.ones;
        for (std::size_t i = 0; i < free.size(); ++i)
            if ((mask >> i) & 1) x.insert(free[i]);
        out.push_back(x);
    }
    return out;
}

std::vector<Row012> orthogonalize_terms(const Row012& base, std::span<const VertexSet> terms) {
    const VertexSet universe = VertexSet::prefix(base.n);
    for (const auto& t : terms) {
        if (t.empty()) throw std::invalid_argument("empty term passed to orthogonalize_terms");
        if (!t.subset_of(universe)) throw std::invalid_argument("term reaches beyond the row length");
        if (t.intersects(base.zeros)) throw std::invalid_argument("term " + t.to_string() + " is violated by the row");
        if (t.intersects(base.ones)) throw std::invalid_argument("term " + t.to_string() + " overlaps fixed ones");
    }

    std::vector<VertexSet> sorted(terms.begin(), terms.end());
    std::sort(sorted.begin(), sorted.end(), [](const VertexSet& a, const VertexSet& b) {
        const int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : lex_less(a, b);
    });
    std::vector<VertexSet> kept;
    for (const auto& t : sorted) {
        const bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& k) { return k.subset_of(t); });
        if (!absorbed) kept.push_back(t);
    }

    std::vector<Row012> out;
    std::vector<Row012> partial;
    std::vector<Row012> next;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        Row012 seed = base;
        seed.ones |= kept[i];
        partial.assign(1, seed);
        for (std::size_t j = 0; j < i && !partial.empty(); ++j) {
            next.clear();
            for (const auto& p : partial) {
                const VertexSet rest = kept[j] - p.ones;
                if (rest.intersects(p.zeros)) {
                    next.push_back(p);
                    continue;
                }
                // rest is all free here; x avoids kept[j] iff some position of
                // rest is 0: first-zero cascade.
                Row012 q = p;
                rest.for_each([&](int v) {
                    Row012 son = q;
                    son.zeros.insert(v);
                    next.push_back(son);
                    q.ones.insert(v);
                });
            }
            partial.swap(next);
        }
        out.insert(out.end(), partial.begin(), partial.end());
    }
    return out;
}

}  // namespace metset
