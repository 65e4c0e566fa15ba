#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace metset {

/// Largest vertex count the bitset-based modules (rows, constraints, engine,
/// accmetric, oracle) accept. Graph IO and path enumeration are unbounded.
inline constexpr int kMaxVertices = 256;

/// Fixed-width set of vertices 1..kMaxVertices; vertex v lives in bit v-1.
///
/// One VertexSet is exactly one 256-bit SIMD register, which is what the
/// batch kernels in kernels.hpp rely on.
class alignas(32) VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    /// {1, ..., n}
    static VertexSet prefix(int n) {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    static VertexSet from_vertices(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    /// Bit i of `mask` becomes vertex i+1.
    static VertexSet from_mask(std::uint64_t mask) {
        VertexSet s;
        s.words_[0] = mask;
        return s;
    }

    void insert(int v) { words_[(v - 1) >> 6] |= bit(v); }
    void erase(int v) { words_[(v - 1) >> 6] &= ~bit(v); }
    [[nodiscard]] bool contains(int v) const { return (words_[(v - 1) >> 6] & bit(v)) != 0; }

    [[nodiscard]] int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    [[nodiscard]] bool empty() const {
        return (words_[0] | words_[1] | words_[2] | words_[3]) == 0;
    }
    [[nodiscard]] bool intersects(const VertexSet& o) const {
        std::uint64_t acc = 0;
        for (int w = 0; w < kWords; ++w) acc |= words_[w] & o.words_[w];
        return acc != 0;
    }
    [[nodiscard]] bool subset_of(const VertexSet& o) const {
        std::uint64_t acc = 0;
        for (int w = 0; w < kWords; ++w) acc |= words_[w] & ~o.words_[w];
        return acc == 0;
    }

    /// Smallest member, or 0 when empty.
    [[nodiscard]] int first() const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]) + 1;
        return 0;
    }
    /// Largest member, or 0 when empty.
    [[nodiscard]] int last() const {
        for (int w = kWords - 1; w >= 0; --w)
            if (words_[w] != 0) return w * 64 + 63 - std::countl_zero(words_[w]) + 1;
        return 0;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                f(w * 64 + std::countr_zero(bits) + 1);
                bits &= bits - 1;
            }
        }
    }

    [[nodiscard]] std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    /// "{1,4,6}"
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] const std::array<std::uint64_t, kWords>& words() const { return words_; }
    [[nodiscard]] std::uint64_t word(int w) const { return words_[w]; }

    VertexSet& operator|=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Total order on raw words; use lex_less for vertex-list order.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        for (int w = kWords - 1; w >= 0; --w)
            if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
        return std::strong_ordering::equal;
    }

private:
    static std::uint64_t bit(int v) { return std::uint64_t{1} << ((v - 1) & 63); }

    std::array<std::uint64_t, kWords> words_{};
};

/// Lexicographic order of the sorted vertex lists of a and b.
bool lex_less(const VertexSet& a, const VertexSet& b);

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : s.words()) h = (h ^ w) * 0xff51afd7ed558ccdULL + (h >> 29);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace metset
