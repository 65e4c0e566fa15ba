#pragma once

// Batch bitset kernels over arrays of VertexSet.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The active table is picked once at first use from the CPU
// features; METSET_ISA=scalar in the environment forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "metset/vertex_set.hpp"

namespace metset::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
    Isa isa;
    std::string_view name;
    /// Index of the first set that is a subset of `universe`, or `count`.
    std::size_t (*find_subset)(const VertexSet* sets, std::size_t count, const VertexSet& universe);
    /// Writes indices of sets disjoint from `blocked` to `out`; returns how many.
    std::size_t (*collect_disjoint)(const VertexSet* sets, std::size_t count, const VertexSet& blocked,
                                    std::uint32_t* out);
    /// Union of every set that is a subset of `universe`.
    VertexSet (*union_of_subsets)(const VertexSet* sets, std::size_t count, const VertexSet& universe);
};

/// Table for a specific ISA, or nullptr when the build or the CPU lacks it.
const KernelTable* table_for(Isa isa);

/// The table used by the library.
const KernelTable& active();

inline std::size_t find_subset(std::span<const VertexSet> sets, const VertexSet& universe) {
    return active().find_subset(sets.data(), sets.size(), universe);
}

inline std::size_t collect_disjoint(std::span<const VertexSet> sets, const VertexSet& blocked,
                                    std::span<std::uint32_t> out) {
    return active().collect_disjoint(sets.data(), sets.size(), blocked, out.data());
}

inline VertexSet union_of_subsets(std::span<const VertexSet> sets, const VertexSet& universe) {
    return active().union_of_subsets(sets.data(), sets.size(), universe);
}

namespace detail {
extern const KernelTable kScalarTable;
#if defined(METSET_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
}  // namespace detail

}  // namespace metset::kernels
