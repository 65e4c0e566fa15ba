#include "metset/kernels.hpp"

namespace metset::kernels {
namespace {

bool is_subset(const VertexSet& a, const VertexSet& b) {
    std::uint64_t acc = 0;
    for (int w = 0; w < VertexSet::kWords; ++w) acc |= a.word(w) & ~b.word(w);
    return acc == 0;
}

std::size_t find_subset_scalar(const VertexSet* sets, std::size_t count, const VertexSet& universe) {
    for (std::size_t i = 0; i < count; ++i)
        if (is_subset(sets[i], universe)) return i;
    return count;
}

std::size_t collect_disjoint_scalar(const VertexSet* sets, std::size_t count, const VertexSet& blocked,
                                    std::uint32_t* out) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < count; ++i)
        if (!sets[i].intersects(blocked)) out[k++] = static_cast<std::uint32_t>(i);
    return k;
}

VertexSet union_of_subsets_scalar(const VertexSet* sets, std::size_t count, const VertexSet& universe) {
    VertexSet acc;
    for (std::size_t i = 0; i < count; ++i)
        if (is_subset(sets[i], universe)) acc |= sets[i];
    return acc;
}

}  // namespace

namespace detail {
const KernelTable kScalarTable{Isa::scalar, "scalar", &find_subset_scalar, &collect_disjoint_scalar,
                               &union_of_subsets_scalar};
}

}  // namespace metset::kernels
