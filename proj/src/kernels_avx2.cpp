// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "metset/kernels.hpp"

namespace metset::kernels {
namespace {

inline __m256i load(const VertexSet& s) {
    return _mm256_load_si256(reinterpret_cast<const __m256i*>(s.words().data()));
}

std::size_t find_subset_avx2(const VertexSet* sets, std::size_t count, const VertexSet& universe) {
    const __m256i u = load(universe);
    for (std::size_t i = 0; i < count; ++i) {
        // testc: (~u & v) == 0
        if (_mm256_testc_si256(u, load(sets[i]))) return i;
    }
    return count;
}

std::size_t collect_disjoint_avx2(const VertexSet* sets, std::size_t count, const VertexSet& blocked,
                                  std::uint32_t* out) {
    const __m256i b = load(blocked);
    std::size_t k = 0;
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const int z0 = _mm256_testz_si256(load(sets[i]), b);
        const int z1 = _mm256_testz_si256(load(sets[i + 1]), b);
        out[k] = static_cast<std::uint32_t>(i);
        k += static_cast<std::size_t>(z0);
        out[k] = static_cast<std::uint32_t>(i + 1);
        k += static_cast<std::size_t>(z1);
    }
    if (i < count && _mm256_testz_si256(load(sets[i]), b)) out[k++] = static_cast<std::uint32_t>(i);
    return k;
}

VertexSet union_of_subsets_avx2(const VertexSet* sets, std::size_t count, const VertexSet& universe) {
    const __m256i u = load(universe);
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    for (std::size_t i = 0; i < count; ++i) {
        const __m256i v = load(sets[i]);
        // all-ones when v fits inside u, else zero
        const __m256i keep = _mm256_set1_epi64x(-static_cast<long long>(_mm256_testc_si256(u, v)));
        acc = _mm256_or_si256(acc, _mm256_and_si256(v, keep));
    }
    VertexSet out;
    _mm256_store_si256(reinterpret_cast<__m256i*>(&out), acc);
    return out;
}

}  // namespace

namespace detail {
const KernelTable kAvx2Table{Isa::avx2, "avx2", &find_subset_avx2, &collect_disjoint_avx2,
                             &union_of_subsets_avx2};
}

}  // namespace metset::kernels
