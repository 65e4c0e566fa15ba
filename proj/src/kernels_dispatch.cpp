#include <cstdlib>
#include <string_view>

#include "metset/kernels.hpp"

namespace metset::kernels {

const KernelTable* table_for(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return &detail::kScalarTable;
        case Isa::avx2:
#if defined(METSET_HAVE_AVX2)
            if (__builtin_cpu_supports("avx2")) return &detail::kAvx2Table;
#endif
            return nullptr;
    }
    return nullptr;
}

const KernelTable& active() {
    static const KernelTable* chosen = [] {
        const char* forced = std::getenv("METSET_ISA");
        if (forced != nullptr && std::string_view(forced) == "scalar") return table_for(Isa::scalar);
        if (const KernelTable* t = table_for(Isa::avx2)) return t;
        return table_for(Isa::scalar);
    }();
    return *chosen;
}

}  // namespace metset::kernels
