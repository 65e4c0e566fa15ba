#include "metset/vertex_set.hpp"

namespace metset {

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first_item = true;
    for_each([&](int v) {
        if (!first_item) out += ',';
        out += std::to_string(v);
        first_item = false;
    });
    out += '}';
    return out;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    const VertexSet diff = (a - b) | (b - a);
    const int v = diff.first();
    if (v == 0) return false;
    // Both lists agree below v; the one holding v is smaller unless the other
    // has run out of elements.
    if (a.contains(v)) return b.last() > v;
    return a.last() < v;
}

}  // namespace metset
