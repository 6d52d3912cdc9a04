#include "midealkit/complement.hpp"

namespace midealkit {

bool ring_is_regular(const StructuredRing& r) {
    for (const auto& c : r.components)
        if (c.exponent != 1) return false;
    return true;
}

bool ring_is_regular(const TableRing& r) {
    for (int a = 0; a < r.size(); ++a) {
        bool ok = false;
        for (int x = 0; x < r.size() && !ok; ++x) ok = r.mul(r.mul(a, x), a) == a;
        if (!ok) return false;
    }
    return true;
}

}  // namespace midealkit
