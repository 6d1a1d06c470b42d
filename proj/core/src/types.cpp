#include "triset/types.hpp"

#include <string>

#include "triset/error.hpp"

namespace triset {

void require_same_dimension(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw DimensionError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
}

}  // namespace triset
