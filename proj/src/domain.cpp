#include "debox/domain.hpp"

#include <cmath>
#include <string>

#include "debox/errors.hpp"

namespace debox {

Domain::Domain(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != upper_.size()) {
        throw ArgumentError("domain bounds differ in length: " +
                            std::to_string(lower_.size()) + " vs " +
                            std::to_string(upper_.size()));
    }
    if (lower_.empty()) {
        throw ArgumentError("domain must have at least one dimension");
    }
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i])) {
            throw ArgumentError("domain bounds must be finite (dimension " +
                                std::to_string(i) + ")");
        }
        if (!(lower_[i] < upper_[i])) {
            throw ArgumentError("domain requires lower < upper (dimension " +
                                std::to_string(i) + ")");
        }
    }
}

Domain Domain::unit(std::size_t n) {
    return Domain(std::vector<double>(n, 0.0), std::vector<double>(n, 1.0));
}

bool Domain::contains(const std::vector<double>& point) const {
    if (point.size() != lower_.size()) {
        throw DimensionError("point has " + std::to_string(point.size()) +
                             " coordinates, domain has " +
                             std::to_string(lower_.size()));
    }
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (!(point[i] >= lower_[i] && point[i] <= upper_[i])) return false;
    }
    return true;
}

}  // namespace debox
