#include "debox/objective.hpp"

#include "debox/errors.hpp"

namespace debox {

double Objective::evaluate(const std::vector<double>& point,
                           RngStream& rng) const {
    if (point.size() != domain.dimensionality()) {
        throw DimensionError("objective got " + std::to_string(point.size()) +
                             " coordinates, expected " +
                             std::to_string(domain.dimensionality()));
    }
    switch (kind) {
        case ObjectiveKind::F0:
            return rng.uniform01();
        case ObjectiveKind::Sphere: {
            double s = 0.0;
            for (double x : point) s += (x - 0.5) * (x - 0.5);
            return s;
        }
    }
    throw ArgumentError("unknown objective kind");
}

ObjectiveKind objective_from_name(const std::string& name) {
    if (name == "f0") return ObjectiveKind::F0;
    if (name == "sphere") return ObjectiveKind::Sphere;
    throw ArgumentError("unknown objective '" + name +
                        "' (expected \"f0\" or \"sphere\")");
}

std::string objective_name(ObjectiveKind kind) {
    switch (kind) {
        case ObjectiveKind::F0: return "f0";
        case ObjectiveKind::Sphere: return "sphere";
    }
    throw ArgumentError("unknown objective kind");
}

}  // namespace debox
