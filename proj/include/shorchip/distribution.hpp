#pragma once

#include <cmath>
#include <map>
#include <string>

namespace shorchip {

/// Probabilities over measurement outcome bit strings. Absent keys are zero.
struct OutcomeDistribution {
    std::map<std::string, double> probabilities;

    double total() const {
        double s = 0.0;
        for (const auto& [k, p] : probabilities) s += p;
        return s;
    }

    double probability(const std::string& outcome) const {
        auto it = probabilities.find(outcome);
        return it == probabilities.end() ? 0.0 : it->second;
    }
};

}  // namespace shorchip
