#pragma once

#include <cstdint>
#include <string>

#include "vckm/rational.hpp"

namespace vckm {

// Hardness constants of the reduction, exact in mu. The alpha fractions are
// also kept in their formula form (numerators over the common denominator
// 4*mu + 12, cleared of mu's denominator) for display.
struct HardnessConstants {
    Rational mu;
    Rational alpha_min;  // (2 mu + 8) / (4 mu + 12)
    Rational alpha_max;  // (2 mu + 9) / (4 mu + 12)
    Rational ratio;      // 1 + (alpha_max - alpha_min) / (3 (3 - alpha_min))

    std::int64_t alpha_min_num = 0;
    std::int64_t alpha_max_num = 0;
    std::int64_t alpha_den = 0;

    std::string alpha_min_display() const {
        return std::to_string(alpha_min_num) + "/" + std::to_string(alpha_den);
    }
    std::string alpha_max_display() const {
        return std::to_string(alpha_max_num) + "/" + std::to_string(alpha_den);
    }
};

// Throws std::invalid_argument unless mu > 0.
HardnessConstants constants(const Rational& mu);

// 1 + (alpha_max - alpha_min) / (3 (3 - alpha_min)), which is checked to
// equal 1 + 1/(3 (10 mu + 28)) exactly before returning.
Rational hardness_ratio(const Rational& mu);

}  // namespace vckm
