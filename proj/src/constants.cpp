#include "vckm/constants.hpp"

#include <stdexcept>

namespace vckm {

HardnessConstants constants(const Rational& mu) {
    if (!(mu > Rational(0))) throw std::invalid_argument("constants: mu must be positive");

    HardnessConstants c;
    c.mu = mu;
    c.alpha_min = (Rational(2) * mu + 8) / (Rational(4) * mu + 12);
    c.alpha_max = (Rational(2) * mu + 9) / (Rational(4) * mu + 12);
    c.ratio = hardness_ratio(mu);

    c.alpha_min_num = 2 * mu.num() + 8 * mu.den();
    c.alpha_max_num = 2 * mu.num() + 9 * mu.den();
    c.alpha_den = 4 * mu.num() + 12 * mu.den();
    return c;
}

Rational hardness_ratio(const Rational& mu) {
    if (!(mu > Rational(0))) throw std::invalid_argument("hardness_ratio: mu must be positive");
    Rational alpha_min = (Rational(2) * mu + 8) / (Rational(4) * mu + 12);
    Rational alpha_max = (Rational(2) * mu + 9) / (Rational(4) * mu + 12);
    Rational ratio = Rational(1) + (alpha_max - alpha_min) / (Rational(3) * (Rational(3) - alpha_min));
    Rational closed = Rational(1) + Rational(1) / (Rational(3) * (Rational(10) * mu + 28));
    if (ratio != closed) throw std::logic_error("hardness_ratio: algebraic identity violated");
    return ratio;
}

}  // namespace vckm
