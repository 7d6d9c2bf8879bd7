#pragma once

#include <cmath>
#include <random>

#include "plancherel/io.hpp"

namespace testutil {

inline const plancherel::Calibration& calibration() {
    static const plancherel::Calibration cal = plancherel::load_calibration(PLANCHEREL_CALIBRATION_FILE);
    return cal;
}

inline double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

}  // namespace testutil
