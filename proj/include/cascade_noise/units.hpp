#pragma once

#include <cmath>
#include <stdexcept>

namespace cascade_noise {

// Conversions between linear power ratios, decibels, noise factors and noise
// figures.  Everything here is a power quantity, so the dB convention is
// 10*log10 throughout (never 20*log10).

inline double db_to_linear(double db) {
    if (!std::isfinite(db)) {
        throw std::invalid_argument("db_to_linear: value must be finite");
    }
    return std::pow(10.0, db / 10.0);
}

inline double linear_to_db(double ratio) {
    if (!std::isfinite(ratio)) {
        throw std::invalid_argument("linear_to_db: value must be finite");
    }
    if (ratio <= 0.0) {
        throw std::domain_error("linear_to_db: ratio must be > 0");
    }
    return 10.0 * std::log10(ratio);
}

// Noise figure (dB) of a noise factor.  Factors below one cannot arise from
// non-negative added noise and are rejected as non-physical.
inline double factor_to_figure_db(double factor) {
    if (!std::isfinite(factor)) {
        throw std::invalid_argument("factor_to_figure_db: value must be finite");
    }
    if (factor < 1.0) {
        throw std::domain_error("factor_to_figure_db: factor must be >= 1");
    }
    return 10.0 * std::log10(factor);
}

inline double figure_db_to_factor(double figure_db) {
    if (!std::isfinite(figure_db)) {
        throw std::invalid_argument("figure_db_to_factor: value must be finite");
    }
    if (figure_db < 0.0) {
        throw std::domain_error("figure_db_to_factor: figure must be >= 0 dB");
    }
    return std::pow(10.0, figure_db / 10.0);
}

// Precise companions working with the factor's excess F - 1 instead of F.
// A stage buried behind large cumulative gain has an excess far below one
// ulp of 1.0, so any path that materializes the factor as a double flattens
// it to exactly 1 and the stage's added noise is unrecoverable. log1p/expm1
// keep the excess at full relative precision at any magnitude.

inline double excess_to_figure_db(double excess) {
    if (!std::isfinite(excess)) {
        throw std::invalid_argument("excess_to_figure_db: value must be finite");
    }
    if (excess < 0.0) {
        throw std::domain_error("excess_to_figure_db: excess must be >= 0");
    }
    // 10*log10(1 + excess)
    return 10.0 / std::log(10.0) * std::log1p(excess);
}

inline double figure_db_to_excess(double figure_db) {
    if (!std::isfinite(figure_db)) {
        throw std::invalid_argument("figure_db_to_excess: value must be finite");
    }
    if (figure_db < 0.0) {
        throw std::domain_error("figure_db_to_excess: figure must be >= 0 dB");
    }
    // 10^(figure/10) - 1
    return std::expm1(figure_db * std::log(10.0) / 10.0);
}

}  // namespace cascade_noise
