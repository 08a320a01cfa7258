#ifndef CAYT_SERIES_HPP
#define CAYT_SERIES_HPP

#include "cayt/numeric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cayt {

// Minimal linear recurrence b_n = sum c_i b_{n-i} over exact rationals.
struct RecurrenceFit {
    int order = 0;
    std::vector<Rational> coefficients;
    std::size_t fitted_prefix = 0;    // terms used by the fit
    std::size_t holdout_verified = 0; // additional terms checked afterwards
};

// Berlekamp-Massey over Q on the prefix (all but `holdout` trailing terms),
// verified on the holdout; nullopt when no recurrence of order <= max_order
// fits. Exact arithmetic: a single failing term rejects the fit.
std::optional<RecurrenceFit> fit_recurrence(const std::vector<BigInt>& seq, int max_order,
                                            std::size_t holdout = 10);

// Check b_n = sum c_i b_{n-i} for all n >= order across the whole sequence.
bool recurrence_holds(const std::vector<BigInt>& seq, const std::vector<Rational>& coefficients);

struct PowerLawFit {
    double exponent = 0.0;
    double log_intercept = 0.0;
    std::size_t window_begin = 0;
    std::size_t window_end = 0;
    double residual_rms = 0.0;
};

// Least squares in log-log coordinates; the default window is the upper half
// of the grid, where transients matter least.
PowerLawFit fit_power(std::span<const double> xs, std::span<const double> ys,
                      std::optional<std::pair<std::size_t, std::size_t>> window = std::nullopt);

struct GrowthClass {
    enum class Kind { polynomial, exponential, inconclusive };
    Kind kind = Kind::inconclusive;
    int degree = 0;    // for polynomial
    double rate = 0.0; // for exponential
};

// Classification thresholds, kept in one place.
inline constexpr double kGrowthRatioTolerance = 0.05; // max spread of tail ratios
inline constexpr std::size_t kGrowthMinTerms = 8;

// Polynomial when iterated finite differences vanish exactly; exponential
// when tail ratios agree within the tolerance and exceed 1 by more than it.
GrowthClass classify_growth(const std::vector<BigInt>& seq);

} // namespace cayt

#endif
