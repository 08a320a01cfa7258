#include "cayt/series.hpp"

#include "cayt/errors.hpp"

#include <cmath>

namespace cayt {

namespace {

// Berlekamp-Massey over Q: shortest connection polynomial for the prefix.
std::vector<Rational> berlekamp_massey(std::span<const BigInt> s) {
    std::vector<Rational> c{1}, b{1};
    std::size_t L = 0, m = 1;
    Rational bb = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rational d = Rational(s[n]);
        for (std::size_t i = 1; i <= L; ++i) d += c[i] * Rational(s[n - i]);
        if (d == 0) {
            ++m;
        } else if (2 * L <= n) {
            std::vector<Rational> t = c;
            const Rational coef = d / bb;
            if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
            for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= coef * b[i];
            L = n + 1 - L;
            b = std::move(t);
            bb = d;
            m = 1;
        } else {
            const Rational coef = d / bb;
            if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
            for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= coef * b[i];
            ++m;
        }
    }
    c.resize(L + 1, 0);
    // connection form: s_n + sum_{i>=1} c_i s_{n-i} = 0; flip signs to get
    // s_n = sum a_i s_{n-i}
    std::vector<Rational> out(L);
    for (std::size_t i = 1; i <= L; ++i) out[i - 1] = -c[i];
    return out;
}

} // namespace

bool recurrence_holds(const std::vector<BigInt>& seq, const std::vector<Rational>& coefficients) {
    const std::size_t d = coefficients.size();
    for (std::size_t n = d; n < seq.size(); ++n) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= d; ++i) acc += coefficients[i - 1] * Rational(seq[n - i]);
        if (acc != Rational(seq[n])) return false;
    }
    return true;
}

std::optional<RecurrenceFit> fit_recurrence(const std::vector<BigInt>& seq, int max_order,
                                            std::size_t holdout) {
    if (max_order < 1) raise(Error::Kind::invalid_argument, "max_order must be positive");
    if (seq.size() < 2 * static_cast<std::size_t>(max_order) + holdout)
        raise(Error::Kind::invalid_argument, "sequence too short for the requested order");
    const std::size_t prefix = seq.size() - holdout;
    std::vector<Rational> coeffs = berlekamp_massey(std::span(seq.data(), prefix));
    if (coeffs.size() > static_cast<std::size_t>(max_order)) return std::nullopt;
    if (coeffs.empty()) {
        // all-zero prefix fits order 0; treat only genuinely zero sequences
        for (const auto& v : seq)
            if (v != 0) return std::nullopt;
    }
    if (!recurrence_holds(seq, coeffs)) return std::nullopt; // holdout disagrees
    RecurrenceFit fit;
    fit.order = static_cast<int>(coeffs.size());
    fit.coefficients = std::move(coeffs);
    fit.fitted_prefix = prefix;
    fit.holdout_verified = holdout;
    return fit;
}

PowerLawFit fit_power(std::span<const double> xs, std::span<const double> ys,
                      std::optional<std::pair<std::size_t, std::size_t>> window) {
    if (xs.size() != ys.size() || xs.empty())
        raise(Error::Kind::invalid_argument, "mismatched or empty fit data");
    std::size_t begin = window ? window->first : xs.size() / 2;
    std::size_t end = window ? window->second : xs.size();
    if (begin >= end || end > xs.size())
        raise(Error::Kind::invalid_argument, "fit window out of range");
    if (end - begin < 2) begin = end >= 2 ? end - 2 : 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        if (!(xs[i] > 0) || !(ys[i] > 0))
            raise(Error::Kind::invalid_argument, "power-law fit needs positive data");
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0) raise(Error::Kind::invalid_argument, "degenerate fit window");
    PowerLawFit fit;
    fit.exponent = (n * sxy - sx * sy) / denom;
    fit.log_intercept = (sy - fit.exponent * sx) / n;
    fit.window_begin = begin;
    fit.window_end = end;
    double rss = 0;
    for (std::size_t i = begin; i < end; ++i) {
        const double r = std::log(ys[i]) - (fit.log_intercept + fit.exponent * std::log(xs[i]));
        rss += r * r;
    }
    fit.residual_rms = std::sqrt(rss / n);
    return fit;
}

GrowthClass classify_growth(const std::vector<BigInt>& seq) {
    if (seq.size() < kGrowthMinTerms)
        raise(Error::Kind::invalid_argument, "need at least 8 terms to classify");
    GrowthClass out;

    // exact finite differences: a degree-d polynomial vanishes after d+1
    std::vector<BigInt> diff = seq;
    for (int order = 1; diff.size() >= 4; ++order) {
        std::vector<BigInt> next(diff.size() - 1);
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) next[i] = diff[i + 1] - diff[i];
        bool all_zero = true;
        for (const auto& v : next)
            if (v != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) {
            out.kind = GrowthClass::Kind::polynomial;
            out.degree = order - 1;
            return out;
        }
        diff = std::move(next);
    }

    // ratio test on the tail
    const std::size_t begin = seq.size() / 2;
    std::vector<double> ratios;
    for (std::size_t i = begin; i + 1 < seq.size(); ++i) {
        if (seq[i] <= 0) return out;
        ratios.push_back(static_cast<double>(seq[i + 1]) / static_cast<double>(seq[i]));
    }
    if (ratios.size() < 2) return out;
    double mean = 0;
    for (double r : ratios) mean += r;
    mean /= static_cast<double>(ratios.size());
    for (double r : ratios)
        if (std::abs(r - mean) > kGrowthRatioTolerance) return out;
    if (mean > 1.0 + kGrowthRatioTolerance) {
        out.kind = GrowthClass::Kind::exponential;
        out.rate = mean;
    }
    return out;
}

} // namespace cayt
