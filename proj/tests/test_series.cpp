#include "cayt/series.hpp"

#include "cayt/characteristics.hpp"
#include "cayt/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace cayt;

namespace {

std::vector<BigInt> sequence_of(int len, BigInt (*f)(int)) {
    std::vector<BigInt> out;
    for (int n = 0; n < len; ++n) out.push_back(f(n));
    return out;
}

} // namespace

TEST_CASE("fit_recurrence") {
    SUBCASE("arithmetic progression 2n+1: order 2, b_n = 2b_{n-1} - b_{n-2}") {
        auto seq = sequence_of(24, +[](int n) { return BigInt(2 * n + 1); });
        auto fit = fit_recurrence(seq, 4, 10);
        REQUIRE(fit.has_value());
        CHECK(fit->order == 2);
        CHECK(fit->coefficients == std::vector<Rational>{2, -1});
        CHECK(fit->holdout_verified == 10);
    }
    SUBCASE("2*3^n - 1: order 2, b_n = 4b_{n-1} - 3b_{n-2}") {
        auto seq = sequence_of(20, +[](int n) { return 2 * int_pow(3, static_cast<unsigned>(n)) - 1; });
        auto fit = fit_recurrence(seq, 4, 10);
        REQUIRE(fit.has_value());
        CHECK(fit->order == 2);
        CHECK(fit->coefficients == std::vector<Rational>{4, -3});
    }
    SUBCASE("quadratic ball sizes: order 3") {
        auto seq = sequence_of(24, +[](int n) { return BigInt(2 * n * n + 2 * n + 1); });
        auto fit = fit_recurrence(seq, 4, 10);
        REQUIRE(fit.has_value());
        CHECK(fit->order == 3);
        CHECK(fit->coefficients == std::vector<Rational>{3, -3, 1});
    }
    SUBCASE("a perturbed sequence has no low-order recurrence") {
        auto seq = sequence_of(30, +[](int n) { return BigInt(2 * n + 1); });
        RngStream rng(3, 0);
        for (auto& v : seq) v += static_cast<long long>(rng.below(7)) * 31 + 1;
        CHECK_FALSE(fit_recurrence(seq, 5, 8).has_value());
    }
    SUBCASE("fibonacci is recovered at order 2") {
        std::vector<BigInt> seq{0, 1};
        for (int i = 2; i < 30; ++i) seq.push_back(seq[i - 1] + seq[i - 2]);
        auto fit = fit_recurrence(seq, 6, 10);
        REQUIRE(fit.has_value());
        CHECK(fit->order == 2);
        CHECK(fit->coefficients == std::vector<Rational>{1, 1});
    }
    SUBCASE("the fit always reproduces every supplied term") {
        auto t = ClassTTransducer::from_presentation(GraphPresentation::free_group(2));
        auto g = growth(t, 10);
        auto fit = fit_recurrence(g.ball_sizes, 3, 4);
        REQUIRE(fit.has_value());
        CHECK(recurrence_holds(g.ball_sizes, fit->coefficients));
    }
    SUBCASE("holdout disagreement rejects the fit") {
        // prefix is linear, tail breaks the recurrence
        auto seq = sequence_of(26, +[](int n) { return BigInt(2 * n + 1); });
        seq.back() += 1;
        CHECK_FALSE(fit_recurrence(seq, 4, 10).has_value());
    }
    SUBCASE("too little data is an error") {
        std::vector<BigInt> seq{1, 2, 3};
        CHECK_THROWS_AS((void)fit_recurrence(seq, 4, 10), Error);
    }
}

TEST_CASE("fit_power") {
    std::vector<double> xs;
    for (int i = 1; i <= 32; ++i) xs.push_back(static_cast<double>(i * i));

    SUBCASE("exact square root data gives exponent 1/2") {
        std::vector<double> ys;
        for (double x : xs) ys.push_back(std::sqrt(x));
        auto fit = fit_power(xs, ys);
        CHECK(std::abs(fit.exponent - 0.5) < 1e-6);
        CHECK(fit.residual_rms < 1e-9);
    }
    SUBCASE("linear data gives exponent 1") {
        std::vector<double> ys;
        for (double x : xs) ys.push_back(3.7 * x);
        auto fit = fit_power(xs, ys);
        CHECK(std::abs(fit.exponent - 1.0) < 1e-6);
        CHECK(std::abs(std::exp(fit.log_intercept) - 3.7) < 1e-6);
    }
    SUBCASE("window defaults to the upper half") {
        std::vector<double> ys(xs.size(), 1.0);
        auto fit = fit_power(xs, ys);
        CHECK(fit.window_begin == xs.size() / 2);
        CHECK(fit.window_end == xs.size());
    }
    SUBCASE("exact simple-walk drift data fits exponent 1/2") {
        // E|S_{n+1}| = E|S_n| + P(S_n = 0), P via the central binomial recurrence
        std::vector<double> ns, means;
        double mean = 0.0, p0 = 1.0;
        int next_grid = 1;
        for (int n = 0; n <= (1 << 14); ++n) {
            if (n == next_grid) {
                ns.push_back(static_cast<double>(n));
                means.push_back(mean);
                next_grid *= 2;
            }
            mean += p0;
            if (n % 2 == 0) p0 *= static_cast<double>(n + 1) / static_cast<double>(n + 2);
        }
        auto fit = fit_power(ns, means);
        CHECK(fit.exponent > 0.48);
        CHECK(fit.exponent < 0.52);
    }
    SUBCASE("nonpositive values are rejected") {
        std::vector<double> ys(xs.size(), -1.0);
        CHECK_THROWS_AS((void)fit_power(xs, ys), Error);
    }
}

TEST_CASE("classify_growth") {
    SUBCASE("z2 ball sizes are polynomial of degree 2") {
        auto seq = sequence_of(16, +[](int n) { return BigInt(2 * n * n + 2 * n + 1); });
        auto c = classify_growth(seq);
        CHECK(c.kind == GrowthClass::Kind::polynomial);
        CHECK(c.degree == 2);
    }
    SUBCASE("f2 ball sizes are exponential with rate about 3") {
        auto seq = sequence_of(16, +[](int n) { return 2 * int_pow(3, static_cast<unsigned>(n)) - 1; });
        auto c = classify_growth(seq);
        CHECK(c.kind == GrowthClass::Kind::exponential);
        CHECK(std::abs(c.rate - 3.0) < kGrowthRatioTolerance);
    }
    SUBCASE("a constant sequence is polynomial of degree 0") {
        auto seq = sequence_of(10, +[](int) { return BigInt(7); });
        auto c = classify_growth(seq);
        CHECK(c.kind == GrowthClass::Kind::polynomial);
        CHECK(c.degree == 0);
    }
    SUBCASE("computed growth of z^m classifies as polynomial of degree m") {
        for (int m : {1, 2, 3}) {
            auto t = ClassTTransducer::from_presentation(GraphPresentation::zm(m));
            auto g = growth(t, m == 3 ? 9 : 12);
            auto c = classify_growth(g.ball_sizes);
            CHECK(c.kind == GrowthClass::Kind::polynomial);
            CHECK(c.degree == m);
        }
    }
    SUBCASE("computed growth of f2 classifies as exponential") {
        auto t = ClassTTransducer::from_presentation(GraphPresentation::free_group(2));
        auto g = growth(t, 10);
        auto c = classify_growth(g.ball_sizes);
        CHECK(c.kind == GrowthClass::Kind::exponential);
        CHECK(std::abs(c.rate - 3.0) < 2 * kGrowthRatioTolerance);
    }
    SUBCASE("an erratic sequence is inconclusive") {
        std::vector<BigInt> seq{1, 5, 2, 9, 4, 20, 3, 50, 7, 2};
        auto c = classify_growth(seq);
        CHECK(c.kind == GrowthClass::Kind::inconclusive);
    }
}
