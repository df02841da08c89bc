#include "soisim/analytics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "soisim/errors.hpp"

namespace soisim {

namespace {
constexpr int kMaxSeriesTerms = 100000;
constexpr double kHuge = std::numeric_limits<double>::max() / 4.0;
} // namespace

double hyp2f2(double x, double tol) {
    if (!std::isfinite(x)) {
        throw std::domain_error("hyp2f2: argument must be finite");
    }
    double sum = 1.0;
    double term = 1.0;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        term *= x * (n + 1.0) / ((n + 1.5) * (n + 2.0));
        sum += term;
        if (std::abs(term) < tol * std::abs(sum)) {
            return sum;
        }
        if (std::abs(sum) > kHuge || std::abs(term) > kHuge) {
            return x > 0 ? std::numeric_limits<double>::infinity() : sum;
        }
    }
    throw NumericError("hyp2f2: series did not converge within term cap");
}

OuRateFunctions::OuRateFunctions(double theta, double sigma, double series_tol)
    : theta_(theta), sigma_(sigma), series_tol_(series_tol) {
    if (!(theta > 0.0) || !(sigma > 0.0)) {
        throw std::invalid_argument("OuRateFunctions: theta and sigma must be > 0");
    }
    if (!(series_tol > 0.0)) {
        throw std::invalid_argument("OuRateFunctions: series_tol must be > 0");
    }
}

double OuRateFunctions::r1(double v) const {
    if (v < 0.0) {
        throw std::domain_error("r1: v must be >= 0");
    }
    const double s2 = sigma_ * sigma_;
    return v / s2 * hyp2f2(theta_ * v / s2, series_tol_);
}

double OuRateFunctions::r2(double v) const {
    if (v < 0.0) {
        throw std::domain_error("r2: v must be >= 0");
    }
    return -v / (2.0 * theta_) + sigma_ * sigma_ / (2.0 * theta_) * r1(v);
}

double OuRateFunctions::r1_inverse(double y) const {
    if (y < 0.0) {
        throw std::domain_error("r1_inverse: y must be >= 0");
    }
    if (y == 0.0) {
        return 0.0;
    }
    double lo = 0.0;
    double hi = sigma_ * sigma_ * y; // r1(hi) >= y since 2F2 >= 1 on x >= 0
    int guard = 0;
    while (r1(hi) < y) {
        hi *= 2.0;
        if (++guard > 64) {
            throw NumericError("r1_inverse: failed to bracket root");
        }
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (r1(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double OuRateFunctions::drf(double rate) const {
    if (!(rate > 0.0)) {
        throw std::domain_error("drf: rate must be > 0");
    }
    return rate * r2(r1_inverse(1.0 / rate));
}

double wiener_dff(double f, double c, double a_scale) {
    if (!(f > 0.0)) {
        throw std::domain_error("wiener_dff: frequency must be > 0");
    }
    return a_scale * c * c / (6.0 * f);
}

double wiener_uniform_distortion(double f, double c, double a_scale) {
    if (!(f > 0.0)) {
        throw std::domain_error("wiener_uniform_distortion: frequency must be > 0");
    }
    return a_scale * c * c / (2.0 * f);
}

double ou_drf(double theta, double sigma, double rate) {
    return OuRateFunctions(theta, sigma).drf(rate);
}

} // namespace soisim
