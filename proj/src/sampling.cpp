#include "soisim/sampling.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "soisim/analytics.hpp"

namespace soisim {

namespace {

constexpr double kJumpTol = 1e-9;

// Localizes a drop seen across [lo, hi]: keeps bisecting towards the
// sub-interval with the larger drop. A genuine downward discontinuity keeps
// its full drop at vanishing width; a smooth decrease does not.
bool is_downward_jump(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    double fhi = f(hi);
    for (int it = 0; it < 60 && flo - fhi > kJumpTol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // width at FP resolution
        const double fmid = f(mid);
        if (flo - fmid >= fmid - fhi) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return flo - fhi > kJumpTol;
}

} // namespace

ThresholdPolicy ThresholdPolicy::constant(double a) {
    if (!(a >= 0.0)) {
        throw std::invalid_argument("ThresholdPolicy::constant: threshold must be >= 0");
    }
    ThresholdPolicy p;
    p.kind_ = PolicyKind::ConstantThreshold;
    p.constant_a_ = a;
    return p;
}

ThresholdPolicy ThresholdPolicy::elapsed_time(std::function<double(double)> a_of_elapsed,
                                              double probe_span) {
    if (!a_of_elapsed) {
        throw std::invalid_argument("ThresholdPolicy::elapsed_time: empty function");
    }
    if (!(probe_span > 0.0)) {
        throw std::invalid_argument("ThresholdPolicy::elapsed_time: probe_span must be > 0");
    }
    constexpr int kProbeCells = 512;
    const double h = probe_span / kProbeCells;
    double prev = a_of_elapsed(0.0);
    if (!(prev >= 0.0)) {
        throw std::invalid_argument("ThresholdPolicy::elapsed_time: negative threshold at 0");
    }
    for (int k = 1; k <= kProbeCells; ++k) {
        const double t = k * h;
        const double cur = a_of_elapsed(t);
        if (!(cur >= 0.0)) {
            throw std::invalid_argument("ThresholdPolicy::elapsed_time: negative threshold");
        }
        if (prev - cur > kJumpTol && is_downward_jump(a_of_elapsed, t - h, t)) {
            throw std::invalid_argument(
                "ThresholdPolicy::elapsed_time: downward jump in threshold function");
        }
        prev = cur;
    }
    ThresholdPolicy p;
    p.kind_ = PolicyKind::ElapsedTimeThreshold;
    p.a_of_elapsed_ = std::move(a_of_elapsed);
    return p;
}

ThresholdPolicy ThresholdPolicy::uniform(double period) {
    if (!(period > 0.0)) {
        throw std::invalid_argument("ThresholdPolicy::uniform: period must be > 0");
    }
    ThresholdPolicy p;
    p.kind_ = PolicyKind::UniformSchedule;
    p.period_ = period;
    return p;
}

double wiener_optimal_threshold(double c, double a_scale, double f) {
    if (!(f > 0.0)) {
        throw std::domain_error("wiener_optimal_threshold: frequency must be > 0");
    }
    if (!(a_scale > 0.0)) {
        throw std::domain_error("wiener_optimal_threshold: a_scale must be > 0");
    }
    return std::abs(c) * std::sqrt(a_scale / f);
}

double ou_optimal_threshold(double theta, double sigma, double rate) {
    if (!(rate > 0.0)) {
        throw std::domain_error("ou_optimal_threshold: rate must be > 0");
    }
    return std::sqrt(OuRateFunctions(theta, sigma).r1_inverse(1.0 / rate));
}

StoppingRecord detect_stopping_times(const SamplePath& path, const ProcessModel& model,
                                     const ThresholdPolicy& policy) {
    if (path.values.size() < 2 || !(path.dt > 0.0)) {
        throw std::domain_error("detect_stopping_times: path needs >= 2 grid points");
    }
    StoppingRecord rec;
    const double dt = path.dt;
    const std::size_t n = path.values.size();

    if (policy.kind() == PolicyKind::UniformSchedule) {
        std::size_t last_idx = 0;
        for (std::size_t i = 1;; ++i) {
            const auto idx =
                static_cast<std::size_t>(std::llround(i * policy.period() / dt));
            if (idx >= n) break;
            if (idx <= last_idx) continue; // snapping collision, keep times increasing
            rec.times.push_back(static_cast<double>(idx) * dt);
            rec.signs.push_back(+1);
            rec.sample_values.push_back(path.values[idx]);
            last_idx = idx;
        }
        return rec;
    }

    double last_sample = 0.0; // X_0 = 0 is known on both sides
    double last_tau = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double innovation =
            path.values[k] - conditional_mean(model, last_sample, last_tau, t);
        const double band = policy.threshold_at(t - last_tau);
        if (std::abs(innovation) >= band) {
            assert(std::abs(innovation) >= band);
            rec.times.push_back(t);
            rec.signs.push_back(innovation >= 0.0 ? +1 : -1);
            rec.sample_values.push_back(path.values[k]);
            last_sample = path.values[k];
            last_tau = t;
        }
    }
    return rec;
}

double empirical_frequency(const StoppingRecord& record, double horizon) {
    if (!(horizon > 0.0)) {
        throw std::domain_error("empirical_frequency: horizon must be > 0");
    }
    return static_cast<double>(record.times.size()) / horizon;
}

} // namespace soisim
