#pragma once

#include <functional>
#include <vector>

#include "soisim/process.hpp"

namespace soisim {

enum class PolicyKind { ConstantThreshold, ElapsedTimeThreshold, UniformSchedule };

/// Sampling rule: either a symmetric innovation band (constant width or a
/// non-negative function of the time elapsed since the last sample), or a
/// deterministic uniform schedule.
///
/// For ElapsedTimeThreshold the band width must never jump to a smaller
/// value (it may jump up, or vary continuously); that is the caller's
/// obligation, but the constructor probes the function on a fine grid and
/// rejects downward discontinuities it can localize.
class ThresholdPolicy {
public:
    static ThresholdPolicy constant(double a);
    static ThresholdPolicy elapsed_time(std::function<double(double)> a_of_elapsed,
                                        double probe_span = 16.0);
    static ThresholdPolicy uniform(double period);

    PolicyKind kind() const { return kind_; }
    double constant_a() const { return constant_a_; }
    double period() const { return period_; }

    /// Band half-width after `elapsed` seconds since the last sample.
    /// Not meaningful for UniformSchedule.
    double threshold_at(double elapsed) const {
        return kind_ == PolicyKind::ConstantThreshold ? constant_a_ : a_of_elapsed_(elapsed);
    }

private:
    ThresholdPolicy() = default;

    PolicyKind kind_ = PolicyKind::ConstantThreshold;
    double constant_a_ = 0.0;
    double period_ = 0.0;
    std::function<double(double)> a_of_elapsed_;
};

/// Stopping times detected on a grid path, with the band side that was hit
/// and the true path value at each stop. Times are strictly increasing in
/// (0, horizon]. For UniformSchedule all signs are +1.
struct StoppingRecord {
    std::vector<double> times;
    std::vector<int> signs;
    std::vector<double> sample_values;
};

/// Band half-width that exhausts a sample-frequency budget f for
/// X_t = c W_{a t} + b t:  |c| sqrt(a / f).
double wiener_optimal_threshold(double c, double a_scale, double f);

/// Band half-width that exhausts a bitrate budget for the OU process:
/// sqrt(r1_inverse(1/rate)) with r1 from OuRateFunctions(theta, sigma).
double ou_optimal_threshold(double theta, double sigma, double rate);

/// Scans the grid path and records every first exit of the innovation
/// X_t - E[X_t | X_{tau_i}] from the open band (-a, a); the first grid
/// point at-or-beyond the band counts as the stop. The innovation is
/// measured against the true last sample. UniformSchedule instead emits
/// i*period snapped to the nearest grid point.
StoppingRecord detect_stopping_times(const SamplePath& path, const ProcessModel& model,
                                     const ThresholdPolicy& policy);

/// Sample analogue of the sampling frequency: count / horizon.
double empirical_frequency(const StoppingRecord& record, double horizon);

} // namespace soisim
