#pragma once

#include <cstdint>
#include <vector>

namespace soisim {

enum class ProcessKind { WienerFamily, OrnsteinUhlenbeck };

/// X_t = c * W_{a t} + b t  (scaled, time-changed, drifted Wiener process).
struct WienerFamilyParams {
    double c = 1.0; ///< amplitude scale
    double a = 1.0; ///< time scale, > 0
    double b = 0.0; ///< drift rate
};

/// dX_t = theta (mu - X_t) dt + sigma dW_t.
struct OuParams {
    double theta = 1.0; ///< mean-reversion rate, > 0
    double mu = 0.0;    ///< long-run mean
    double sigma = 1.0; ///< volatility, > 0
};

/// Decomposition of the residual after conditioning on time s:
/// residual(t) = q * residual(s) + noise with Var = r_variance.
struct ResidualSpec {
    double q;          ///< deterministic propagation factor
    double r_variance; ///< variance of the fresh-noise part, >= 0
};

/// One-factor source process. Both supported families are Gaussian and
/// Markov with continuous paths; X_0 = 0 always.
///
/// Construct through the factories, which validate parameter positivity.
class ProcessModel {
public:
    static ProcessModel wiener_family(double c, double a, double b);
    static ProcessModel ornstein_uhlenbeck(double theta, double mu, double sigma);

    ProcessKind kind() const { return kind_; }
    const WienerFamilyParams& wiener() const { return wf_; }
    const OuParams& ou() const { return ou_; }

    /// Per-step transition coefficients at grid step dt:
    ///   x' = drift + decay * x + noise * z,  z ~ N(0,1).
    /// The same affine map (without the noise term) advances a conditional
    /// mean by dt, which is what the streaming estimators rely on.
    struct StepCoeffs {
        double decay;
        double drift;
        double noise;
    };
    StepCoeffs step_coeffs(double dt) const;

private:
    ProcessModel() = default;

    ProcessKind kind_ = ProcessKind::WienerFamily;
    WienerFamilyParams wf_{};
    OuParams ou_{};
};

/// Realized trajectory on the uniform grid 0, dt, ..., dt*(n-1).
struct SamplePath {
    double dt = 0.0;
    std::vector<double> values; ///< values[0] == 0, size >= 2
    std::uint64_t seed = 0;

    double horizon() const { return dt * static_cast<double>(values.size() - 1); }
};

/// E[X_t | X_tau = x_at_tau]. Requires t >= tau >= 0.
double conditional_mean(const ProcessModel& model, double x_at_tau, double tau, double t);

/// Draws X_{t+dt} given X_t = x using the exact transition kernel
/// (no discretization bias). gaussian_draw must be standard normal.
double exact_step(const ProcessModel& model, double x, double dt, double gaussian_draw);

/// Simulates a full path with exact transitions. Deterministic in
/// (model, horizon, dt, seed).
SamplePath simulate_path(const ProcessModel& model, double horizon, double dt,
                         std::uint64_t seed);

/// Residual decomposition parameters for tau <= s <= t.
ResidualSpec residual_spec(const ProcessModel& model, double s, double t, double tau);

} // namespace soisim
