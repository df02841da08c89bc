#include "soisim/process.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "soisim/rng.hpp"

namespace soisim {

ProcessModel ProcessModel::wiener_family(double c, double a, double b) {
    if (!(a > 0.0)) {
        throw std::invalid_argument("wiener_family: time scale a must be > 0");
    }
    if (!std::isfinite(c) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("wiener_family: parameters must be finite");
    }
    ProcessModel m;
    m.kind_ = ProcessKind::WienerFamily;
    m.wf_ = {c, a, b};
    return m;
}

ProcessModel ProcessModel::ornstein_uhlenbeck(double theta, double mu, double sigma) {
    if (!(theta > 0.0) || !(sigma > 0.0)) {
        throw std::invalid_argument("ornstein_uhlenbeck: theta and sigma must be > 0");
    }
    if (!std::isfinite(theta) || !std::isfinite(mu) || !std::isfinite(sigma)) {
        throw std::invalid_argument("ornstein_uhlenbeck: parameters must be finite");
    }
    ProcessModel m;
    m.kind_ = ProcessKind::OrnsteinUhlenbeck;
    m.ou_ = {theta, mu, sigma};
    return m;
}

ProcessModel::StepCoeffs ProcessModel::step_coeffs(double dt) const {
    if (!(dt > 0.0)) {
        throw std::domain_error("step_coeffs: dt must be > 0");
    }
    if (kind_ == ProcessKind::WienerFamily) {
        return {1.0, wf_.b * dt, wf_.c * std::sqrt(wf_.a * dt)};
    }
    const double phi = std::exp(-ou_.theta * dt);
    const double sd = ou_.sigma * std::sqrt((1.0 - phi * phi) / (2.0 * ou_.theta));
    return {phi, ou_.mu * (1.0 - phi), sd};
}

double conditional_mean(const ProcessModel& model, double x_at_tau, double tau, double t) {
    if (t < tau) {
        throw std::domain_error("conditional_mean: t < tau");
    }
    if (model.kind() == ProcessKind::WienerFamily) {
        return x_at_tau + model.wiener().b * (t - tau);
    }
    const auto& p = model.ou();
    return p.mu + (x_at_tau - p.mu) * std::exp(-p.theta * (t - tau));
}

double exact_step(const ProcessModel& model, double x, double dt, double gaussian_draw) {
    if (!(dt > 0.0)) {
        throw std::domain_error("exact_step: dt must be > 0");
    }
    const auto sc = model.step_coeffs(dt);
    return sc.drift + sc.decay * x + sc.noise * gaussian_draw;
}

SamplePath simulate_path(const ProcessModel& model, double horizon, double dt,
                         std::uint64_t seed) {
    if (!(dt > 0.0) || !(horizon >= dt)) {
        throw std::domain_error("simulate_path: need horizon >= dt > 0");
    }
    const auto n_steps = static_cast<std::size_t>(std::llround(horizon / dt));
    const auto sc = model.step_coeffs(dt);
    GaussianRng rng(substream_seed(seed, 0));

    SamplePath path;
    path.dt = dt;
    path.seed = seed;
    path.values.resize(n_steps + 1);
    path.values[0] = 0.0;
    double x = 0.0;
    for (std::size_t k = 0; k < n_steps; ++k) {
        x = sc.drift + sc.decay * x + sc.noise * rng.next();
        path.values[k + 1] = x;
    }
    return path;
}

ResidualSpec residual_spec(const ProcessModel& model, double s, double t, double tau) {
    if (!(tau <= s && s <= t)) {
        throw std::domain_error("residual_spec: need tau <= s <= t");
    }
    if (model.kind() == ProcessKind::WienerFamily) {
        const auto& p = model.wiener();
        return {1.0, p.c * p.c * p.a * (t - s)};
    }
    const auto& p = model.ou();
    const double q = std::exp(-p.theta * (t - s));
    const double var = p.sigma * p.sigma * (1.0 - q * q) / (2.0 * p.theta);
    return {q, var};
}

} // namespace soisim
