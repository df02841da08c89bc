#pragma once

namespace soisim {

/// 2F2(1,1; 3/2,2; x) by direct series summation with the term recurrence
///   term_{n+1} = term_n * x * (n+1) / ((n+3/2)(n+2)).
/// The series is entire with all-positive terms for x >= 0, so there is no
/// cancellation. Summation stops once |term| < tol * |sum|; returns +inf on
/// overflow instead of failing, which keeps bracketed root finding usable
/// at extreme arguments.
double hyp2f2(double x, double tol = 1e-14);

/// Rate functions for the Ornstein-Uhlenbeck family with parameters
/// (theta, sigma):
///
///   r1(v) =  v/sigma^2 * 2F2(1,1;3/2,2; theta v / sigma^2)
///   r2(v) = -v/(2 theta) + sigma^2/(2 theta) * r1(v)
///
/// r1 maps the squared sampling threshold to the mean inter-sample time and
/// r2 to the mean distortion accumulated per sampling cycle. r1 is strictly
/// increasing and convex on v >= 0, so its inverse is well defined.
class OuRateFunctions {
public:
    OuRateFunctions(double theta, double sigma, double series_tol = 1e-14);

    double theta() const { return theta_; }
    double sigma() const { return sigma_; }

    double r1(double v) const;
    double r2(double v) const;

    /// Unique v >= 0 with r1(v) == y. Bracketed bisection starting from
    /// [0, sigma^2 y] (always valid since 2F2 >= 1 for x >= 0), refined to
    /// relative width 1e-12.
    double r1_inverse(double y) const;

    /// Distortion-rate value at rate > 0:  rate * r2(r1_inverse(1/rate)).
    double drf(double rate) const;

private:
    double theta_;
    double sigma_;
    double series_tol_;
};

/// Optimal-sampling distortion for X_t = c W_{a t} + b t at sample
/// frequency f: a c^2 / (6 f). The drift does not enter.
double wiener_dff(double f, double c, double a_scale);

/// Uniform-sampling baseline for the same process: a c^2 / (2 f)
/// (time average of the linear conditional-variance ramp over one period).
/// Exactly 3x the optimal-sampling value.
double wiener_uniform_distortion(double f, double c, double a_scale);

/// Convenience wrapper: drf of OuRateFunctions(theta, sigma).
double ou_drf(double theta, double sigma, double rate);

} // namespace soisim
