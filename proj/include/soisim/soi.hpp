#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "soisim/process.hpp"
#include "soisim/sampling.hpp"

namespace soisim {

struct SoiEvent {
    double time;
    int bit; ///< 1 = upper band edge, 0 = lower band edge
};

/// Ordered 1-bit codeword events; the decoder's entire input besides the
/// model and the (shared) policy.
struct SoiStream {
    std::vector<SoiEvent> events; ///< timestamps strictly increasing in (0, horizon]
    double horizon = 0.0;
};

/// Decoder output on the source grid. `values` is the running estimate,
/// cadlag: at an event's grid point it already uses the newly recovered
/// sample. `recovered_samples` are the decoder-side sample reconstructions,
/// one per event.
struct EstimatePath {
    double dt = 0.0;
    std::vector<double> values;
    std::vector<double> recovered_samples;
};

/// Encoder output when run against a realized path: the bit stream, the
/// true-sample stopping record, and the per-event overshoot
/// |innovation| - band at detection (the grid-induced excess).
struct EncodeResult {
    SoiStream stream;
    StoppingRecord record;
    std::vector<double> overshoots;
};

/// Maps a stopping record to 1-bit codewords: bit = (sign + 1) / 2.
/// Only defined for threshold policies.
SoiStream encode(const StoppingRecord& record, const ThresholdPolicy& policy,
                 double horizon);

/// Full encoder pass over a path. Detection measures the innovation against
/// the decoder-replica estimate (the conditional mean from the last
/// *recovered* sample), which keeps encoder and decoder synchronized and
/// bounds each recovery error by that event's overshoot.
EncodeResult encode_path(const SamplePath& path, const ProcessModel& model,
                         const ThresholdPolicy& policy);

/// Reconstructs samples recursively from X_0 = 0,
///   X_i = (2 bit - 1) * band(t_i - t_{i-1}) + E[X_{t_i} | X_{i-1}],
/// and fills the grid estimate with conditional means from the latest
/// recovered sample. Timestamps must lie on the dt grid.
EstimatePath decode(const SoiStream& stream, const ProcessModel& model,
                    const ThresholdPolicy& policy, double dt);

/// Frequency-constrained variant: the decoder is handed the exact real
/// samples instead of bits, everything else identical.
EstimatePath decode_analog(const StoppingRecord& record, const ProcessModel& model,
                           double dt, double horizon);

/// Codeword length in bits: bit_length(0) = 1, else floor(log2 x) + 1.
int bit_length(std::uint64_t codeword);

/// events / horizon, in bits per second (every SOI codeword is 1 bit).
double empirical_rate(const SoiStream& stream);

/// Time-averaged squared error between path and estimate by left Riemann
/// sum (the estimate jumps at events; left sums never straddle a jump).
double empirical_mse(const SamplePath& path, const EstimatePath& estimate);

/// Text form: header line `# soi-stream v1 T=<horizon> dt=<dt>`, then one
/// `timestamp<TAB>bit` line per event, timestamps with 9 decimal digits.
void write_soi_stream(std::ostream& out, const SoiStream& stream, double dt);

struct SoiStreamFile {
    SoiStream stream;
    double dt = 0.0;
};
SoiStreamFile read_soi_stream(std::istream& in);

} // namespace soisim
