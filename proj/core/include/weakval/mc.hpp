#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weakval/mzi.hpp"
#include "weakval/probe.hpp"
#include "weakval/rng.hpp"

#ifndef __SIZEOF_INT128__
#error "weakval requires a compiler with __int128 support"
#endif

namespace weakval {

/// Which probe quantity a run measures. Position and momentum are
/// incompatible measurements, so each photon yields exactly one of them and
/// the two modes are separate experiments.
enum class Observable { Position, Momentum };

std::string to_string(Observable o);
Observable observable_from_string(const std::string& s);

/// One simulated photon: where it was detected and the single probe
/// coordinate that was read out.
struct PhotonRecord {
    std::uint64_t index;
    Port port;
    Observable observable;
    double value;
};

/// Configuration of one experiment (one glass placement, one observable).
struct RunConfig {
    MziState state;
    GlassPlacement glass;
    GaussianProbe probe;
    std::uint64_t n_photons;
    Observable mode;
    std::uint64_t seed;
    unsigned shards;

    RunConfig(MziState state_, GlassPlacement glass_, GaussianProbe probe_,
              std::uint64_t n_photons_, Observable mode_, std::uint64_t seed_,
              unsigned shards_ = 1);

    /// Stream selector separating the four (glass arm, mode) experiments of a
    /// full estimation pipeline into independent substreams of one seed.
    std::uint64_t stream_id() const;
};

/// Identity of the run an accumulator came from, used to reject combining
/// statistics of incompatible experiments.
struct RunKey {
    Amplitude beta;
    Amplitude gamma;
    Arm glass_arm;
    double g;
    double sigma;
    Observable mode;
    std::uint64_t n_photons;
    std::uint64_t seed;
    unsigned shards;

    /// Same physical experiment (state, glass placement, probe), ignoring
    /// photon budget, mode and seed.
    bool same_physics(const RunKey& other) const;
    std::string digest() const;
};

/// Per-(glass arm, port) counts and sums N, Z, P plus the squared sums the
/// error bars need.
///
/// Sums are held as fixed-point integers in probe units (2^-40 of sigma per
/// quantum for values, 2^-30 of sigma^2 for squares; momentum uses the
/// analogous 1/(2 sigma) scale). Integer addition is exact and associative,
/// which makes merged results bit-identical for every shard count and merge
/// order; the quantization (~1e-12 relative) is far below all statistical
/// tolerances.
class ShiftAccumulator {
  public:
    using WideInt = __int128;

    explicit ShiftAccumulator(RunKey key);

    void add(const PhotonRecord& rec);
    void merge(const ShiftAccumulator& other);

    const RunKey& key() const { return key_; }
    Arm glass_arm() const { return key_.glass_arm; }

    std::uint64_t n(Port p) const { return tally(p).n; }
    std::uint64_t n_total() const { return tally(Port::D).n + tally(Port::Dp).n; }
    double z_sum(Port p) const;
    double z_sumsq(Port p) const;
    double p_sum(Port p) const;
    double p_sumsq(Port p) const;

    bool identical(const ShiftAccumulator& other) const;

  private:
    struct Tally {
        std::uint64_t n = 0;
        WideInt value_q = 0;
        WideInt valuesq_q = 0;
    };

    const Tally& tally(Port p) const { return tallies_[p == Port::D ? 0 : 1]; }
    Tally& tally(Port p) { return tallies_[p == Port::D ? 0 : 1]; }
    double value_scale() const;

    RunKey key_;
    Tally tallies_[2];
};

/// Per-port standard errors of the mean: sample sd / sqrt(n) for whichever
/// observable the run recorded (the other is 0).
struct PortStandardError {
    double se_z;
    double se_p;
};

/// Throws InsufficientSamplesError when fewer than 2 photons reached `port`.
PortStandardError standard_errors(const ShiftAccumulator& acc, Port port);

/// Draws values from one port's exact post-selected density. Strategy:
/// rejection sampling under a two-Gaussian mixture envelope, falling back to
/// a 4096-point inverse-CDF grid when the predicted acceptance rate is below
/// 5% (nearly dark ports, where interference hollows out the density).
class ValueSampler {
  public:
    ValueSampler() = default;
    static ValueSampler for_wave(const PortWave& wave, Observable mode);

    double draw(PhotonStream& rng) const;
    bool uses_grid() const { return strategy_ == Strategy::Grid; }
    double acceptance_estimate() const { return acceptance_; }

  private:
    enum class Strategy { RejectPosition, RejectMomentum, Grid, Dark };

    void build_grid(const PortWave& wave, Observable mode);
    double draw_grid(PhotonStream& rng) const;

    Strategy strategy_ = Strategy::Dark;
    double acceptance_ = 0.0;
    // rejection parameters
    double g_ = 0.0;
    double sigma_ = 1.0;
    double p_sd_ = 0.5;
    double c1_sq_ = 0.0;
    double c2_sq_ = 0.0;
    double cross_re_ = 0.0;  // Re(c_thru conj(c_other))
    double cross_im_ = 0.0;  // Im(c_thru conj(c_other))
    double mix_w1_ = 0.0;    // probability of proposing from the displaced Gaussian
    // grid fallback
    std::vector<double> grid_x_;
    std::vector<double> grid_cdf_;
};

/// Samples full photons for a run: port from the exact port probabilities,
/// then the probe value from that port's exact density. Can be shared across
/// threads; every draw is keyed by the photon's global index.
class PhotonSampler {
  public:
    explicit PhotonSampler(const RunConfig& config);

    PhotonRecord sample(std::uint64_t photon_index) const;
    double port_d_probability() const { return p_port_d_; }

  private:
    RunConfig config_;
    std::uint64_t stream_id_;
    double p_port_d_;
    ValueSampler sampler_d_;
    ValueSampler sampler_dp_;
};

/// One-off convenience wrapper; builds a PhotonSampler per call.
PhotonRecord sample_photon(const RunConfig& config, std::uint64_t photon_index);

/// Runs the experiment across `config.shards` worker threads. Deterministic:
/// fixed (seed, config) produces identical accumulators for every shard
/// count, and identical record streams when `records` is non-null (records
/// are emitted in photon-index order).
ShiftAccumulator run_experiment(const RunConfig& config,
                                std::vector<PhotonRecord>* records = nullptr);

/// Two independent experiments with the glass in B and then in C (separate
/// substreams of the same seed), same photon budget each.
std::pair<ShiftAccumulator, ShiftAccumulator> paired_runs(const MziState& state,
                                                          const GaussianProbe& probe, double g,
                                                          std::uint64_t n_photons,
                                                          std::uint64_t seed, Observable mode,
                                                          unsigned shards = 1);

/// CSV record stream: header `index,port,observable,value`, one row per
/// photon, ordered by index. Values are written with round-trip precision.
void write_records_csv(std::ostream& os, const std::vector<PhotonRecord>& records);

}  // namespace weakval
