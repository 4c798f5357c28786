#pragma once

#include "weakval/mzi.hpp"
#include "weakval/qcore.hpp"

namespace weakval {

/// Port-selection probabilities below this are treated as dark: the
/// post-selected probe wave cannot be normalized into a density.
inline constexpr double kZeroPortCutoff = 1e-15;

/// Minimum-uncertainty Gaussian probe wave function
///   f(z) = (2 pi sigma^2)^(-1/4) exp(-z^2 / (4 sigma^2)),
/// whose intensity |f|^2 has position variance sigma^2 and whose momentum
/// distribution has variance 1/(4 sigma^2) (hbar = 1).
class GaussianProbe {
  public:
    explicit GaussianProbe(double sigma);

    double sigma() const { return sigma_; }
    double var_p() const { return 0.25 / (sigma_ * sigma_); }

    /// Real position-space amplitude f(z).
    double amplitude(double z) const;

    /// Momentum intensity |f~(p)|^2: a normalized Gaussian of variance var_p.
    double momentum_intensity(double p) const;

    /// Displaced-wave overlap integral(f(z-g) f(z) dz) = exp(-g^2/(8 sigma^2)).
    double overlap(double g) const;

  private:
    double sigma_;
};

/// Unnormalized post-selected probe amplitude at one output port,
///   phi(z) = c_thru f(z - g) + c_other f(z),
/// where c_thru multiplies the arm that passed the glass (displaced by g)
/// and c_other the undisplaced arm.
struct PortWave {
    Amplitude c_thru;
    Amplitude c_other;
    double g;
    GaussianProbe probe;

    /// integral(|phi|^2 dz) =
    /// |c_thru|^2 + |c_other|^2 + 2 Re(c_thru conj(c_other)) exp(-g^2/8sigma^2).
    double norm_sq() const;

    /// phi(z) as a complex value.
    Amplitude value(double z) const;
};

/// First-order probe shifts predicted from the theoretical weak value:
/// z_shift = g Re[wv], p_shift = 2 g Var(p) Im[wv].
struct WeakLimitShift {
    double z_shift;
    double p_shift;
};

/// Post-selected probe wave at `port` for the given input state and glass
/// placement. The glass-arm component is displaced by g in position.
PortWave port_wave(const MziState& state, const GlassPlacement& glass, const GaussianProbe& probe,
                   Port port);

/// Exact (all orders in g) probability of detecting at the wave's port.
/// At g = 0 this equals mzi::port_probability; the two ports sum to 1.
double exact_port_probability(const PortWave& wave);

/// Normalized exact position density |phi(z)|^2 / integral(|phi|^2).
class PositionDensity {
  public:
    /// Throws ZeroNormPortError when the port probability is below cutoff.
    explicit PositionDensity(PortWave wave);

    double operator()(double z) const;
    const PortWave& wave() const { return wave_; }
    double norm_sq() const { return norm_sq_; }

  private:
    PortWave wave_;
    double norm_sq_;
};

/// Normalized exact momentum density
///   |f~(p)|^2 |c_thru e^{-ipg} + c_other|^2 / integral(...).
class MomentumDensity {
  public:
    explicit MomentumDensity(PortWave wave);

    double operator()(double p) const;
    const PortWave& wave() const { return wave_; }
    double norm_sq() const { return norm_sq_; }

  private:
    PortWave wave_;
    double norm_sq_;
};

PositionDensity position_density(const PortWave& wave);
MomentumDensity momentum_density(const PortWave& wave);

/// First-order shifts for (glass arm, port). Throws
/// OrthogonalPostSelectionError when the port is dark.
WeakLimitShift weak_limit_summary(const MziState& state, const GlassPlacement& glass,
                                  const GaussianProbe& probe, Port port);

}  // namespace weakval
