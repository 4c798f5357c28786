#include "weakval/probe.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace weakval {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

GaussianProbe::GaussianProbe(double sigma) : sigma_(sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw ConfigError("GaussianProbe: sigma must be finite and > 0, got " +
                          std::to_string(sigma));
    }
}

double GaussianProbe::amplitude(double z) const {
    const double s2 = sigma_ * sigma_;
    return std::pow(2.0 * kPi * s2, -0.25) * std::exp(-z * z / (4.0 * s2));
}

double GaussianProbe::momentum_intensity(double p) const {
    const double v = var_p();
    return std::exp(-p * p / (2.0 * v)) / std::sqrt(2.0 * kPi * v);
}

double GaussianProbe::overlap(double g) const {
    return std::exp(-g * g / (8.0 * sigma_ * sigma_));
}

double PortWave::norm_sq() const {
    const double cross = 2.0 * (c_thru * std::conj(c_other)).real() * probe.overlap(g);
    return std::norm(c_thru) + std::norm(c_other) + cross;
}

Amplitude PortWave::value(double z) const {
    return c_thru * probe.amplitude(z - g) + c_other * probe.amplitude(z);
}

PortWave port_wave(const MziState& state, const GlassPlacement& glass, const GaussianProbe& probe,
                   Port port) {
    // Second-splitter coefficients of each arm into the chosen port.
    const Amplitude coef_B = (port == Port::D ? Amplitude{kInvSqrt2, 0.0}
                                              : Amplitude{-kInvSqrt2, 0.0}) *
                             state.beta();
    const Amplitude coef_C = Amplitude{kInvSqrt2, 0.0} * state.gamma();
    const Amplitude thru = glass.arm == Arm::B ? coef_B : coef_C;
    const Amplitude other = glass.arm == Arm::B ? coef_C : coef_B;
    return PortWave{thru, other, glass.g, probe};
}

double exact_port_probability(const PortWave& wave) {
    return wave.norm_sq();
}

namespace {

double checked_norm_sq(const PortWave& wave, const char* what) {
    const double n = wave.norm_sq();
    if (n <= kZeroPortCutoff) {
        throw ZeroNormPortError(std::string(what) +
                                ": post-selection probability vanished (norm^2 = " +
                                std::to_string(n) + ")");
    }
    return n;
}

}  // namespace

PositionDensity::PositionDensity(PortWave wave)
    : wave_(std::move(wave)), norm_sq_(checked_norm_sq(wave_, "position_density")) {}

double PositionDensity::operator()(double z) const {
    return std::norm(wave_.value(z)) / norm_sq_;
}

MomentumDensity::MomentumDensity(PortWave wave)
    : wave_(std::move(wave)), norm_sq_(checked_norm_sq(wave_, "momentum_density")) {}

double MomentumDensity::operator()(double p) const {
    // |f~(p)|^2 |c_thru e^{-ipg} + c_other|^2
    const Amplitude phase{std::cos(p * wave_.g), -std::sin(p * wave_.g)};
    const double mod = std::norm(wave_.c_thru * phase + wave_.c_other);
    return wave_.probe.momentum_intensity(p) * mod / norm_sq_;
}

PositionDensity position_density(const PortWave& wave) {
    return PositionDensity(wave);
}

MomentumDensity momentum_density(const PortWave& wave) {
    return MomentumDensity(wave);
}

WeakLimitShift weak_limit_summary(const MziState& state, const GlassPlacement& glass,
                                  const GaussianProbe& probe, Port port) {
    const Amplitude wv = theoretical_weak_value(state, glass.arm, port);
    return WeakLimitShift{glass.g * wv.real(), 2.0 * glass.g * probe.var_p() * wv.imag()};
}

}  // namespace weakval
