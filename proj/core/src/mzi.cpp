#include "weakval/mzi.hpp"

#include <cmath>

namespace weakval {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

std::string to_string(PathLabel p) {
    switch (p) {
        case PathLabel::A: return "A";
        case PathLabel::Ap: return "A'";
        case PathLabel::B: return "B";
        case PathLabel::C: return "C";
        case PathLabel::D: return "D";
        case PathLabel::Dp: return "D'";
    }
    return "?";
}

std::string to_string(Arm a) {
    return a == Arm::B ? "B" : "C";
}

std::string to_string(Port p) {
    return p == Port::D ? "D" : "D'";
}

Arm arm_from_string(const std::string& s) {
    if (s == "B") return Arm::B;
    if (s == "C") return Arm::C;
    throw ConfigError("arm_from_string: expected B or C, got '" + s + "'");
}

Port port_from_string(const std::string& s) {
    if (s == "D") return Port::D;
    if (s == "D'" || s == "Dp") return Port::Dp;
    throw ConfigError("port_from_string: expected D or D', got '" + s + "'");
}

PathLabel to_path_label(Arm a) {
    return a == Arm::B ? PathLabel::B : PathLabel::C;
}

PathLabel to_path_label(Port p) {
    return p == Port::D ? PathLabel::D : PathLabel::Dp;
}

MziState::MziState(Amplitude beta, Amplitude gamma) : beta_(beta), gamma_(gamma) {
    if (!is_finite(beta) || !is_finite(gamma)) {
        throw ConfigError("MziState: non-finite input amplitudes");
    }
    const double n = std::norm(beta) + std::norm(gamma);
    if (std::abs(n - 1.0) > kAnalyticTol) {
        throw ConfigError("MziState: |beta|^2 + |gamma|^2 = " + std::to_string(n) +
                          ", expected 1");
    }
}

Ket MziState::as_ket() const {
    return Ket({"B", "C"}, {beta_, gamma_});
}

GlassPlacement::GlassPlacement(Arm arm_, double g_) : arm(arm_), g(g_) {
    if (!(g >= 0.0) || !std::isfinite(g)) {
        throw ConfigError("GlassPlacement: coupling g must be finite and >= 0, got " +
                          std::to_string(g));
    }
}

PortAmplitudes beam_splitter_out(const MziState& state) {
    const Amplitude b = state.beta();
    const Amplitude c = state.gamma();
    return PortAmplitudes{(b + c) * kInvSqrt2, (-b + c) * kInvSqrt2};
}

MziState first_splitter_in(Amplitude amp_A, Amplitude amp_Ap) {
    const double n = std::norm(amp_A) + std::norm(amp_Ap);
    if (std::abs(n - 1.0) > kAnalyticTol) {
        throw ConfigError("first_splitter_in: input norm^2 = " + std::to_string(n));
    }
    return MziState((amp_A + amp_Ap) * kInvSqrt2, (amp_A - amp_Ap) * kInvSqrt2);
}

Amplitude theoretical_weak_value(const MziState& state, Arm arm, Port port) {
    const PortAmplitudes out = beam_splitter_out(state);
    const Amplitude port_amp = (port == Port::D) ? out.amp_D : out.amp_Dp;
    if (std::abs(port_amp) <= kOverlapCutoff) {
        throw OrthogonalPostSelectionError("theoretical_weak_value: port " + to_string(port) +
                                           " is dark");
    }
    const Amplitude b = state.beta();
    const Amplitude c = state.gamma();
    if (port == Port::D) {
        return (arm == Arm::B) ? b / (b + c) : c / (b + c);
    }
    return (arm == Arm::B) ? b / (b - c) : -c / (b - c);
}

double port_probability(const MziState& state, Port port) {
    const PortAmplitudes out = beam_splitter_out(state);
    return std::norm(port == Port::D ? out.amp_D : out.amp_Dp);
}

Projector arm_projector(Arm a) {
    return Projector(Ket::basis_state({"B", "C"}, a == Arm::B ? 0 : 1));
}

Ket port_ket_in_arm_basis(Port p) {
    if (p == Port::D) {
        return Ket({"B", "C"}, {Amplitude{kInvSqrt2, 0.0}, Amplitude{kInvSqrt2, 0.0}});
    }
    return Ket({"B", "C"}, {Amplitude{-kInvSqrt2, 0.0}, Amplitude{kInvSqrt2, 0.0}});
}

}  // namespace weakval
