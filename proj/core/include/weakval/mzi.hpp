#pragma once

#include <string>

#include "weakval/qcore.hpp"

namespace weakval {

/// All six path states of the two-splitter interferometer: (A,A') input
/// ports, (B,C) arms, (D,D') output ports.
enum class PathLabel { A, Ap, B, C, D, Dp };

/// Interferometer arm carrying the state between the splitters.
enum class Arm { B, C };

/// Detection port after the second splitter.
enum class Port { D, Dp };

std::string to_string(PathLabel p);
std::string to_string(Arm a);
std::string to_string(Port p);
Arm arm_from_string(const std::string& s);
Port port_from_string(const std::string& s);
PathLabel to_path_label(Arm a);
PathLabel to_path_label(Port p);

/// Normalized input state beta|B> + gamma|C> on the arms.
class MziState {
  public:
    MziState(Amplitude beta, Amplitude gamma);

    Amplitude beta() const { return beta_; }
    Amplitude gamma() const { return gamma_; }
    Amplitude arm_amplitude(Arm a) const { return a == Arm::B ? beta_ : gamma_; }

    /// The state as an explicit ket over the labeled {B, C} basis.
    Ket as_ket() const;

  private:
    Amplitude beta_;
    Amplitude gamma_;
};

/// A thin glass slide in one arm, deflecting that arm's component by the
/// dimensionless coupling g (in units of the probe width). g == 0 means no
/// glass.
struct GlassPlacement {
    Arm arm;
    double g;

    GlassPlacement(Arm arm_, double g_);
};

/// Output-port amplitudes produced by the second beam splitter.
struct PortAmplitudes {
    Amplitude amp_D;
    Amplitude amp_Dp;
};

/// Second splitter: |B> -> (|D> - |D'>)/sqrt2, |C> -> (|D> + |D'>)/sqrt2,
/// so amp_D = (beta+gamma)/sqrt2 and amp_Dp = (-beta+gamma)/sqrt2.
PortAmplitudes beam_splitter_out(const MziState& state);

/// First splitter: |A> -> (|B>+|C>)/sqrt2, |A'> -> (|B>-|C>)/sqrt2. Composing
/// with beam_splitter_out sends |A> -> |D> and |A'> -> -|D'>.
MziState first_splitter_in(Amplitude amp_A, Amplitude amp_Ap);

/// Closed-form weak value of the arm projector for the given post-selection
/// port: (B,D) beta/(beta+gamma), (C,D) gamma/(beta+gamma),
/// (B,D') beta/(beta-gamma), (C,D') -gamma/(beta-gamma).
/// Throws OrthogonalPostSelectionError when the port is dark.
Amplitude theoretical_weak_value(const MziState& state, Arm arm, Port port);

/// Born probability of detecting at `port`: |beta+gamma|^2/2 for D,
/// |beta-gamma|^2/2 for D'. The two sum to 1.
double port_probability(const MziState& state, Port port);

/// Projector onto an arm, as an explicit ket over the {B, C} basis.
Projector arm_projector(Arm a);

/// The port's bra expressed in the {B, C} arm basis (the second splitter
/// pulled back through): <D| = (<B|+<C|)/sqrt2, <D'| = (-<B|+<C|)/sqrt2.
Ket port_ket_in_arm_basis(Port p);

}  // namespace weakval
