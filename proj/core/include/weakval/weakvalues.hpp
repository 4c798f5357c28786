#pragma once

#include <vector>

#include "weakval/qcore.hpp"

namespace weakval {

/// Weak value <post|A|pre>/<post|pre> of a rank-1 projector A, together with
/// its real/imaginary decomposition and the states that produced it. The real
/// part is the candidate conditional probability; it may be negative or
/// exceed 1 and is never clamped.
struct WeakValueResult {
    Amplitude value;
    double real_part;
    double imag_part;
    Ket pre;
    Ket post;
    Projector observable;
};

/// The two weak values related by the quantum Bayes identity
///   forward_wv * p_z == conj(reverse_wv) * p_a
/// with p_a, p_z the Born probabilities of the intermediate and final states.
/// Only the unambiguous algebraic objects are exposed; which of the two reads
/// as P(z|a) versus P(a|z) is a naming question this type stays out of.
struct BayesDecomposition {
    Amplitude forward_wv;  ///< <z|A|psi>/<z|psi>
    Amplitude reverse_wv;  ///< <a|Z|psi>/<a|psi>
    double p_a;            ///< |<a|psi>|^2
    double p_z;            ///< |<z|psi>|^2
};

/// Result of the probability sum rule evaluated term-wise over a basis.
/// Terms whose intermediate overlap vanished were computed in the
/// unnormalized form Re(<psi|a><a|T|psi>) and counted in degenerate_terms.
struct SumRuleResult {
    double value;
    int degenerate_terms;
};

/// Both sides of the uncertainty bound on the imaginary part:
/// lhs = |Im weak value|, rhs = dZ*dA/P(z).
struct UncertaintyBound {
    double lhs;
    double rhs;
};

/// Weak value of `observable` between pre- and post-selected states.
/// Throws OrthogonalPostSelectionError when |<post|pre>| <= overlap cutoff.
WeakValueResult weak_value(const Projector& observable, const Ket& pre, const Ket& post);

/// The same weak value computed as a portion of partial amplitudes,
/// <z|a><a|psi> / sum_m <z|m><m|psi>, over an explicit complete orthonormal
/// basis. Agrees with weak_value() identically; exists as the second route.
/// Throws IncompleteBasisError when the basis does not resolve the identity.
Amplitude partial_amplitude_portion(const Projector& observable, const Ket& pre, const Ket& post,
                                    const std::vector<Ket>& basis);

/// Forward and reverse weak values plus Born probabilities for the pair of
/// conditionings (observable_axis, post). Throws OrthogonalPostSelectionError
/// naming whichever overlap vanished.
BayesDecomposition bayes_decompose(const Ket& observable_axis, const Ket& pre, const Ket& post);

/// Term-wise sum over `basis` of Re[<b|T|psi>/<b|psi>] * |<b|psi>|^2 where
/// T = |target><target|. Contract: equals |<target|psi>|^2. Running it with
/// the post state as target and the intermediate basis recovers P(z); with an
/// intermediate state as target and a basis of post states it recovers P(a).
SumRuleResult sum_rule_check(const Ket& target, const Ket& pre, const std::vector<Ket>& basis);

/// <psi|Z A|psi>: the (generally complex) joint quasi-probability of passing
/// through A's axis and ending on Z's axis. weak_value == this / P(z).
Amplitude joint_quasi_probability(const Projector& observable, const Projector& post_proj,
                                  const Ket& pre);

/// Imaginary part of the weak value via the commutator route,
/// (1/2i) <psi|[Z,A]|psi> / P(z).
double imag_via_commutator(const Projector& observable, const Projector& post_proj,
                           const Ket& pre);

/// Evaluates |Im wv| against dZ*dA/P(z) where dX = sqrt(<X> - <X>^2) for a
/// projector X. The bound lhs <= rhs holds for every admissible triple.
UncertaintyBound uncertainty_bound_check(const Projector& observable, const Projector& post_proj,
                                         const Ket& pre);

/// Phase of the three-vertex Bargmann invariant <psi|z><z|a><a|psi>, i.e. the
/// geometric phase of the loop pre -> mid -> post -> pre, in (-pi, pi].
/// Invariant under independent global phase changes of all three states.
double geometric_phase(const Ket& pre, const Ket& mid, const Ket& post);

}  // namespace weakval
