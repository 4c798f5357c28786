#include "weakval/weakvalues.hpp"

#include <cmath>
#include <string>

namespace weakval {

namespace {

void require_overlap(const Amplitude& overlap, const std::string& what) {
    if (std::abs(overlap) <= kOverlapCutoff) {
        throw OrthogonalPostSelectionError(what + " vanished (|overlap| = " +
                                           std::to_string(std::abs(overlap)) + ")");
    }
}

/// Checks sum_m |m><m| == identity on the space the kets live in.
void require_complete_orthonormal(const std::vector<Ket>& basis, const Ket& reference) {
    constexpr double tol = 1e-10;
    const std::size_t d = reference.dim();
    if (basis.size() != d) {
        throw IncompleteBasisError("basis has " + std::to_string(basis.size()) +
                                   " states for dimension " + std::to_string(d));
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            // (sum_m |m><m|)_{ij} = sum_m m_i conj(m_j)
            Amplitude s{0.0, 0.0};
            for (const auto& m : basis) {
                if (!m.same_basis(reference)) {
                    throw BasisMismatchError("partial_amplitude_portion: basis member on a "
                                             "different labeled basis");
                }
                s += m[i] * std::conj(m[j]);
            }
            const Amplitude expect = (i == j) ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
            if (std::abs(s - expect) > tol) {
                throw IncompleteBasisError("basis does not resolve the identity (entry " +
                                           std::to_string(i) + "," + std::to_string(j) +
                                           " off by " + std::to_string(std::abs(s - expect)) +
                                           ")");
            }
        }
    }
}

}  // namespace

WeakValueResult weak_value(const Projector& observable, const Ket& pre, const Ket& post) {
    const Amplitude denom = inner(post, pre);
    require_overlap(denom, "post-selection overlap <z|psi>");
    const Amplitude num = inner(post, apply_projector(observable, pre));
    const Amplitude value = num / denom;
    return WeakValueResult{value, value.real(), value.imag(), pre, post, observable};
}

Amplitude partial_amplitude_portion(const Projector& observable, const Ket& pre, const Ket& post,
                                    const std::vector<Ket>& basis) {
    require_complete_orthonormal(basis, pre);
    Amplitude denom{0.0, 0.0};
    for (const auto& m : basis) {
        denom += inner(post, m) * inner(m, pre);
    }
    require_overlap(denom, "summed partial amplitude <z|psi>");
    const Ket& a = observable.axis();
    return inner(post, a) * inner(a, pre) / denom;
}

BayesDecomposition bayes_decompose(const Ket& observable_axis, const Ket& pre, const Ket& post) {
    const Amplitude a_overlap = inner(observable_axis, pre);
    const Amplitude z_overlap = inner(post, pre);
    require_overlap(z_overlap, "post-selection overlap <z|psi>");
    require_overlap(a_overlap, "intermediate overlap <a|psi>");

    // Born probabilities only make sense for normalized states; the Projector
    // constructor enforces that for the two axes.
    const Projector a_proj{observable_axis};
    const Projector z_proj{post};
    const Amplitude forward = inner(post, apply_projector(a_proj, pre)) / z_overlap;
    const Amplitude reverse = inner(observable_axis, apply_projector(z_proj, pre)) / a_overlap;
    return BayesDecomposition{forward, reverse, std::norm(a_overlap), std::norm(z_overlap)};
}

SumRuleResult sum_rule_check(const Ket& target, const Ket& pre, const std::vector<Ket>& basis) {
    require_complete_orthonormal(basis, pre);
    const Projector t_proj{target};
    double total = 0.0;
    int degenerate = 0;
    for (const auto& b : basis) {
        const Amplitude overlap = inner(b, pre);
        const Amplitude projected = inner(b, apply_projector(t_proj, pre));
        if (std::abs(overlap) <= kOverlapCutoff) {
            // The weak value is undefined here but its product with the Born
            // weight has the finite limit Re(<psi|b><b|T|psi>).
            total += (projected * std::conj(overlap)).real();
            ++degenerate;
        } else {
            const Amplitude wv = projected / overlap;
            total += wv.real() * std::norm(overlap);
        }
    }
    return SumRuleResult{total, degenerate};
}

Amplitude joint_quasi_probability(const Projector& observable, const Projector& post_proj,
                                  const Ket& pre) {
    // <psi|Z A|psi> = <psi|z><z|a><a|psi>
    const Ket& a = observable.axis();
    const Ket& z = post_proj.axis();
    return inner(pre, z) * inner(z, a) * inner(a, pre);
}

double imag_via_commutator(const Projector& observable, const Projector& post_proj,
                           const Ket& pre) {
    const double p_z = std::norm(inner(post_proj.axis(), pre));
    if (p_z <= kOverlapCutoff) {
        throw OrthogonalPostSelectionError("imag_via_commutator: P(z) = " + std::to_string(p_z));
    }
    const Amplitude za = joint_quasi_probability(observable, post_proj, pre);
    const Amplitude az = joint_quasi_probability(post_proj, observable, pre);
    const Amplitude commutator = za - az;
    // (1/2i) <psi|[Z,A]|psi> is real because [Z,A] is anti-Hermitian here.
    return (commutator / Amplitude{0.0, 2.0}).real() / p_z;
}

UncertaintyBound uncertainty_bound_check(const Projector& observable, const Projector& post_proj,
                                         const Ket& pre) {
    const double p_z = std::norm(inner(post_proj.axis(), pre));
    if (p_z <= kOverlapCutoff) {
        throw OrthogonalPostSelectionError("uncertainty_bound_check: P(z) = " +
                                           std::to_string(p_z));
    }
    const double p_a = std::norm(inner(observable.axis(), pre));
    // For a projector X, X^2 = X, so Var X = <X> - <X>^2.
    const double var_z = p_z - p_z * p_z;
    const double var_a = p_a - p_a * p_a;
    const double lhs = std::abs(imag_via_commutator(observable, post_proj, pre));
    const double rhs = std::sqrt(std::max(var_z, 0.0)) * std::sqrt(std::max(var_a, 0.0)) / p_z;
    return UncertaintyBound{lhs, rhs};
}

double geometric_phase(const Ket& pre, const Ket& mid, const Ket& post) {
    const Amplitude bargmann = inner(pre, post) * inner(post, mid) * inner(mid, pre);
    if (std::abs(bargmann) <= kOverlapCutoff) {
        throw DegenerateLoopError("geometric_phase: Bargmann product vanished, |.| = " +
                                  std::to_string(std::abs(bargmann)));
    }
    return std::arg(bargmann);
}

}  // namespace weakval
