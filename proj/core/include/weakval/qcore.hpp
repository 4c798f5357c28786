#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "weakval/errors.hpp"

namespace weakval {

/// Complex amplitude. All stored amplitudes must have finite components.
using Amplitude = std::complex<double>;

/// Absolute tolerance for analytic identities; every analytic quantity in
/// this library is O(1), so a fixed absolute cutoff is adequate.
inline constexpr double kAnalyticTol = 1e-12;

/// Overlaps with modulus at or below this are treated as zero. Weak values
/// diverge as the post-selection overlap vanishes, so operations fail loudly
/// instead of returning huge values.
inline constexpr double kOverlapCutoff = 1e-12;

bool is_finite(const Amplitude& a);

/// State vector over a small labeled basis. Basis identity is
/// label-sequence equality; components are immutable after construction.
class Ket {
  public:
    Ket(std::vector<std::string> labels, std::vector<Amplitude> components);

    /// Basis state |labels[index]> in the given basis.
    static Ket basis_state(std::vector<std::string> labels, std::size_t index);

    std::size_t dim() const { return components_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Amplitude>& components() const { return components_; }
    const Amplitude& operator[](std::size_t i) const { return components_[i]; }

    double norm_sq() const;
    double norm() const;
    bool is_normalized(double tol = kAnalyticTol) const;
    bool same_basis(const Ket& other) const;

  private:
    std::vector<std::string> labels_;
    std::vector<Amplitude> components_;
};

/// Rank-1 projector |axis><axis|. The axis must be normalized.
class Projector {
  public:
    explicit Projector(Ket axis);
    const Ket& axis() const { return axis_; }

  private:
    Ket axis_;
};

/// <bra|ket> = sum_i conj(bra_i) ket_i. Throws BasisMismatchError when the
/// labeled bases differ.
Amplitude inner(const Ket& bra, const Ket& ket);

/// |axis><axis|ket>. Idempotent.
Ket apply_projector(const Projector& p, const Ket& ket);

/// Unit-norm copy of `ket` (a positive real multiple of the input).
/// Throws ZeroNormError for zero-norm input.
Ket normalize(const Ket& ket);

}  // namespace weakval
