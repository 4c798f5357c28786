#include "weakval/qcore.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace weakval {

bool is_finite(const Amplitude& a) {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
}

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) os << ',';
        os << labels[i];
    }
    os << '}';
    return os.str();
}

void require_same_basis(const Ket& a, const Ket& b, const char* what) {
    if (!a.same_basis(b)) {
        throw BasisMismatchError(std::string(what) + ": basis " + join_labels(a.labels()) +
                                 " vs " + join_labels(b.labels()));
    }
}

}  // namespace

Ket::Ket(std::vector<std::string> labels, std::vector<Amplitude> components)
    : labels_(std::move(labels)), components_(std::move(components)) {
    if (labels_.empty() || labels_.size() != components_.size()) {
        throw ConfigError("Ket: need equally many labels and components (>= 1), got " +
                          std::to_string(labels_.size()) + " labels, " +
                          std::to_string(components_.size()) + " components");
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) {
            throw ConfigError("Ket: duplicate basis label '" + l + "'");
        }
    }
    for (const auto& c : components_) {
        if (!is_finite(c)) {
            throw ConfigError("Ket: non-finite amplitude in basis " + join_labels(labels_));
        }
    }
}

Ket Ket::basis_state(std::vector<std::string> labels, std::size_t index) {
    std::vector<Amplitude> comps(labels.size(), Amplitude{0.0, 0.0});
    if (index >= comps.size()) {
        throw ConfigError("Ket::basis_state: index " + std::to_string(index) +
                          " out of range for dim " + std::to_string(comps.size()));
    }
    comps[index] = Amplitude{1.0, 0.0};
    return Ket(std::move(labels), std::move(comps));
}

double Ket::norm_sq() const {
    double s = 0.0;
    for (const auto& c : components_) s += std::norm(c);
    return s;
}

double Ket::norm() const {
    return std::sqrt(norm_sq());
}

bool Ket::is_normalized(double tol) const {
    return std::abs(norm_sq() - 1.0) <= tol;
}

bool Ket::same_basis(const Ket& other) const {
    return labels_ == other.labels_;
}

Projector::Projector(Ket axis) : axis_(std::move(axis)) {
    if (!axis_.is_normalized()) {
        throw ConfigError("Projector: axis must be normalized, |axis|^2 = " +
                          std::to_string(axis_.norm_sq()));
    }
}

Amplitude inner(const Ket& bra, const Ket& ket) {
    require_same_basis(bra, ket, "inner");
    Amplitude s{0.0, 0.0};
    for (std::size_t i = 0; i < bra.dim(); ++i) {
        s += std::conj(bra[i]) * ket[i];
    }
    return s;
}

Ket apply_projector(const Projector& p, const Ket& ket) {
    require_same_basis(p.axis(), ket, "apply_projector");
    const Amplitude overlap = inner(p.axis(), ket);
    std::vector<Amplitude> comps(ket.dim());
    for (std::size_t i = 0; i < ket.dim(); ++i) {
        comps[i] = p.axis()[i] * overlap;
    }
    return Ket(p.axis().labels(), std::move(comps));
}

Ket normalize(const Ket& ket) {
    const double n = ket.norm();
    if (n <= 0.0) {
        throw ZeroNormError("normalize: zero-norm ket over basis " + join_labels(ket.labels()));
    }
    std::vector<Amplitude> comps(ket.dim());
    for (std::size_t i = 0; i < ket.dim(); ++i) {
        comps[i] = ket[i] / n;
    }
    return Ket(ket.labels(), std::move(comps));
}

}  // namespace weakval
