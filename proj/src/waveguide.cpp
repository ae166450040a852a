// waveguide.cpp — Grid construction and piecewise profile evaluation

#include "gaw/waveguide.hpp"

#include <cmath>
#include <stdexcept>

namespace gaw {

namespace {
// Tolerance for assigning a momentum to a gap edge. Grid spacings are
// >= 1e-6 in practice, so an absolute 1e-9 never misclassifies an
// interior point.
constexpr double edge_tol = 1e-9;
} // namespace

void WaveguideModel::check() const {
    if (!(c > 0.0)) throw std::invalid_argument("WaveguideModel: c must be positive");
    if (!(k_max > 0.0)) throw std::invalid_argument("WaveguideModel: k_max must be positive");
    if (!(delta_k > 0.0) || !(delta_k < k_max)) {
        throw std::invalid_argument("WaveguideModel: require 0 < delta_k < k_max");
    }
}

KGrid build_kgrid(const WaveguideModel& model) {
    model.check();
    const auto n_half = static_cast<long long>(std::llround(model.k_max / model.delta_k));
    KGrid grid;
    grid.delta_k = model.delta_k;
    grid.k_max = model.k_max;
    grid.c = model.c;
    grid.k.resize(static_cast<std::size_t>(2 * n_half + 1));
    grid.omega.resize(grid.k.size());
    for (long long j = -n_half; j <= n_half; ++j) {
        const double kj = static_cast<double>(j) * model.delta_k;
        const auto idx = static_cast<std::size_t>(j + n_half);
        grid.k[idx] = kj;
        grid.omega[idx] = model.c * std::abs(kj);
    }
    return grid;
}

std::vector<TargetProfile::Interval> TargetProfile::gap_intervals() const {
    if (kind == TargetKind::band_gap) {
        return {{-k0 - kd / 2.0, -k0 + kd / 2.0}, {k0 - kd / 2.0, k0 + kd / 2.0}};
    }
    return {{-k0 - kd / 2.0, -k0 + kd / 2.0}};
}

bool TargetProfile::in_gap(double k) const {
    for (const auto& g : gap_intervals()) {
        if (k >= g.lo - edge_tol && k <= g.hi + edge_tol) return true;
    }
    return false;
}

double TargetProfile::total_gap_width() const {
    return kind == TargetKind::band_gap ? 2.0 * kd : kd;
}

void TargetProfile::check() const {
    if (!(kd > 0.0)) throw std::invalid_argument("TargetProfile: kd must be positive");
    if (!(k0 - kd / 2.0 > 0.0)) {
        throw std::invalid_argument("TargetProfile: gap must not touch k = 0");
    }
    if (!(k0 + kd / 2.0 < k_max)) {
        throw std::invalid_argument("TargetProfile: gap must lie inside the cutoff");
    }
    if (!(g0 >= 0.0)) throw std::invalid_argument("TargetProfile: g0 must be nonnegative");
}

double target_value(const TargetProfile& profile, double k) {
    if (std::abs(k) > profile.k_max + edge_tol) {
        throw std::out_of_range("target_value: |k| exceeds k_max");
    }
    return profile.in_gap(k) ? 0.0 : profile.g0;
}

void WeightProfile::check() const {
    if (!(w_out > 0.0)) throw std::invalid_argument("WeightProfile: w_out must be positive");
    if (!(w_in >= w_out)) throw std::invalid_argument("WeightProfile: require w_in >= w_out");
}

double weight_value(const WeightProfile& weights, const TargetProfile& profile, double k) {
    if (std::abs(k) > profile.k_max + edge_tol) {
        throw std::out_of_range("weight_value: |k| exceeds k_max");
    }
    return profile.in_gap(k) ? weights.w_in : weights.w_out;
}

} // namespace gaw
