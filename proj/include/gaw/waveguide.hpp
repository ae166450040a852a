// waveguide.hpp — Discretized linear-dispersion waveguide, target profiles, weights

#pragma once

#include <cstddef>
#include <vector>

namespace gaw {

inline constexpr double pi = 3.14159265358979323846;

// Linear-dispersion waveguide, omega_k = c|k|, discretized on a uniform
// symmetric momentum grid with ultraviolet cutoff k_max.
struct WaveguideModel {
    double c = 3.0;        // phase/group velocity
    double k_max = 3.0;    // momentum cutoff
    double delta_k = 1e-3; // grid spacing

    double waveguide_length() const { return 2.0 * pi / delta_k; }

    void check() const;
};

struct KGrid {
    std::vector<double> k;     // strictly increasing, symmetric about 0
    std::vector<double> omega; // c|k|
    double delta_k = 0.0;
    double k_max = 0.0;
    double c = 0.0;

    std::size_t size() const { return k.size(); }
    double detuning(std::size_t j, double omega_q) const { return omega[j] - omega_q; }
};

// Uniform grid over [-k_max, k_max]; size 2*k_max/delta_k + 1.
KGrid build_kgrid(const WaveguideModel& model);

enum class TargetKind { band_gap, chiral };

// Piecewise-constant |G_k| target. band_gap suppresses both +-k_0 windows;
// chiral suppresses only the window around -k_0.
struct TargetProfile {
    TargetKind kind = TargetKind::band_gap;
    double k0 = 1.5;  // gap center magnitude
    double kd = 0.1;  // gap width
    double g0 = 1.0;  // plateau value
    double k_max = 3.0;

    struct Interval {
        double lo = 0.0;
        double hi = 0.0;
    };

    double lambda0() const { return 2.0 * pi / k0; }
    std::vector<Interval> gap_intervals() const;
    bool in_gap(double k) const; // gap edges count as in-gap
    double total_gap_width() const;

    void check() const;
};

// Value of |G^I_k| at momentum k. Rejects |k| > k_max.
double target_value(const TargetProfile& profile, double k);

struct WeightProfile {
    double w_in = 60.0;
    double w_out = 1.0;

    void check() const;
};

// w_in inside gap windows, w_out elsewhere; same edge convention as the target.
double weight_value(const WeightProfile& weights, const TargetProfile& profile, double k);

} // namespace gaw
