// coupling.hpp — Giant-atom coupling sequences and their momentum-space synthesis

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gaw/waveguide.hpp"

namespace gaw {

struct CouplingPoint {
    double x_lambda0 = 0.0; // position in units of lambda_0 (serialized form)
    double x = 0.0;         // position in raw length units (used by physics)
    double amplitude = 0.0; // dimensionless, nonnegative, in units of g0
    double phase = 0.0;     // radians, in (-pi, pi]
};

// Ordered coupling points of a giant atom. Points are kept sorted by
// position; the physical coupling at point i is g0 * A_i * exp(i theta_i).
class CouplingSequence {
public:
    CouplingSequence() = default;

    static CouplingSequence from_lambda0_units(std::vector<double> x_lambda0,
                                               std::vector<double> amplitudes,
                                               std::vector<double> phases,
                                               double lambda0, double g0,
                                               std::string label = {});

    static CouplingSequence from_raw(std::vector<double> x,
                                     std::vector<double> amplitudes,
                                     std::vector<double> phases,
                                     double lambda0, double g0,
                                     std::string label = {});

    const std::vector<CouplingPoint>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    double g0() const { return g0_; }
    double lambda0() const { return lambda0_; }
    const std::string& label() const { return label_; }

    double extent() const; // x_N - x_1, raw units; 0 for fewer than 2 points
    bool is_real() const;  // all phases identically zero

    std::complex<double> point_coupling(std::size_t i) const;

    CouplingSequence translated(double d) const;
    CouplingSequence with_g0(double g0) const;
    CouplingSequence with_label(std::string label) const;

private:
    std::vector<CouplingPoint> pts_;
    double g0_ = 0.002;
    double lambda0_ = 1.0;
    std::string label_;

    void sort_and_check();
};

// Physical constraint set for sequence designs. Lengths are in lambda_0 units.
struct ConstraintSet {
    double eta = 0.1;             // minimum neighbor spacing / lambda_0
    double extent_lambda0 = 17.0; // window length L / lambda_0
    int n_max = 30;               // maximum point count
    bool require_nonneg_real = false;
    double markov_margin = 10.0;  // required ratio mean wavepacket size / L

    void check() const;
};

struct ValidationReport {
    bool spacing_ok = false;
    bool extent_ok = false;
    bool count_ok = false;
    bool nonneg_ok = false;
    bool markov_ok = false;
    double min_spacing_lambda0 = 0.0;
    double extent_lambda0 = 0.0;
    std::size_t count = 0;
    double mean_wavepacket_lambda0 = 0.0; // may be +inf when a point decouples

    bool all_ok() const {
        return spacing_ok && extent_ok && count_ok && nonneg_ok && markov_ok;
    }
};

// G_k[j] = g0 * sum_i A_i e^{i theta_i} e^{-i k_j x_i}
std::vector<std::complex<double>> k_coupling(const CouplingSequence& seq, const KGrid& grid);

// True iff G_k = conj(G_{-k}) on every grid pair, within rel_tol of max|G|.
bool conjugate_symmetry_check(const CouplingSequence& seq, const KGrid& grid,
                              double rel_tol = 1e-12);

// Samples the analytic inverse-transform of a band-gap target at
// x = n * sample_spacing within |x| <= window_half_length. Sign changes of
// the sampled function are encoded as pi phases.
CouplingSequence ift_baseline(const TargetProfile& profile, double window_half_length,
                              double sample_spacing);

// ceil(4 k_max / kd): minimum point count for the sampled-transform route.
int nyquist_bound(const TargetProfile& profile);

ValidationReport validate(const CouplingSequence& seq, const ConstraintSet& cons,
                          const WaveguideModel& model);

struct WavepacketInfo {
    std::vector<double> decay_rate; // Gamma_i, per point
    std::vector<double> size;       // L_i = 2c / Gamma_i, raw units; +inf for A_i = 0
    double mean_size = 0.0;         // arithmetic mean including infinities
    double min_size = 0.0;
};

WavepacketInfo wavepacket_sizes(const CouplingSequence& seq, const WaveguideModel& model);

// Gaussian amplitude and phase disorder; positions unchanged; clamps negative
// amplitudes to zero; deterministic in (seed, point index).
CouplingSequence perturb(const CouplingSequence& seq, double sigma_a, double sigma_phi,
                         std::uint64_t seed);

// Robust gap diagnostics of a synthesized |G_k| against a target profile.
struct GapMetrics {
    double plateau = 0.0;        // median |G_k| outside all gaps
    double max_in_gap = 0.0;     // max |G_k| inside the gap windows
    double residual = 0.0;       // max_in_gap / plateau
    double center_remnant = 0.0; // |G| at the gap center(s) / plateau
};

GapMetrics gap_metrics(const std::vector<std::complex<double>>& Gk, const KGrid& grid,
                       const TargetProfile& profile);

// Columnar text round trip; values carry 17 significant digits.
std::string sequence_to_text(const CouplingSequence& seq);
CouplingSequence sequence_from_text(const std::string& text);
void save_sequence(const std::string& path, const CouplingSequence& seq);
CouplingSequence load_sequence(const std::string& path);

} // namespace gaw
