// coupling.cpp — Sequence bookkeeping, synthesis, validation, disorder, text I/O

#include "gaw/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gaw/rng.hpp"

namespace gaw {

namespace {

double wrap_phase(double th) {
    if (!std::isfinite(th)) throw std::invalid_argument("phase must be finite");
    double t = std::fmod(th + pi, 2.0 * pi);
    if (t <= 0.0) t += 2.0 * pi;
    return t - pi; // (-pi, pi]
}

void format17(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t m = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m), v.end());
    double hi = v[m];
    if (v.size() % 2 == 1) return hi;
    double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
    return 0.5 * (lo + hi);
}

} // namespace

void CouplingSequence::sort_and_check() {
    for (const auto& p : pts_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.amplitude)) {
            throw std::invalid_argument("CouplingSequence: non-finite point");
        }
        if (p.amplitude < 0.0) {
            throw std::invalid_argument("CouplingSequence: negative amplitude");
        }
    }
    if (!(lambda0_ > 0.0)) throw std::invalid_argument("CouplingSequence: lambda0 must be positive");
    if (!(g0_ >= 0.0)) throw std::invalid_argument("CouplingSequence: g0 must be nonnegative");
    std::stable_sort(pts_.begin(), pts_.end(),
                     [](const CouplingPoint& a, const CouplingPoint& b) { return a.x < b.x; });
    for (auto& p : pts_) p.phase = wrap_phase(p.phase);
}

CouplingSequence CouplingSequence::from_lambda0_units(std::vector<double> x_lambda0,
                                                      std::vector<double> amplitudes,
                                                      std::vector<double> phases,
                                                      double lambda0, double g0,
                                                      std::string label) {
    if (x_lambda0.size() != amplitudes.size() ||
        (!phases.empty() && phases.size() != x_lambda0.size())) {
        throw std::invalid_argument("CouplingSequence: column length mismatch");
    }
    CouplingSequence s;
    s.lambda0_ = lambda0;
    s.g0_ = g0;
    s.label_ = std::move(label);
    s.pts_.resize(x_lambda0.size());
    for (std::size_t i = 0; i < x_lambda0.size(); ++i) {
        s.pts_[i].x_lambda0 = x_lambda0[i];
        s.pts_[i].x = x_lambda0[i] * lambda0;
        s.pts_[i].amplitude = amplitudes[i];
        s.pts_[i].phase = phases.empty() ? 0.0 : phases[i];
    }
    s.sort_and_check();
    return s;
}

CouplingSequence CouplingSequence::from_raw(std::vector<double> x,
                                            std::vector<double> amplitudes,
                                            std::vector<double> phases,
                                            double lambda0, double g0,
                                            std::string label) {
    if (x.size() != amplitudes.size() || (!phases.empty() && phases.size() != x.size())) {
        throw std::invalid_argument("CouplingSequence: column length mismatch");
    }
    CouplingSequence s;
    s.lambda0_ = lambda0;
    s.g0_ = g0;
    s.label_ = std::move(label);
    s.pts_.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        s.pts_[i].x = x[i];
        s.pts_[i].x_lambda0 = x[i] / lambda0;
        s.pts_[i].amplitude = amplitudes[i];
        s.pts_[i].phase = phases.empty() ? 0.0 : phases[i];
    }
    s.sort_and_check();
    return s;
}

double CouplingSequence::extent() const {
    if (pts_.size() < 2) return 0.0;
    return pts_.back().x - pts_.front().x;
}

bool CouplingSequence::is_real() const {
    return std::all_of(pts_.begin(), pts_.end(),
                       [](const CouplingPoint& p) { return p.phase == 0.0; });
}

std::complex<double> CouplingSequence::point_coupling(std::size_t i) const {
    const auto& p = pts_.at(i);
    return g0_ * p.amplitude * std::complex<double>(std::cos(p.phase), std::sin(p.phase));
}

CouplingSequence CouplingSequence::translated(double d) const {
    CouplingSequence s(*this);
    for (auto& p : s.pts_) {
        p.x += d;
        p.x_lambda0 = p.x / lambda0_;
    }
    return s;
}

CouplingSequence CouplingSequence::with_g0(double g0) const {
    CouplingSequence s(*this);
    if (!(g0 >= 0.0)) throw std::invalid_argument("with_g0: g0 must be nonnegative");
    s.g0_ = g0;
    return s;
}

CouplingSequence CouplingSequence::with_label(std::string label) const {
    CouplingSequence s(*this);
    s.label_ = std::move(label);
    return s;
}

void ConstraintSet::check() const {
    if (!(eta > 0.0)) throw std::invalid_argument("ConstraintSet: eta must be positive");
    if (!(extent_lambda0 > 0.0)) throw std::invalid_argument("ConstraintSet: extent must be positive");
    if (n_max < 1) throw std::invalid_argument("ConstraintSet: n_max must be >= 1");
    if (!(markov_margin > 1.0)) throw std::invalid_argument("ConstraintSet: markov_margin must exceed 1");
}

std::vector<std::complex<double>> k_coupling(const CouplingSequence& seq, const KGrid& grid) {
    std::vector<std::complex<double>> G(grid.size(), {0.0, 0.0});
    const auto& pts = seq.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::complex<double> gi = seq.point_coupling(i);
        const double xi = pts[i].x;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double ph = -grid.k[j] * xi;
            G[j] += gi * std::complex<double>(std::cos(ph), std::sin(ph));
        }
    }
    return G;
}

bool conjugate_symmetry_check(const CouplingSequence& seq, const KGrid& grid, double rel_tol) {
    const auto G = k_coupling(seq, grid);
    double scale = 0.0;
    for (const auto& g : G) scale = std::max(scale, std::abs(g));
    if (scale == 0.0) return true;
    const std::size_t n = G.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(G[j] - std::conj(G[n - 1 - j])) > rel_tol * scale) return false;
    }
    return true;
}

CouplingSequence ift_baseline(const TargetProfile& profile, double window_half_length,
                              double sample_spacing) {
    profile.check();
    if (profile.kind != TargetKind::band_gap) {
        throw std::invalid_argument("ift_baseline: only band-gap targets have this closed form");
    }
    if (!(window_half_length > 0.0) || !(sample_spacing > 0.0)) {
        throw std::invalid_argument("ift_baseline: window and spacing must be positive");
    }
    const double km = profile.k_max, kd = profile.kd, k0 = profile.k0;
    auto g_ift = [&](double x) {
        if (std::abs(x) < 1e-12) return (km - kd) / pi; // analytic x -> 0 limit
        return std::sin(km * x) / (pi * x) - 2.0 * std::sin(kd * x / 2.0) * std::cos(k0 * x) / (pi * x);
    };
    const auto n_side = static_cast<long long>(std::floor(window_half_length / sample_spacing + 1e-12));
    std::vector<double> xs, amps, phs;
    for (long long n = -n_side; n <= n_side; ++n) {
        const double x = static_cast<double>(n) * sample_spacing;
        const double g = g_ift(x);
        xs.push_back(x);
        amps.push_back(std::abs(g));
        phs.push_back(g < 0.0 ? pi : 0.0);
    }
    return CouplingSequence::from_raw(std::move(xs), std::move(amps), std::move(phs),
                                      profile.lambda0(), 1.0, "ift_baseline");
}

int nyquist_bound(const TargetProfile& profile) {
    return static_cast<int>(std::ceil(4.0 * profile.k_max / profile.kd));
}

WavepacketInfo wavepacket_sizes(const CouplingSequence& seq, const WaveguideModel& model) {
    model.check();
    if (!(seq.g0() > 0.0)) throw std::invalid_argument("wavepacket_sizes: g0 must be positive");
    const double norm = std::sqrt(model.waveguide_length() / (2.0 * pi));
    WavepacketInfo info;
    info.decay_rate.reserve(seq.size());
    info.size.reserve(seq.size());
    const double inf = std::numeric_limits<double>::infinity();
    double sum = 0.0, mn = inf;
    for (const auto& p : seq.points()) {
        const double gp = seq.g0() * p.amplitude * norm;
        const double gamma = 2.0 * pi * gp * gp / model.c;
        const double size = gamma > 0.0 ? 2.0 * model.c / gamma : inf;
        info.decay_rate.push_back(gamma);
        info.size.push_back(size);
        sum += size;
        mn = std::min(mn, size);
    }
    info.mean_size = seq.empty() ? 0.0 : sum / static_cast<double>(seq.size());
    info.min_size = seq.empty() ? 0.0 : mn;
    return info;
}

ValidationReport validate(const CouplingSequence& seq, const ConstraintSet& cons,
                          const WaveguideModel& model) {
    cons.check();
    ValidationReport r;
    const double lam0 = seq.lambda0();
    const double L = cons.extent_lambda0 * lam0;
    const auto& pts = seq.points();
    r.count = pts.size();
    r.count_ok = pts.size() <= static_cast<std::size_t>(cons.n_max);

    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        min_gap = std::min(min_gap, pts[i].x - pts[i - 1].x);
    }
    r.min_spacing_lambda0 = min_gap / lam0;
    r.spacing_ok = pts.size() < 2 || min_gap > cons.eta * lam0;

    r.extent_lambda0 = seq.extent() / lam0;
    r.extent_ok = pts.empty() ||
                  (pts.front().x > -L / 2.0 && pts.back().x < L / 2.0);

    r.nonneg_ok = !cons.require_nonneg_real || seq.is_real();

    const auto wp = wavepacket_sizes(seq, model);
    r.mean_wavepacket_lambda0 = wp.mean_size / lam0;
    r.markov_ok = pts.empty() || wp.mean_size / L >= cons.markov_margin;
    return r;
}

CouplingSequence perturb(const CouplingSequence& seq, double sigma_a, double sigma_phi,
                         std::uint64_t seed) {
    if (sigma_a < 0.0 || sigma_phi < 0.0) {
        throw std::invalid_argument("perturb: disorder widths must be nonnegative");
    }
    const auto& pts = seq.points();
    std::vector<double> xs(pts.size()), amps(pts.size()), phs(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        xs[i] = pts[i].x;
        double a = pts[i].amplitude;
        double th = pts[i].phase;
        if (sigma_a > 0.0) {
            a += sigma_a * pts[i].amplitude * rng::counter_normal(seed, 0, i, 0);
            if (a < 0.0) a = 0.0; // linear couplers cannot change sign
        }
        if (sigma_phi > 0.0) {
            th += sigma_phi * rng::counter_normal(seed, 0, i, 1);
        }
        amps[i] = a;
        phs[i] = th;
    }
    auto out = CouplingSequence::from_raw(std::move(xs), std::move(amps), std::move(phs),
                                          seq.lambda0(), seq.g0(), seq.label());
    return out;
}

GapMetrics gap_metrics(const std::vector<std::complex<double>>& Gk, const KGrid& grid,
                       const TargetProfile& profile) {
    if (Gk.size() != grid.size()) throw std::invalid_argument("gap_metrics: size mismatch");
    GapMetrics m;
    std::vector<double> out_mags;
    out_mags.reserve(Gk.size());
    for (std::size_t j = 0; j < Gk.size(); ++j) {
        const double mag = std::abs(Gk[j]);
        if (profile.in_gap(grid.k[j])) {
            m.max_in_gap = std::max(m.max_in_gap, mag);
        } else {
            out_mags.push_back(mag);
        }
    }
    m.plateau = median_of(std::move(out_mags));
    m.residual = m.plateau > 0.0 ? m.max_in_gap / m.plateau : 0.0;

    double center = 0.0;
    for (const auto& g : profile.gap_intervals()) {
        const double kc = 0.5 * (g.lo + g.hi);
        // linear interpolation of the complex value at the interval center
        const auto it = std::lower_bound(grid.k.begin(), grid.k.end(), kc);
        if (it == grid.k.begin() || it == grid.k.end()) continue;
        const auto j = static_cast<std::size_t>(it - grid.k.begin());
        const double t = (kc - grid.k[j - 1]) / (grid.k[j] - grid.k[j - 1]);
        center = std::max(center, std::abs(Gk[j - 1] + t * (Gk[j] - Gk[j - 1])));
    }
    m.center_remnant = m.plateau > 0.0 ? center / m.plateau : 0.0;
    return m;
}

std::string sequence_to_text(const CouplingSequence& seq) {
    std::string out;
    out += "# gaw coupling sequence\n";
    out += "# label = " + seq.label() + "\n";
    out += "# g0 = ";
    format17(out, seq.g0());
    out += "\n# lambda0 = ";
    format17(out, seq.lambda0());
    out += "\n# columns: x_over_lambda0 amplitude phase_rad\n";
    for (const auto& p : seq.points()) {
        format17(out, p.x_lambda0);
        out += ' ';
        format17(out, p.amplitude);
        out += ' ';
        format17(out, p.phase);
        out += '\n';
    }
    return out;
}

CouplingSequence sequence_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    double g0 = 0.002, lambda0 = 0.0;
    std::string label;
    std::vector<double> xs, amps, phs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string key = line.substr(1, eq - 1);
            std::string val = line.substr(eq + 1);
            auto trim = [](std::string& s) {
                const auto a = s.find_first_not_of(" \t");
                const auto b = s.find_last_not_of(" \t\r");
                s = a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            trim(key);
            trim(val);
            if (key == "g0") g0 = std::stod(val);
            else if (key == "lambda0") lambda0 = std::stod(val);
            else if (key == "label") label = val;
            continue;
        }
        std::istringstream row(line);
        double x = 0.0, a = 0.0, p = 0.0;
        if (!(row >> x >> a >> p)) {
            throw std::invalid_argument("sequence_from_text: malformed row: " + line);
        }
        std::string extra;
        if (row >> extra) {
            throw std::invalid_argument("sequence_from_text: too many columns: " + line);
        }
        xs.push_back(x);
        amps.push_back(a);
        phs.push_back(p);
    }
    if (!(lambda0 > 0.0)) {
        throw std::invalid_argument("sequence_from_text: missing lambda0 header");
    }
    return CouplingSequence::from_lambda0_units(std::move(xs), std::move(amps), std::move(phs),
                                                lambda0, g0, std::move(label));
}

void save_sequence(const std::string& path, const CouplingSequence& seq) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("save_sequence: cannot open " + path);
    f << sequence_to_text(seq);
}

CouplingSequence load_sequence(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("load_sequence: cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return sequence_from_text(ss.str());
}

} // namespace gaw
