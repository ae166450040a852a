// tables.cpp — Built-in sequence data

#include "gaw/tables.hpp"

#include <stdexcept>

namespace gaw::tables {

namespace {
constexpr double lambda0_default = 2.0 * pi / 1.5;
}

CouplingSequence table_s1() {
    // 28 points, positions in lambda_0 units, real amplitudes in units of g0.
    std::vector<double> x = {
        -8.196, -7.901, -6.992, -6.682, -4.721, -4.396, -3.726, -3.419, -2.732, -2.441,
        -1.71,  -1.46,  -0.507, -0.006, 0.244,  0.544,  1.488,  2.459,  3.439,  4.448,
        4.861,  5.44,   5.88,   6.383,  6.846,  7.166,  7.857,  8.168};
    std::vector<double> a = {
        0.0184, 0.0291, 0.0268, 0.0146, 0.0306, 0.0502, 0.0302, 0.086,  0.0317, 0.1206,
        0.0906, 0.0748, 0.0223, 0.1413, 0.1553, 0.9543, 0.0458, 0.1441, 0.1305, 0.1152,
        0.0298, 0.0393, 0.0402, 0.0219, 0.0472, 0.0184, 0.0366, 0.0265};
    return CouplingSequence::from_lambda0_units(std::move(x), std::move(a), {},
                                                lambda0_default, 0.002, "table_s1");
}

CouplingSequence table_s2() {
    // 10 points with synthetic phases; published row order is not monotone in
    // x, the constructor re-sorts canonically.
    std::vector<double> x = {-0.909, -0.757, -0.383, -0.508, -0.0975,
                             -0.222, 0.393,  0.120,  0.641,  0.909};
    std::vector<double> a = {0.088, 0.130, 0.628, 0.429, 0.392,
                             0.591, 0.365, 0.198, 0.615, 0.243};
    std::vector<double> th = {0.388 * pi,  -0.500 * pi, -0.446 * pi, 0.500 * pi, -0.500 * pi,
                              0.500 * pi,  -0.500 * pi, 0.179 * pi,  0.0048 * pi, 0.460 * pi};
    return CouplingSequence::from_lambda0_units(std::move(x), std::move(a), std::move(th),
                                                lambda0_default, 0.002, "table_s2");
}

CouplingSequence bandgap_reference() {
    // Produced by: gaw design with the band-gap problem (k0=1.5, kd=0.1,
    // k_max=3, eta=0.1, L=17, N_max=30, w_in/w_out=60), seed 1, then pruned.
    // Regeneration instructions live in the README.
    std::vector<double> x = {
        -34.817441338709677, -33.203796410967742, -27.397186329032258, -23.217837620967742,
        -20.664183879032258, -19.313546820967742, -18.149894758064516, -14.277768420967742,
        -13.305721060967742, -8.4167137,          -7.2429338099999996, -5.0897799200000002,
        -0.75104747,         2.68822351,          7.7030595499999996,  17.271916870000001,
        17.714163190000001,  23.063961440000001,  24.121081089999999,  29.326918570000001,
        30.385619380000001};
    std::vector<double> a = {
        0.0043786500000000004, 0.0028663300000000002, 0.00096263000000000005, 0.016378330000000001,
        0.080427370000000006,  0.075900179999999994,  0.0034230500000000002,  0.12137401,
        0.27591417000000001,   0.0022189000000000001, 0.69057966999999996,    0.43129099000000002,
        0.0013036,             0.063952379999999999,  0.017731040000000001,   0.012457210000000001,
        0.073947770000000005,  0.019725440000000001,  0.060692760000000003,   0.0040000300000000001,
        0.014382630000000001};
    return CouplingSequence::from_raw(std::move(x), std::move(a), {},
                                      lambda0_default, 0.002, "bandgap_reference");
}

CouplingSequence builtin_sequence(const std::string& id) {
    if (id == "table_s1") return table_s1();
    if (id == "table_s2") return table_s2();
    if (id == "bandgap_reference") return bandgap_reference();
    throw std::invalid_argument("builtin_sequence: unknown id '" + id + "'");
}

} // namespace gaw::tables
