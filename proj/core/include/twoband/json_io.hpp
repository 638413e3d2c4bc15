#pragma once

#include <optional>
#include <string>

#include "twoband/band_matrix.hpp"
#include "twoband/cyclic_form.hpp"
#include "twoband/gcd_split.hpp"
#include "twoband/rng.hpp"
#include "twoband/spectrum.hpp"
#include "twoband/tn_verify.hpp"

namespace twoband {

/// An instance is either explicit band data or generator parameters:
///   {"n":int,"b":int,"k":int,"mode":"positive"|"nonnegative"|"complex",
///    "lower":[num|[re,im]...],"upper":[...]}
///   {"n":..,"b":..,"k":..,"mode":..,"seed":int,"low":num,"high":num}
struct InstanceSpec {
    std::optional<BandMatrix> explicit_instance;
    std::optional<GeneratorSpec> generator;
};

Mode parse_mode(const std::string& s);

InstanceSpec parse_instance(const std::string& text);
BandMatrix realize(const InstanceSpec& spec);

std::string instance_to_json(const BandMatrix& bm, int indent = -1);

/// Sweep over inclusive (n, b, k) ranges with per-cell derived seeds.
struct SweepSpec {
    int n_lo = 1, n_hi = 0;
    int b_lo = 1, b_hi = 0;
    int k_lo = 1, k_hi = 0;
    Mode mode = Mode::PositiveReal;
    std::uint64_t master_seed = 0;
    double low = 0.5;
    double high = 2.0;
    double tol = 1e-6;       ///< spectra-match tolerance factor (times max(1, rho))
    double zero_tol = 1e-5;  ///< zero-classification threshold tau0
    double phase_tol = 1e-6; ///< ray-phase tolerance
};

SweepSpec parse_sweep(const std::string& text);

std::string spectrum_report_to_json(const SpectrumReport& report, int indent = -1);
std::string direct_sum_to_json(const DirectSumDecomposition& dec, int indent = -1);
std::string cyclic_to_json(const CyclicDecomposition& dec, int indent = -1);
std::string oscillatory_to_json(const OscillatoryReport& report, int indent = -1);

} // namespace twoband
