#include "twoband/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace twoband {

CountPrediction predicted_counts(int n, int b, int k) {
    if (n < 1 || b < 1 || k < 1) fail(ErrorCode::BadOffset, "need n, b, k >= 1");
    CountPrediction cp;
    cp.g = std::gcd(b, k);
    cp.p = (b + k) / cp.g;

    const int quot = n / cp.g;
    const int rem = n % cp.g;
    cp.zero_multiplicity = cp.g * (quot % cp.p) + rem * (((quot + 1) % cp.p) - (quot % cp.p));

    cp.per_t_counts.resize(static_cast<std::size_t>(cp.g));
    for (int t = 1; t <= cp.g; ++t) {
        // n_t = floor((n-t)/g) + 1, zero when t > n
        const int num = n - t;
        const int nt = (num >= 0 ? num / cp.g : -((-num + cp.g - 1) / cp.g)) + 1;
        cp.per_t_counts[static_cast<std::size_t>(t - 1)] = nt > 0 ? nt / cp.p : 0;
    }
    cp.nonzero_per_ray = std::accumulate(cp.per_t_counts.begin(), cp.per_t_counts.end(), 0);

    if (cp.p * cp.nonzero_per_ray + cp.zero_multiplicity != n)
        fail(ErrorCode::InconsistentCounts, "count formulas do not add up to n");
    return cp;
}

ComplexMatrix block_product(const CyclicDecomposition& dec, int j) {
    const int p = dec.index_data.p;
    if (j < 1 || j > p) fail(ErrorCode::ShapeMismatch, "block index out of range");
    ComplexMatrix prod = dec.blocks[static_cast<std::size_t>(j - 1)].to_matrix();
    for (int step = 1; step < p; ++step) {
        const int idx = (j - 1 + step) % p;
        prod = multiply(prod, dec.blocks[static_cast<std::size_t>(idx)].to_matrix());
    }
    if (!prod.square() || prod.rows() != dec.index_data.sizes[static_cast<std::size_t>(j - 1)])
        fail(ErrorCode::ShapeMismatch, "cyclic product has the wrong shape");
    return prod;
}

int base_index(const CyclicDecomposition& dec) {
    const auto& sizes = dec.index_data.sizes;
    const int m = *std::min_element(sizes.begin(), sizes.end());
    for (int j = 1; j <= dec.index_data.p; ++j)
        if (sizes[static_cast<std::size_t>(j - 1)] == m) return j;
    fail(ErrorCode::ShapeMismatch, "no minimal block found");
}

namespace {

// Nonzero eigenvalues of the base product of one coprime block, as p-th
// roots fanned over the rays. Returns the moduli (radii) actually used.
struct BlockSpectrum {
    std::vector<double> radii;      ///< descending moduli, one entry per root family
    std::vector<Complex> nonzeros;  ///< radii.size() * p eigenvalues
};

BlockSpectrum fan_block(const BandMatrix& block, const SolverOptions& opts) {
    BlockSpectrum out;
    const PeriodInfo info = period_info(block);
    const int p = info.p;
    if (block.n() == 0 || block.lower_empty() || block.upper_empty() || info.m == 0) return out;

    const CyclicDecomposition dec = extract_cyclic(block);
    const ComplexMatrix d = block_product(dec, base_index(dec));

    // The p-th root amplifies any zero/nonzero misclassification of omega
    // into an O(|omega|^(1/p)) eigenvalue discrepancy, so the product is
    // solved with a rank tolerance near its structural noise floor
    // (~n eps relative) instead of the looser default that suits A itself.
    SolverOptions d_opts = opts;
    d_opts.rank_tol = std::min(opts.rank_tol, 1e-13);

    std::vector<Complex> omegas;
    if (block.mode() == Mode::PositiveReal) {
        std::vector<double> real_omegas;
        try {
            real_omegas = real_distinct_eigenvalues(real_part_checked(d), d_opts);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NoConvergence || e.code() == ErrorCode::TooLarge)
                fail(ErrorCode::OracleFailure, e.what());
            throw;
        }
        omegas.reserve(real_omegas.size());
        for (double w : real_omegas) omegas.emplace_back(w, 0.0);
    } else {
        ComplexMultiset ms;
        try {
            ms = dense_eigenvalues(d, d_opts);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NoConvergence || e.code() == ErrorCode::TooLarge)
                fail(ErrorCode::OracleFailure, e.what());
            throw;
        }
        // Nonnegative/complex band products may be genuinely singular; the
        // structural zeros come back as exact zeros from the deflation
        // stage, everything else is fanned.
        for (const Complex& w : ms.values)
            if (w != Complex{}) omegas.push_back(w);
    }

    out.radii.reserve(omegas.size());
    out.nonzeros.reserve(omegas.size() * static_cast<std::size_t>(p));
    for (const Complex& w : omegas) {
        const double radius = std::pow(std::abs(w), 1.0 / p);
        out.radii.push_back(radius);
        // Principal p-th root; any branch yields the same p-element family.
        const double base_arg = std::arg(w) / p;
        for (int j = 0; j < p; ++j)
            out.nonzeros.push_back(std::polar(radius, base_arg + 2.0 * std::numbers::pi * j / p));
    }
    return out;
}

} // namespace

SpectrumReport structured_eigenvalues(const BandMatrix& bm, const SolverOptions& opts) {
    const PeriodInfo info = period_info(bm);
    SpectrumReport report;
    report.p = info.p;
    report.g = info.g;
    report.source = SpectrumReport::Source::Structured;

    const DirectSumDecomposition dec = split(bm);

    std::vector<double> radii;
    std::vector<Complex> nonzeros;
    for (const BandMatrix& block : dec.blocks) {
        BlockSpectrum bs = fan_block(block, opts);
        radii.insert(radii.end(), bs.radii.begin(), bs.radii.end());
        nonzeros.insert(nonzeros.end(), bs.nonzeros.begin(), bs.nonzeros.end());
    }
    std::stable_sort(radii.begin(), radii.end(), std::greater<>());

    report.zero_multiplicity = bm.n() - static_cast<int>(nonzeros.size());
    if (report.zero_multiplicity < 0)
        fail(ErrorCode::InconsistentCounts, "more nonzero eigenvalues than the dimension admits");

    if (bm.mode() == Mode::PositiveReal) {
        const CountPrediction cp = predicted_counts(bm.n(), bm.b(), bm.k());
        if (cp.zero_multiplicity != report.zero_multiplicity ||
            cp.nonzero_per_ray != static_cast<int>(radii.size()))
            fail(ErrorCode::InconsistentCounts, "structured spectrum disagrees with the counting formulas");
    }

    report.rays.reserve(static_cast<std::size_t>(info.p));
    for (int j = 0; j < info.p; ++j)
        report.rays.push_back({j, 2.0 * std::numbers::pi * j / info.p, radii});

    std::sort(nonzeros.begin(), nonzeros.end(), [](const Complex& a, const Complex& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        return std::arg(a) < std::arg(b);
    });
    report.eigenvalues = std::move(nonzeros);
    report.eigenvalues.insert(report.eigenvalues.end(), static_cast<std::size_t>(report.zero_multiplicity), Complex{});
    return report;
}

} // namespace twoband
