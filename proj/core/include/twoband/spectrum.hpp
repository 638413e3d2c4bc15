#pragma once

#include <vector>

#include "twoband/band_matrix.hpp"
#include "twoband/cyclic_form.hpp"
#include "twoband/eigen_solver.hpp"
#include "twoband/gcd_split.hpp"

namespace twoband {

/// Closed-form eigenvalue counting for a two-band layout with positive
/// entries: per residue block t (of g), floor(n_t / p) nonzero radii appear
/// on each of the p rays, and the zero eigenvalue fills the rest.
struct CountPrediction {
    int g = 1;
    int p = 1;
    int zero_multiplicity = 0;
    int nonzero_per_ray = 0;           ///< sum over t of per_t_counts
    std::vector<int> per_t_counts;     ///< s-range bound per block, t = 1..g
};

CountPrediction predicted_counts(int n, int b, int k);

/// Spectrum of a two-band matrix organized by rays: for each j in 0..p-1 the
/// phase 2 pi j / p and the (shared) descending list of nonzero radii, plus
/// the flat eigenvalue list of length n.
struct SpectrumReport {
    int p = 1;
    int g = 1;
    int zero_multiplicity = 0;
    struct Ray {
        int j = 0;
        double phase = 0.0;
        std::vector<double> radii;
    };
    std::vector<Ray> rays;
    std::vector<Complex> eigenvalues;
    enum class Source { Structured, Oracle } source = Source::Structured;
};

/// D_j = C_j C_{j+1} ... (cyclically, p factors), a square matrix of size
/// sizes[j-1]. j is 1-based.
ComplexMatrix block_product(const CyclicDecomposition& dec, int j);

/// Smallest 1-based j with sizes[j-1] = min block size.
int base_index(const CyclicDecomposition& dec);

/// Full structured pipeline: gcd split, cyclic form per block, eigenvalues
/// of the base product fanned across the p rays via p-th roots, zeros padded
/// structurally. PositiveReal mode goes through the real-distinct solver and
/// cross-checks predicted_counts.
SpectrumReport structured_eigenvalues(const BandMatrix& bm, const SolverOptions& opts = {});

} // namespace twoband
