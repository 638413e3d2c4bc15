#pragma once

#include <cstddef>
#include <vector>

#include "twoband/matrix.hpp"

namespace twoband {

/// Spectrum as an unordered collection of complex values plus the tolerance
/// at which it is meant to be compared.
struct ComplexMultiset {
    std::vector<Complex> values;
    double tol = 1e-8;
};

/// Result of matching two equally sized complex multisets.
struct MatchReport {
    bool matched = false;
    std::vector<std::size_t> pairing; ///< pairing[i] = index in S2 matched to S1.values[i]
    double max_residual = 0.0;
};

struct SolverOptions {
    int max_dim = 128;                  ///< guard for dense_eigenvalues
    int max_iterations = 60;            ///< QR iterations per eigenvalue before NoConvergence
    double rank_tol = 1e-11;            ///< relative rank threshold of the zero-chain deflation
    double reality_snap = 1e-7;         ///< imaginary-part snap of real_distinct_eigenvalues
};

/// Eigenvalues of a square complex matrix, backward-stable: every returned
/// value is an exact eigenvalue of some M+E with ||E|| <= c(n) eps ||M||.
///
/// Pipeline: structural zero-chain deflation (staircase with column-pivoted
/// QR rank decisions, so defective zero eigenvalues come back as exact
/// zeros instead of an eps^(1/depth) ring), then radix-2 balancing,
/// Householder Hessenberg reduction and single-shift QR iteration with a
/// fixed deterministic shift strategy.
ComplexMultiset dense_eigenvalues(const ComplexMatrix& m, const SolverOptions& opts = {});
ComplexMultiset dense_eigenvalues(const RealMatrix& m, const SolverOptions& opts = {});

/// Eigenvalues of a matrix the caller knows to be oscillatory (or otherwise
/// real-spectrum with distinct positive values): imaginary parts within
/// reality_snap*(1+|lambda|) are snapped to zero, the result is sorted
/// strictly decreasing. RealityViolation / NegativeOmega /
/// DistinctnessViolation signal a broken precondition.
std::vector<double> real_distinct_eigenvalues(const RealMatrix& m, const SolverOptions& opts = {});

/// Greedy nearest-neighbour pairing after sorting both sides by
/// (modulus, argument); matched iff every pair is within tol.
MatchReport spectra_match(const ComplexMultiset& s1, const ComplexMultiset& s2, double tol);

/// True iff the multiset is invariant (within tol) under multiplication by
/// exp(i 2 pi / p).
bool rotation_invariance(const ComplexMultiset& s, int p, double tol);

/// Largest modulus with floor 1, the reference scale of zero classification.
double spectral_scale(const ComplexMultiset& s);

/// Number of values with |lambda| < tau0 * spectral_scale(s).
std::size_t count_zeros(const ComplexMultiset& s, double tau0 = 1e-5);

} // namespace twoband
