#pragma once

#include <vector>

#include "twoband/cyclic_form.hpp"
#include "twoband/matrix.hpp"

namespace twoband {

/// Exhaustive minor check: every minor of order <= max_order is >= -tol
/// scaled by the minor's row-wise max-magnitude product. Rectangular inputs
/// are allowed (row/column subsets of equal cardinality). Guarded
/// combinatorially: dimensions above `guard` raise TooLarge.
bool all_minors_nonnegative(const RealMatrix& m, int max_order, double tol = 1e-10, int guard = 8);

/// The three oscillatory-matrix conditions: (a) totally nonnegative,
/// (b) nonsingular, (c) positive super- and sub-diagonal entries.
/// All three together imply distinct positive real eigenvalues.
struct OscillatoryReport {
    bool tn_ok = false;
    bool nonsingular_ok = false;
    double det = 0.0;
    bool band_positive_ok = false;
    int max_checked_minor_order = 0;

    bool oscillatory() const { return tn_ok && nonsingular_ok && band_positive_ok; }
};

OscillatoryReport oscillatory_check(const RealMatrix& m, double tol = 1e-10, int guard = 8);

/// Minor det(D_j(alpha, beta)) evaluated through the product expansion: the
/// sum over all chains of intermediate ordered subsets of the products of
/// factor-block minors. alpha and beta are 1-based strictly increasing index
/// sets of equal cardinality within D_j's dimension. Must agree with the
/// direct minor of the materialized product.
double cauchy_binet_minor(const CyclicDecomposition& dec, int j, const std::vector<int>& alpha,
                          const std::vector<int>& beta, int guard = 10);

} // namespace twoband
