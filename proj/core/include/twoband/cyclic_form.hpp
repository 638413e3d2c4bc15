#pragma once

#include <vector>

#include "twoband/band_matrix.hpp"
#include "twoband/permutation.hpp"

namespace twoband {

/// Index machinery of the superdiagonal-block construction for a coprime
/// two-band layout (gcd(b, k) = 1, b <= k, p = b + k):
///   gamma_i = ((i k) mod p) + 1          representatives in 1..p
///   z_i     = (gamma_i - (i k + 1)) / p  exact integers, z_0 = z_1 = 0
///   n_i     = floor((n - gamma_i) / p) + 1
///   N_i     = n_0 + ... + n_i
/// Consecutive gamma steps satisfy gamma_i - gamma_{i+1} in {-k, b},
/// equivalently z_i - z_{i+1} in {0, 1}.
struct CyclicIndexData {
    int n = 0;
    int b = 0;
    int k = 0;
    int p = 0;
    std::vector<int> gammas;   ///< gamma_0..gamma_{p-1}
    std::vector<int> zs;       ///< z_0..z_{p-1}
    std::vector<int> sizes;    ///< n_0..n_{p-1} (nonnegative)
    std::vector<int> partials; ///< N_0..N_{p-1}, N_{p-1} = n
};

enum class Bidiagonal { Lower, Upper };

/// Rectangular block with nonzeros on its main diagonal and one adjacent
/// diagonal: (t+1, t) for Lower, (t, t+1) for Upper. 1-based positions;
/// rows/cols may be zero.
struct BidiagonalBlock {
    int rows = 0;
    int cols = 0;
    Bidiagonal orientation = Bidiagonal::Lower;
    std::vector<Complex> main; ///< entries at (t, t)
    std::vector<Complex> off;  ///< entries at (t+1, t) or (t, t+1)

    ComplexMatrix to_matrix() const;
};

/// Superdiagonal block form: conjugating the (possibly transposed) dense
/// input by `perm` yields zeros everywhere except blocks C_1..C_{p-1} on the
/// block superdiagonal and C_p in the bottom-left corner. C_i is
/// sizes[i-1] x sizes[i mod p]; C_1 is Lower and C_p is Upper bidiagonal.
struct CyclicDecomposition {
    CyclicIndexData index_data;
    Permutation perm;
    std::vector<BidiagonalBlock> blocks; ///< C_1..C_p
    /// Set when the input had b > k; perm/blocks then describe the transposed
    /// instance (whose spectrum is the same).
    bool transposed = false;
};

CyclicIndexData cyclic_index_data(int n, int b, int k);

/// sigma(N_{i-1} + j) = gamma_i + (j-1) p.
Permutation cyclic_permutation(const CyclicIndexData& idx);

/// Builds the cyclic decomposition of a coprime two-band matrix with both
/// bands nonempty, applying the transpose reduction when b > k, and verifies
/// the block embedding against conjugate(perm, dense) entrywise.
CyclicDecomposition extract_cyclic(const BandMatrix& bm);

/// Dense n x n matrix with the blocks placed at their superdiagonal (and
/// corner) positions; equal to conjugate(perm, dense input) by construction.
ComplexMatrix embed_blocks(const CyclicDecomposition& dec);

} // namespace twoband
