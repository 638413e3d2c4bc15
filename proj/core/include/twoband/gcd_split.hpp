#pragma once

#include <vector>

#include "twoband/band_matrix.hpp"
#include "twoband/permutation.hpp"

namespace twoband {

/// Direct sum of g = gcd(b, k) two-band blocks with coprime offsets
/// (b/g, k/g). Block i has size floor((n-i)/g) + 1 (which is 0 when i > n;
/// such blocks are materialized as degenerate BandMatrix values).
/// Conjugating the dense input by `perm` yields exactly the block-diagonal
/// direct sum of the dense blocks.
struct DirectSumDecomposition {
    Permutation perm;
    std::vector<int> block_sizes; ///< n_1..n_g
    std::vector<BandMatrix> blocks;
};

/// The permutation sigma(N_i + j) = i + (j-1) g sorting indices by residue
/// class mod g. Identity when g = 1.
Permutation gcd_permutation(int n, int b, int k);

DirectSumDecomposition split(const BandMatrix& bm);

} // namespace twoband
