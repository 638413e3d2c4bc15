#pragma once

#include <vector>

#include "twoband/band_matrix.hpp"
#include "twoband/rng.hpp"

namespace twoband::testutil {

inline BandMatrix ones_instance(int n, int b, int k, Mode mode = Mode::PositiveReal) {
    std::vector<Complex> lower(static_cast<std::size_t>(std::max(0, n - b)), Complex{1.0, 0.0});
    std::vector<Complex> upper(static_cast<std::size_t>(std::max(0, n - k)), Complex{1.0, 0.0});
    return BandMatrix(n, b, k, std::move(lower), std::move(upper), mode);
}

inline BandMatrix random_instance(int n, int b, int k, std::uint64_t seed, Mode mode = Mode::PositiveReal,
                                  double low = 0.5, double high = 2.0) {
    return generate_band_matrix(GeneratorSpec{n, b, k, mode, seed, low, high});
}

} // namespace twoband::testutil
