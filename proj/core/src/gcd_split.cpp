#include "twoband/gcd_split.hpp"

#include <numeric>

namespace twoband {

namespace {

std::vector<int> residue_class_sizes(int n, int g) {
    std::vector<int> sizes(static_cast<std::size_t>(g));
    for (int i = 1; i <= g; ++i) {
        const int num = n - i;
        // floor((n-i)/g) + 1, with floor toward -inf so that i > n gives 0
        const int fl = num >= 0 ? num / g : -((-num + g - 1) / g);
        sizes[static_cast<std::size_t>(i - 1)] = fl + 1;
    }
    return sizes;
}

} // namespace

Permutation gcd_permutation(int n, int b, int k) {
    if (n < 0 || b <= 0 || k <= 0) fail(ErrorCode::BadOffset, "need n >= 0 and b, k >= 1");
    const int g = std::gcd(b, k);
    const auto sizes = residue_class_sizes(n, g);
    std::vector<int> sigma(static_cast<std::size_t>(n));
    int pos = 0;
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= sizes[static_cast<std::size_t>(i - 1)]; ++j) sigma[static_cast<std::size_t>(pos++)] = i + (j - 1) * g;
    return Permutation(std::move(sigma));
}

DirectSumDecomposition split(const BandMatrix& bm) {
    const int n = bm.n();
    const int g = std::gcd(bm.b(), bm.k());
    const int nb = bm.b() / g;
    const int nk = bm.k() / g;
    const auto sizes = residue_class_sizes(n, g);

    std::vector<BandMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(g));
    for (int i = 1; i <= g; ++i) {
        const int ni = sizes[static_cast<std::size_t>(i - 1)];
        if (ni == 0) {
            blocks.push_back(BandMatrix::degenerate(nb, nk, bm.mode()));
            continue;
        }
        // Block band entries are the input band entries restricted to the
        // i-th residue class: column c = i + (j-1) g for the lower band,
        // row r = i + (j-1) g for the upper band.
        std::vector<Complex> lower(static_cast<std::size_t>(std::max(0, ni - nb)));
        std::vector<Complex> upper(static_cast<std::size_t>(std::max(0, ni - nk)));
        for (int j = 1; j <= static_cast<int>(lower.size()); ++j) lower[static_cast<std::size_t>(j - 1)] = bm.lower_entry(i + (j - 1) * g);
        for (int j = 1; j <= static_cast<int>(upper.size()); ++j) upper[static_cast<std::size_t>(j - 1)] = bm.upper_entry(i + (j - 1) * g);
        blocks.emplace_back(ni, nb, nk, std::move(lower), std::move(upper), bm.mode());
    }

    return DirectSumDecomposition{gcd_permutation(n, bm.b(), bm.k()), sizes, std::move(blocks)};
}

} // namespace twoband
