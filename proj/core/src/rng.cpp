#include "twoband/rng.hpp"

namespace twoband {

std::uint64_t derive_seed(std::uint64_t master, int n, int b, int k) {
    SplitMix64 mix(master);
    std::uint64_t s = mix.next();
    s ^= SplitMix64(s + static_cast<std::uint64_t>(n)).next();
    s ^= SplitMix64(s + static_cast<std::uint64_t>(b) * 0x10001ull).next();
    s ^= SplitMix64(s + static_cast<std::uint64_t>(k) * 0x1000001ull).next();
    return s;
}

BandMatrix generate_band_matrix(const GeneratorSpec& spec) {
    if (spec.low > spec.high) fail(ErrorCode::InvalidInput, "generator needs low <= high");
    switch (spec.mode) {
        case Mode::PositiveReal:
            if (!(spec.low > 0.0)) fail(ErrorCode::InvalidInput, "positive mode needs 0 < low <= high");
            break;
        case Mode::NonnegativeReal:
            if (spec.low < 0.0) fail(ErrorCode::InvalidInput, "nonnegative mode needs 0 <= low <= high");
            break;
        case Mode::Complex:
            break;
    }

    SplitMix64 rng(spec.seed);
    auto draw = [&]() -> Complex {
        if (spec.mode == Mode::Complex) {
            const double re = rng.next_uniform(spec.low, spec.high);
            const double im = rng.next_uniform(spec.low, spec.high);
            return Complex{re, im};
        }
        return Complex{rng.next_uniform(spec.low, spec.high), 0.0};
    };

    std::vector<Complex> lower(static_cast<std::size_t>(std::max(0, spec.n - spec.b)));
    std::vector<Complex> upper(static_cast<std::size_t>(std::max(0, spec.n - spec.k)));
    for (auto& v : lower) v = draw();
    for (auto& v : upper) v = draw();
    return BandMatrix(spec.n, spec.b, spec.k, std::move(lower), std::move(upper), spec.mode);
}

} // namespace twoband
