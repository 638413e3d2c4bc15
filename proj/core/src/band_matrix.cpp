#include "twoband/band_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace twoband {

namespace {

void check_mode_entry(Complex v, Mode mode, const char* which) {
    switch (mode) {
        case Mode::PositiveReal:
            if (v.imag() != 0.0 || !(v.real() > 0.0))
                fail(ErrorCode::SignViolation, std::string(which) + " band entry must be strictly positive real");
            break;
        case Mode::NonnegativeReal:
            if (v.imag() != 0.0 || !(v.real() >= 0.0))
                fail(ErrorCode::SignViolation, std::string(which) + " band entry must be nonnegative real");
            break;
        case Mode::Complex:
            break;
    }
}

} // namespace

const char* mode_name(Mode mode) {
    switch (mode) {
        case Mode::PositiveReal: return "positive";
        case Mode::NonnegativeReal: return "nonnegative";
        case Mode::Complex: return "complex";
    }
    return "?";
}

BandMatrix::BandMatrix(int n, int b, int k, std::vector<Complex> lower, std::vector<Complex> upper, Mode mode)
    : n_(n), b_(b), k_(k), lower_(std::move(lower)), upper_(std::move(upper)), mode_(mode) {
    if (n <= 0 || b <= 0 || k <= 0)
        fail(ErrorCode::BadOffset, "n, b and k must all be at least 1");
    const auto expect_lower = static_cast<std::size_t>(std::max(0, n - b));
    const auto expect_upper = static_cast<std::size_t>(std::max(0, n - k));
    if (lower_.size() != expect_lower)
        fail(ErrorCode::LengthMismatch, "lower band must have max(0, n-b) entries");
    if (upper_.size() != expect_upper)
        fail(ErrorCode::LengthMismatch, "upper band must have max(0, n-k) entries");
    for (const auto& v : lower_) check_mode_entry(v, mode_, "lower");
    for (const auto& v : upper_) check_mode_entry(v, mode_, "upper");
}

BandMatrix BandMatrix::degenerate(int b, int k, Mode mode) {
    if (b <= 0 || k <= 0) fail(ErrorCode::BadOffset, "offsets must be at least 1");
    BandMatrix bm;
    bm.n_ = 0;
    bm.b_ = b;
    bm.k_ = k;
    bm.mode_ = mode;
    return bm;
}

BandMatrix BandMatrix::transposed() const {
    if (n_ == 0) return degenerate(k_, b_, mode_);
    return BandMatrix(n_, k_, b_, upper_, lower_, mode_);
}

PeriodInfo period_info(int n, int b, int k) {
    if (n < 0 || b <= 0 || k <= 0) fail(ErrorCode::BadOffset, "need n >= 0 and b, k >= 1");
    PeriodInfo info;
    info.g = std::gcd(b, k);
    info.p = (b + k) / info.g;
    info.m = n / info.p;
    info.q = n % info.p;
    return info;
}

PeriodInfo period_info(const BandMatrix& bm) { return period_info(bm.n(), bm.b(), bm.k()); }

ComplexMatrix to_dense(const BandMatrix& bm) {
    const int n = bm.n();
    ComplexMatrix m(n, n);
    for (int j = 1; j <= n - bm.b(); ++j) m(bm.b() + j - 1, j - 1) = bm.lower_entry(j);
    for (int i = 1; i <= n - bm.k(); ++i) m(i - 1, bm.k() + i - 1) = bm.upper_entry(i);
    return m;
}

bool zero_pattern_matches(const ComplexMatrix& m, const std::set<int>& offsets) {
    if (!m.square()) fail(ErrorCode::NotSquare, "zero-pattern check needs a square matrix");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != Complex{} && !offsets.contains(i - j)) return false;
    return true;
}

} // namespace twoband
