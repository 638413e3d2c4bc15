#pragma once

#include <set>
#include <vector>

#include "twoband/matrix.hpp"

namespace twoband {

/// Entry-domain regime of a two-band matrix. PositiveReal is the regime with
/// the full structured-spectrum guarantees (distinct positive radii);
/// NonnegativeReal keeps the ray structure; Complex keeps only rotation
/// invariance of the spectrum.
enum class Mode { PositiveReal, NonnegativeReal, Complex };

const char* mode_name(Mode mode);

/// Square matrix whose only nonzero entries sit on the diagonals (b+j, j)
/// and (i, k+i), 1-based. Storage is 0-based: lower()[j-1] = a(b+j, j),
/// upper()[i-1] = a(i, k+i); index conversion is confined to this type.
class BandMatrix {
public:
    /// Validating constructor. Rejects n = 0 or zero offsets (BadOffset),
    /// wrong vector lengths (LengthMismatch), and entries breaking the mode's
    /// sign constraint (SignViolation).
    BandMatrix(int n, int b, int k, std::vector<Complex> lower, std::vector<Complex> upper, Mode mode);

    /// Zero-dimensional placeholder block (shows up in a direct-sum
    /// decomposition when g exceeds n). Not constructible through the
    /// validating path and not accepted by the JSON schema.
    static BandMatrix degenerate(int b, int k, Mode mode);

    int n() const noexcept { return n_; }
    int b() const noexcept { return b_; }
    int k() const noexcept { return k_; }
    Mode mode() const noexcept { return mode_; }

    const std::vector<Complex>& lower() const noexcept { return lower_; }
    const std::vector<Complex>& upper() const noexcept { return upper_; }

    /// a(b+j, j) for 1-based j in 1..n-b.
    Complex lower_entry(int j) const { return lower_[static_cast<std::size_t>(j - 1)]; }
    /// a(i, k+i) for 1-based i in 1..n-k.
    Complex upper_entry(int i) const { return upper_[static_cast<std::size_t>(i - 1)]; }

    int lower_length() const noexcept { return static_cast<int>(lower_.size()); }
    int upper_length() const noexcept { return static_cast<int>(upper_.size()); }
    bool lower_empty() const noexcept { return lower_.empty(); }
    bool upper_empty() const noexcept { return upper_.empty(); }

    /// Swaps the roles of the two bands: the transpose of a two-band matrix
    /// is the two-band matrix with offsets (k, b) and the band vectors
    /// exchanged. Spectrum-preserving.
    BandMatrix transposed() const;

private:
    BandMatrix() = default;

    int n_ = 0;
    int b_ = 1;
    int k_ = 1;
    std::vector<Complex> lower_;
    std::vector<Complex> upper_;
    Mode mode_ = Mode::PositiveReal;
};

/// Period and gcd invariants of the band layout. Depends only on (n, b, k).
struct PeriodInfo {
    int g = 1; ///< gcd(b, k)
    int p = 1; ///< period (b + k) / g
    int m = 0; ///< floor(n / p)
    int q = 0; ///< n mod p
};

PeriodInfo period_info(const BandMatrix& bm);
PeriodInfo period_info(int n, int b, int k);

/// Dense realization: n x n grid with the band entries placed at
/// (b+j, j) and (i, k+i) and exact zeros elsewhere.
ComplexMatrix to_dense(const BandMatrix& bm);

/// True iff every nonzero entry of M lies on a diagonal i - j in `offsets`
/// (1-based row minus column; the lower band is +b, the upper band is -k).
bool zero_pattern_matches(const ComplexMatrix& m, const std::set<int>& offsets);

} // namespace twoband
