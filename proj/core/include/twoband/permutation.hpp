#pragma once

#include <vector>

#include "twoband/matrix.hpp"

namespace twoband {

/// Bijection sigma of {1..n}, stored as 1-based images. Conjugation follows
/// b(i, j) = a(sigma_i, sigma_j), i.e. B = P A P^T for the permutation
/// matrix with p(j, sigma_j) = 1.
class Permutation {
public:
    Permutation() = default; ///< empty permutation
    explicit Permutation(std::vector<int> sigma);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(sigma_.size()); }

    /// Image of 1-based position i.
    int operator[](int i) const { return sigma_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& sigma() const noexcept { return sigma_; }

    Permutation inverse() const;

    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> sigma_;
};

/// result(i, j) = M(sigma_i, sigma_j), 1-based semantics.
template <typename T>
Matrix<T> conjugate(const Permutation& perm, const Matrix<T>& m) {
    if (!m.square() || m.rows() != perm.size())
        fail(ErrorCode::DimensionMismatch, "permutation and matrix dimensions disagree");
    Matrix<T> r(m.rows(), m.cols());
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j) r(i - 1, j - 1) = m(perm[i] - 1, perm[j] - 1);
    return r;
}

} // namespace twoband
