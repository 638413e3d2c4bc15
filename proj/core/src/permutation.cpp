#include "twoband/permutation.hpp"

#include <numeric>

namespace twoband {

Permutation::Permutation(std::vector<int> sigma) : sigma_(std::move(sigma)) {
    const int n = static_cast<int>(sigma_.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : sigma_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            fail(ErrorCode::InvalidInput, "sigma is not a bijection of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 1);
    return Permutation(std::move(s));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(sigma_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)[i] - 1)] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)[i] != i) return false;
    return true;
}

} // namespace twoband
