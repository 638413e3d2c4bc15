#include "twoband/tn_verify.hpp"

#include <algorithm>
#include <cmath>

namespace twoband {

namespace {

// Lexicographic enumeration of r-element 0-based index subsets of 0..n-1.
bool next_combination(std::vector<int>& c, int n) {
    const int r = static_cast<int>(c.size());
    for (int i = r - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - r + i) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int r) {
    std::vector<int> c(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i;
    return c;
}

// Magnitude scale of a minor: product over its rows of the largest selected
// entry magnitude. Keeps the nonnegativity tolerance meaningful for minors
// built from O(1) entries as well as products of many of them.
double minor_scale(const RealMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    double scale = 1.0;
    for (int i : rows) {
        double rowmax = 0.0;
        for (int j : cols) rowmax = std::max(rowmax, std::abs(m(i, j)));
        scale *= rowmax;
    }
    return std::max(1.0, scale);
}

} // namespace

bool all_minors_nonnegative(const RealMatrix& m, int max_order, double tol, int guard) {
    if (m.rows() > guard || m.cols() > guard)
        fail(ErrorCode::TooLarge, "matrix exceeds the combinatorial minor guard");
    const int top = std::min({max_order, m.rows(), m.cols()});
    for (int r = 1; r <= top; ++r) {
        for (auto rows = first_combination(r);;) {
            for (auto cols = first_combination(r);;) {
                const double d = determinant(m.select(rows, cols));
                if (d < -tol * minor_scale(m, rows, cols)) return false;
                if (!next_combination(cols, m.cols())) break;
            }
            if (!next_combination(rows, m.rows())) break;
        }
    }
    return true;
}

OscillatoryReport oscillatory_check(const RealMatrix& m, double tol, int guard) {
    if (!m.square()) fail(ErrorCode::NotSquare, "oscillatory check needs a square matrix");
    if (m.rows() > guard) fail(ErrorCode::TooLarge, "matrix exceeds the combinatorial minor guard");
    const int n = m.rows();

    OscillatoryReport report;
    report.max_checked_minor_order = n;
    report.tn_ok = all_minors_nonnegative(m, n, tol, guard);
    report.det = determinant(m);

    double scale = 1.0;
    for (int i = 0; i < n; ++i) {
        double rowmax = 0.0;
        for (int j = 0; j < n; ++j) rowmax = std::max(rowmax, std::abs(m(i, j)));
        scale *= rowmax;
    }
    report.nonsingular_ok = std::abs(report.det) > tol * std::max(1.0, scale);

    report.band_positive_ok = true;
    for (int i = 0; i + 1 < n; ++i)
        if (!(m(i, i + 1) > 0.0) || !(m(i + 1, i) > 0.0)) { report.band_positive_ok = false; break; }
    return report;
}

double cauchy_binet_minor(const CyclicDecomposition& dec, int j, const std::vector<int>& alpha,
                          const std::vector<int>& beta, int guard) {
    const int p = dec.index_data.p;
    if (j < 1 || j > p) fail(ErrorCode::ShapeMismatch, "block index out of range");
    if (alpha.size() != beta.size()) fail(ErrorCode::SizeMismatch, "alpha and beta must have equal cardinality");
    const int r = static_cast<int>(alpha.size());

    std::vector<RealMatrix> factors;
    factors.reserve(static_cast<std::size_t>(p));
    for (int s = 0; s < p; ++s) {
        const auto& blk = dec.blocks[static_cast<std::size_t>((j - 1 + s) % p)];
        if (blk.rows > guard || blk.cols > guard)
            fail(ErrorCode::TooLarge, "factor exceeds the combinatorial guard");
        factors.push_back(real_part_checked(blk.to_matrix()));
    }
    const int dim = factors.front().rows();
    auto in_range = [&](const std::vector<int>& s, int n) {
        int prev = 0;
        for (int v : s) {
            if (v <= prev || v > n) return false;
            prev = v;
        }
        return true;
    };
    if (!in_range(alpha, dim) || !in_range(beta, factors.back().cols()))
        fail(ErrorCode::ShapeMismatch, "alpha or beta out of range");
    if (r == 0) return 1.0;

    auto to_zero_based = [](const std::vector<int>& s) {
        std::vector<int> z(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) z[i] = s[i] - 1;
        return z;
    };

    // Chain DP across the factors: level s holds, for every r-subset of the
    // columns of factor s, the accumulated sum of minor products.
    std::vector<std::vector<int>> subsets_prev{to_zero_based(alpha)};
    std::vector<double> values_prev{1.0};
    for (int s = 0; s < p; ++s) {
        const RealMatrix& f = factors[static_cast<std::size_t>(s)];
        std::vector<std::vector<int>> subsets_next;
        std::vector<double> values_next;
        if (s == p - 1) {
            subsets_next.push_back(to_zero_based(beta));
        } else {
            if (f.cols() < r) return 0.0; // no admissible chain continues
            for (auto c = first_combination(r);;) {
                subsets_next.push_back(c);
                if (!next_combination(c, f.cols())) break;
            }
        }
        values_next.assign(subsets_next.size(), 0.0);
        for (std::size_t a = 0; a < subsets_prev.size(); ++a) {
            if (values_prev[a] == 0.0) continue;
            for (std::size_t b = 0; b < subsets_next.size(); ++b)
                values_next[b] += values_prev[a] * determinant(f.select(subsets_prev[a], subsets_next[b]));
        }
        subsets_prev = std::move(subsets_next);
        values_prev = std::move(values_next);
    }
    return values_prev.front();
}

} // namespace twoband
