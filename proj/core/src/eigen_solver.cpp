#include "twoband/eigen_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace twoband {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Complex unit_sign(Complex z) { return z == Complex{} ? Complex{1.0, 0.0} : z / std::abs(z); }

// Householder reflector H = I - tau v v^H with (H x) = -sign(x0)||x|| e1.
// Returns tau = 0 for an already-collapsed column.
double make_reflector(std::vector<Complex>& v) {
    double norm2 = 0.0;
    for (const auto& z : v) norm2 += std::norm(z);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) return 0.0;
    double tail = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) tail += std::norm(v[i]);
    if (tail == 0.0 && v[0].imag() == 0.0 && v[0].real() < 0.0) return 0.0; // already -||x|| e1
    v[0] += unit_sign(v[0]) * norm;
    double vnorm2 = 0.0;
    for (const auto& z : v) vnorm2 += std::norm(z);
    if (vnorm2 == 0.0) return 0.0;
    return 2.0 / vnorm2;
}

// A(row0.., col0..) -= tau v (v^H A(row0.., col0..))
void reflect_left(ComplexMatrix& a, const std::vector<Complex>& v, double tau, int row0, int col0) {
    if (tau == 0.0) return;
    const int nv = static_cast<int>(v.size());
    for (int j = col0; j < a.cols(); ++j) {
        Complex s{};
        for (int i = 0; i < nv; ++i) s += std::conj(v[static_cast<std::size_t>(i)]) * a(row0 + i, j);
        s *= tau;
        for (int i = 0; i < nv; ++i) a(row0 + i, j) -= s * v[static_cast<std::size_t>(i)];
    }
}

// A(row0.., col0..) -= tau (A(row0.., col0..) v) v^H
void reflect_right(ComplexMatrix& a, const std::vector<Complex>& v, double tau, int row0, int col0) {
    if (tau == 0.0) return;
    const int nv = static_cast<int>(v.size());
    for (int i = row0; i < a.rows(); ++i) {
        Complex s{};
        for (int j = 0; j < nv; ++j) s += a(i, col0 + j) * v[static_cast<std::size_t>(j)];
        s *= tau;
        for (int j = 0; j < nv; ++j) a(i, col0 + j) -= s * std::conj(v[static_cast<std::size_t>(j)]);
    }
}

struct Cpqr {
    ComplexMatrix r;       ///< upper-triangular factor (in-place storage)
    std::vector<int> perm; ///< perm[t] = original column at position t
    std::vector<double> diag_mag;
};

// Householder QR with column pivoting; at desk scale the remaining column
// norms are recomputed exactly at every step.
Cpqr cpqr(ComplexMatrix a) {
    const int m = a.rows();
    const int n = a.cols();
    Cpqr out;
    out.perm.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out.perm[static_cast<std::size_t>(j)] = j;

    const int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
        int best = t;
        double best_norm = -1.0;
        for (int j = t; j < n; ++j) {
            double s = 0.0;
            for (int i = t; i < m; ++i) s += std::norm(a(i, j));
            if (s > best_norm) { best_norm = s; best = j; }
        }
        if (best != t) {
            for (int i = 0; i < m; ++i) std::swap(a(i, t), a(i, best));
            std::swap(out.perm[static_cast<std::size_t>(t)], out.perm[static_cast<std::size_t>(best)]);
        }
        if (best_norm == 0.0) break;
        std::vector<Complex> v(static_cast<std::size_t>(m - t));
        for (int i = t; i < m; ++i) v[static_cast<std::size_t>(i - t)] = a(i, t);
        const double tau = make_reflector(v);
        reflect_left(a, v, tau, t, t);
        for (int i = t + 1; i < m; ++i) a(i, t) = Complex{};
    }
    out.diag_mag.resize(static_cast<std::size_t>(steps));
    for (int t = 0; t < steps; ++t) out.diag_mag[static_cast<std::size_t>(t)] = std::abs(a(t, t));
    out.r = std::move(a);
    return out;
}

int rank_from_cpqr(const Cpqr& f, double rank_tol) {
    if (f.diag_mag.empty() || f.diag_mag[0] == 0.0) return 0;
    const double thresh = rank_tol * f.diag_mag[0];
    int r = 0;
    for (double d : f.diag_mag)
        if (d > thresh) ++r;
    return r;
}

// Orthonormal columns spanning ker(A), dimension n - rank.
ComplexMatrix kernel_columns(const ComplexMatrix& a, double rank_tol) {
    const int n = a.cols();
    const Cpqr f = cpqr(a);
    const int r = rank_from_cpqr(f, rank_tol);
    const int k = n - r;
    ComplexMatrix y(n, k);
    if (k == 0) return y;
    // Solve R11 W = R12, kernel (permuted coords) = [-W; I].
    for (int j = 0; j < k; ++j) {
        std::vector<Complex> w(static_cast<std::size_t>(r));
        for (int i = r - 1; i >= 0; --i) {
            Complex s = f.r(i, r + j);
            for (int l = i + 1; l < r; ++l) s -= f.r(i, l) * w[static_cast<std::size_t>(l)];
            w[static_cast<std::size_t>(i)] = s / f.r(i, i);
        }
        for (int t = 0; t < r; ++t) y(f.perm[static_cast<std::size_t>(t)], j) = -w[static_cast<std::size_t>(t)];
        y(f.perm[static_cast<std::size_t>(r + j)], j) = Complex{1.0, 0.0};
    }
    return y;
}

// Full m x m unitary whose first cols(Y) columns span range(Y)
// (Y must have full column rank).
ComplexMatrix full_q(ComplexMatrix y) {
    const int m = y.rows();
    const int k = y.cols();
    std::vector<std::vector<Complex>> vs;
    std::vector<double> taus;
    for (int t = 0; t < std::min(m, k); ++t) {
        std::vector<Complex> v(static_cast<std::size_t>(m - t));
        for (int i = t; i < m; ++i) v[static_cast<std::size_t>(i - t)] = y(i, t);
        const double tau = make_reflector(v);
        reflect_left(y, v, tau, t, t);
        vs.push_back(std::move(v));
        taus.push_back(tau);
    }
    ComplexMatrix q = ComplexMatrix::identity(m);
    for (int t = static_cast<int>(vs.size()) - 1; t >= 0; --t) reflect_left(q, vs[static_cast<std::size_t>(t)], taus[static_cast<std::size_t>(t)], t, 0);
    return q;
}

ComplexMatrix conj_transpose(const ComplexMatrix& a) {
    ComplexMatrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
    return t;
}

// Unitarily deflates the zero-eigenvalue Jordan structure: repeatedly
// compresses away ker(B), so the returned core has no zero eigenvalue and
// the zero multiplicity is exact. This is what keeps defective zeros from
// surfacing as an eps^(1/depth) ring in the QR stage.
std::pair<int, ComplexMatrix> staircase_deflate(ComplexMatrix b, double rank_tol) {
    int zeros = 0;
    while (b.rows() > 0) {
        const ComplexMatrix y = kernel_columns(b, rank_tol);
        const int k = y.cols();
        if (k == 0) break;
        const ComplexMatrix z = full_q(y);
        const ComplexMatrix b2 = multiply(conj_transpose(z), multiply(b, z));
        const int rest = b.rows() - k;
        ComplexMatrix next(rest, rest);
        for (int i = 0; i < rest; ++i)
            for (int j = 0; j < rest; ++j) next(i, j) = b2(k + i, k + j);
        b = std::move(next);
        zeros += k;
    }
    return {zeros, std::move(b)};
}

// Parlett-Reinsch style radix-2 diagonal scaling; exact in floating point.
void balance(ComplexMatrix& a) {
    const int n = a.rows();
    bool converged = false;
    int guard = 0;
    while (!converged && guard++ < 100) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            const double s = c + r;
            double f = 1.0;
            while (c < r / 2.0) { c *= 2.0; r /= 2.0; f *= 2.0; }
            while (c >= r * 2.0) { c /= 2.0; r *= 2.0; f /= 2.0; }
            if (f != 1.0 && (c + r) < 0.95 * s) {
                converged = false;
                for (int j = 0; j < n; ++j) a(i, j) /= f;
                for (int j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

void hessenberg(ComplexMatrix& a) {
    const int n = a.rows();
    for (int c = 0; c + 2 < n; ++c) {
        std::vector<Complex> v(static_cast<std::size_t>(n - c - 1));
        for (int i = c + 1; i < n; ++i) v[static_cast<std::size_t>(i - c - 1)] = a(i, c);
        const double tau = make_reflector(v);
        reflect_left(a, v, tau, c + 1, c);
        reflect_right(a, v, tau, 0, c + 1);
        for (int i = c + 2; i < n; ++i) a(i, c) = Complex{};
    }
}

struct Givens {
    double c = 1.0;
    Complex s{};
};

Givens make_givens(Complex f, Complex g) {
    Givens rot;
    if (g == Complex{}) return rot;
    if (f == Complex{}) {
        rot.c = 0.0;
        rot.s = std::conj(g) / std::abs(g);
        return rot;
    }
    const double d = std::hypot(std::abs(f), std::abs(g));
    rot.c = std::abs(f) / d;
    rot.s = unit_sign(f) * std::conj(g) / d;
    return rot;
}

// Roots of x^2 - tr x + det = 0, larger-magnitude root first.
std::pair<Complex, Complex> quadratic_roots(Complex tr, Complex det) {
    const Complex disc = std::sqrt(tr * tr - 4.0 * det);
    const Complex r1 = std::abs(tr + disc) >= std::abs(tr - disc) ? (tr + disc) / 2.0 : (tr - disc) / 2.0;
    if (r1 == Complex{}) return {Complex{}, Complex{}};
    return {r1, det / r1};
}

// Single-shift explicit QR with deflation on a complex Hessenberg matrix.
std::vector<Complex> hessenberg_qr(ComplexMatrix h, const SolverOptions& opts) {
    const int n = h.rows();
    std::vector<Complex> eig(static_cast<std::size_t>(n));
    double hnorm = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = std::max(0, i - 1); j < n; ++j) row += std::abs(h(i, j));
        hnorm = std::max(hnorm, row);
    }
    if (hnorm == 0.0) return eig; // exactly nilpotent-triangular: all zeros

    int hi = n - 1;
    int its = 0;
    while (hi >= 0) {
        // Deflation scan: smallest l with a negligible subdiagonal below it.
        int l = hi;
        while (l > 0) {
            double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (s == 0.0) s = hnorm;
            if (std::abs(h(l, l - 1)) <= kEps * s) {
                h(l, l - 1) = Complex{};
                break;
            }
            --l;
        }
        if (l == hi) {
            eig[static_cast<std::size_t>(hi)] = h(hi, hi);
            --hi;
            its = 0;
            continue;
        }
        if (l == hi - 1) {
            const Complex tr = h(l, l) + h(hi, hi);
            const Complex det = h(l, l) * h(hi, hi) - h(l, hi) * h(hi, l);
            const auto [r1, r2] = quadratic_roots(tr, det);
            eig[static_cast<std::size_t>(hi)] = r1;
            eig[static_cast<std::size_t>(l)] = r2;
            hi -= 2;
            its = 0;
            continue;
        }
        if (its >= opts.max_iterations) fail(ErrorCode::NoConvergence, "QR iteration cap exceeded");

        Complex shift;
        if (its > 0 && its % 10 == 0) {
            // Deterministic exceptional shift to break symmetry stalls.
            shift = Complex{std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2)), 0.0};
        } else {
            const Complex tr = h(hi - 1, hi - 1) + h(hi, hi);
            const Complex det = h(hi - 1, hi - 1) * h(hi, hi) - h(hi - 1, hi) * h(hi, hi - 1);
            const auto [r1, r2] = quadratic_roots(tr, det);
            shift = std::abs(r1 - h(hi, hi)) <= std::abs(r2 - h(hi, hi)) ? r1 : r2;
        }

        for (int i = l; i <= hi; ++i) h(i, i) -= shift;
        std::vector<Givens> rots(static_cast<std::size_t>(hi - l));
        for (int i = l; i < hi; ++i) {
            const Givens rot = make_givens(h(i, i), h(i + 1, i));
            rots[static_cast<std::size_t>(i - l)] = rot;
            for (int j = i; j <= hi; ++j) {
                const Complex x = h(i, j);
                const Complex y = h(i + 1, j);
                h(i, j) = rot.c * x + rot.s * y;
                h(i + 1, j) = -std::conj(rot.s) * x + rot.c * y;
            }
            h(i + 1, i) = Complex{};
        }
        for (int i = l; i < hi; ++i) {
            const Givens rot = rots[static_cast<std::size_t>(i - l)];
            const int rmax = std::min(i + 1, hi);
            for (int r = l; r <= rmax; ++r) {
                const Complex x = h(r, i);
                const Complex y = h(r, i + 1);
                h(r, i) = rot.c * x + std::conj(rot.s) * y;
                h(r, i + 1) = -rot.s * x + rot.c * y;
            }
        }
        for (int i = l; i <= hi; ++i) h(i, i) += shift;
        ++its;
    }
    return eig;
}

void sort_spectrum(std::vector<Complex>& v) {
    std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        return std::arg(a) < std::arg(b);
    });
}

} // namespace

ComplexMultiset dense_eigenvalues(const ComplexMatrix& m, const SolverOptions& opts) {
    if (!m.square()) fail(ErrorCode::NotSquare, "eigenvalues need a square matrix");
    if (m.rows() > opts.max_dim) fail(ErrorCode::TooLarge, "matrix exceeds the solver dimension cap");

    auto [zeros, core] = staircase_deflate(m, opts.rank_tol);
    std::vector<Complex> values;
    if (core.rows() > 0) {
        balance(core);
        hessenberg(core);
        values = hessenberg_qr(std::move(core), opts);
    }
    values.insert(values.end(), static_cast<std::size_t>(zeros), Complex{});
    sort_spectrum(values);
    return ComplexMultiset{std::move(values), 1e-8};
}

ComplexMultiset dense_eigenvalues(const RealMatrix& m, const SolverOptions& opts) {
    return dense_eigenvalues(to_complex(m), opts);
}

std::vector<double> real_distinct_eigenvalues(const RealMatrix& m, const SolverOptions& opts) {
    const ComplexMultiset ms = dense_eigenvalues(m, opts);
    std::vector<double> out;
    out.reserve(ms.values.size());
    for (const Complex& z : ms.values) {
        if (std::abs(z.imag()) > opts.reality_snap * (1.0 + std::abs(z)))
            fail(ErrorCode::RealityViolation, "eigenvalue has a significant imaginary part");
        out.push_back(z.real());
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    for (double v : out)
        if (!(v > 0.0)) fail(ErrorCode::NegativeOmega, "eigenvalue is not strictly positive");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (!(out[i] < out[i - 1])) fail(ErrorCode::DistinctnessViolation, "eigenvalues are not pairwise distinct");
    return out;
}

MatchReport spectra_match(const ComplexMultiset& s1, const ComplexMultiset& s2, double tol) {
    if (s1.values.size() != s2.values.size())
        fail(ErrorCode::SizeMismatch, "spectra have different cardinalities");
    const std::size_t n = s1.values.size();

    auto sorted_indices = [](const std::vector<Complex>& v) {
        std::vector<std::size_t> idx(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            const double ma = std::abs(v[a]), mb = std::abs(v[b]);
            if (ma != mb) return ma < mb;
            return std::arg(v[a]) < std::arg(v[b]);
        });
        return idx;
    };

    const auto order1 = sorted_indices(s1.values);
    MatchReport report;
    report.pairing.assign(n, 0);
    std::vector<char> used(n, 0);
    double max_residual = 0.0;
    for (std::size_t i : order1) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            const double d = std::abs(s1.values[i] - s2.values[j]);
            if (d < best) { best = d; best_j = j; }
        }
        used[best_j] = 1;
        report.pairing[i] = best_j;
        max_residual = std::max(max_residual, best);
    }
    report.max_residual = n == 0 ? 0.0 : max_residual;
    report.matched = report.max_residual <= tol;
    return report;
}

bool rotation_invariance(const ComplexMultiset& s, int p, double tol) {
    if (p < 1) fail(ErrorCode::InvalidInput, "period must be at least 1");
    const double theta = 2.0 * std::numbers::pi / p;
    const Complex w = std::polar(1.0, theta);
    ComplexMultiset rotated;
    rotated.values.reserve(s.values.size());
    for (const Complex& z : s.values) rotated.values.push_back(z * w);
    return spectra_match(s, rotated, tol).matched;
}

double spectral_scale(const ComplexMultiset& s) {
    double rho = 1.0;
    for (const Complex& z : s.values) rho = std::max(rho, std::abs(z));
    return rho;
}

std::size_t count_zeros(const ComplexMultiset& s, double tau0) {
    const double thresh = tau0 * spectral_scale(s);
    std::size_t count = 0;
    for (const Complex& z : s.values)
        if (std::abs(z) < thresh) ++count;
    return count;
}

} // namespace twoband
