#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "twoband/eigen_solver.hpp"
#include "twoband/gcd_split.hpp"

using namespace twoband;

namespace {

std::vector<Complex> band_entry_multiset(const BandMatrix& bm) {
    std::vector<Complex> all(bm.lower());
    all.insert(all.end(), bm.upper().begin(), bm.upper().end());
    std::sort(all.begin(), all.end(), [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return all;
}

} // namespace

TEST_CASE("gcd permutation formula") {
    CHECK(gcd_permutation(7, 2, 4).sigma() == std::vector<int>{1, 3, 5, 7, 2, 4, 6});
    CHECK(gcd_permutation(5, 1, 2).is_identity());
    CHECK(gcd_permutation(6, 3, 3).sigma() == std::vector<int>{1, 4, 2, 5, 3, 6});
}

TEST_CASE("conjugation semantics") {
    const ComplexMatrix m = to_dense(testutil::random_instance(6, 2, 3, 21));
    SUBCASE("identity conjugation") { CHECK(conjugate(Permutation::identity(6), m) == m); }
    SUBCASE("inverse round-trip") {
        const Permutation sigma = gcd_permutation(6, 2, 4);
        CHECK(conjugate(sigma, conjugate(sigma.inverse(), m)) == m);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(conjugate(Permutation::identity(5), m), Error);
    }
}

TEST_CASE("gcd split produces coprime blocks on the diagonal") {
    SUBCASE("n=7 b=2 k=4 splits into sizes 4 and 3") {
        const BandMatrix bm = testutil::ones_instance(7, 2, 4);
        const DirectSumDecomposition dec = split(bm);
        REQUIRE(dec.block_sizes == std::vector<int>{4, 3});
        for (const BandMatrix& blk : dec.blocks) {
            CHECK(blk.b() == 1);
            CHECK(blk.k() == 2);
        }
        // Conjugating the dense input lands every nonzero inside the blocks,
        // on the coprime offsets.
        const ComplexMatrix conj = conjugate(dec.perm, to_dense(bm));
        int start = 0;
        ComplexMatrix rebuilt(7, 7);
        for (const BandMatrix& blk : dec.blocks) {
            const ComplexMatrix dense_blk = to_dense(blk);
            for (int i = 0; i < blk.n(); ++i)
                for (int j = 0; j < blk.n(); ++j) rebuilt(start + i, start + j) = dense_blk(i, j);
            start += blk.n();
        }
        CHECK(conj == rebuilt);
    }
    SUBCASE("coprime input returns a single block equal to the input") {
        const BandMatrix bm = testutil::random_instance(5, 1, 3, 4);
        const DirectSumDecomposition dec = split(bm);
        REQUIRE(dec.blocks.size() == 1);
        CHECK(to_dense(dec.blocks[0]) == to_dense(bm));
        CHECK(dec.perm.is_identity());
    }
    SUBCASE("n=4 b=2 k=2 gives two antidiagonal blocks") {
        const BandMatrix bm(4, 2, 2, {Complex{5, 0}, Complex{7, 0}}, {Complex{2, 0}, Complex{3, 0}},
                            Mode::PositiveReal);
        const DirectSumDecomposition dec = split(bm);
        REQUIRE(dec.block_sizes == std::vector<int>{2, 2});
        CHECK(dec.blocks[0].b() == 1);
        CHECK(dec.blocks[0].k() == 1);
        std::vector<Complex> entries;
        for (const BandMatrix& blk : dec.blocks) {
            const auto blk_entries = band_entry_multiset(blk);
            entries.insert(entries.end(), blk_entries.begin(), blk_entries.end());
        }
        std::sort(entries.begin(), entries.end(),
                  [](const Complex& a, const Complex& b) { return a.real() < b.real(); });
        CHECK(entries == std::vector<Complex>{{2, 0}, {3, 0}, {5, 0}, {7, 0}});
    }
    SUBCASE("g larger than n yields zero-size placeholder blocks") {
        const DirectSumDecomposition dec = split(BandMatrix(2, 3, 3, {}, {}, Mode::PositiveReal));
        CHECK(dec.block_sizes == std::vector<int>{1, 1, 0});
        CHECK(dec.blocks[2].n() == 0);
    }
}

TEST_CASE("split invariants over random instances") {
    std::uint64_t seed = 77;
    for (int n = 1; n <= 18; ++n)
        for (int b = 1; b <= 6; ++b)
            for (int k = 1; k <= 6; ++k) {
                const BandMatrix bm = testutil::random_instance(n, b, k, ++seed);
                const DirectSumDecomposition dec = split(bm);
                int total = 0;
                for (int s : dec.block_sizes) total += s;
                CHECK(total == n);

                std::vector<Complex> split_entries;
                for (const BandMatrix& blk : dec.blocks) {
                    const auto blk_entries = band_entry_multiset(blk);
                    split_entries.insert(split_entries.end(), blk_entries.begin(), blk_entries.end());
                }
                std::sort(split_entries.begin(), split_entries.end(), [](const Complex& a, const Complex& c) {
                    return a.real() != c.real() ? a.real() < c.real() : a.imag() < c.imag();
                });
                CHECK(split_entries == band_entry_multiset(bm));
            }
}

TEST_CASE("split preserves the spectrum") {
    const BandMatrix bm = testutil::random_instance(9, 2, 4, 123);
    const DirectSumDecomposition dec = split(bm);
    ComplexMultiset whole = dense_eigenvalues(to_dense(bm));
    ComplexMultiset parts;
    for (const BandMatrix& blk : dec.blocks) {
        if (blk.n() == 0) continue;
        const ComplexMultiset s = dense_eigenvalues(to_dense(blk));
        parts.values.insert(parts.values.end(), s.values.begin(), s.values.end());
    }
    REQUIRE(parts.values.size() == whole.values.size());
    CHECK(spectra_match(whole, parts, 1e-9).matched);
}
