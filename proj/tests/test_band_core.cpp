#include <doctest.h>

#include "test_util.hpp"
#include "twoband/band_matrix.hpp"

using namespace twoband;

TEST_CASE("band matrix construction validates its invariants") {
    SUBCASE("minimal well-formed instance") {
        const BandMatrix bm = testutil::ones_instance(4, 1, 2);
        CHECK(bm.n() == 4);
        CHECK(bm.lower_length() == 3);
        CHECK(bm.upper_length() == 2);
    }
    SUBCASE("band longer than the dimension is empty") {
        const BandMatrix bm(3, 4, 1, {}, {Complex{1, 0}, Complex{1, 0}}, Mode::PositiveReal);
        CHECK(bm.lower_empty());
        CHECK(bm.upper_length() == 2);
    }
    SUBCASE("negative entry in positive mode") {
        CHECK_THROWS_WITH_AS(BandMatrix(4, 1, 2, {Complex{1, 0}, Complex{-1, 0}, Complex{1, 0}},
                                        {Complex{1, 0}, Complex{1, 0}}, Mode::PositiveReal),
                             doctest::Contains("SignViolation"), Error);
    }
    SUBCASE("zero entry is fine in nonnegative mode but not positive mode") {
        CHECK_NOTHROW(BandMatrix(3, 1, 1, {Complex{0, 0}, Complex{1, 0}}, {Complex{1, 0}, Complex{1, 0}},
                                 Mode::NonnegativeReal));
        CHECK_THROWS_AS(BandMatrix(3, 1, 1, {Complex{0, 0}, Complex{1, 0}}, {Complex{1, 0}, Complex{1, 0}},
                                   Mode::PositiveReal),
                        Error);
    }
    SUBCASE("complex entry rejected outside complex mode") {
        CHECK_THROWS_AS(BandMatrix(3, 1, 1, {Complex{1, 0.5}, Complex{1, 0}}, {Complex{1, 0}, Complex{1, 0}},
                                   Mode::PositiveReal),
                        Error);
        CHECK_NOTHROW(BandMatrix(3, 1, 1, {Complex{1, 0.5}, Complex{-1, 0}}, {Complex{1, 0}, Complex{1, 0}},
                                 Mode::Complex));
    }
    SUBCASE("wrong vector lengths") {
        CHECK_THROWS_WITH_AS(BandMatrix(4, 1, 2, {Complex{1, 0}}, {Complex{1, 0}, Complex{1, 0}}, Mode::PositiveReal),
                             doctest::Contains("LengthMismatch"), Error);
    }
    SUBCASE("zero offsets and zero dimension are rejected") {
        CHECK_THROWS_WITH_AS(BandMatrix(4, 0, 2, {}, {}, Mode::PositiveReal), doctest::Contains("BadOffset"), Error);
        CHECK_THROWS_AS(BandMatrix(4, 1, 0, {}, {}, Mode::PositiveReal), Error);
        CHECK_THROWS_AS(BandMatrix(0, 1, 1, {}, {}, Mode::PositiveReal), Error);
    }
}

TEST_CASE("period info") {
    CHECK(period_info(4, 1, 2).g == 1);
    CHECK(period_info(4, 1, 2).p == 3);
    CHECK(period_info(6, 3, 3).g == 3);
    CHECK(period_info(6, 3, 3).p == 2);
    CHECK(period_info(7, 2, 4).g == 2);
    CHECK(period_info(7, 2, 4).p == 3);

    SUBCASE("g = 1 decomposes n as m p + q") {
        for (int n = 1; n <= 24; ++n)
            for (int b = 1; b <= 5; ++b)
                for (int k = 1; k <= 5; ++k) {
                    const PeriodInfo info = period_info(n, b, k);
                    CHECK(info.p * info.g == b + k);
                    if (info.g == 1) CHECK(info.m * info.p + info.q == n);
                }
    }
}

TEST_CASE("dense realization places entries exactly") {
    SUBCASE("direct placement") {
        const ComplexMatrix m = to_dense(testutil::ones_instance(4, 1, 2));
        const std::vector<std::pair<int, int>> nonzeros = {{2, 1}, {3, 2}, {4, 3}, {1, 3}, {2, 4}};
        int count = 0;
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                const bool expect = std::find(nonzeros.begin(), nonzeros.end(), std::make_pair(i, j)) != nonzeros.end();
                if (expect) {
                    CHECK(m(i - 1, j - 1) == Complex{1, 0});
                    ++count;
                } else {
                    CHECK(m(i - 1, j - 1) == Complex{});
                }
            }
        CHECK(count == 5);
    }
    SUBCASE("both bands empty gives the zero matrix") {
        const ComplexMatrix m = to_dense(BandMatrix(2, 3, 3, {}, {}, Mode::PositiveReal));
        for (const auto& z : m.data()) CHECK(z == Complex{});
    }
    SUBCASE("index bookkeeping") {
        const BandMatrix bm(4, 1, 2, {Complex{2, 0}, Complex{3, 0}, Complex{5, 0}}, {Complex{7, 0}, Complex{11, 0}},
                            Mode::PositiveReal);
        const ComplexMatrix m = to_dense(bm);
        CHECK(m(1, 0) == Complex{2, 0});
        CHECK(m(2, 1) == Complex{3, 0});
        CHECK(m(3, 2) == Complex{5, 0});
        CHECK(m(0, 2) == Complex{7, 0});
        CHECK(m(1, 3) == Complex{11, 0});
    }
}

TEST_CASE("zero pattern matching") {
    CHECK(zero_pattern_matches(to_dense(testutil::ones_instance(5, 2, 3)), {2, -3}));
    CHECK_FALSE(zero_pattern_matches(ComplexMatrix::identity(3), {1, -2}));
    CHECK(zero_pattern_matches(ComplexMatrix(4, 4), {}));
    CHECK_THROWS_WITH_AS(zero_pattern_matches(ComplexMatrix(2, 3), {}), doctest::Contains("NotSquare"), Error);

    SUBCASE("holds for every valid instance") {
        std::uint64_t seed = 11;
        for (int n = 1; n <= 16; ++n)
            for (int b = 1; b <= 5; ++b)
                for (int k = 1; k <= 5; ++k)
                    CHECK(zero_pattern_matches(to_dense(testutil::random_instance(n, b, k, ++seed)), {b, -k}));
    }
}

TEST_CASE("band transpose swaps the bands") {
    const BandMatrix bm = testutil::random_instance(7, 2, 3, 99);
    const BandMatrix bt = bm.transposed();
    CHECK(bt.b() == 3);
    CHECK(bt.k() == 2);
    CHECK(to_dense(bt) == to_dense(bm).transposed());
}
