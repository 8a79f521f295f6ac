#include <catch2/catch_amalgamated.hpp>

#include "equisum/meander.hpp"
#include "equisum/pisolve.hpp"
#include "golden.hpp"

using namespace equisum;

TEST_CASE("gauss params pair up the halves", "[meander]")
{
    CHECK(gauss_params(4).k_g == 2);
    CHECK(gauss_params(4).t_g == 5);
    CHECK(gauss_params(15).k_g == 8);
    CHECK(gauss_params(15).t_g == 15);
    CHECK(gauss_params(16).k_g == 8);
    CHECK(gauss_params(16).t_g == 17);
}

TEST_CASE("gauss partitioning of small n", "[meander]")
{
    CHECK(gauss_partitioning(4).containers == std::vector<Container>{{1, 4}, {2, 3}});

    Partitioning p = gauss_partitioning(15);
    REQUIRE(p.containers.size() == 8);
    CHECK(p.containers.front() == Container{15});
    CHECK(p.containers[1] == Container{1, 14});
    CHECK(p.containers.back() == Container{7, 8});
    CHECK(verify(p).valid);

    p = gauss_partitioning(16);
    REQUIRE(p.containers.size() == 8);
    CHECK(p.containers.front() == Container{1, 16});
    CHECK(p.containers.back() == Container{8, 9});
    CHECK(verify(p).valid);

    CHECK(gauss_partitioning(1).containers == std::vector<Container>{{1}});
    CHECK(gauss_partitioning(2).containers == std::vector<Container>{{1, 2}});
}

TEST_CASE("meander applicability is the 2k divisibility test", "[meander]")
{
    CHECK(meander_applicable(16, 4));
    CHECK(meander_applicable(19, 5));
    CHECK_FALSE(meander_applicable(16, 3));
    CHECK(meander_applicable(9, 1)); // n odd, 2 divides 10
    CHECK(meander_applicable(9, 5));
    CHECK_FALSE(meander_applicable(9, 3));
    CHECK(meander_applicable(30, 5));
    CHECK(meander_applicable(30, 15)); // the gauss pair itself
    CHECK_FALSE(meander_applicable(30, 10)); // 20 does not divide 30
    CHECK_FALSE(meander_applicable(0, 1));
}

TEST_CASE("meander grids match the golden matrices", "[meander]")
{
    auto result = meander_partitioning(16, 4);
    CHECK(golden::grid_equals(result.matrix, golden::grid_16_4()));
    CHECK(result.matrix.parity == MeanderParity::even_n);
    CHECK(result.partitioning.containers
          == std::vector<Container>{{1, 8, 9, 16}, {2, 7, 10, 15}, {3, 6, 11, 14}, {4, 5, 12, 13}});
    CHECK(result.partitioning.instance.t == 34);

    result = meander_partitioning(30, 5);
    CHECK(golden::grid_equals(result.matrix, golden::grid_30_5()));
    CHECK(result.partitioning.instance.t == 93);

    result = meander_partitioning(30, 3);
    CHECK(golden::grid_equals(result.matrix, golden::grid_30_3()));
    CHECK(result.partitioning.instance.t == 155);
    CHECK(result.partitioning.containers[0] == Container{1, 6, 7, 12, 13, 18, 19, 24, 25, 30});

    result = meander_partitioning(15, 4);
    CHECK(golden::grid_equals(result.matrix, golden::grid_15_4()));
    CHECK(result.matrix.parity == MeanderParity::odd_n);
    CHECK(result.partitioning.instance.t == 30);
    CHECK(result.partitioning.containers
          == std::vector<Container>{{7, 8, 15}, {1, 6, 9, 14}, {2, 5, 10, 13}, {3, 4, 11, 12}});
}

TEST_CASE("odd-n meander keeps zero in the grid, not in the containers", "[meander]")
{
    const auto result = meander_partitioning(19, 5);
    CHECK(result.matrix.column(0) == Container{19, 10, 9, 0});
    CHECK(result.partitioning.containers[0] == Container{9, 10, 19});
    CHECK(result.partitioning.containers[1] == Container{1, 8, 11, 18});
    CHECK(result.partitioning.containers[2] == Container{2, 7, 12, 17});
    CHECK(result.partitioning.containers[3] == Container{3, 6, 13, 16});
    CHECK(result.partitioning.containers[4] == Container{4, 5, 14, 15});
    CHECK(result.partitioning.instance.t == 38);
    CHECK(verify(result.partitioning).valid);
}

TEST_CASE("meander rejects pairs that fail the divisibility test", "[meander]")
{
    CHECK_THROWS_AS(meander_partitioning(16, 3), NotApplicableError);
    CHECK_THROWS_AS(meander_partitioning(9, 3), NotApplicableError);
}

TEST_CASE("k = 1 degenerates to a single full column", "[meander]")
{
    const auto even = meander_partitioning(6, 1);
    CHECK(even.matrix.rows == 6);
    CHECK(even.partitioning.containers == std::vector<Container>{{1, 2, 3, 4, 5, 6}});

    const auto odd = meander_partitioning(9, 1);
    CHECK(odd.matrix.rows == 10);
    CHECK(odd.matrix.at(9, 0) == 0);
    CHECK(odd.partitioning.containers
          == std::vector<Container>{{1, 2, 3, 4, 5, 6, 7, 8, 9}});
}

TEST_CASE("column sums, complements and bijectivity over n <= 120", "[meander][property]")
{
    for (u64 n = 1; n <= 120; ++n) {
        for (u64 k = 1; k <= n; ++k) {
            if (!meander_applicable(n, k))
                continue;
            const auto [matrix, partitioning] = meander_partitioning(n, k);
            const bool odd = n % 2 != 0;
            const u64 expected_rows = (odd ? n + 1 : n) / k;
            REQUIRE(matrix.rows == expected_rows);

            // every element of {1..n} (plus 0 when n is odd) appears exactly once
            std::vector<int> seen(n + 1, 0);
            for (u64 cell : matrix.cells) {
                REQUIRE(cell <= n);
                ++seen[cell];
            }
            for (u64 e = 1; e <= n; ++e)
                REQUIRE(seen[e] == 1);
            REQUIRE(seen[0] == (odd ? 1 : 0));

            const u64 t = delta(n) / k;
            const u64 complement = odd ? n : n + 1;
            for (u64 j = 0; j < k; ++j) {
                u64 sum = 0;
                for (u64 r = 0; r < matrix.rows; ++r)
                    sum += matrix.at(r, j);
                REQUIRE(sum == t);
                for (u64 s = 0; s < matrix.rows / 2; ++s)
                    REQUIRE(matrix.at(s, j) + matrix.at(matrix.rows - 1 - s, j) == complement);
            }

            // odd rows descend, even rows ascend
            for (u64 r = 0; r < matrix.rows; ++r)
                for (u64 c = 0; c + 1 < k; ++c) {
                    if (r % 2 == 0)
                        REQUIRE(matrix.at(r, c) > matrix.at(r, c + 1));
                    else
                        REQUIRE(matrix.at(r, c) < matrix.at(r, c + 1));
                }

            REQUIRE(verify(partitioning).valid);
        }
    }
}

TEST_CASE("gauss partitionings are one-loop meanders", "[meander][property]")
{
    for (u64 n = 2; n <= 120; n += 2)
        REQUIRE(meander_partitioning(n, n / 2).partitioning.containers
                == gauss_partitioning(n).containers);
    for (u64 n = 1; n <= 119; n += 2)
        REQUIRE(meander_partitioning(n, (n + 1) / 2).partitioning.containers
                == gauss_partitioning(n).containers);
}
