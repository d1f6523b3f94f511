#include "dtk/errors.hpp"
#include "dtk/partitions.hpp"
#include "dtk/qseries.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace dtk;

namespace {

// Counts weakly decreasing sequences summing to n by plain recursion.
long brute_partition_count(int n, int max_part)
{
    if (n == 0)
        return 1;
    long count = 0;
    for (int k = std::min(n, max_part); k >= 1; --k)
        count += brute_partition_count(n - k, k);
    return count;
}

long brute_triple_count(int n)
{
    long count = 0;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            count += brute_partition_count(a, a) * brute_partition_count(b, b) *
                     brute_partition_count(n - a - b, n - a - b);
    return count;
}

} // namespace

TEST_CASE("partition construction")
{
    Partition p({3, 1, 1});
    CHECK(p.size() == 5);
    CHECK(p.length() == 3);
    CHECK(p.to_string() == "(3,1,1)");
    CHECK(Partition().size() == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(p.contains({0, 2}));
    CHECK_FALSE(p.contains({1, 1}));
    CHECK(p.boxes().size() == 5);
}

TEST_CASE("enumerate_partitions")
{
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].empty());
    CHECK(enumerate_partitions(-1).empty());

    const auto four = enumerate_partitions(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == Partition({4}));
    CHECK(four[1] == Partition({3, 1}));
    CHECK(four[2] == Partition({2, 2}));
    CHECK(four[3] == Partition({2, 1, 1}));
    CHECK(four[4] == Partition({1, 1, 1, 1}));

    CHECK(enumerate_partitions(10).size() == 42);
    for (int n = 0; n <= 20; ++n) {
        const auto ps = enumerate_partitions(n);
        CHECK(long(ps.size()) == brute_partition_count(n, n));
        for (std::size_t i = 1; i < ps.size(); ++i)
            CHECK(ps[i - 1] > ps[i]);
        for (const auto& p : ps)
            CHECK(p.size() == n);
    }
}

TEST_CASE("arm and leg")
{
    CHECK(arm(Partition({1}), {0, 0}) == 0);
    CHECK(leg(Partition({1}), {0, 0}) == 0);
    CHECK(arm(Partition({2, 1}), {0, 0}) == 1);
    CHECK(leg(Partition({2, 1}), {0, 0}) == 1);
    CHECK(arm(Partition({3}), {0, 0}) == 0);
    CHECK(leg(Partition({3}), {0, 0}) == 2);
    CHECK(arm(Partition({3, 2, 2}), {0, 1}) == 2);
    CHECK(leg(Partition({3, 2, 2}), {1, 0}) == 1);
    CHECK_THROWS_AS(arm(Partition({1}), {1, 0}), DomainError);
    CHECK_THROWS_AS(leg(Partition({2}), {0, 2}), DomainError);

    for (int n = 1; n <= 9; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (const auto& b : p.boxes())
                CHECK(arm(p, b) + leg(p, b) + 1 <= p.size());
}

TEST_CASE("enumerate_triples")
{
    CHECK(enumerate_triples(0).size() == 1);
    CHECK(enumerate_triples(1).size() == 3);
    CHECK(enumerate_triples(2).size() == 9);

    const auto counts = goettsche_coefficients(3, 12);
    for (int n = 0; n <= 12; ++n) {
        const auto ts = enumerate_triples(n);
        CHECK(long(ts.size()) == brute_triple_count(n));
        CHECK(Integer(long(ts.size())) == counts[n]);
        std::set<std::string> distinct;
        for (const auto& t : ts) {
            CHECK(t.total == n);
            distinct.insert(t.to_string());
        }
        CHECK(distinct.size() == ts.size());
    }
}
