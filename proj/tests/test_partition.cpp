#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "symcoef/partition.hpp"

using namespace symcoef;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Oracle: the Gaussian binomial [a+b choose a]_q by exact polynomial division
// of prod_{i=1..a} (1 - q^{b+i}) / (1 - q^i).
std::vector<Int> q_binomial_oracle(int a, int b) {
    std::vector<Int> num{1};
    auto times_one_minus_qk = [](const std::vector<Int>& p, int k) {
        std::vector<Int> r(p.size() + static_cast<size_t>(k), 0);
        for (size_t i = 0; i < p.size(); ++i) {
            r[i] += p[i];
            r[i + static_cast<size_t>(k)] -= p[i];
        }
        return r;
    };
    for (int i = 1; i <= a; ++i) num = times_one_minus_qk(num, b + i);
    for (int i = 1; i <= a; ++i) {
        // exact division by (1 - q^i): Q_j = N_j + Q_{j-i}
        std::vector<Int> q(num.size() - static_cast<size_t>(i), 0);
        for (size_t j = 0; j < q.size(); ++j) {
            Int v = num[j];
            if (j >= static_cast<size_t>(i)) v += q[j - static_cast<size_t>(i)];
            q[j] = v;
        }
        for (size_t j = q.size(); j < num.size(); ++j) {
            Int rem = num[j] + q[j - static_cast<size_t>(i)];
            REQUIRE(rem == 0);
        }
        num = std::move(q);
    }
    return num;
}

// Oracle: dominance by brute-force prefix sums.
bool dominates_oracle(const Partition& p, const Partition& q) {
    int m = std::max(p.length(), q.length());
    int sp = 0, sq = 0;
    for (int i = 0; i < m; ++i) {
        sp += p.part(i);
        sq += q.part(i);
        if (sp < sq) return false;
    }
    return true;
}

} // namespace

TEST_CASE("conjugate: examples and involution") {
    CHECK(conjugate(P({4, 3, 1})) == P({3, 2, 2, 1})); // displayed in the source text
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(P({5})) == P({1, 1, 1, 1, 1}));
    for (int n = 0; n <= 12; ++n)
        for (const auto& lam : enumerate_partitions(n)) CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("dominance: examples, errors, partial order") {
    CHECK(dominates(P({3, 1}), P({2, 2})));
    CHECK_FALSE(dominates(P({2, 2}), P({3, 1})));
    CHECK(dominates(P({4}), P({4})));
    CHECK_THROWS_AS(dominates(P({2}), P({1})), DomainError);
    for (int n = 1; n <= 9; ++n) {
        auto ps = enumerate_partitions(n);
        for (const auto& a : ps) {
            CHECK(dominates(a, a));
            for (const auto& b : ps) {
                CHECK(dominates(a, b) == dominates_oracle(a, b));
                if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
                for (const auto& c : ps)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("hook lengths") {
    auto h221 = hook_lengths(P({2, 2, 1}));
    CHECK(h221[0][0] == 4); // 1 right + 2 below + 1
    auto h6 = hook_lengths(P({6}));
    for (int j = 0; j < 6; ++j) CHECK(h6[0][static_cast<size_t>(j)] == 6 - j);
    CHECK(hook_lengths(P({4, 3, 1}))[0][0] == 6);

    // cell count equals |lambda|; hooks of lambda and lambda' agree as multisets
    for (int n = 0; n <= 10; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            std::multiset<int> a, b;
            int cells = 0;
            for (const auto& row : hook_lengths(lam))
                for (int h : row) {
                    a.insert(h);
                    ++cells;
                }
            CHECK(cells == lam.size());
            for (const auto& row : hook_lengths(conjugate(lam)))
                for (int h : row) b.insert(h);
            CHECK(a == b);
        }
}

TEST_CASE("enumerate_partitions: order, counts, constraints, cap") {
    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == P({4}));
    CHECK(p4[1] == P({3, 1}));
    CHECK(p4[2] == P({2, 2}));
    CHECK(p4[3] == P({2, 1, 1}));
    CHECK(p4[4] == P({1, 1, 1, 1}));

    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == Partition());

    CHECK(enumerate_partitions(20).size() == 627); // Euler-recurrence oracle below
    for (int n = 0; n <= 20; ++n)
        CHECK(partition_count(n) == Int(enumerate_partitions(n).size()));

    // descending lexicographic throughout
    DescLex before;
    for (int n = 1; n <= 10; ++n) {
        auto ps = enumerate_partitions(n);
        for (size_t i = 0; i + 1 < ps.size(); ++i) CHECK(before(ps[i], ps[i + 1]));
    }

    // constrained enumeration counts match the rectangle count
    for (int r = 0; r <= 8; ++r)
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b) {
                PartitionConstraints c{a, b};
                CHECK(Int(enumerate_partitions(r, c).size()) == partitions_in_rectangle(r, a, b));
            }

    CHECK_THROWS_AS(enumerate_partitions(61), CapacityError);
    CHECK(enumerate_partitions(61, {}, 61).size() > 0);
}

TEST_CASE("partitions_in_rectangle and q_binomial") {
    CHECK(partitions_in_rectangle(2, 2, 2) == 2);
    CHECK(partitions_in_rectangle(0, 3, 7) == 1);
    CHECK(partitions_in_rectangle(5, 2, 2) == 0);
    CHECK(partitions_in_rectangle(-1, 2, 2) == 0);

    CHECK(q_binomial(2, 2) == std::vector<Int>{1, 1, 2, 1, 1});
    CHECK(q_binomial(3, 2) == std::vector<Int>{1, 1, 2, 2, 2, 1, 1});
    for (int b = 1; b <= 5; ++b)
        CHECK(q_binomial(1, b) == std::vector<Int>(static_cast<size_t>(b) + 1, 1));

    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) {
            CHECK(q_binomial(a, b) == q_binomial_oracle(a, b));
            Int total = 0;
            for (int r = 0; r <= a * b; ++r) total += partitions_in_rectangle(r, a, b);
            CHECK(total == binomial(a + b, a)); // q = 1 specialization
        }

    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b) {
            auto coeffs = q_binomial(a, b);
            REQUIRE(coeffs.size() == static_cast<size_t>(a * b) + 1);
            for (size_t r = 0; r < coeffs.size(); ++r) // palindromic
                CHECK(coeffs[r] == coeffs[coeffs.size() - 1 - r]);
        }
}

TEST_CASE("durfee") {
    CHECK(durfee(P({3, 2, 1})) == 2);
    CHECK(durfee(Partition()) == 0);
    for (int k = 1; k <= 5; ++k)
        CHECK(durfee(Partition(std::vector<int>(static_cast<size_t>(k), k))) == k);
}

TEST_CASE("principal hooks") {
    CHECK(principal_hooks(P({2, 1})) == Composition({3}));
    CHECK(principal_hooks(P({3, 2, 1})) == Composition({5, 1}));
    CHECK(principal_hooks(P({1})) == Composition({1}));
    CHECK_THROWS_AS(principal_hooks(P({2, 1, 1})), DomainError);

    for (int n = 1; n <= 15; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            if (!(conjugate(lam) == lam)) continue;
            auto hooks = principal_hooks(lam);
            int sum = 0, prev = 1 << 30;
            for (int h : hooks.parts()) {
                CHECK(h > 0);
                CHECK(h % 2 == 1);
                CHECK(h < prev);
                prev = h;
                sum += h;
            }
            CHECK(sum == lam.size());
        }
}

TEST_CASE("staircase") {
    CHECK(staircase(3) == P({3, 2, 1}));
    CHECK(staircase(1) == P({1}));
    CHECK(conjugate(staircase(4)) == staircase(4));
    CHECK(staircase(4).size() == 10);
}

TEST_CASE("z values") {
    CHECK(z_value(P({1, 1, 1})) == 6);
    for (int n = 1; n <= 7; ++n) CHECK(z_value(P({n})) == n);
    CHECK(z_value(P({2, 1})) == 2);
    CHECK(z_value(Partition()) == 1);
    // sum over classes of n!/z equals n!... i.e. sum of class sizes
    for (int n = 1; n <= 10; ++n) {
        Int total = 0;
        for (const auto& alpha : enumerate_partitions(n)) total += factorial(n) / z_value(alpha);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("partition text grammar") {
    CHECK(parse_partition("4,3,1") == P({4, 3, 1}));
    CHECK(parse_partition("3^2,1") == P({3, 3, 1}));
    CHECK(parse_partition("") == Partition());
    CHECK(parse_partition(" 2 , 2 ") == P({2, 2}));
    CHECK(parse_partition("2^0") == Partition());
    CHECK_THROWS_AS(parse_partition("1,3"), DomainError);
    CHECK_THROWS_AS(parse_partition("x"), DomainError);
    CHECK_THROWS_AS(parse_partition("2,,1"), DomainError);
    CHECK_THROWS_AS(parse_partition("-2"), DomainError);
    CHECK(format_partition(P({4, 3, 1})) == "4,3,1");
    CHECK(format_partition(Partition()) == "");
    CHECK(parse_composition("0,2,1") == Composition({0, 2, 1}));
    CHECK(parse_composition("1,3") == Composition({1, 3}));
    // round trip on everything of size <= 9
    for (int n = 0; n <= 9; ++n)
        for (const auto& lam : enumerate_partitions(n))
            CHECK(parse_partition(format_partition(lam)) == lam);
}

TEST_CASE("composition to partition") {
    CHECK(Composition({0, 2, 1, 2}).to_partition() == P({2, 2, 1}));
    CHECK(Composition(std::vector<int>{}).to_partition() == Partition());
    CHECK(Composition({1, 0, 0}).size() == 1);
}

TEST_CASE("skew shape validation") {
    CHECK_NOTHROW(SkewShape(P({4, 2}), P({2, 1})));
    CHECK_THROWS_AS(SkewShape(P({2, 2}), P({3})), DomainError);
    CHECK_THROWS_AS(SkewShape(P({2}), P({1, 1})), DomainError);
    CHECK(SkewShape(P({4, 2}), P({2, 1})).size() == 3);
}
