#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "peri/partitions.hpp"

using namespace peri;

namespace {

// Oracle: collect the results of removing rim 2-hooks in every possible order.
std::set<Partition> all_order_cores(const Partition& lambda) {
    auto rem = detail::domino_removals(lambda);
    if (rem.empty()) return {lambda};
    std::set<Partition> out;
    for (const auto& m : rem) {
        auto sub = all_order_cores(m);
        out.insert(sub.begin(), sub.end());
    }
    return out;
}

std::vector<Partition> all_partitions_upto(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : partitions_of(k)) out.push_back(p);
    return out;
}

} // namespace

TEST_CASE("dominance order basics") {
    CHECK(dominance_leq({1, 1}, {2}));
    CHECK(dominance_leq({3}, {2}));       // larger size is smaller in the order
    CHECK(!dominance_leq({2}, {3}));
    CHECK(dominance_leq({3, 1}, {2, 1})); // |3,1| > |2,1|
    CHECK(!dominance_leq({2, 1}, {3, 1}));
    CHECK(dominance_leq({2, 2}, {3, 1}));
    CHECK(!dominance_leq({3, 1}, {2, 2}));
    CHECK(dominance_leq({}, {}));
}

TEST_CASE("dominance is a partial order on partitions of size <= 8") {
    auto all = all_partitions_upto(8);
    for (auto& a : all) {
        CHECK(dominance_leq(a, a));
        for (auto& b : all) {
            if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
            for (auto& c : all)
                if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
        }
    }
}

TEST_CASE("transpose is an involution") {
    for (auto& p : all_partitions_upto(8)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("content and residue") {
    CHECK(content(1, 3) == 2);
    CHECK(content(2, 1) == -1);
    CHECK(content_sum({3, 1}) == 2); // 0+1+2-1
}

TEST_CASE("two_core examples and order independence") {
    CHECK(two_core({2, 1}) == Partition{2, 1});
    CHECK(two_core({2}) == Partition{});
    CHECK(two_core({3, 1, 1}) == Partition{1});
    for (auto& p : all_partitions_upto(8)) {
        auto cores = all_order_cores(p);
        CHECK(cores.size() == 1);
        CHECK(*cores.begin() == two_core(p));
        // the core is a staircase
        Partition c = two_core(p);
        for (std::size_t r = 0; r < c.size(); ++r) CHECK(c[r] == (int)(c.size() - r));
    }
}

TEST_CASE("gamma statistic") {
    CHECK(gamma_statistic({2, 1}) == -1);
    CHECK(gamma_statistic({}) == 0);
    CHECK(gamma_statistic({3, 1}) == 0); // contents {0,1,2,-1}: two even, two odd
    // staircase values
    auto staircase = [](int i) {
        Partition p;
        for (int r = i; r >= 1; --r) p.push_back(r);
        return p;
    };
    for (int i = 0; i <= 4; ++i) {
        int expect = (i % 2) ? (i + 1) / 2 : -(i / 2);
        CHECK(gamma_statistic(staircase(i)) == expect);
    }
    for (auto& p : all_partitions_upto(8)) {
        CHECK(gamma_statistic(p) == gamma_statistic(transpose(p)));
        CHECK(gamma_statistic(p) == gamma_statistic(two_core(p)));
    }
    // gamma separates distinct 2-cores
    std::set<Partition> cores;
    std::set<int> gammas;
    for (auto& p : all_partitions_upto(8)) {
        cores.insert(two_core(p));
        gammas.insert(gamma_statistic(p));
    }
    CHECK(cores.size() == gammas.size());
}

TEST_CASE("removable and addable") {
    auto rem = removable({2, 1});
    CHECK(std::set<Partition>(rem.begin(), rem.end()) ==
          std::set<Partition>{{1, 1}, {2}});
    CHECK(addable({}) == std::vector<Partition>{{1}});
    auto add = addable({2, 1});
    CHECK(std::set<Partition>(add.begin(), add.end()) ==
          std::set<Partition>{{3, 1}, {2, 2}, {2, 1, 1}});
    for (auto& p : all_partitions_upto(8))
        CHECK(addable(p).size() == removable(p).size() + 1);
}

TEST_CASE("pieri strips") {
    auto h2 = pieri_strips({2}, StripKind::Horizontal);
    CHECK(std::set<Partition>(h2.begin(), h2.end()) ==
          std::set<Partition>{{4}, {3, 1}, {2, 2}});
    CHECK(pieri_strips({}, StripKind::Horizontal) == std::vector<Partition>{{2}});
    auto v1 = pieri_strips({1}, StripKind::Vertical);
    CHECK(std::set<Partition>(v1.begin(), v1.end()) ==
          std::set<Partition>{{1, 1, 1}, {2, 1}});
    // brute-force strip checker as the source of truth
    for (auto& lam : all_partitions_upto(6)) {
        std::set<Partition> horiz, vert;
        for (auto& mid : addable(lam)) {
            auto b1 = added_box(lam, mid);
            for (auto& nu : addable(mid)) {
                auto b2 = added_box(mid, nu);
                if (b1.second != b2.second) horiz.insert(nu);
                if (b1.first != b2.first) vert.insert(nu);
            }
        }
        auto h = pieri_strips(lam, StripKind::Horizontal);
        auto v = pieri_strips(lam, StripKind::Vertical);
        CHECK(std::set<Partition>(h.begin(), h.end()) == horiz);
        CHECK(std::set<Partition>(v.begin(), v.end()) == vert);
    }
}

TEST_CASE("partition enumeration and hook length formula") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(hook_length_count({2, 1}) == 2);
    CHECK(hook_length_count({3, 1}) == 3);
    CHECK(hook_length_count({2, 2, 1}) == 5);
}
