#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "peri/diagrams.hpp"

using namespace peri;

namespace {

long double_factorial(int n) { // (n)!! with (-1)!! = 1
    long r = 1;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

BrauerDiagram cup_gen() { return make_diagram(0, 2, {{0, 1}}); }
BrauerDiagram cap_gen() { return make_diagram(2, 0, {{0, 1}}); }

} // namespace

TEST_CASE("standard marking") {
    auto id3 = identity_diagram(3);
    CHECK(standard_marking(id3).latitude_order.empty());

    // the (6,8)-diagram: cups {T3,T4},{T5,T7},{T6,T8}; caps {B3,B4},{B2,B5}
    auto d = make_diagram(6, 8, {{0, 6}, {5, 7}, {2, 3}, {1, 4}, {8, 9}, {10, 12}, {11, 13}});
    auto m = standard_marking(d);
    REQUIRE(m.latitude_order.size() == 5);
    CHECK(m.latitude_order[0].arc == std::pair<int, int>{8, 9});
    CHECK(m.latitude_order[1].arc == std::pair<int, int>{10, 12});
    CHECK(m.latitude_order[2].arc == std::pair<int, int>{11, 13});
    CHECK(m.latitude_order[3].arc == std::pair<int, int>{2, 3});
    CHECK(m.latitude_order[4].arc == std::pair<int, int>{1, 4});
    for (auto& mk : m.latitude_order) CHECK(mk.right_handed);

    auto mc = standard_marking(cup_gen());
    CHECK(mc.latitude_order.size() == 1);
    CHECK(mc.latitude_order[0].is_cup);

    // idempotence: recomputing the marking changes nothing
    for (auto& dd : hom_basis(3, 3)) {
        auto m1 = standard_marking(dd);
        auto m2 = standard_marking(m1.diagram);
        REQUIRE(m1.latitude_order.size() == m2.latitude_order.size());
        for (std::size_t t = 0; t < m1.latitude_order.size(); ++t) {
            CHECK(m1.latitude_order[t].arc == m2.latitude_order[t].arc);
            CHECK(m1.latitude_order[t].is_cup == m2.latitude_order[t].is_cup);
            CHECK(m1.latitude_order[t].right_handed == m2.latitude_order[t].right_handed);
        }
    }
}

TEST_CASE("composition: loops give zero") {
    auto e1 = epsilon(1, 2);
    CHECK(compose(e1, e1).is_zero());
    auto c0 = c_star(0, 4);
    CHECK(compose(c0, c0).is_zero());
}

TEST_CASE("composition: the displayed two-cup example") {
    auto d1 = make_diagram(4, 4, {{0, 1}, {6, 7}, {2, 4}, {3, 5}});
    auto d2 = make_diagram(0, 4, {{0, 3}, {1, 2}});
    auto r = compose(d1, d2);
    REQUIRE(!r.is_zero());
    CHECK(r.sign == 1);
    CHECK(r.diagram == make_diagram(0, 4, {{0, 1}, {2, 3}}));
}

TEST_CASE("composition: epsilon and the crossing") {
    auto e1 = epsilon(1, 2);
    auto s1 = s_gen(1, 2);
    auto a = compose(e1, s1); // epsilon after s: -epsilon
    REQUIRE(!a.is_zero());
    CHECK(a.sign == -1);
    CHECK(a.diagram == e1);
    auto b = compose(s1, e1); // cup side is symmetric
    REQUIRE(!b.is_zero());
    CHECK(b.sign == 1);
    CHECK(b.diagram == e1);
}

TEST_CASE("identity neutrality") {
    for (auto& d : hom_basis(2, 4)) {
        auto l = compose(identity_diagram(4), d);
        auto r = compose(d, identity_diagram(2));
        CHECK(l == SignedDiagram::of(1, d));
        CHECK(r == SignedDiagram::of(1, d));
    }
}

TEST_CASE("tensor product") {
    CHECK(tensor(identity_diagram(2), identity_diagram(3)) == identity_diagram(5));
    auto d = make_diagram(2, 4, {{0, 2}, {1, 3}, {4, 5}});
    CHECK(tensor(d, identity_diagram(0)) == d);
    auto t = tensor(s_gen(1, 2), cup_gen());
    CHECK(t == make_diagram(2, 4, {{0, 3}, {1, 2}, {4, 5}}));
}

TEST_CASE("gamma is independent of the normalization strategy") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8 - i; ++j)
            for (int k = 0; k <= 8 - j; ++k) {
                if ((i + j) % 2 || (j + k) % 2) continue;
                for (auto& d2 : hom_basis(i, j))
                    for (auto& d1 : hom_basis(j, k)) {
                        auto a = compose_with(d1, d2, NormStrategy::Stack);
                        auto b = compose_with(d1, d2, NormStrategy::Reverse);
                        auto c = compose_with(d1, d2, NormStrategy::Random, &rng);
                        CHECK(a == b);
                        CHECK(a == c);
                    }
            }
}

TEST_CASE("composition is associative") {
    // exhaustive in A_3
    auto basis = hom_basis(3, 3);
    for (auto& a : basis)
        for (auto& b : basis)
            for (auto& c : basis) {
                auto lhs = compose(compose(a, b), SignedDiagram::of(1, c));
                auto rhs = compose(SignedDiagram::of(1, a), compose(b, c));
                CHECK(lhs == rhs);
            }
    // randomized in A_5
    std::mt19937_64 rng(99);
    auto b5 = hom_basis(5, 5);
    for (int t = 0; t < 2000; ++t) {
        auto& a = b5[rng() % b5.size()];
        auto& b = b5[rng() % b5.size()];
        auto& c = b5[rng() % b5.size()];
        auto lhs = compose(compose(a, b), SignedDiagram::of(1, c));
        auto rhs = compose(SignedDiagram::of(1, a), compose(b, c));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("diagram counts") {
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) {
            if (i + j > 12) continue;
            auto basis = hom_basis(i, j);
            if ((i + j) % 2)
                CHECK(basis.empty());
            else if (i + j == 0)
                CHECK(basis.size() == 1);
            else
                CHECK((long)basis.size() == double_factorial(i + j - 1));
        }
}

TEST_CASE("flip on generators") {
    auto r = flip(identity_diagram(3));
    CHECK(r == SignedDiagram::of(1, identity_diagram(3)));
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k < n; ++k) {
            CHECK(flip(s_gen(k, n)) == SignedDiagram::of(-1, s_gen(k, n)));
            CHECK(flip(epsilon(k, n)) == SignedDiagram::of(-1, epsilon(k, n)));
        }
    CHECK(flip(cup_gen()) == SignedDiagram::of(-1, cap_gen()));
    CHECK(flip(cap_gen()) == SignedDiagram::of(1, cup_gen()));
}

TEST_CASE("flip is an involution on A_n") {
    for (int n = 1; n <= 4; ++n)
        for (auto& d : hom_basis(n, n)) {
            auto f = flip(d);
            auto ff = flip(f.diagram);
            CHECK(ff.sign * f.sign == 1);
            CHECK(ff.diagram == d);
        }
}

TEST_CASE("flip is an anti-homomorphism") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 4; ++n) {
        auto basis = hom_basis(n, n);
        for (int t = 0; t < 400; ++t) {
            auto& a = basis[rng() % basis.size()];
            auto& b = basis[rng() % basis.size()];
            auto lhs = compose(a, b);
            SignedDiagram flhs = SignedDiagram::zero();
            if (!lhs.is_zero()) {
                auto f = flip(lhs.diagram);
                flhs = SignedDiagram::of(lhs.sign * f.sign, f.diagram);
            }
            auto prod = compose(flip(b), flip(a));
            CHECK(flhs == prod);
        }
    }
}

TEST_CASE("named diagrams") {
    for (int n = 2; n <= 6; n += 2) CHECK(c_star(n, n) == identity_diagram(n));
    for (int n = 2; n <= 6; ++n)
        for (int i = n % 2; i < n; i += 2) {
            if (i == 0 && n % 2) continue;
            if (i >= 1) {
                auto r = compose(b_diagram(i, n), a_diagram(i, n));
                CHECK(r == SignedDiagram::of(1, identity_diagram(i)));
            }
            auto cs = compose(a_diagram(i, n), b_diagram(i, n));
            REQUIRE(!cs.is_zero());
            CHECK(cs.sign == 1);
            CHECK(cs.diagram == c_star(i, n));
        }
    // c_j* c_i* = c_i* for j >= i, (j,i) != (0,0)
    for (int n = 4; n <= 6; n += 2)
        for (int j = 0; j <= n; j += 2)
            for (int i = 0; i <= j; i += 2) {
                if (i == 0 && j == 0) continue;
                auto r = compose(c_star(j, n), c_star(i, n));
                CHECK(r == SignedDiagram::of(1, c_star(i, n)));
            }
    // w c_0* = -c_0*
    for (int n = 4; n <= 6; n += 2) {
        auto r = compose(w_diagram(n), c_star(0, n));
        CHECK(r == SignedDiagram::of(-1, c_star(0, n)));
    }
    // cap_d: d = -d s_{n-1}
    for (int n = 3; n <= 6; ++n) {
        auto d = cap_d_diagram(n);
        auto r = compose(d, s_gen(n - 1, n));
        CHECK(r == SignedDiagram::of(-1, d));
    }
    // y diagrams: y2 c0 = c0 = -y1 c0
    for (int n = 6; n <= 6; ++n) {
        CHECK(compose(y2_diagram(n), c_star(0, n)) == SignedDiagram::of(1, c_star(0, n)));
        CHECK(compose(y1_diagram(n), c_star(0, n)) == SignedDiagram::of(-1, c_star(0, n)));
    }
}

TEST_CASE("slice factorization reconstructs diagrams") {
    std::mt19937_64 rng(3);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) {
            if ((i + j) % 2) continue;
            auto basis = hom_basis(i, j);
            for (auto& d : basis) {
                auto [sgn, slices] = slice_factorization(d);
                (void)sgn;
                if (slices.empty()) {
                    CHECK(d == identity_diagram(d.src));
                    continue;
                }
                SignedDiagram cur = SignedDiagram::of(1, slices[0].diagram());
                for (std::size_t t = 1; t < slices.size(); ++t)
                    cur = compose(SignedDiagram::of(1, slices[t].diagram()), cur);
                CHECK(cur.diagram == d);
            }
        }
}

TEST_CASE("permutation extraction") {
    auto p = as_permutation(transposition(1, 3, 4));
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<int>{2, 1, 0, 3});
    CHECK(!as_permutation(epsilon(1, 2)).has_value());
}
