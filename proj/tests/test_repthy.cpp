#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "peri/repthy.hpp"

using namespace peri;
using R = Rational;

namespace {

long entry(const DecompositionTable<R>& t, std::initializer_list<int> lam,
           std::initializer_list<int> mu) {
    return t(Partition(lam), Partition(mu));
}

} // namespace

TEST_CASE("decomposition matrices for n = 2, 3, 4") {
    CellContext<R> ctx;
    auto t2 = decomposition_matrix(ctx, 2);
    CHECK(entry(t2, {}, {2}) == 1);
    CHECK(entry(t2, {}, {1, 1}) == 0);
    CHECK(entry(t2, {2}, {2}) == 1);
    CHECK(entry(t2, {1, 1}, {1, 1}) == 1);
    long total2 = 0;
    for (auto& [k, v] : t2.entry) {
        (void)k;
        total2 += v;
    }
    CHECK(total2 == 3);

    auto t3 = decomposition_matrix(ctx, 3);
    CHECK(entry(t3, {1}, {1}) == 1);
    CHECK(entry(t3, {1}, {3}) == 1);
    CHECK(entry(t3, {1}, {2, 1}) == 0);
    CHECK(entry(t3, {1}, {1, 1, 1}) == 0);
    for (auto& lam : partitions_of(3))
        for (auto& mu : partitions_of(3)) CHECK(t3(lam, mu) == (lam == mu ? 1 : 0));

    auto t4 = decomposition_matrix(ctx, 4);
    CHECK(entry(t4, {}, {2}) == 1);
    CHECK(entry(t4, {}, {1, 1}) == 0);
    for (auto& mu : partitions_of(4)) CHECK(t4(Partition{}, mu) == 0);
    CHECK(entry(t4, {2}, {2}) == 1);
    CHECK(entry(t4, {2}, {4}) == 1);
    CHECK(entry(t4, {2}, {2, 2}) == 1);
    CHECK(entry(t4, {2}, {3, 1}) == 0);
    CHECK(entry(t4, {2}, {2, 1, 1}) == 0);
    CHECK(entry(t4, {2}, {1, 1, 1, 1}) == 0);
    CHECK(entry(t4, {1, 1}, {1, 1}) == 1);
    CHECK(entry(t4, {1, 1}, {3, 1}) == 1);
    CHECK(entry(t4, {1, 1}, {4}) == 0);
    for (auto& lam : partitions_of(4))
        for (auto& mu : partitions_of(4)) CHECK(t4(lam, mu) == (lam == mu ? 1 : 0));
}

TEST_CASE("generic multiplicity-one rows for n <= 5") {
    CellContext<R> ctx;
    for (int n = 4; n <= 5; ++n) {
        auto t = decomposition_matrix(ctx, n);
        for (int j : arity_set(n)) {
            if (j + 2 > n || j == 0) continue;
            // [W(j) : L(j+2)] = [W(j) : L(j,2)] = 1, other size-(j+2) entries vanish
            Partition row{j};
            CHECK(t(row, Partition{j + 2}) == 1);
            if (j >= 2) CHECK(t(row, Partition{j, 2}) == 1);
            for (auto& mu : partitions_of(j + 2)) {
                long expect = (mu == Partition{j + 2} || (j >= 2 && mu == Partition{j, 2})) ? 1 : 0;
                CHECK(t(row, mu) == expect);
            }
            // [W(1^j) : L(3,1^{j-1})] = 1, other size-(j+2) entries vanish
            Partition col(j, 1);
            for (auto& mu : partitions_of(j + 2)) {
                Partition hook{3};
                for (int q = 1; q < j; ++q) hook.push_back(1);
                long expect = (j >= 2 && mu == hook) ? 1 : 0;
                if (j == 1 && mu == Partition{3}) expect = 1; // (1)+2 boxes in a row
                if (j == 1 && mu == Partition{1, 2}) expect = 0;
                CHECK(t(col, mu) == expect);
            }
        }
    }
}

TEST_CASE("screens hold on every nonzero entry") {
    CellContext<R> ctx;
    for (int n = 2; n <= 5; ++n) {
        auto t = decomposition_matrix(ctx, n);
        for (auto& [key, v] : t.entry) {
            auto& [lam, mu] = key;
            CHECK(v >= 1);
            CHECK(two_core(lam) == two_core(mu));
            if (lam != mu) {
                CHECK(contains(mu, lam));
                CHECK(contents_pairable(lam, mu));
                // some pair of paths shares a content vector
                std::set<std::vector<int>> cvs;
                for (auto& p : bratteli_paths(n, lam)) cvs.insert(content_vector(p));
                bool found = false;
                for (auto& p : bratteli_paths(n, mu))
                    if (cvs.count(content_vector(p))) found = true;
                CHECK(found);
            }
        }
        // adding two boxes in one row always gives multiplicity exactly one
        for (auto& lam : cell_label_set(n))
            for (auto& mu : pieri_strips(lam, StripKind::Horizontal)) {
                bool same_row = false;
                // two boxes in the same row: mu/lam occupies one row
                int rows_touched = 0;
                for (std::size_t r = 0; r < mu.size(); ++r) {
                    int lo = r < lam.size() ? lam[r] : 0;
                    if (mu[r] > lo) ++rows_touched;
                }
                same_row = rows_touched == 1;
                if (!same_row || size_of(mu) > n || (n - size_of(mu)) % 2) continue;
                CHECK(t(lam, mu) == 1);
            }
    }
}

TEST_CASE("blocks match 2-cores and the gamma statistic") {
    CellContext<R> ctx;
    for (int n = 2; n <= 5; ++n) {
        auto t = decomposition_matrix(ctx, n);
        auto blocks = block_partition(t);
        std::map<Partition, std::set<Partition>> fibers;
        for (auto& mu : simple_label_set(n)) fibers[two_core(mu)].insert(mu);
        CHECK(blocks.size() == fibers.size());
        std::set<int> gammas;
        for (auto& cls : blocks) {
            std::set<Partition> got(cls.begin(), cls.end());
            CHECK(fibers.at(two_core(cls.front())) == got);
            int g = gamma_statistic(cls.front());
            for (auto& mu : cls) CHECK(gamma_statistic(mu) == g);
            CHECK(!gammas.count(g));
            gammas.insert(g);
        }
    }
}

TEST_CASE("cartan matrices match the path algebra oracles") {
    CellContext<R> ctx;
    struct Case {
        int n;
        QuiverPresentation quiver;
    };
    for (auto& tc : {Case{2, quiver_A2()}, Case{3, quiver_A3()}, Case{4, quiver_A4()}}) {
        auto t = decomposition_matrix(ctx, tc.n);
        auto cart = cartan_matrix(t);
        auto counts = quiver_cartan_oracle(tc.quiver);
        std::map<Partition, int> vidx;
        for (int v = 0; v < (int)tc.quiver.vertices.size(); ++v) vidx[tc.quiver.vertices[v]] = v;
        REQUIRE(vidx.size() == t.cols.size());
        for (auto& lam : t.cols)
            for (auto& mu : t.cols) {
                auto it = cart.find({lam, mu});
                long got = it == cart.end() ? 0 : it->second;
                CHECK(got == counts[vidx.at(lam)][vidx.at(mu)]);
            }
    }
    // the three-vertex quiver of C_2 has total path count 6 = dim C_2
    auto counts = quiver_cartan_oracle(quiver_C2());
    long total = 0;
    for (auto& row : counts)
        for (long v : row) total += v;
    CHECK(total == dim_C(2));
    // C_4 quiver: 8 vertices + 8 arrows + 5 surviving length-2 paths
    // (u1d1, u4d2, u4d3, u3d4, u2d4); every length-3 word hits a relation
    auto c4 = quiver_cartan_oracle(quiver_C4());
    long t4 = 0;
    for (auto& row : c4)
        for (long v : row) t4 += v;
    CHECK(t4 == 21);
}

TEST_CASE("bgg consistency") {
    CellContext<R> ctx;
    for (int n = 2; n <= 4; ++n) {
        auto t = decomposition_matrix(ctx, n);
        auto pdims = projective_dims(ctx, t);
        long total = 0;
        for (auto& lam : t.cols) total += pdims.at(lam) * t.simple_dim.at(lam);
        CHECK(total == dim_A(n));
    }
}

TEST_CASE("double centralizer") {
    auto r2 = double_centralizer_check<R>(2);
    CHECK(r2.c_dim == 6);
    CHECK(r2.end_dim != r2.c_dim);
    CHECK(r2.end_dim == 7);
    auto r3 = double_centralizer_check<R>(3);
    CHECK(r3.end_dim == r3.c_dim);
    CHECK(r3.end_dim == 22);
}

TEST_CASE("theta on simples") {
    CellContext<R> ctx;
    for (int n = 2; n <= 4; ++n)
        for (auto& rep : theta_on_simples(ctx, n)) {
            INFO(rep.name, " ", rep.witness);
            CHECK(rep.pass);
        }
}

TEST_CASE("symmetric group restriction of extremal cells") {
    CellContext<R> ctx;
    // W_n(lambda) for lambda of n-2 boxes restricts multiplicity-free to the
    // two-box horizontal additions
    for (int n = 3; n <= 5; ++n)
        for (auto& lam : partitions_of(n - 2)) {
            auto mult = sym_restriction_multiplicities(ctx, n, lam);
            auto strips = pieri_strips(lam, StripKind::Horizontal);
            CHECK(mult.size() == strips.size());
            for (auto& nu : strips) {
                REQUIRE(mult.count(nu));
                CHECK(mult.at(nu) == 1);
            }
        }
    // the two displayed examples
    auto m4 = sym_restriction_multiplicities(ctx, 4, {});
    CHECK(m4 == std::map<Partition, long>{{{3, 1}, 1}});
    auto m5 = sym_restriction_multiplicities(ctx, 5, {1});
    CHECK(m5 == std::map<Partition, long>{{{4, 1}, 1}, {{3, 2}, 1}, {{3, 1, 1}, 1}});
}

TEST_CASE("hom spaces between cell modules vanish against the order") {
    CellContext<R> ctx;
    // the Hom-vanishing half of the standard-system condition holds for n = 3
    int n = 3;
    auto labels = cell_label_set(n);
    for (auto& a : labels)
        for (auto& b : labels) {
            const auto& ma = ctx.cell(n, a);
            const auto& mb = ctx.cell(n, b);
            std::vector<Matrix<R>> ga, gb;
            for (int k = 1; k < n; ++k) {
                ga.push_back(act_diagram(ma, s_gen(k, n)));
                gb.push_back(act_diagram(mb, s_gen(k, n)));
                ga.push_back(act_diagram(ma, epsilon(k, n)));
                gb.push_back(act_diagram(mb, epsilon(k, n)));
            }
            auto basis = intertwiner_space(ga, gb);
            if (!basis.empty()) CHECK(dominance_leq(a, b));
        }
    // and fails for n = 2: the empty-shape cell is isomorphic to the (2) cell
    const auto& w0 = ctx.cell(2, {});
    const auto& w2 = ctx.cell(2, {2});
    std::vector<Matrix<R>> g0, g2;
    g0.push_back(act_diagram(w0, s_gen(1, 2)));
    g2.push_back(act_diagram(w2, s_gen(1, 2)));
    g0.push_back(act_diagram(w0, epsilon(1, 2)));
    g2.push_back(act_diagram(w2, epsilon(1, 2)));
    auto basis = intertwiner_space(g0, g2);
    CHECK(basis.size() == 1);
    CHECK(!dominance_leq(Partition{}, Partition{2}));
}

TEST_CASE("schur's lemma via the intertwiner space") {
    CellContext<R> ctx;
    // two copies of the same simple A_2 module have a one-dimensional
    // intertwiner space
    const auto& m = ctx.cell(2, {1, 1});
    std::vector<Matrix<R>> g;
    g.push_back(act_diagram(m, s_gen(1, 2)));
    g.push_back(act_diagram(m, epsilon(1, 2)));
    auto basis = intertwiner_space(g, g);
    CHECK(basis.size() == 1);
}
