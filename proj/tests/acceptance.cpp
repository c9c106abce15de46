// Acceptance gate: twelve exact criteria, one pass/fail line each.

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "peri/json_io.hpp"
#include "peri/repthy.hpp"
#include "peri/schurweyl.hpp"
#include "peri/util.hpp"

using namespace peri;
using R = Rational;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t0;

void report(int index, const std::string& name, bool pass, const std::string& detail = "") {
    auto now = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(now - t0).count();
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << index << ". " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "  [" << (long)secs << "s]" << std::endl;
    if (!pass) ++failures;
}

long dfact(int n) {
    long r = 1;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

unsigned threads() { return std::thread::hardware_concurrency(); }

using Table = std::map<Partition, std::map<Partition, long>>;

bool table_matches(const DecompositionTable<R>& t, const Table& expected) {
    for (auto& lam : t.rows) {
        auto it = expected.find(lam);
        for (auto& mu : t.cols) {
            long want = 0;
            if (it != expected.end()) {
                auto jt = it->second.find(mu);
                if (jt != it->second.end()) want = jt->second;
            }
            if (t(lam, mu) != want) return false;
        }
    }
    return true;
}

} // namespace

int main() {
    t0 = std::chrono::steady_clock::now();

    // 1. dimension counts by enumeration
    {
        bool ok = true;
        for (int n = 2; n <= 6; ++n) {
            long count = (long)hom_basis(n, n).size();
            ok = ok && count == dfact(2 * n - 1) && count == dim_A(n);
        }
        auto count_c = [](int n) {
            long total = 0;
            for (int i : arity_set(n))
                for (int j : arity_set(n)) total += (long)hom_basis(i, j).size();
            return total;
        };
        ok = ok && count_c(2) == 6 && count_c(4) == 147;
        report(1, "dim A_n = (2n-1)!! for n = 2..6 and dim C_2 = 6, dim C_4 = 147", ok);
    }

    // 2. sign-rule oracle against the pe(3) tensor model, all pairs with at
    //    most six dots per diagram
    {
        using namespace tensorspace;
        const int m = 3;
        std::map<std::pair<int, int>, std::vector<SparseOp>> images;
        std::map<std::pair<int, int>, std::vector<BrauerDiagram>> bases;
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; j <= 6 - i; ++j) {
                if ((i + j) % 2) continue;
                bases[{i, j}] = hom_basis(i, j);
                auto& im = images[{i, j}];
                for (auto& d : bases[{i, j}]) im.push_back(pi_diagram(d, m));
            }
        bool ok = true;
        for (auto& [key, lower] : bases) {
            auto [i, j] = key;
            for (int k = 0; k <= 6 - j; ++k) {
                if ((j + k) % 2) continue;
                auto& upper = bases[{j, k}];
                auto& upper_im = images[{j, k}];
                auto& lower_im = images[{i, j}];
                std::vector<char> good(upper.size(), 1);
                parallel_for(upper.size(), threads(), [&](std::size_t a) {
                    for (std::size_t b = 0; b < lower.size(); ++b) {
                        auto comp = compose(upper[a], lower[b]);
                        auto prod = lower_im[b] * upper_im[a];
                        bool g = comp.is_zero()
                                     ? prod.is_zero_op()
                                     : prod == pi_diagram(comp.diagram, m).scaled(R(comp.sign));
                        if (!g) good[a] = 0;
                    }
                });
                for (char c : good) ok = ok && c;
            }
        }
        report(2, "diagram composition matches the pe(3) matrix model, i+j <= 6", ok);
    }

    // 3. relation suite for n <= 5
    {
        bool ok = true;
        std::string wit;
        for (int n = 2; n <= 5; ++n)
            for (auto& rep : relation_suite<R>(n, 2024, threads()))
                if (!rep.pass) {
                    ok = false;
                    wit = "n=" + std::to_string(n) + ": " + rep.name;
                }
        report(3, "commutation relation suite holds exactly for n <= 5", ok, wit);
    }

    // 4. Theta: central in A_5, annihilates the cup ideal, vanishes on every
    //    simple except L(2,1) at n = 3
    {
        bool ok = true;
        for (auto& rep : theta_checks<R>(5, threads())) ok = ok && rep.pass;
        CellContext<R> ctx;
        for (int n = 2; n <= 5; ++n)
            for (auto& rep : theta_on_simples(ctx, n)) ok = ok && rep.pass;
        report(4, "Theta central in A_5 and zero on all simples except n=3, (2,1)", ok);
    }

    // 5. Murphy basis and Jucys-Murphy triangularity for n <= 5
    {
        bool ok = content_vector(BratteliPath{{1}, {2}, {1}, {1, 1}}) ==
                  std::vector<int>{1, 2, -1};
        CellContext<R> ctx;
        for (int n = 2; n <= 5 && ok; ++n)
            for (auto& lam : cell_label_set(n)) {
                for (auto& rep : murphy_check(ctx, n, lam)) ok = ok && rep.pass;
                for (auto& rep : jm_triangularity_check(ctx, n, lam)) ok = ok && rep.pass;
            }
        report(5, "JM elements act triangularly on the Murphy bases, n <= 5", ok);
    }

    // 6. restriction intertwiners and the Bratteli diagram
    {
        using P = Partition;
        bool ok = bratteli_row(1) == std::vector<P>{{1}} &&
                  bratteli_row(2) == std::vector<P>{{}, {2}, {1, 1}} &&
                  bratteli_row(3) == std::vector<P>{{1}, {3}, {2, 1}, {1, 1, 1}} &&
                  bratteli_row(4) == std::vector<P>{{}, {2}, {1, 1}, {4}, {3, 1}, {2, 2},
                                                    {2, 1, 1}, {1, 1, 1, 1}};
        CellContext<R> ctx;
        for (int n = 2; n <= 5 && ok; ++n)
            for (auto& lam : cell_label_set(n))
                for (auto& rep : restriction_check(ctx, n, lam)) ok = ok && rep.pass;
        report(6, "restriction filtrations realize the displayed Bratteli diagram, n <= 5", ok);
    }

    // 7. decomposition matrices for n <= 5
    CellContext<R> ctx;
    std::map<int, DecompositionTable<R>> tables;
    {
        for (int n = 2; n <= 5; ++n) tables.emplace(n, decomposition_matrix(ctx, n));
        Table e2{{{}, {{{2}, 1}}}, {{2}, {{{2}, 1}}}, {{1, 1}, {{{1, 1}, 1}}}};
        Table e3{{{1}, {{{1}, 1}, {{3}, 1}}}};
        for (auto& lam : partitions_of(3)) e3[lam][lam] = 1;
        Table e4{{{}, {{{2}, 1}}},
                 {{2}, {{{2}, 1}, {{4}, 1}, {{2, 2}, 1}}},
                 {{1, 1}, {{{1, 1}, 1}, {{3, 1}, 1}}}};
        for (auto& lam : partitions_of(4)) e4[lam][lam] = 1;
        Table e5{{{1}, {{{1}, 1}, {{3}, 1}, {{3, 2}, 1}}},
                 {{3}, {{{3}, 1}, {{5}, 1}, {{3, 2}, 1}}},
                 {{2, 1}, {{{2, 1}, 1}, {{4, 1}, 1}}},
                 {{1, 1, 1}, {{{1, 1, 1}, 1}, {{3, 1, 1}, 1}}}};
        for (auto& lam : partitions_of(5)) e5[lam][lam] = 1;
        bool ok = table_matches(tables.at(2), e2) && table_matches(tables.at(3), e3) &&
                  table_matches(tables.at(4), e4) && table_matches(tables.at(5), e5);
        // screens on every nonzero entry
        for (int n = 2; n <= 5 && ok; ++n)
            for (auto& [key, v] : tables.at(n).entry) {
                auto& [lam, mu] = key;
                if (v < 1 || two_core(lam) != two_core(mu)) ok = false;
                if (lam == mu) continue;
                if (!contains(mu, lam) || !contents_pairable(lam, mu)) ok = false;
                std::set<std::vector<int>> cvs;
                for (auto& p : bratteli_paths(n, lam)) cvs.insert(content_vector(p));
                bool shared = false;
                for (auto& p : bratteli_paths(n, mu))
                    if (cvs.count(content_vector(p))) shared = true;
                ok = ok && shared;
            }
        report(7, "decomposition matrices reproduce the published tables, n <= 5", ok);
    }

    // 8. blocks are the 2-core fibers with distinct gamma values, n <= 5
    {
        bool ok = true;
        for (int n = 2; n <= 5; ++n)
            for (auto& rep : blocks_check(tables.at(n))) ok = ok && rep.pass;
        report(8, "block partitions equal same-2-core fibers, gamma separates, n <= 5", ok);
    }

    // 9. Cartan matrices equal the path-algebra oracles
    {
        bool ok = true;
        auto compare = [&](int n, const QuiverPresentation& q) {
            auto& t = tables.at(n);
            auto cart = cartan_matrix(t);
            auto counts = quiver_cartan_oracle(q);
            std::map<Partition, int> vidx;
            for (int v = 0; v < (int)q.vertices.size(); ++v) vidx[q.vertices[v]] = v;
            if (vidx.size() != t.cols.size()) return false;
            for (auto& lam : t.cols)
                for (auto& mu : t.cols) {
                    auto it = cart.find({lam, mu});
                    long got = it == cart.end() ? 0 : it->second;
                    if (got != counts[vidx.at(lam)][vidx.at(mu)]) return false;
                }
            return true;
        };
        ok = ok && compare(2, quiver_A2()) && compare(3, quiver_A3()) && compare(4, quiver_A4());
        report(9, "Cartan matrices of A_2, A_3, A_4 equal the quiver oracles", ok);
    }

    // 10. double centraliser
    {
        auto r4 = double_centralizer_check<R>(4);
        auto r2 = double_centralizer_check<R>(2);
        bool ok = r4.end_dim == 147 && r4.end_dim == r4.c_dim && r2.c_dim == 6 &&
                  r2.end_dim != 6;
        report(10, "dim End(e_4* C_4) = 147 and dim End(e_2* C_2) != 6", ok,
               "end dims " + std::to_string(r4.end_dim) + ", " + std::to_string(r2.end_dim));
    }

    // 11. BGG reciprocity consistency
    {
        bool ok = true;
        for (int n = 2; n <= 4; ++n) {
            auto pd = projective_dims(ctx, tables.at(n));
            long total = 0;
            for (auto& lam : tables.at(n).cols)
                total += pd.at(lam) * tables.at(n).simple_dim.at(lam);
            ok = ok && total == dim_A(n);
        }
        // the same identity at n = 5, summed over all blocks at once
        auto pd5 = projective_dims(ctx, tables.at(5));
        long total5 = 0;
        for (auto& lam : tables.at(5).cols)
            total5 += pd5.at(lam) * tables.at(5).simple_dim.at(lam);
        ok = ok && total5 == dim_A(5);
        report(11, "sum of dim P * dim L equals dim A_n, n <= 4 (and n = 5)", ok);
    }

    // 12. Schur-Weyl faithfulness and the JM images
    {
        using namespace tensorspace;
        bool ok = faithfulness_rank(2, 3) == 3 && faithfulness_rank(3, 3) == 15;
        for (int m = 1; m <= 3 && ok; ++m) {
            PeContext pe(m);
            for (int n = 2; n <= 3 && ok; ++n)
                for (int k = 2; k <= n; ++k)
                    ok = ok && xi_op(pe, k, n) == pi_expression(jm_element<R>(k, n), m);
        }
        report(12, "faithfulness ranks (2n-1)!! for n = 2,3 at m = 3 and xi_k = pi(x_k)", ok);
    }

    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 12 acceptance criteria passed" << std::endl;
    return 0;
}
