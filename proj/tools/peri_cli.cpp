#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "peri/json_io.hpp"
#include "peri/schurweyl.hpp"
#include "peri/util.hpp"

using namespace peri;
using nlohmann::json;

namespace {

struct RunConfig {
    int n = 0;
    std::uint64_t characteristic = 0;
    std::uint64_t seed = 2024;
    unsigned threads = 0; // 0: hardware default
    long tensor_budget = 2000;
    int word_budget = 40;
};

int fail_usage(const std::string& msg) {
    std::cerr << json{{"error", msg}}.dump() << "\n";
    return 2;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void load_budgets(RunConfig& cfg) {
    if (const char* s = std::getenv("PERI_TENSOR_BUDGET")) cfg.tensor_budget = std::atol(s);
    if (const char* s = std::getenv("PERI_WORD_BUDGET")) cfg.word_budget = std::atoi(s);
}

int check_field(const RunConfig& cfg) {
    if (cfg.characteristic == 0) return 0;
    if (!is_prime(cfg.characteristic) || (int)cfg.characteristic <= cfg.n)
        return fail_usage("characteristic must be 0 or a prime > n");
    Fp::set_modulus(cfg.characteristic);
    return 0;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

bool print_reports(const json& extra, const std::vector<CheckReport>& reps) {
    bool pass = true;
    for (auto& r : reps) pass = pass && r.pass;
    json out = extra;
    out["checks"] = reports_to_json(reps);
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
    return pass;
}

bool print_reports(const json& extra, const std::vector<RelationCheck>& reps) {
    bool pass = true;
    for (auto& r : reps) pass = pass && r.pass;
    json out = extra;
    out["checks"] = reports_to_json(reps);
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
    return pass;
}

// ---- verify suites, templated over the scalar field ----

template <class K>
std::vector<CheckReport> suite_jm(const RunConfig& cfg) {
    CellContext<K> ctx;
    std::vector<CheckReport> reps;
    for (auto& lam : cell_label_set(cfg.n))
        for (auto& r : jm_triangularity_check(ctx, cfg.n, lam)) reps.push_back(r);
    return reps;
}

template <class K>
std::vector<CheckReport> suite_murphy(const RunConfig& cfg) {
    CellContext<K> ctx;
    std::vector<CheckReport> reps;
    for (auto& lam : cell_label_set(cfg.n))
        for (auto& r : murphy_check(ctx, cfg.n, lam)) reps.push_back(r);
    return reps;
}

template <class K>
std::vector<CheckReport> suite_restriction(const RunConfig& cfg) {
    CellContext<K> ctx;
    std::vector<CheckReport> reps;
    for (auto& lam : cell_label_set(cfg.n))
        for (auto& r : restriction_check(ctx, cfg.n, lam)) reps.push_back(r);
    return reps;
}

template <class K>
std::vector<CheckReport> suite_theta(const RunConfig& cfg) {
    std::vector<CheckReport> reps;
    for (auto& r : theta_checks<K>(cfg.n, cfg.threads))
        reps.push_back(CheckReport{r.name, r.pass, r.witness});
    CellContext<K> ctx;
    for (auto& r : theta_on_simples(ctx, cfg.n)) reps.push_back(r);
    return reps;
}

template <class K>
std::vector<CheckReport> suite_blocks(const RunConfig& cfg) {
    CellContext<K> ctx;
    auto table = decomposition_matrix(ctx, cfg.n, cfg.seed);
    return blocks_check(table);
}

template <class K>
std::vector<CheckReport> suite_dc(const RunConfig& cfg) {
    auto rep = double_centralizer_check<K>(cfg.n);
    CheckReport r;
    r.name = "dim End(e_n* C) vs dim C_n";
    bool equal = rep.end_dim == rep.c_dim;
    r.pass = cfg.n == 2 ? !equal : equal;
    r.witness = "end=" + std::to_string(rep.end_dim) + " c=" + std::to_string(rep.c_dim);
    return {r};
}

std::vector<CheckReport> suite_schurweyl(const RunConfig& cfg, int m) {
    using namespace tensorspace;
    std::vector<CheckReport> reps;
    long words = 1;
    for (int t = 0; t < cfg.n; ++t) words *= 2 * m;
    if (words > cfg.tensor_budget) {
        reps.push_back(CheckReport{"tensor budget", false,
                                   "(2m)^n exceeds PERI_TENSOR_BUDGET=" +
                                       std::to_string(cfg.tensor_budget)});
        return reps;
    }
    PeContext pe(m);
    bool gens = true, jm = true;
    for (int k = 1; k < cfg.n; ++k) {
        gens = gens && sigma_op(pe, k, cfg.n) == pi_diagram(s_gen(k, cfg.n), m);
        gens = gens && c_op(pe, k, cfg.n) == pi_diagram(epsilon(k, cfg.n), m);
    }
    for (int k = 2; k <= cfg.n; ++k)
        jm = jm && xi_op(pe, k, cfg.n) == pi_expression(jm_element<Rational>(k, cfg.n), m);
    reps.push_back(CheckReport{"sigma_k and c_k equal the generator images", gens, ""});
    reps.push_back(CheckReport{"xi_k equals the Jucys-Murphy image", jm, ""});
    auto basis = hom_basis(cfg.n, cfg.n);
    std::vector<SparseOp> images;
    for (auto& d : basis) images.push_back(pi_diagram(d, m));
    std::vector<char> ok(basis.size(), 1);
    parallel_for(basis.size(), cfg.threads, [&](std::size_t a) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            auto comp = compose(basis[a], basis[b]);
            auto prod = images[b] * images[a];
            bool good = comp.is_zero()
                            ? prod.is_zero_op()
                            : prod == pi_diagram(comp.diagram, m).scaled(Rational(comp.sign));
            if (!good) ok[a] = 0;
        }
    });
    bool all = true;
    for (char c : ok) all = all && c;
    reps.push_back(CheckReport{"diagram composition matches the matrix model", all, ""});
    if (cfg.n <= m) {
        bool faithful = faithfulness_rank(cfg.n, m) == (std::size_t)dim_A(cfg.n);
        reps.push_back(CheckReport{"faithfulness rank equals dim A_n", faithful, ""});
    }
    return reps;
}

template <class K>
int run_verify(const RunConfig& cfg, const std::string& suite, int m) {
    json head{{"suite", suite}, {"n", cfg.n}, {"characteristic", cfg.characteristic},
              {"seed", cfg.seed}};
    bool pass = true;
    if (suite == "relations" || suite == "all")
        pass = print_reports(json{{"suite", "relations"}, {"n", cfg.n}},
                             relation_suite<K>(cfg.n, cfg.seed, cfg.threads)) &&
               pass;
    if (suite == "jm" || suite == "all")
        pass = print_reports(json{{"suite", "jm"}, {"n", cfg.n}}, suite_jm<K>(cfg)) && pass;
    if (suite == "theta" || suite == "all")
        pass = print_reports(json{{"suite", "theta"}, {"n", cfg.n}}, suite_theta<K>(cfg)) && pass;
    if (suite == "restriction" || suite == "all")
        pass = print_reports(json{{"suite", "restriction"}, {"n", cfg.n}},
                             suite_restriction<K>(cfg)) &&
               pass;
    if (suite == "murphy" || suite == "all")
        pass = print_reports(json{{"suite", "murphy"}, {"n", cfg.n}}, suite_murphy<K>(cfg)) && pass;
    if (suite == "blocks" || suite == "all")
        pass = print_reports(json{{"suite", "blocks"}, {"n", cfg.n}}, suite_blocks<K>(cfg)) && pass;
    if (suite == "dc" || suite == "all") {
        if (cfg.n <= 4)
            pass = print_reports(json{{"suite", "dc"}, {"n", cfg.n}}, suite_dc<K>(cfg)) && pass;
        else if (suite == "dc")
            return fail_usage("dc suite supports n <= 4 at desk scale");
    }
    if (suite == "schurweyl" || suite == "all") {
        if (cfg.characteristic != 0) {
            if (suite == "schurweyl")
                return fail_usage("the tensor-space suite runs in characteristic 0");
        } else {
            pass = print_reports(json{{"suite", "schurweyl"}, {"n", cfg.n}, {"m", m}},
                                 suite_schurweyl(cfg, m)) &&
                   pass;
        }
    }
    (void)head;
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact periplectic Brauer category and algebra computations"};
    app.require_subcommand(1);

    RunConfig cfg;
    load_budgets(cfg);

    // multiply
    auto* mult = app.add_subcommand("multiply", "product of two expressions in A_n");
    std::string lhs_path, rhs_path;
    mult->add_option("--n", cfg.n, "algebra size")->required();
    mult->add_option("--lhs", lhs_path, "JSON file with the left expression")->required();
    mult->add_option("--rhs", rhs_path, "JSON file with the right expression")->required();

    // bratteli
    auto* brat = app.add_subcommand("bratteli", "rows and edges of the Bratteli diagram");
    int rows = 0;
    bool as_dot = false;
    brat->add_option("--rows", rows, "number of rows")->required();
    brat->add_flag("--dot", as_dot, "emit graphviz instead of JSON");

    // cell
    auto* cell = app.add_subcommand("cell", "cell module data for one shape");
    std::string lambda_str;
    cell->add_option("--n", cfg.n, "algebra size")->required();
    cell->add_option("--lambda", lambda_str, "partition as a JSON array, e.g. [2,1]")->required();
    cell->add_option("--char", cfg.characteristic, "field characteristic (0 or prime > n)");

    // decomp / cartan / blocks
    auto* dec = app.add_subcommand("decomp", "decomposition matrix of A_n");
    bool as_csv = false;
    dec->add_option("--n", cfg.n, "algebra size")->required();
    dec->add_option("--char", cfg.characteristic, "field characteristic");
    dec->add_option("--seed", cfg.seed, "seed for the spanning-set extension");
    dec->add_flag("--csv", as_csv, "emit CSV instead of JSON");
    auto* car = app.add_subcommand("cartan", "Cartan matrix of A_n");
    car->add_option("--n", cfg.n, "algebra size")->required();
    car->add_option("--seed", cfg.seed, "seed for the spanning-set extension");
    car->add_flag("--csv", as_csv, "emit CSV instead of JSON");
    auto* blk = app.add_subcommand("blocks", "block partition of the simple labels");
    blk->add_option("--n", cfg.n, "algebra size")->required();
    blk->add_option("--seed", cfg.seed, "seed for the spanning-set extension");

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int m = 3;
    ver->add_option("--suite", suite, "relations|jm|theta|restriction|murphy|blocks|dc|schurweyl|all")
        ->required();
    ver->add_option("--n", cfg.n, "algebra size")->required();
    ver->add_option("--m", m, "tensor-space parameter for the schurweyl suite");
    ver->add_option("--char", cfg.characteristic, "field characteristic");
    ver->add_option("--seed", cfg.seed, "seed for randomized checks");
    ver->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");

    // schurweyl
    auto* sw = app.add_subcommand("schurweyl", "tensor-space oracle agreement report");
    bool check_flag = false;
    sw->add_option("--n", cfg.n, "algebra size")->required();
    sw->add_option("--m", m, "superspace parameter")->required();
    sw->add_flag("--check", check_flag, "run the oracle checks");
    sw->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(mult)) {
            if (cfg.n < 0 || cfg.n > 8) return fail_usage("n out of range (0..8)");
            Expression<Rational> x, y;
            try {
                x = expression_from_json(load_json_file(lhs_path), cfg.n, cfg.n);
                y = expression_from_json(load_json_file(rhs_path), cfg.n, cfg.n);
            } catch (const std::exception& e) {
                return fail_usage(e.what());
            }
            std::cout << expression_to_json(multiply(x, y)).dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(brat)) {
            if (rows < 1 || rows > 12) return fail_usage("rows out of range (1..12)");
            if (as_dot)
                std::cout << bratteli_to_dot(rows);
            else
                std::cout << bratteli_to_json(rows).dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(cell)) {
            if (cfg.n < 1 || cfg.n > 6) return fail_usage("n out of range (1..6)");
            if (int rc = check_field(cfg)) return rc;
            Partition lam;
            try {
                lam = partition_from_json(json::parse(lambda_str));
            } catch (const std::exception& e) {
                return fail_usage(std::string("bad --lambda: ") + e.what());
            }
            if (size_of(lam) > cfg.n || (cfg.n - size_of(lam)) % 2)
                return fail_usage("lambda must have n, n-2, ... boxes");
            json out;
            if (cfg.characteristic == 0) {
                CellContext<Rational> ctx;
                const auto& mod = ctx.cell(cfg.n, lam);
                const auto& mb = ctx.murphy(cfg.n, lam);
                out["n"] = cfg.n;
                out["lambda"] = partition_to_json(lam);
                out["dimension"] = mod.dim();
                out["gram_rank"] = (long)simple_dimension(mod);
                json paths = json::array();
                for (auto& p : mb.paths) {
                    json jp = json::array();
                    for (auto& v : p) jp.push_back(partition_to_json(v));
                    paths.push_back(jp);
                }
                json basis = json::array();
                for (std::size_t r = 0; r < mb.vectors.rows(); ++r) {
                    json row = json::array();
                    for (std::size_t c = 0; c < mb.vectors.cols(); ++c)
                        row.push_back(scalar_str(mb.vectors(r, c)));
                    basis.push_back(row);
                }
                out["murphy"] = json{{"paths", paths}, {"change_of_basis", basis}};
            } else {
                CellContext<Fp> ctx;
                const auto& mod = ctx.cell(cfg.n, lam);
                out["n"] = cfg.n;
                out["lambda"] = partition_to_json(lam);
                out["dimension"] = mod.dim();
                out["gram_rank"] = (long)simple_dimension(mod);
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(dec) || app.got_subcommand(car) || app.got_subcommand(blk)) {
            if (cfg.n < 2 || cfg.n > 5) return fail_usage("n out of range (2..5)");
            if (int rc = check_field(cfg)) return rc;
            if (cfg.characteristic != 0 && app.got_subcommand(dec)) {
                CellContext<Fp> ctx;
                auto table = decomposition_matrix(ctx, cfg.n, cfg.seed);
                if (as_csv)
                    std::cout << decomposition_to_csv(table);
                else
                    std::cout << decomposition_to_json(table).dump(2) << "\n";
                return 0;
            }
            CellContext<Rational> ctx;
            auto table = decomposition_matrix(ctx, cfg.n, cfg.seed);
            if (app.got_subcommand(dec)) {
                if (as_csv)
                    std::cout << decomposition_to_csv(table);
                else
                    std::cout << decomposition_to_json(table).dump(2) << "\n";
            } else if (app.got_subcommand(car)) {
                auto cart = cartan_matrix(table);
                json cols = json::array(), entries = json::array();
                for (auto& c : table.cols) cols.push_back(partition_to_json(c));
                std::string csv = "P\\L";
                for (auto& c : table.cols) csv += "," + json(c).dump();
                csv += "\n";
                for (auto& r : table.cols) {
                    json line = json::array();
                    csv += json(r).dump();
                    for (auto& c : table.cols) {
                        auto it = cart.find({r, c});
                        long v = it == cart.end() ? 0 : it->second;
                        line.push_back(v);
                        csv += "," + std::to_string(v);
                    }
                    entries.push_back(line);
                    csv += "\n";
                }
                if (as_csv)
                    std::cout << csv;
                else
                    std::cout << json{{"n", cfg.n}, {"labels", cols}, {"matrix", entries}}.dump(2)
                              << "\n";
            } else {
                auto blocks = block_partition(table);
                json jb = json::array();
                for (auto& cls : blocks) {
                    json c = json::array();
                    for (auto& p : cls) c.push_back(partition_to_json(p));
                    jb.push_back(json{{"labels", c},
                                      {"two_core", partition_to_json(two_core(cls.front()))},
                                      {"gamma", gamma_statistic(cls.front())}});
                }
                std::cout << json{{"n", cfg.n}, {"blocks", jb}}.dump(2) << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(ver)) {
            if (cfg.n < 2 || cfg.n > 5) return fail_usage("n out of range (2..5)");
            static const std::set<std::string> known{"relations", "jm",     "theta",
                                                     "restriction", "murphy", "blocks",
                                                     "dc",        "schurweyl", "all"};
            if (!known.count(suite)) return fail_usage("unknown suite " + suite);
            if (int rc = check_field(cfg)) return rc;
            if (cfg.characteristic == 0) return run_verify<Rational>(cfg, suite, m);
            return run_verify<Fp>(cfg, suite, m);
        }
        if (app.got_subcommand(sw)) {
            if (cfg.n < 2 || cfg.n > 4) return fail_usage("n out of range (2..4)");
            if (m < 1 || m > 3) return fail_usage("m out of range (1..3)");
            bool pass = print_reports(json{{"n", cfg.n}, {"m", m}}, suite_schurweyl(cfg, m));
            return pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
