// Command-line front end: compute invariants, run verification suites, build
// family tables, expand the fan/cycle generating functions.  All output goes
// to stdout as JSON (tables optionally as CSV); diagnostics go to stderr.
// Exit codes: 0 ok / all checks pass, 1 verification failure, 2 bad input,
// 3 size cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "klm/closed_forms.hpp"
#include "klm/graph.hpp"
#include "klm/hecke.hpp"
#include "klm/json_io.hpp"
#include "klm/kl.hpp"

namespace {

using namespace klm;
using nlohmann::json;

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError("malformed JSON input");
    return j;
}

struct SourceOpts {
    std::string matroid_path, graph_path, family;
    int cap = kDefaultCap;

    void attach(CLI::App* cmd, bool required) {
        auto* m = cmd->add_option("--matroid", matroid_path,
                                  "matroid JSON file, or - for stdin");
        auto* g = cmd->add_option("--graph", graph_path,
                                  "graph JSON file, or - for stdin");
        auto* f = cmd->add_option("--family", family,
                                  "family spec, e.g. cycle:6 or saw:3,2");
        m->excludes(g)->excludes(f);
        g->excludes(f);
        if (required) {
            // CLI11 cannot express "exactly one of"; checked in build()
        }
        cmd->add_option("--cap", cap, "ground set size cap")->capture_default_str();
    }

    bool present() const {
        return !matroid_path.empty() || !graph_path.empty() || !family.empty();
    }

    Matroid build() const {
        if (!present())
            throw ValidationError("one of --matroid, --graph, --family is required");
        if (!matroid_path.empty())
            return matroid_from_json(parse_json(read_source(matroid_path)), cap);
        if (!graph_path.empty())
            return graphic_matroid(graph_from_json(parse_json(read_source(graph_path))), cap);
        return graphic_matroid(family_graph(family), cap);
    }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_compute(const SourceOpts& src) {
    KlEngine eng(src.build());
    json out{{"rank", eng.matroid().rank()},
             {"kl", poly_to_json(eng.kl())},
             {"z", poly_to_json(eng.z())},
             {"tau", int_to_json(eng.tau())},
             {"charpoly", poly_to_json(eng.char_poly())}};
    emit(out);
    return 0;
}

// ---- verify suites ----

json row(const std::string& check, bool ok, const std::string& detail = "") {
    json r{{"check", check}, {"status", ok ? "pass" : "fail"}};
    if (!ok && !detail.empty()) r["detail"] = detail;
    return r;
}

json hecke_suite(const Matroid& matroid, bool& all_pass) {
    KlEngine eng(matroid);
    const Matroid& m = eng.matroid();
    json checks = json::array();

    bool zeta_perverse = true, zeta_decomp = true;
    std::string detail;
    for (FlatMask f : m.flats()) {
        HElement zf = zeta(eng, f);
        if (!is_perverse(zf)) {
            zeta_perverse = false;
            detail = "zeta at " + m.flat_str(f);
            break;
        }
        auto dec = decompose_perverse(eng, zf);
        if (dec.size() != 1 || dec.begin()->first != f || dec.begin()->second != 1) {
            zeta_decomp = false;
            detail = "decomposition of zeta at " + m.flat_str(f);
            break;
        }
    }
    checks.push_back(row("zeta-perverse", zeta_perverse, detail));
    checks.push_back(row("zeta-decomposition", zeta_decomp, detail));

    // deletion transport, for every element the identity applies to
    bool delta_perverse = true, delta_decomp = true, phi_compat = true;
    bool any_element = false;
    HElement ztop = zeta(eng, m.full_set());
    for (int e = 0; e < m.ground_size(); ++e) {
        if (m.is_coloop(e)) continue;
        any_element = true;
        HElement d = delta_map(ztop, e);
        KlEngine del(d.matroid);
        if (!is_perverse(d)) {
            delta_perverse = false;
            break;
        }
        auto dec = decompose_perverse(del, d);
        // expected: the deletion's top flat once, plus tau multiples over S
        std::map<FlatMask, mpz_class> expect;
        expect[del.matroid().full_set()] = 1;
        for (FlatMask f : eng.s_set(e)) {
            mpz_class tau = eng.interval_tau(f | bit(e), m.full_set());
            if (tau == 0) continue;
            FlatMask img = (f & (bit(e) - 1)) | ((f >> (e + 1)) << e);
            expect[img] = tau;
        }
        if (dec != expect) delta_decomp = false;
        for (FlatMask f : m.flats()) {
            HElement zf = zeta(eng, f);
            if (!(phi_map(delta_map(zf, e)) == phi_map(zf))) {
                phi_compat = false;
                break;
            }
        }
        if (!delta_decomp || !phi_compat) break;
    }
    const char* skip = any_element ? nullptr : "skipped";
    auto flag = [&](const std::string& name, bool ok) {
        if (skip) {
            checks.push_back(json{{"check", name}, {"status", "skipped"}});
        } else {
            checks.push_back(row(name, ok));
        }
        return skip ? true : ok;
    };
    bool d1 = flag("delta-zeta-perverse", delta_perverse);
    bool d2 = flag("delta-zeta-decomposition", delta_decomp);
    bool d3 = flag("phi-delta-compatibility", phi_compat);

    bool bar_fixes = true, bar_squares = true;
    for (FlatMask f : m.flats()) {
        HElement zf = zeta(eng, f);
        if (!(bar_involution(eng, zf) == zf)) bar_fixes = false;
        HElement b = h_basis(eng.matroid_ptr(), f);
        HElement twice = bar_involution(eng, bar_involution(eng, b));
        if (!(twice == b)) bar_squares = false;
    }
    checks.push_back(row("bar-fixes-zeta", bar_fixes));
    checks.push_back(row("bar-involution", bar_squares));

    all_pass = zeta_perverse && zeta_decomp && d1 && d2 && d3 && bar_fixes && bar_squares;
    return checks;
}

json closedform_suite(bool& all_pass) {
    json checks = json::array();
    all_pass = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back(row(name, ok, detail));
        all_pass = all_pass && ok;
    };

    auto engine_kl = [](const Graph& g) { return KlEngine(graphic_matroid(g)).kl(); };

    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 12 && ok; ++n)
        if (!(cycle_kl(n) == engine_kl(cycle_graph(n)))) {
            ok = false;
            detail = "n=" + std::to_string(n);
        }
    record("cycle-engine", ok, detail);

    ok = true;
    for (int n = 2; n <= 9 && ok; ++n)
        for (int r = 0; r <= n && n + r <= 9 && ok; ++r)
            if (!(saw_kl(n, r) == engine_kl(partial_saw_graph(n, r)))) {
                ok = false;
                detail = "n=" + std::to_string(n) + " r=" + std::to_string(r);
            }
    record("saw-engine", ok, detail);

    ok = true;
    for (int n = 1; n <= 8 && ok; ++n)
        if (!(fan_kl(n) == engine_kl(fan_graph(n)))) {
            ok = false;
            detail = "n=" + std::to_string(n);
        }
    record("fan-engine", ok, detail);

    ok = true;
    for (int m = 3; m <= 7 && ok; ++m)
        for (int n = 3; m + n <= 10 && ok; ++n)
            if (!(double_cycle_kl(m, n) == engine_kl(double_cycle_graph(m, n)))) {
                ok = false;
                detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
    record("doublecycle-engine", ok, detail);

    ok = true;
    for (int n = 2; n <= 5 && ok; ++n)
        if (!(thagomizer_kl(n) == engine_kl(thagomizer_graph(n)))) {
            ok = false;
            detail = "n=" + std::to_string(n);
        }
    record("thagomizer-engine", ok, detail);

    // c_k(d) = -c_{k-1}(d-1) + C(d, d-2k) c_{k-1}(2k-1) for 0 < 2k < d
    ok = true;
    for (long d = 2; d <= 10 && ok; ++d)
        for (long k = 1; 2 * k < d && ok; ++k) {
            mpz_class lhs = uniform_corank1_coeff(d, k);
            mpz_class rhs = -uniform_corank1_coeff(d - 1, k - 1) +
                            binomial(d, d - 2 * k) * uniform_corank1_coeff(2 * k - 1, k - 1);
            if (lhs != rhs) {
                ok = false;
                detail = "d=" + std::to_string(d) + " k=" + std::to_string(k);
            }
        }
    record("corank1-recurrence", ok, detail);

    // fan_kl(n) = cycle_kl(n+1) - t * sum_{k=2}^{n-1} cycle_kl(k) fan_kl(n-k)
    ok = true;
    for (long n = 2; n <= 10 && ok; ++n) {
        IntPoly rhs = cycle_kl(n + 1);
        for (long k = 2; k <= n - 1; ++k) {
            IntPoly fan_part = (n - k == 0) ? IntPoly(1) : fan_kl(n - k);
            rhs -= (cycle_kl(k) * fan_part).shifted(1);
        }
        if (!(fan_kl(n) == rhs)) {
            ok = false;
            detail = "n=" + std::to_string(n);
        }
    }
    record("fan-cycle-recursion", ok, detail);

    record("series-identity", verify_series_identity(12));

    ok = true;
    {
        BivariateSeries f = fan_kl_series(12), c = cycle_kl_series(12);
        if (!f.coeff(0).is_zero() || !c.coeff(0).is_zero()) ok = false;
        for (int n = 1; n <= 12 && ok; ++n)
            if (!(f.coeff(n) == fan_kl(n)) || !(c.coeff(n) == cycle_kl(n + 1))) {
                ok = false;
                detail = "n=" + std::to_string(n);
            }
    }
    record("series-coefficients", ok, detail);

    return checks;
}

int run_verify(const std::string& suite, const SourceOpts& src) {
    json reports = json::array();
    bool all_pass = true;

    auto deletion_on = [&](const Matroid& matroid, const std::string& label) {
        KlEngine eng(matroid.is_simple() ? matroid : matroid.simplified());
        DeletionReport rep = eng.verify_deletion();
        reports.push_back(json{{"suite", "deletion"},
                               {"source", label},
                               {"checks", deletion_report_to_json(rep)},
                               {"all_pass", rep.all_pass()}});
        all_pass = all_pass && rep.all_pass();
    };
    auto hecke_on = [&](const Matroid& matroid, const std::string& label) {
        bool ok = true;
        json checks = hecke_suite(matroid.is_simple() ? matroid : matroid.simplified(), ok);
        reports.push_back(json{{"suite", "hecke"},
                               {"source", label},
                               {"checks", checks},
                               {"all_pass", ok}});
        all_pass = all_pass && ok;
    };

    const std::vector<std::string> default_sources = {"cycle:4", "cycle:5", "complete:4",
                                                      "thagomizer:2", "thagomizer:3"};
    auto spread = [&](const std::string& kind) {
        if (src.present()) {
            Matroid m = src.build();
            std::string label = !src.family.empty() ? src.family
                                : !src.graph_path.empty() ? src.graph_path
                                                          : src.matroid_path;
            if (kind == "deletion") deletion_on(m, label);
            if (kind == "hecke") hecke_on(m, label);
        } else {
            for (const auto& fam : default_sources) {
                Matroid m = graphic_matroid(family_graph(fam), src.cap);
                if (kind == "deletion") deletion_on(m, fam);
                if (kind == "hecke") hecke_on(m, fam);
            }
        }
    };

    if (suite == "deletion") {
        if (!src.present())
            throw ValidationError("verify deletion needs --matroid, --graph, or --family");
        spread("deletion");
    } else if (suite == "hecke") {
        if (!src.present())
            throw ValidationError("verify hecke needs --matroid, --graph, or --family");
        spread("hecke");
    } else if (suite == "closedforms") {
        bool ok = true;
        json checks = closedform_suite(ok);
        reports.push_back(json{
            {"suite", "closedforms"}, {"checks", checks}, {"all_pass", ok}});
        all_pass = all_pass && ok;
    } else if (suite == "all") {
        bool ok = true;
        json checks = closedform_suite(ok);
        reports.push_back(json{
            {"suite", "closedforms"}, {"checks", checks}, {"all_pass", ok}});
        all_pass = all_pass && ok;
        spread("deletion");
        spread("hecke");
    } else {
        throw ValidationError("unknown suite '" + suite +
                              "' (expected deletion, hecke, closedforms, all)");
    }

    emit(json{{"reports", reports}, {"all_pass", all_pass}});
    return all_pass ? 0 : 1;
}

// ---- tables ----

struct Range {
    int lo = 0, hi = -1;
};

Range parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {v, v};
        }
        size_t u1 = 0, u2 = 0;
        std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        int lo = std::stoi(a, &u1), hi = std::stoi(b, &u2);
        if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::exception&) {
        throw ValidationError("bad range '" + s + "', expected a..b");
    }
}

int run_table(const std::string& family, const std::string& range_str, int fixed_n,
              int fixed_m, const std::string& r_range_str, const std::string& out_fmt,
              int cap) {
    struct Row {
        json params;
        std::string params_csv;
        Graph graph;
    };
    std::vector<Row> rows;
    auto need_range = [&](const std::string& flag) {
        if (range_str.empty())
            throw ValidationError("table --family " + family + " needs " + flag);
        return parse_range(range_str);
    };
    if (family == "cycle" || family == "fan" || family == "thagomizer" ||
        family == "complete") {
        Range r = need_range("--range");
        for (int n = r.lo; n <= r.hi; ++n)
            rows.push_back({json{{"n", n}}, "n=" + std::to_string(n),
                            family_graph(family + ":" + std::to_string(n))});
    } else if (family == "saw" || family == "fanpartial") {
        if (fixed_n < 0) throw ValidationError("table --family " + family + " needs --n");
        if (r_range_str.empty())
            throw ValidationError("table --family " + family + " needs --r a..b");
        Range r = parse_range(r_range_str);
        for (int k = r.lo; k <= r.hi; ++k)
            rows.push_back({json{{"n", fixed_n}, {"r", k}},
                            "n=" + std::to_string(fixed_n) + ";r=" + std::to_string(k),
                            family_graph(family + ":" + std::to_string(fixed_n) + "," +
                                         std::to_string(k))});
    } else if (family == "doublecycle" || family == "kbipartite") {
        if (fixed_m < 0) throw ValidationError("table --family " + family + " needs --m");
        Range r = need_range("--range");
        const char* key = family == "doublecycle" ? "n" : "b";
        const char* mkey = family == "doublecycle" ? "m" : "a";
        for (int n = r.lo; n <= r.hi; ++n)
            rows.push_back({json{{mkey, fixed_m}, {key, n}},
                            std::string(mkey) + "=" + std::to_string(fixed_m) + ";" + key +
                                "=" + std::to_string(n),
                            family_graph(family + ":" + std::to_string(fixed_m) + "," +
                                         std::to_string(n))});
    } else {
        throw ValidationError("unknown table family '" + family + "'");
    }

    auto poly_csv = [](const IntPoly& p) {
        std::string s;
        long top = p.is_zero() ? 0 : p.degree();
        for (long e = 0; e <= top; ++e) {
            if (e) s += " ";
            s += p.coeff(e).get_str();
        }
        return s;
    };

    json out_rows = json::array();
    std::ostringstream csv;
    csv << "family,params,kl,z,tau\n";
    for (auto& r : rows) {
        KlEngine eng(graphic_matroid(r.graph, cap));
        IntPoly kl = eng.kl(), zp = eng.z();
        mpz_class tau = eng.tau();
        out_rows.push_back(json{{"params", r.params},
                                {"kl", poly_to_json(kl)},
                                {"z", poly_to_json(zp)},
                                {"tau", int_to_json(tau)}});
        csv << family << "," << r.params_csv << "," << poly_csv(kl) << "," << poly_csv(zp)
            << "," << tau.get_str() << "\n";
    }
    if (out_fmt == "csv") {
        std::cout << csv.str();
    } else {
        emit(json{{"family", family}, {"rows", out_rows}});
    }
    return 0;
}

int run_series(int order, bool check) {
    if (order < 1) throw ValidationError("series needs --order >= 1");
    BivariateSeries f = fan_kl_series(order), c = cycle_kl_series(order);
    bool identity = verify_series_identity(order);
    auto dump_series = [](const BivariateSeries& s) {
        json arr = json::array();
        for (int k = 0; k <= s.order(); ++k) arr.push_back(poly_to_json(s.coeff(k)));
        return arr;
    };
    emit(json{{"order", order},
              {"phi_f", dump_series(f)},
              {"phi_c", dump_series(c)},
              {"identity", identity}});
    return (check && !identity) ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kazhdan-Lusztig invariants of matroids from lattices of flats"};
    app.require_subcommand(1);

    SourceOpts compute_src;
    auto* compute = app.add_subcommand("compute", "rank, KL polynomial, Z, tau, charpoly");
    compute_src.attach(compute, true);

    SourceOpts verify_src;
    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "deletion | hecke | closedforms | all")->required();
    verify_src.attach(verify, false);

    auto* table = app.add_subcommand("table", "family tables of invariants");
    std::string table_family, table_range, table_r, table_out = "json";
    int table_n = -1, table_m = -1, table_cap = kDefaultCap;
    table->add_option("--family", table_family, "family name, e.g. cycle")->required();
    table->add_option("--range", table_range, "a..b for the running parameter");
    table->add_option("--n", table_n, "fixed n (saw, fanpartial)");
    table->add_option("--m", table_m, "fixed first parameter (doublecycle, kbipartite)");
    table->add_option("--r", table_r, "a..b for r (saw, fanpartial)");
    table->add_option("--out", table_out, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--cap", table_cap, "ground set size cap")->capture_default_str();

    auto* series = app.add_subcommand("series", "fan/cycle generating functions");
    int order = 0;
    bool check = false;
    series->add_option("--order", order, "truncation order in u")->required();
    series->add_flag("--check", check, "exit 1 unless the series identity holds");

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return run_compute(compute_src);
        if (verify->parsed()) return run_verify(suite, verify_src);
        if (table->parsed())
            return run_table(table_family, table_range, table_n, table_m, table_r,
                             table_out, table_cap);
        if (series->parsed()) return run_series(order, check);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SizeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
