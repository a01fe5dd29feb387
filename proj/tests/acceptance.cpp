// Acceptance gate: one check per shipping criterion, one line of output each.
// Exit code 0 only if every criterion holds.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "klm/closed_forms.hpp"
#include "klm/graph.hpp"
#include "klm/hecke.hpp"
#include "klm/kl.hpp"
#include "klm/matroid.hpp"
#include "klm/poly.hpp"
#include "klm/series.hpp"

using namespace klm;

namespace {

IntPoly poly(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPoly::from_coeffs(0, std::move(v));
}

struct Check {
    bool pass = true;
    std::string why;
    void require(bool ok, const std::string& reason) {
        if (!ok && pass) {
            pass = false;
            why = reason;
        }
    }
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

IntPoly engine_kl(const Graph& g) { return KlEngine(graphic_matroid(g)).kl(); }

// ---- criterion 1: golden values ----
Check criterion1() {
    Check c;
    Timer t;
    c.require(engine_kl(cycle_graph(6)) == poly({1, 9, 5}), "cycle 6");
    c.require(engine_kl(partial_saw_graph(3, 3)) == poly({1, 6, 1}), "saw (3,3)");
    c.require(engine_kl(fan_graph(5)) == poly({1, 6, 2}), "fan 5");
    for (int n = 0; n <= 6; ++n)
        c.require(KlEngine(Matroid::boolean_lattice(n)).kl() == IntPoly(1),
                  "boolean " + std::to_string(n));
    std::vector<Matroid> low{Matroid::from_flats(3, {0, 1, 2, 4, 7}),
                             Matroid::uniform(1, 2), Matroid::uniform(2, 2),
                             Matroid::uniform(3, 2), Matroid::boolean_lattice(1),
                             graphic_matroid(cycle_graph(3))};
    for (Matroid& m : low)
        c.require(KlEngine(std::move(m)).kl() == IntPoly(1), "rank <= 2");
    c.require(t.seconds() < 1.0, "too slow: " + std::to_string(t.seconds()) + "s");
    return c;
}

// ---- criterion 2: deletion identity across the catalog ----
Check criterion2(std::vector<Matroid>& catalog_out) {
    Check c;
    Timer t;
    auto graphs = klm_test::connected_graph_catalog(6, 8);
    c.require(graphs.size() == 89, "expected 89 graphs, got " +
                                       std::to_string(graphs.size()));
    catalog_out = klm_test::matroid_catalog();
    c.require(catalog_out.size() == graphs.size() + 11, "catalog size");
    int checked_elements = 0;
    for (const Matroid& m : catalog_out) {
        KlEngine eng(m);
        DeletionReport rep = eng.verify_deletion();
        for (const auto& ck : rep.checks)
            if (ck.status != DeletionCheck::Status::skipped_coloop) ++checked_elements;
        c.require(rep.all_pass(), "deletion identity failed on a catalog matroid of rank " +
                                      std::to_string(m.rank()));
        if (!c.pass) break;
    }
    c.require(checked_elements > 300, "catalog unexpectedly thin");
    c.require(t.seconds() < 120.0, "too slow: " + std::to_string(t.seconds()) + "s");
    return c;
}

// ---- criterion 3: definitional invariants on the same catalog ----
Check criterion3(const std::vector<Matroid>& catalog) {
    Check c;
    for (const Matroid& m : catalog) {
        KlEngine eng(m);
        int rank = m.rank();
        IntPoly p = eng.kl();
        c.require(p.coeff(0) == 1, "constant term");
        if (rank == 0) {
            c.require(p == IntPoly(1), "rank-0 value");
            continue;
        }
        c.require(p == IntPoly(1) || 2 * p.degree() < rank, "degree bound");
        c.require(is_palindromic(eng.z(), rank), "Z symmetry");
        c.require(eng.linear_coefficient() == p.coeff(1), "linear coefficient");
        if (!c.pass) break;
    }
    return c;
}

// ---- criterion 4: direct sums on random catalog pairs ----
Check criterion4(const std::vector<Matroid>& catalog) {
    Check c;
    std::vector<const Matroid*> positive;
    for (const Matroid& m : catalog)
        if (m.rank() > 0) positive.push_back(&m);
    c.require(positive.size() > 50, "catalog too small");
    std::mt19937 rng(12345);
    std::uniform_int_distribution<size_t> pick(0, positive.size() - 1);
    int done = 0;
    while (done < 50) {
        const Matroid& a = *positive[pick(rng)];
        const Matroid& b = *positive[pick(rng)];
        // keep the product lattice within the engine's comfortable range
        if (static_cast<long>(a.num_flats()) * b.num_flats() > 4000) continue;
        KlEngine ea(a), eb(b), sum(Matroid::direct_sum(a, b));
        c.require(sum.kl() == ea.kl() * eb.kl(), "multiplicativity");
        c.require(sum.tau() == 0, "tau of a sum");
        if (!c.pass) break;
        ++done;
    }
    return c;
}

// ---- criterion 5: the perverse-element suite ----
Check criterion5() {
    Check c;
    Timer t;
    std::vector<Graph> gs{cycle_graph(4), cycle_graph(5), complete_graph(4),
                          thagomizer_graph(2), thagomizer_graph(3)};
    for (const Graph& g : gs) {
        KlEngine eng(graphic_matroid(g));
        const Matroid& m = eng.matroid();
        for (FlatMask f : m.flats()) {
            HElement zf = zeta(eng, f);
            c.require(is_perverse(zf), "zeta perversity");
            auto dec = decompose_perverse(eng, zf);
            c.require(dec.size() == 1 && dec.count(f) == 1 && dec[f] == 1,
                      "zeta decomposition");
            c.require(bar_involution(eng, zf) == zf, "bar fixed point");
            HElement b = h_basis(eng.matroid_ptr(), f);
            c.require(bar_involution(eng, bar_involution(eng, b)) == b, "bar squared");
        }
        HElement ztop = zeta(eng, m.full_set());
        for (int e = 0; e < m.ground_size(); ++e) {
            if (m.is_coloop(e)) continue;
            HElement d = delta_map(ztop, e);
            c.require(is_perverse(d), "transported zeta perversity");
            KlEngine del(d.matroid);
            std::map<FlatMask, mpz_class> expect;
            expect[del.matroid().full_set()] = 1;
            for (FlatMask f : eng.s_set(e)) {
                mpz_class tau = eng.interval_tau(f | bit(e), m.full_set());
                if (tau != 0) expect[(f & (bit(e) - 1)) | ((f >> (e + 1)) << e)] = tau;
            }
            c.require(decompose_perverse(del, d) == expect, "transport decomposition");
            for (FlatMask f : m.flats()) {
                HElement zf = zeta(eng, f);
                c.require(phi_map(delta_map(zf, e)) == phi_map(zf), "phi compatibility");
            }
        }
        if (!c.pass) break;
    }
    c.require(t.seconds() < 30.0, "too slow: " + std::to_string(t.seconds()) + "s");
    return c;
}

// ---- criterion 6: closed forms against the engine ----
Check criterion6() {
    Check c;
    for (long n = 2; n <= 12; ++n)
        c.require(cycle_kl(n) == engine_kl(cycle_graph(static_cast<int>(n))),
                  "cycle " + std::to_string(n));
    for (long n = 2; n <= 9; ++n)
        for (long r = 0; r <= n && n + r <= 9; ++r)
            c.require(saw_kl(n, r) == engine_kl(partial_saw_graph(static_cast<int>(n),
                                                                 static_cast<int>(r))),
                      "saw " + std::to_string(n) + "," + std::to_string(r));
    for (long n = 1; n <= 8; ++n)
        c.require(fan_kl(n) == engine_kl(fan_graph(static_cast<int>(n))),
                  "fan " + std::to_string(n));
    for (long m = 3; m <= 7; ++m)
        for (long n = 3; m + n <= 10; ++n)
            c.require(double_cycle_kl(m, n) ==
                          engine_kl(double_cycle_graph(static_cast<int>(m),
                                                       static_cast<int>(n))),
                      "double cycle " + std::to_string(m) + "," + std::to_string(n));
    for (long n = 2; n <= 5; ++n)
        c.require(thagomizer_kl(n) == engine_kl(thagomizer_graph(static_cast<int>(n))),
                  "thagomizer " + std::to_string(n));
    // coefficient recurrence for the corank-1 closed form
    for (long d = 2; d <= 10; ++d)
        for (long k = 1; 2 * k < d; ++k) {
            mpz_class lhs = uniform_corank1_coeff(d, k);
            mpz_class rhs = -uniform_corank1_coeff(d - 1, k - 1) +
                            binomial(d, d - 2 * k) * uniform_corank1_coeff(2 * k - 1, k - 1);
            c.require(lhs == rhs, "coefficient recurrence at d=" + std::to_string(d) +
                                      ", k=" + std::to_string(k));
        }
    return c;
}

// ---- criterion 7: generating functions ----
Check criterion7() {
    Check c;
    Timer t;
    c.require(verify_series_identity(12), "series identity");
    BivariateSeries f = fan_kl_series(12), cs = cycle_kl_series(12);
    for (int n = 1; n <= 12; ++n) {
        c.require(f.coeff(n) == fan_kl(n), "fan series at u^" + std::to_string(n));
        c.require(cs.coeff(n) == cycle_kl(n + 1), "cycle series at u^" + std::to_string(n));
    }
    c.require(t.seconds() < 10.0, "too slow: " + std::to_string(t.seconds()) + "s");
    return c;
}

// ---- criterion 8: documented boundary refusals ----
Check criterion8() {
    Check c;
    bool threw = false;
    try {
        thagomizer_kl(1);
    } catch (const ValidationError& e) {
        threw = true;
        std::string msg = e.what();
        c.require(msg.find("1 - t") != std::string::npos,
                  "rejection must quote the recipe value");
        c.require(msg.find("gives 1 ") != std::string::npos,
                  "rejection must quote the direct value");
    }
    c.require(threw, "thagomizer at n=1 must be rejected");

    KlEngine eng(Matroid::boolean_lattice(3));
    bool coloop_threw = false;
    try {
        eng.deletion_rhs_kl(0);
    } catch (const ValidationError& e) {
        coloop_threw = true;
        c.require(std::string(e.what()).find("coloop") != std::string::npos,
                  "coloop rejection message");
    }
    c.require(coloop_threw, "coloop must be rejected");
    bool z_threw = false;
    try {
        eng.deletion_rhs_z(1);
    } catch (const ValidationError&) {
        z_threw = true;
    }
    c.require(z_threw, "coloop must be rejected in the Z identity");
    return c;
}

} // namespace

int main() {
    int failures = 0;
    std::vector<Matroid> catalog;
    auto report = [&](int id, const Check& c) {
        if (c.pass) {
            std::printf("criterion %d: PASS\n", id);
        } else {
            std::printf("criterion %d: FAIL (%s)\n", id, c.why.c_str());
            ++failures;
        }
        std::fflush(stdout);
    };
    report(1, criterion1());
    report(2, criterion2(catalog));
    report(3, criterion3(catalog));
    report(4, criterion4(catalog));
    report(5, criterion5());
    report(6, criterion6());
    report(7, criterion7());
    report(8, criterion8());
    return failures == 0 ? 0 : 1;
}
