#include "klm/closed_forms.hpp"

#include "klm/kl.hpp"

namespace klm {

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class uniform_corank1_coeff(long d, long k) {
    if (d < 0 || k < 0 || (k > 0 && 2 * k >= d))
        throw ValidationError("uniform_corank1_coeff needs k = 0 or 0 <= 2k < d");
    mpz_class num = binomial(d - k - 1, k) * binomial(d + 1, k);
    mpz_class q, r;
    mpz_class div(k + 1);
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), div.get_mpz_t());
    if (r != 0) throw ExactnessError("uniform_corank1_coeff: division by k+1 not exact");
    return q;
}

IntPoly cycle_kl(long n) {
    if (n < 2) throw ValidationError("cycle_kl needs n >= 2");
    long d = n - 1;
    std::vector<mpz_class> coeffs;
    for (long k = 0; k == 0 || 2 * k < d; ++k) coeffs.push_back(uniform_corank1_coeff(d, k));
    return IntPoly::from_coeffs(0, std::move(coeffs));
}

IntPoly double_cycle_kl(long m, long n) {
    if (m < 3 || n < 3) throw ValidationError("double_cycle_kl needs m, n >= 3");
    return cycle_kl(m + n - 2) - (cycle_kl(m - 1) * cycle_kl(n - 1)).shifted(1);
}

IntPoly saw_kl(long n, long r) {
    if (n < 2 || r < 0 || r > n) throw ValidationError("saw_kl needs n >= 2 and 0 <= r <= n");
    auto p = [](long m) {
        if (m == 0) return IntPoly::monomial(1, -1);
        if (m == 1) return IntPoly();
        return cycle_kl(m);
    };
    IntPoly acc;
    for (long k = 0; k <= r; ++k) {
        IntPoly term = p(n + r - 2 * k).scaled(binomial(r, k)).shifted(k);
        if (k % 2 != 0) term = -term;
        acc += term;
    }
    if (!acc.is_ordinary())
        throw ExactnessError("saw_kl: 1/t terms failed to cancel in " + acc.str());
    return acc;
}

IntPoly fan_kl(long n) {
    if (n < 1) throw ValidationError("fan_kl needs n >= 1");
    std::vector<mpz_class> coeffs;
    for (long k = 0; n - 2 * k - 1 >= 0; ++k) {
        // 1/(k+1) * (n-1)! / (k! k! (n-2k-1)!), assembled from binomials:
        // C(n-1, k) * C(n-1-k, k) counts the k! k! (n-2k-1)! split
        mpz_class num = binomial(n - 1, k) * binomial(n - 1 - k, k);
        mpz_class q, rem;
        mpz_class div(k + 1);
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), div.get_mpz_t());
        if (rem != 0) throw ExactnessError("fan_kl: division by k+1 not exact");
        coeffs.push_back(q);
    }
    return IntPoly::from_coeffs(0, std::move(coeffs));
}

IntPoly thagomizer_kl(long n) {
    if (n < 1) throw ValidationError("thagomizer_kl needs n >= 1");
    auto bipartite_minus_t = [](long k) {
        KlEngine eng(graphic_matroid(complete_bipartite_graph(2, static_cast<int>(k))));
        return eng.kl() - IntPoly::monomial(1, 1);
    };
    if (n == 1) {
        KlEngine direct(graphic_matroid(thagomizer_graph(1)));
        throw ValidationError("thagomizer_kl is wrong at n = 1: the graph gives " +
                              direct.kl().str() + " but the K_{2,n} recipe gives " +
                              bipartite_minus_t(1).str());
    }
    return bipartite_minus_t(n);
}

GluedKl parallel_connection_kl(const Graph& h1, int e1, const Graph& h2, int e2) {
    if (!is_connected(graph_delete(h1, e1)) || !is_connected(graph_delete(h2, e2)))
        throw ValidationError(
            "parallel_connection_kl needs both graphs connected after removing "
            "the connection edge");
    GluedKl out;
    GluedGraph glued = parallel_connection(h1, e1, h2, e2);
    out.graph = glued.graph;
    out.connection_edge = glued.connection_edge;
    KlEngine del(graphic_matroid(graph_delete(glued.graph, glued.connection_edge)));
    KlEngine c1(graphic_matroid(graph_contract(h1, e1)));
    KlEngine c2(graphic_matroid(graph_contract(h2, e2)));
    out.kl = del.kl() - (c1.kl() * c2.kl()).shifted(1);
    return out;
}

namespace {

// (1-u)^2 - 4tu^2 and its square root 1 - u - 2tu * F(t,u), at the given order
BivariateSeries discriminant_root(int order) {
    BivariateSeries s(order);
    s.set_coeff(0, IntPoly(1));
    if (order >= 1) s.set_coeff(1, IntPoly(-2));
    if (order >= 2) s.set_coeff(2, IntPoly(1) - IntPoly::monomial(4, 1));
    return s.sqrt();
}

} // namespace

BivariateSeries fan_kl_series(int order) {
    if (order < 0) throw ValidationError("series order must be nonnegative");
    int n = order + 1;  // dividing by 2tu consumes one u
    BivariateSeries num(n);
    num.set_coeff(0, IntPoly(1));
    num.set_coeff(1, IntPoly(-1));
    num = num - discriminant_root(n);
    BivariateSeries den(n);
    den.set_coeff(1, IntPoly::monomial(2, 1));
    return BivariateSeries::divide(num, den).truncated(order);
}

BivariateSeries cycle_kl_series(int order) {
    if (order < 0) throw ValidationError("series order must be nonnegative");
    int n = order + 2;  // dividing by 2tu^2(1+tu) consumes two u
    BivariateSeries num(n);
    num.set_coeff(0, IntPoly(1));
    num.set_coeff(1, IntPoly(-1));
    num.set_coeff(2, IntPoly::monomial(-2, 1));
    num = num - discriminant_root(n);
    BivariateSeries den(n);
    den.set_coeff(2, IntPoly::monomial(2, 1));
    den.set_coeff(3, IntPoly::monomial(2, 2));
    return BivariateSeries::divide(num, den).truncated(order);
}

bool verify_series_identity(int order) {
    BivariateSeries f = fan_kl_series(order);
    BivariateSeries c = cycle_kl_series(order);
    // F = C - tu * C * F: the u-shift and the t-multiple together make tu
    BivariateSeries tu_cf = (c * f).shifted_up(1);
    for (int k = 0; k <= order; ++k) tu_cf.set_coeff(k, tu_cf.coeff(k).shifted(1));
    return f == c - tu_cf;
}

} // namespace klm
