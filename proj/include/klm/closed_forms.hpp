#pragma once

#include "klm/graph.hpp"
#include "klm/poly.hpp"
#include "klm/series.hpp"

namespace klm {

// C(n, k), zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

// Coefficient of t^k in the Kazhdan-Lusztig polynomial of the corank-1
// uniform matroid of rank d:  1/(k+1) * C(d-k-1, k) * C(d+1, k).
// Defined for k = 0 or 0 <= k < d/2; the division is checked exact.
mpz_class uniform_corank1_coeff(long d, long k);

// Cycle matroids.  cycle_kl(n) is the polynomial for an n-cycle, n >= 2
// (equivalently the corank-1 uniform matroid of rank n-1).
IntPoly cycle_kl(long n);

// Two cycles sharing an edge, m, n >= 3:
//   cycle_kl(m+n-2) - t * cycle_kl(m-1) * cycle_kl(n-1).
IntPoly double_cycle_kl(long m, long n);

// n-cycle with triangles glued onto r of its edges, n >= 2, 0 <= r <= n:
//   sum_k (-t)^k C(r,k) p(n+r-2k)  with p(m) = cycle_kl(m) for m >= 2,
//   p(1) = 0, p(0) = 1/t.  The 1/t terms must cancel; this is checked.
IntPoly saw_kl(long n, long r);

// Fan on n+1 vertices:  sum_k 1/(k+1) * (n-1)! / (k! k! (n-2k-1)!) * t^k.
IntPoly fan_kl(long n);

// Thagomizer with n spikes, n >= 2: the engine value for the complete
// bipartite graph K_{2,n} minus t.  For n == 1 that recipe is wrong, and the
// error message shows both the engine value and what the recipe would give.
IntPoly thagomizer_kl(long n);

// Glue two graphs along an edge and compute the polynomial of the result as
//   P(glued minus shared edge) - t * P(h1 / e1) * P(h2 / e2).
// Both graphs must stay connected after dropping their connection edge.
struct GluedKl {
    Graph graph;
    int connection_edge = 0;
    IntPoly kl;
};
GluedKl parallel_connection_kl(const Graph& h1, int e1, const Graph& h2, int e2);

// Generating functions over the fan and cycle families,
//   F(t,u) = sum_{n>=1} fan_kl(n) u^n,
//   C(t,u) = sum_{n>=1} cycle_kl(n+1) u^n,
// obtained by solving their quadratic equations:
//   F = (1 - u - sqrt((1-u)^2 - 4tu^2)) / (2tu),
//   C = (1 - u - 2tu^2 - sqrt((1-u)^2 - 4tu^2)) / (2tu^2 (1 + tu)).
BivariateSeries fan_kl_series(int order);
BivariateSeries cycle_kl_series(int order);

// Checks F = C - tu * C * F through the given order.
bool verify_series_identity(int order);

} // namespace klm
