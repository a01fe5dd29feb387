#pragma once

#include <map>

#include "klm/kl.hpp"

namespace klm {

// Element of the free Z[t, 1/t]-module on the flats of one matroid.  Only
// nonzero coordinates are stored; keys must be flats of *matroid.
struct HElement {
    std::shared_ptr<const Matroid> matroid;
    std::map<FlatMask, IntPoly> coords;

    IntPoly coord(FlatMask f) const {
        auto it = coords.find(f);
        return it == coords.end() ? IntPoly() : it->second;
    }
};

HElement h_zero(std::shared_ptr<const Matroid> m);
HElement h_basis(std::shared_ptr<const Matroid> m, FlatMask f);
HElement h_scale(const HElement& a, const IntPoly& p);
HElement operator+(const HElement& a, const HElement& b);
HElement operator-(const HElement& a, const HElement& b);
bool operator==(const HElement& a, const HElement& b);

// zeta(F) = sum over flats G <= F of t^(rk F - rk G) P([G, F])(1/t^2) * G.
// Triangular against the flat basis: the F coordinate is 1 and everything
// below lands in t*Z[t].
HElement zeta(KlEngine& eng, FlatMask f);

// Self-dual in the sense: every coordinate lies in Z[t], and for each flat F
// the sum over G >= F of t^(rk F - rk G) * coord(G) is symmetric under
// t -> 1/t.
bool is_perverse(const HElement& a);

// Writes a perverse element over the zeta basis.  The coefficient at F is
// coord(F)(0); the expansion is recomputed and compared as a hard check.
// Only nonzero coefficients appear in the result.
std::map<FlatMask, mpz_class> decompose_perverse(KlEngine& eng, const HElement& a);

// Transport along single-element deletion: basis flat F goes to
// t^(-delta) * (F minus e), where delta = rk(F) - rk of the image.  Images
// can collide; coordinates then add up.  The result lives over deleted(e).
HElement delta_map(const HElement& a, int e);

// Scalar-valued comparison map: sum of t^(-rk F) * coord(F).
IntPoly phi_map(const HElement& a);

// The bar involution: t -> 1/t on coordinates combined with the expansion of
// each barred basis flat,
//   bar(F) = sum over G <= F of t^(rk G - rk F) * chi([G, F])(t^2) * G.
// Equivalently, conjugation of coefficient-wise t -> 1/t by the triangular
// map sending alpha to its Verdier sums; its fixed points are exactly the
// elements whose Verdier sums are symmetric.  The zeta basis is fixed.
HElement bar_involution(KlEngine& eng, const HElement& a);

} // namespace klm
