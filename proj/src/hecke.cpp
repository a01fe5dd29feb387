#include "klm/hecke.hpp"

namespace klm {

namespace {

void check_same_module(const HElement& a, const HElement& b) {
    if (a.matroid == b.matroid) return;
    if (!a.matroid || !b.matroid || !a.matroid->same_flats(*b.matroid))
        throw ValidationError("module elements belong to different matroids");
}

void check_key(const Matroid& m, FlatMask f) {
    if (!m.is_flat(f)) throw ValidationError("not a flat: " + m.flat_str(f));
}

void prune(HElement& a) {
    for (auto it = a.coords.begin(); it != a.coords.end();)
        it = it->second.is_zero() ? a.coords.erase(it) : std::next(it);
}

} // namespace

HElement h_zero(std::shared_ptr<const Matroid> m) { return HElement{std::move(m), {}}; }

HElement h_basis(std::shared_ptr<const Matroid> m, FlatMask f) {
    check_key(*m, f);
    HElement a{std::move(m), {}};
    a.coords.emplace(f, IntPoly(1));
    return a;
}

HElement h_scale(const HElement& a, const IntPoly& p) {
    HElement r{a.matroid, {}};
    if (p.is_zero()) return r;
    for (const auto& [f, c] : a.coords) r.coords.emplace(f, c * p);
    return r;
}

HElement operator+(const HElement& a, const HElement& b) {
    check_same_module(a, b);
    HElement r = a;
    for (const auto& [f, c] : b.coords) r.coords[f] += c;
    prune(r);
    return r;
}

HElement operator-(const HElement& a, const HElement& b) {
    check_same_module(a, b);
    HElement r = a;
    for (const auto& [f, c] : b.coords) r.coords[f] -= c;
    prune(r);
    return r;
}

bool operator==(const HElement& a, const HElement& b) {
    check_same_module(a, b);
    return a.coords == b.coords;
}

HElement zeta(KlEngine& eng, FlatMask f) {
    const Matroid& m = eng.matroid();
    check_key(m, f);
    const int rf = m.rank_of_flat(f);
    HElement out{eng.matroid_ptr(), {}};
    for (FlatMask g : m.flats()) {
        if ((g & f) != g) continue;
        int rg = m.rank_of_flat(g);
        out.coords.emplace(g, eng.interval_kl(g, f).substitute_power(-2).shifted(rf - rg));
    }
    return out;  // coordinates are never zero: P has constant term 1
}

bool is_perverse(const HElement& a) {
    const Matroid& m = *a.matroid;
    for (const auto& [f, c] : a.coords) {
        check_key(m, f);
        if (!c.is_ordinary()) return false;
    }
    for (FlatMask f : m.flats()) {
        int rf = m.rank_of_flat(f);
        IntPoly s;
        for (const auto& [g, c] : a.coords) {
            if ((g & f) != f) continue;
            s += c.shifted(rf - m.rank_of_flat(g));
        }
        if (!is_palindromic(s, 0)) return false;
    }
    return true;
}

std::map<FlatMask, mpz_class> decompose_perverse(KlEngine& eng, const HElement& a) {
    if (a.matroid && !a.matroid->same_flats(eng.matroid()))
        throw ValidationError("element does not belong to the engine's matroid");
    if (!is_perverse(a)) throw ValidationError("element is not perverse");
    std::map<FlatMask, mpz_class> out;
    HElement acc = h_zero(eng.matroid_ptr());
    for (const auto& [f, c] : a.coords) {
        mpz_class k = c.coeff(0);
        if (k == 0) continue;
        out.emplace(f, k);
        acc = acc + h_scale(zeta(eng, f), IntPoly(k));
    }
    if (!(acc == a))
        throw Error("perverse decomposition failed to reproduce the element");
    return out;
}

HElement delta_map(const HElement& a, int e) {
    const Matroid& m = *a.matroid;
    if (e < 0 || e >= m.ground_size())
        throw ValidationError("element out of range: " + std::to_string(e));
    auto del = std::make_shared<const Matroid>(m.deleted(e));
    HElement out{del, {}};
    for (const auto& [f, c] : a.coords) {
        check_key(m, f);
        // drop position e, shift higher positions down; the image F minus e
        // is again a flat of the deletion
        FlatMask img = (f & (bit(e) - 1)) | ((f >> (e + 1)) << e);
        int delta = m.rank_of_flat(f) - del->rank_of_flat(img);
        out.coords[img] += c.shifted(-delta);
    }
    prune(out);
    return out;
}

IntPoly phi_map(const HElement& a) {
    const Matroid& m = *a.matroid;
    IntPoly out;
    for (const auto& [f, c] : a.coords) {
        check_key(m, f);
        out += c.shifted(-m.rank_of_flat(f));
    }
    return out;
}

HElement bar_involution(KlEngine& eng, const HElement& a) {
    const Matroid& m = eng.matroid();
    if (a.matroid && !a.matroid->same_flats(m))
        throw ValidationError("element does not belong to the engine's matroid");
    HElement out{eng.matroid_ptr(), {}};
    for (const auto& [f, c] : a.coords) {
        check_key(m, f);
        const int rf = m.rank_of_flat(f);
        IntPoly cbar = c.substitute_power(-1);
        for (FlatMask g : m.flats()) {
            if ((g & f) != g) continue;
            int rg = m.rank_of_flat(g);
            IntPoly term = cbar * eng.interval_char(g, f).substitute_power(2).shifted(rg - rf);
            out.coords[g] += term;
        }
    }
    prune(out);
    return out;
}

} // namespace klm
