#include "klm/kl.hpp"

namespace klm {

namespace {
std::uint64_t key(int gi, int hi) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(gi)) << 32) |
           static_cast<std::uint32_t>(hi);
}
} // namespace

int KlEngine::flat_index(FlatMask m) const {
    int i = m_->find_flat(m);
    if (i < 0) throw ValidationError("not a flat: " + m_->flat_str(m));
    return i;
}

const IntPoly& KlEngine::interval_kl(FlatMask g, FlatMask h) {
    int gi = flat_index(g), hi = flat_index(h);
    if ((g & h) != g) throw ValidationError("interval " + m_->flat_str(g) + ".." +
                                            m_->flat_str(h) + " is empty");
    return interval_kl_idx(gi, hi);
}

const IntPoly& KlEngine::interval_kl_idx(int gi, int hi) {
    auto it = kl_.find(key(gi, hi));
    if (it != kl_.end()) return it->second;
    const FlatMask g = m_->flat(gi), h = m_->flat(hi);
    IntPoly result;
    if (gi == hi) {
        result = IntPoly(1);
    } else {
        const int rg = m_->flat_rank(gi);
        IntPoly f;
        for (int ki = 0; ki < m_->num_flats(); ++ki) {
            FlatMask k = m_->flat(ki);
            if (ki == gi || (k & g) != g || (k & h) != k) continue;
            f += interval_kl_idx(ki, hi).shifted(m_->flat_rank(ki) - rg);
        }
        result = palindromic_completion(f, m_->flat_rank(hi) - rg);
    }
    return kl_.emplace(key(gi, hi), std::move(result)).first->second;
}

IntPoly KlEngine::interval_z(FlatMask g, FlatMask h) {
    int gi = flat_index(g), hi = flat_index(h);
    if ((g & h) != g) throw ValidationError("interval is empty");
    const int rg = m_->flat_rank(gi);
    IntPoly z;
    for (int ki = 0; ki < m_->num_flats(); ++ki) {
        FlatMask k = m_->flat(ki);
        if ((k & g) != g || (k & h) != k) continue;
        z += interval_kl_idx(ki, hi).shifted(m_->flat_rank(ki) - rg);
    }
    return z;
}

mpz_class KlEngine::interval_tau(FlatMask g, FlatMask h) {
    int gi = flat_index(g), hi = flat_index(h);
    int rho = m_->flat_rank(hi) - m_->flat_rank(gi);
    if (rho % 2 == 0) return 0;  // includes rank 0; odd rank 1 gives 1 below
    return interval_kl_idx(gi, hi).coeff((rho - 1) / 2);
}

mpz_class KlEngine::mobius_idx(int gi, int hi) {
    if (gi == hi) return 1;
    auto it = mu_.find(key(gi, hi));
    if (it != mu_.end()) return it->second;
    const FlatMask g = m_->flat(gi), h = m_->flat(hi);
    mpz_class acc = 0;
    for (int ki = 0; ki < m_->num_flats(); ++ki) {
        FlatMask k = m_->flat(ki);
        if (ki == hi || (k & g) != g || (k & h) != k) continue;
        acc -= mobius_idx(gi, ki);
    }
    return mu_.emplace(key(gi, hi), std::move(acc)).first->second;
}

mpz_class KlEngine::mobius(FlatMask g, FlatMask h) {
    int gi = flat_index(g), hi = flat_index(h);
    if ((g & h) != g) throw ValidationError("interval is empty");
    return mobius_idx(gi, hi);
}

IntPoly KlEngine::interval_char(FlatMask g, FlatMask h) {
    int gi = flat_index(g), hi = flat_index(h);
    if ((g & h) != g) throw ValidationError("interval is empty");
    const int rh = m_->flat_rank(hi);
    IntPoly chi;
    for (int ki = 0; ki < m_->num_flats(); ++ki) {
        FlatMask k = m_->flat(ki);
        if ((k & g) != g || (k & h) != k) continue;
        chi += IntPoly::monomial(mobius_idx(gi, ki), rh - m_->flat_rank(ki));
    }
    return chi;
}

mpz_class KlEngine::linear_coefficient() const {
    if (m_->rank() < 1)
        throw ValidationError("linear coefficient needs rank >= 1");
    return mpz_class(m_->num_coatoms()) - m_->num_atoms();
}

std::vector<FlatMask> KlEngine::s_set(int e) const {
    if (e < 0 || e >= m_->ground_size())
        throw ValidationError("element out of range: " + std::to_string(e));
    std::vector<FlatMask> out;
    for (FlatMask f : m_->flats())
        if (!(f & bit(e)) && m_->is_flat(f | bit(e))) out.push_back(f);
    return out;
}

void KlEngine::check_deletion_input(int e) const {
    if (!m_->is_simple())
        throw ValidationError("deletion identity requires a simple matroid");
    if (m_->is_coloop(e))
        throw ValidationError("element " + std::to_string(m_->labels()[static_cast<size_t>(e)]) +
                              " is a coloop; the deletion identity does not apply");
}

IntPoly KlEngine::deletion_rhs_kl(int e) {
    check_deletion_input(e);
    const FlatMask top = m_->full_set();
    const int rk = m_->rank();
    KlEngine del(m_->deleted(e));
    IntPoly rhs = del.kl();
    rhs -= interval_kl(m_->closure(bit(e)), top).shifted(1);
    for (FlatMask f : s_set(e)) {
        int crk = rk - m_->rank_of_flat(f);
        if (crk % 2 != 0) continue;  // the tau factor vanishes on odd corank
        mpz_class tau = interval_tau(f | bit(e), top);
        if (tau == 0) continue;
        rhs += interval_kl(m_->bottom(), f).scaled(tau).shifted(crk / 2);
    }
    return rhs;
}

IntPoly KlEngine::deletion_rhs_z(int e) {
    check_deletion_input(e);
    const FlatMask top = m_->full_set();
    const int rk = m_->rank();
    KlEngine del(m_->deleted(e));
    IntPoly rhs = del.z();
    for (FlatMask f : s_set(e)) {
        int crk = rk - m_->rank_of_flat(f);
        if (crk % 2 != 0) continue;
        mpz_class tau = interval_tau(f | bit(e), top);
        if (tau == 0) continue;
        rhs += interval_z(m_->bottom(), f).scaled(tau).shifted(crk / 2);
    }
    return rhs;
}

DeletionReport KlEngine::verify_deletion() {
    if (!m_->is_simple())
        throw ValidationError("deletion identity requires a simple matroid");
    DeletionReport report;
    for (int e = 0; e < m_->ground_size(); ++e) {
        DeletionCheck c;
        c.element = e;
        c.label = m_->labels()[static_cast<size_t>(e)];
        if (m_->is_coloop(e)) {
            c.status = DeletionCheck::Status::skipped_coloop;
        } else {
            c.kl_lhs = kl();
            c.kl_rhs = deletion_rhs_kl(e);
            c.z_lhs = z();
            c.z_rhs = deletion_rhs_z(e);
            c.status = (c.kl_lhs == c.kl_rhs && c.z_lhs == c.z_rhs)
                           ? DeletionCheck::Status::pass
                           : DeletionCheck::Status::fail;
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

} // namespace klm
