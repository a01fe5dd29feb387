#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "klm/matroid.hpp"
#include "klm/poly.hpp"

namespace klm {

struct DeletionCheck {
    enum class Status { pass, fail, skipped_coloop };
    int element = 0;  // ground position
    int label = 0;
    Status status = Status::pass;
    IntPoly kl_lhs, kl_rhs, z_lhs, z_rhs;  // filled unless the element was skipped
};

struct DeletionReport {
    std::vector<DeletionCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status == DeletionCheck::Status::fail) return false;
        return true;
    }
};

// Computes Kazhdan-Lusztig polynomials and their relatives for one matroid,
// caching results for every interval of its lattice.  The defining recursion:
// P of a one-flat interval is 1, and for G < H the sum
//   f = sum over flats K with G < K <= H of t^(rk K - rk G) * P([K, H])
// determines P([G, H]) as the palindromic completion of f in degree
// rk H - rk G.  The cache makes the tau-function and deletion-identity
// machinery cheap, since they revisit upper intervals constantly.
class KlEngine {
  public:
    explicit KlEngine(Matroid m) : m_(std::make_shared<const Matroid>(std::move(m))) {}
    explicit KlEngine(std::shared_ptr<const Matroid> m) : m_(std::move(m)) {}

    const Matroid& matroid() const { return *m_; }
    const std::shared_ptr<const Matroid>& matroid_ptr() const { return m_; }

    // Interval invariants; g and h must be flats with g <= h.
    const IntPoly& interval_kl(FlatMask g, FlatMask h);
    IntPoly interval_z(FlatMask g, FlatMask h);
    mpz_class interval_tau(FlatMask g, FlatMask h);
    mpz_class mobius(FlatMask g, FlatMask h);
    IntPoly interval_char(FlatMask g, FlatMask h);

    // Whole-matroid versions.
    const IntPoly& kl() { return interval_kl(m_->bottom(), m_->full_set()); }
    IntPoly z() { return interval_z(m_->bottom(), m_->full_set()); }
    mpz_class tau() { return interval_tau(m_->bottom(), m_->full_set()); }
    IntPoly char_poly() { return interval_char(m_->bottom(), m_->full_set()); }
    // #coatoms - #atoms; rank must be at least 1.
    mpz_class linear_coefficient() const;

    // Flats F avoiding e such that F together with e is again a flat.
    std::vector<FlatMask> s_set(int e) const;

    // Right-hand sides of the deletion identities.  The matroid must be
    // simple and e must not be a coloop; otherwise these have no content.
    IntPoly deletion_rhs_kl(int e);
    IntPoly deletion_rhs_z(int e);

    // Checks both identities for every ground element, skipping coloops.
    DeletionReport verify_deletion();

  private:
    const IntPoly& interval_kl_idx(int gi, int hi);
    mpz_class mobius_idx(int gi, int hi);
    int flat_index(FlatMask m) const;
    void check_deletion_input(int e) const;

    std::shared_ptr<const Matroid> m_;
    std::unordered_map<std::uint64_t, IntPoly> kl_;
    std::unordered_map<std::uint64_t, mpz_class> mu_;
};

} // namespace klm
