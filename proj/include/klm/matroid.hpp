#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "klm/errors.hpp"

namespace klm {

// A subset of the ground set, one bit per element position.
using FlatMask = std::uint32_t;

inline int popcount(FlatMask m) { return __builtin_popcount(m); }
inline FlatMask bit(int e) { return FlatMask(1) << e; }

// Hard limit imposed by the mask representation, and the default cap applied
// when constructing lattices (override per call where a larger one is safe).
inline constexpr int kMaxGround = 31;
inline constexpr int kDefaultCap = 24;

// A matroid, stored as its lattice of flats over a ground set {0..n-1}.
// Every query and construction works directly on this lattice.  Flats are
// kept sorted by (rank, mask); ranks are chain lengths from the bottom flat,
// recomputed on construction and never trusted from input.
//
// Each position carries an integer label.  Minors keep the labels of the
// surviving elements, so sets produced by lattice walks on a minor can be
// reported in terms of the original matroid's element ids.
class Matroid {
  public:
    // Validates the lattice axioms (top flat present, closure under
    // intersection, the cover partition property) and, by default, that the
    // matroid is simple: no loops, all parallel classes trivial.  Throws
    // ValidationError with a witness on the first failure.
    static Matroid from_flats(int n, const std::vector<FlatMask>& flats,
                              int cap = kDefaultCap, bool require_simple = true);

    // Skips the axiom checks.  For builders whose output is valid by
    // construction (graph closures, minors); ranks are still recomputed.
    static Matroid from_trusted_lattice(int n, std::vector<int> labels,
                                        std::vector<FlatMask> flats);

    static Matroid uniform(int corank, int rank, int cap = kDefaultCap);
    static Matroid boolean_lattice(int n, int cap = kDefaultCap);
    static Matroid direct_sum(const Matroid& a, const Matroid& b, int cap = kDefaultCap);

    int ground_size() const { return n_; }
    int rank() const { return ranks_.empty() ? 0 : ranks_.back(); }
    const std::vector<int>& labels() const { return labels_; }

    int num_flats() const { return static_cast<int>(flats_.size()); }
    FlatMask flat(int i) const { return flats_[static_cast<size_t>(i)]; }
    int flat_rank(int i) const { return ranks_[static_cast<size_t>(i)]; }
    const std::vector<FlatMask>& flats() const { return flats_; }

    int find_flat(FlatMask m) const;  // index, or -1 when m is not a flat
    bool is_flat(FlatMask m) const { return find_flat(m) >= 0; }
    int rank_of_flat(FlatMask m) const;  // throws when m is not a flat

    FlatMask full_set() const { return n_ == 0 ? 0 : (bit(n_) - 1); }
    FlatMask bottom() const { return flats_.front(); }

    // Smallest flat containing s (s must be within the ground set).
    FlatMask closure(FlatMask s) const;
    int set_rank(FlatMask s) const { return rank_of_flat(closure(s)); }

    bool is_simple() const;
    bool is_coloop(int e) const;

    int num_atoms() const;    // rank-1 flats
    int num_coatoms() const;  // flats of rank rank()-1

    // Minors.  Ground elements are re-indexed to 0..k-1 in increasing order
    // of their original positions; labels follow the surviving elements.
    Matroid deleted(int e) const;            // single-element deletion
    Matroid contracted(FlatMask f) const;    // simplification of the upper interval [f, E]
    Matroid localized(FlatMask f) const;     // lower interval [bottom, f] on ground f
    Matroid minor(FlatMask f, FlatMask g) const;  // simplification of [f, g], needs f <= g

    Matroid simplified() const;

    // Re-runs the lattice checks on the stored flats (sanity tool for tests).
    void validate(bool require_simple = false) const;

    // Same ground size and identical flat collection.  Labels are ignored.
    bool same_flats(const Matroid& o) const { return n_ == o.n_ && flats_ == o.flats_; }

    std::string flat_str(FlatMask m) const;  // "{0,2,5}" in original labels

  private:
    Matroid() = default;
    Matroid interval_minor(FlatMask f, FlatMask g, bool simplify) const;

    int n_ = 0;
    std::vector<int> labels_;
    std::vector<FlatMask> flats_;
    std::vector<int> ranks_;
    std::unordered_map<FlatMask, int> index_;
};

} // namespace klm
