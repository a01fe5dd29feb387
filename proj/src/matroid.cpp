#include "klm/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace klm {

namespace {

std::string set_str(FlatMask m, const std::vector<int>* labels) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; i < kMaxGround; ++i) {
        if (!(m & bit(i))) continue;
        if (!first) os << ",";
        os << (labels ? (*labels)[static_cast<size_t>(i)] : i);
        first = false;
    }
    os << "}";
    return os.str();
}

void check_ground(int n, int cap) {
    if (n < 0) throw ValidationError("ground size must be nonnegative");
    if (n > kMaxGround || n > cap)
        throw SizeCapError("ground size " + std::to_string(n) + " exceeds cap " +
                           std::to_string(std::min(cap, kMaxGround)));
}

// The three lattice-of-flats axioms, with a witness on the first failure.
void check_lattice(int n, const std::vector<FlatMask>& flats) {
    FlatMask full = n == 0 ? 0 : (bit(n) - 1);
    if (flats.empty()) throw ValidationError("no flats given");
    std::unordered_set<FlatMask> seen;
    for (FlatMask f : flats) {
        if (f & ~full)
            throw ValidationError("flat " + set_str(f, nullptr) + " exceeds the ground set");
        if (!seen.insert(f).second)
            throw ValidationError("duplicate flat " + set_str(f, nullptr));
    }
    if (!seen.count(full))
        throw ValidationError("the full ground set is not a flat");
    for (size_t i = 0; i < flats.size(); ++i)
        for (size_t j = i + 1; j < flats.size(); ++j)
            if (!seen.count(flats[i] & flats[j]))
                throw ValidationError("intersection of flats " + set_str(flats[i], nullptr) +
                                      " and " + set_str(flats[j], nullptr) + " is not a flat");

    std::vector<FlatMask> by_size = flats;
    std::sort(by_size.begin(), by_size.end(), [](FlatMask a, FlatMask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (FlatMask f : by_size) {
        // covers of f: minimal proper superflats
        std::vector<FlatMask> covers;
        for (FlatMask g : by_size) {
            if (g == f || (g & f) != f) continue;
            bool minimal = true;
            for (FlatMask c : covers)
                if ((c & g) == c) { minimal = false; break; }
            if (minimal) covers.push_back(g);  // by_size order makes kept ones minimal
        }
        FlatMask acc = 0;
        for (FlatMask g : covers) {
            FlatMask d = g & ~f;
            if (d & acc) {
                int x = __builtin_ctz(d & acc);
                throw ValidationError("cover partition fails at flat " + set_str(f, nullptr) +
                                      ": element " + std::to_string(x) +
                                      " lies in two covers");
            }
            acc |= d;
        }
        if (acc != (full & ~f)) {
            int x = __builtin_ctz(full & ~f & ~acc);
            throw ValidationError("cover partition fails at flat " + set_str(f, nullptr) +
                                  ": element " + std::to_string(x) + " is in no cover");
        }
    }
}

} // namespace

Matroid Matroid::from_trusted_lattice(int n, std::vector<int> labels, std::vector<FlatMask> flats) {
    Matroid m;
    m.n_ = n;
    m.labels_ = std::move(labels);
    std::sort(flats.begin(), flats.end(), [](FlatMask a, FlatMask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    // rank = longest chain from the bottom; in size order every strict
    // subflat has already been ranked
    std::vector<int> rk(flats.size(), 0);
    for (size_t i = 0; i < flats.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (flats[j] != flats[i] && (flats[j] & flats[i]) == flats[j])
                rk[i] = std::max(rk[i], rk[j] + 1);

    std::vector<size_t> order(flats.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return rk[a] != rk[b] ? rk[a] < rk[b] : flats[a] < flats[b];
    });
    m.flats_.reserve(flats.size());
    m.ranks_.reserve(flats.size());
    for (size_t i : order) {
        m.index_[flats[i]] = static_cast<int>(m.flats_.size());
        m.flats_.push_back(flats[i]);
        m.ranks_.push_back(rk[i]);
    }
    return m;
}

Matroid Matroid::from_flats(int n, const std::vector<FlatMask>& flats, int cap,
                            bool require_simple) {
    check_ground(n, cap);
    check_lattice(n, flats);
    Matroid m = from_trusted_lattice(n, [n] {
        std::vector<int> l(static_cast<size_t>(n));
        std::iota(l.begin(), l.end(), 0);
        return l;
    }(), flats);
    if (require_simple && !m.is_simple()) {
        if (m.bottom() != 0)
            throw ValidationError("matroid is not simple: loops " +
                                  set_str(m.bottom(), nullptr));
        for (int i = 0; i < m.num_flats(); ++i)
            if (m.flat_rank(i) == 1 && popcount(m.flat(i)) > 1)
                throw ValidationError("matroid is not simple: parallel elements " +
                                      set_str(m.flat(i), nullptr));
    }
    return m;
}

int Matroid::find_flat(FlatMask m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

int Matroid::rank_of_flat(FlatMask m) const {
    int i = find_flat(m);
    if (i < 0) throw ValidationError("not a flat: " + flat_str(m));
    return ranks_[static_cast<size_t>(i)];
}

FlatMask Matroid::closure(FlatMask s) const {
    if (s & ~full_set()) throw ValidationError("closure: set exceeds the ground set");
    FlatMask r = full_set();
    for (FlatMask f : flats_)
        if ((f & s) == s) r &= f;
    return r;
}

bool Matroid::is_simple() const {
    if (bottom() != 0) return false;
    for (size_t i = 0; i < flats_.size(); ++i)
        if (ranks_[i] == 1 && popcount(flats_[i]) > 1) return false;
    return true;
}

bool Matroid::is_coloop(int e) const {
    if (e < 0 || e >= n_) throw ValidationError("element out of range: " + std::to_string(e));
    return closure(full_set() & ~bit(e)) != full_set();
}

int Matroid::num_atoms() const {
    return static_cast<int>(std::count(ranks_.begin(), ranks_.end(), 1));
}

int Matroid::num_coatoms() const {
    int r = rank();
    if (r == 0) return 0;
    return static_cast<int>(std::count(ranks_.begin(), ranks_.end(), r - 1));
}

namespace {
// Drop position e from a mask, shifting higher positions down by one.
FlatMask drop_bit(FlatMask m, int e) {
    FlatMask lowpart = m & (bit(e) - 1);
    return lowpart | ((m >> (e + 1)) << e);
}
} // namespace

Matroid Matroid::deleted(int e) const {
    if (e < 0 || e >= n_) throw ValidationError("element out of range: " + std::to_string(e));
    std::vector<FlatMask> out;
    out.reserve(flats_.size());
    std::unordered_set<FlatMask> seen;
    for (FlatMask f : flats_) {
        FlatMask g = drop_bit(f, e);
        if (seen.insert(g).second) out.push_back(g);
    }
    std::vector<int> labels = labels_;
    labels.erase(labels.begin() + e);
    return from_trusted_lattice(n_ - 1, std::move(labels), std::move(out));
}

Matroid Matroid::interval_minor(FlatMask f, FlatMask g, bool simplify) const {
    int fi = find_flat(f), gi = find_flat(g);
    if (fi < 0) throw ValidationError("not a flat: " + flat_str(f));
    if (gi < 0) throw ValidationError("not a flat: " + flat_str(g));
    if ((f & g) != f)
        throw ValidationError("interval " + flat_str(f) + ".." + flat_str(g) + " is empty");
    std::vector<int> pos;  // ground positions of the interval, ascending
    for (int i = 0; i < n_; ++i)
        if ((g & bit(i)) && !(f & bit(i))) pos.push_back(i);
    std::vector<int> newpos(static_cast<size_t>(n_), -1);
    std::vector<int> labels;
    for (size_t j = 0; j < pos.size(); ++j) {
        newpos[static_cast<size_t>(pos[j])] = static_cast<int>(j);
        labels.push_back(labels_[static_cast<size_t>(pos[j])]);
    }
    std::vector<FlatMask> out;
    for (FlatMask h : flats_) {
        if ((h & f) != f || (h & g) != h) continue;
        FlatMask m = 0;
        for (int p : pos)
            if (h & bit(p)) m |= bit(newpos[static_cast<size_t>(p)]);
        out.push_back(m);
    }
    Matroid res = from_trusted_lattice(static_cast<int>(pos.size()), std::move(labels), std::move(out));
    return simplify ? res.simplified() : res;
}

Matroid Matroid::contracted(FlatMask f) const { return interval_minor(f, full_set(), true); }

Matroid Matroid::minor(FlatMask f, FlatMask g) const { return interval_minor(f, g, true); }

Matroid Matroid::localized(FlatMask f) const {
    if (!is_flat(f)) throw ValidationError("not a flat: " + flat_str(f));
    std::vector<int> pos;
    for (int i = 0; i < n_; ++i)
        if (f & bit(i)) pos.push_back(i);
    std::vector<int> newpos(static_cast<size_t>(n_), -1);
    std::vector<int> labels;
    for (size_t j = 0; j < pos.size(); ++j) {
        newpos[static_cast<size_t>(pos[j])] = static_cast<int>(j);
        labels.push_back(labels_[static_cast<size_t>(pos[j])]);
    }
    std::vector<FlatMask> out;
    for (FlatMask h : flats_) {
        if ((h & f) != h) continue;
        FlatMask m = 0;
        for (int p : pos)
            if (h & bit(p)) m |= bit(newpos[static_cast<size_t>(p)]);
        out.push_back(m);
    }
    return from_trusted_lattice(static_cast<int>(pos.size()), std::move(labels), std::move(out));
}

Matroid Matroid::simplified() const {
    FlatMask b = bottom();
    std::vector<int> reps;  // one ground position per parallel class
    for (size_t i = 0; i < flats_.size(); ++i)
        if (ranks_[i] == 1) reps.push_back(__builtin_ctz(flats_[i] & ~b));
    std::sort(reps.begin(), reps.end());
    std::vector<int> labels;
    for (int p : reps) labels.push_back(labels_[static_cast<size_t>(p)]);
    std::vector<FlatMask> out;
    out.reserve(flats_.size());
    for (FlatMask f : flats_) {
        FlatMask m = 0;
        for (size_t j = 0; j < reps.size(); ++j)
            if (f & bit(reps[j])) m |= bit(static_cast<int>(j));
        out.push_back(m);
    }
    // a flat is the join of the atoms below it, so images stay distinct
    return from_trusted_lattice(static_cast<int>(reps.size()), std::move(labels), std::move(out));
}

Matroid Matroid::uniform(int corank, int rank, int cap) {
    if (corank < 0 || rank < 0)
        throw ValidationError("uniform: corank and rank must be nonnegative");
    int n = corank + rank;
    check_ground(n, cap);
    FlatMask full = n == 0 ? 0 : (bit(n) - 1);
    std::vector<FlatMask> flats;
    for (int k = 0; k < rank; ++k) {
        if (k == 0) {
            flats.push_back(0);
            continue;
        }
        FlatMask v = bit(k) - 1;
        while (v <= full) {
            flats.push_back(v);
            // Gosper's hack: next mask with the same popcount
            FlatMask c = v & (~v + 1);
            FlatMask r = v + c;
            if (r == 0) break;
            v = (((r ^ v) >> 2) / c) | r;
        }
    }
    if (flats.empty() || flats.back() != full) flats.push_back(full);
    return from_trusted_lattice(n, [n] {
        std::vector<int> l(static_cast<size_t>(n));
        std::iota(l.begin(), l.end(), 0);
        return l;
    }(), std::move(flats));
}

Matroid Matroid::boolean_lattice(int n, int cap) { return uniform(0, n, cap); }

Matroid Matroid::direct_sum(const Matroid& a, const Matroid& b, int cap) {
    int n = a.n_ + b.n_;
    check_ground(n, cap);
    std::vector<FlatMask> flats;
    flats.reserve(a.flats_.size() * b.flats_.size());
    for (FlatMask fa : a.flats_)
        for (FlatMask fb : b.flats_) flats.push_back(fa | (fb << a.n_));
    return from_trusted_lattice(n, [n] {
        std::vector<int> l(static_cast<size_t>(n));
        std::iota(l.begin(), l.end(), 0);
        return l;
    }(), std::move(flats));
}

void Matroid::validate(bool require_simple) const {
    check_lattice(n_, flats_);
    if (require_simple && !is_simple())
        throw ValidationError("matroid is not simple");
}

std::string Matroid::flat_str(FlatMask m) const { return set_str(m, &labels_); }

} // namespace klm
