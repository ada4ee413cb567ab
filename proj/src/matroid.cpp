#include "gammoidlab/matroid.hpp"

#include <algorithm>
#include <cstdlib>

namespace gammoidlab {

int enumeration_cap() {
    if (const char* env = std::getenv("GAMMOID_LAB_CAP")) {
        int v = std::atoi(env);
        if (v >= 1 && v <= 30) return v;
    }
    return kDefaultCap;
}

namespace {

int effective_cap(int cap) { return cap < 0 ? enumeration_cap() : cap; }

void require_cap(const GroundSet& g, int cap, const char* what) {
    cap = effective_cap(cap);
    if (g.size() > cap)
        throw SizeCapError(std::string(what) + ": ground set of size " + std::to_string(g.size()) +
                           " too large for exhaustive check (cap " + std::to_string(cap) + ")");
}

std::vector<char> sweep(const IndependenceOracle& m) {
    int n = m.ground().size();
    std::vector<char> indep(std::size_t{1} << n);
    for (Mask s = 0; s < (Mask{1} << n); ++s) indep[s] = m.independent(s);
    return indep;
}

// maximal by inclusion: independent and no independent proper superset
std::vector<char> maximal_sets(const std::vector<char>& indep, int n) {
    std::vector<char> has_indep_sup(indep.size(), 0);
    for (Mask s = (Mask{1} << n); s-- > 0;) {
        for (int i = 0; i < n; ++i) {
            if (s & bit(i)) continue;
            Mask t = s | bit(i);
            if (indep[t] || has_indep_sup[t]) {
                has_indep_sup[s] = 1;
                break;
            }
        }
    }
    std::vector<char> maximal(indep.size(), 0);
    for (Mask s = 0; s < indep.size(); ++s) maximal[s] = indep[s] && !has_indep_sup[s];
    return maximal;
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw InputError("duplicate ground element '" + names_[i] + "'");
    }
}

int GroundSet::index(const std::string& name) const {
    int i = find(name);
    if (i < 0) throw InputError("unknown ground element '" + name + "'");
    return i;
}

int GroundSet::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

Mask GroundSet::full() const {
    if (size() > 32) throw SizeCapError("ground set too large for subset masks");
    return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1;
}

Mask GroundSet::mask_of(const std::vector<std::string>& names) const {
    Mask m = 0;
    for (const auto& n : names) m |= bit(index(n));
    return m;
}

std::vector<std::string> GroundSet::names_of(Mask m) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
        if (m & bit(i)) out.push_back(names_[i]);
    return out;
}

IndependenceOracle::IndependenceOracle(GroundSet ground, std::function<bool(Mask)> predicate)
    : ground_(std::move(ground)), predicate_(std::move(predicate)) {
    if (ground_.size() > 32) throw SizeCapError("oracle ground set exceeds 32 elements");
}

IndependenceOracle::IndependenceOracle(const IndependenceOracle& o)
    : ground_(o.ground_), predicate_(o.predicate_) {
    std::lock_guard<std::mutex> lock(o.mutex_);
    cache_ = o.cache_;
}

IndependenceOracle& IndependenceOracle::operator=(const IndependenceOracle& o) {
    if (this == &o) return *this;
    std::scoped_lock lock(mutex_, o.mutex_);
    ground_ = o.ground_;
    predicate_ = o.predicate_;
    cache_ = o.cache_;
    return *this;
}

bool IndependenceOracle::independent(Mask subset) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(subset);
    if (it != cache_.end()) return it->second;
    bool v = predicate_(subset);
    cache_.emplace(subset, v);
    return v;
}

bool IndependenceOracle::independent(const std::vector<std::string>& names) const {
    return independent(ground_.mask_of(names));
}

Mask IndependenceOracle::greedy_base(Mask within) const {
    Mask b = 0;
    for (int i = 0; i < ground_.size(); ++i) {
        if (!(within & bit(i))) continue;
        if (independent(b | bit(i))) b |= bit(i);
    }
    return b;
}

int IndependenceOracle::rank() const { return popcount(greedy_base(ground_.full())); }

AxiomReport check_axioms(const IndependenceOracle& m, int cap) {
    require_cap(m.ground(), cap, "check_axioms");
    int n = m.ground().size();
    auto indep = sweep(m);
    AxiomReport rep;

    if (!indep[0]) {
        rep.i1.pass = false;
        rep.i1.witness = {0, 0};
    }

    for (Mask s = 0; s < indep.size() && rep.i2.pass; ++s) {
        if (!indep[s]) continue;
        for (int i = 0; i < n; ++i) {
            if (!(s & bit(i))) continue;
            if (!indep[s ^ bit(i)]) {
                rep.i2.pass = false;
                rep.i2.witness = {s ^ bit(i), s};
                break;
            }
        }
    }

    auto maximal = maximal_sets(indep, n);

    for (Mask s = 0; s < indep.size() && rep.i3.pass; ++s) {
        if (!indep[s] || maximal[s]) continue;
        for (Mask t = 0; t < indep.size(); ++t) {
            if (!maximal[t]) continue;
            bool augmentable = false;
            for (int i = 0; i < n && !augmentable; ++i)
                if ((t & bit(i)) && !(s & bit(i)) && indep[s | bit(i)]) augmentable = true;
            if (!augmentable) {
                rep.i3.pass = false;
                rep.i3.witness = {s, t};
                break;
            }
        }
    }

    // (IM): for every independent I ⊆ X, {I' independent : I ⊆ I' ⊆ X} has a
    // maximal element. Checked per X by locating the maximal-within-X sets and
    // propagating reachability downwards.
    for (Mask x = 0; x < indep.size() && rep.im.pass; ++x) {
        std::vector<Mask> subs;
        for (Mask s = x;; s = (s - 1) & x) {
            subs.push_back(s);
            if (s == 0) break;
        }
        std::sort(subs.begin(), subs.end(), [](Mask a, Mask b) { return popcount(a) > popcount(b); });
        std::unordered_map<Mask, char> has_max_sup;
        for (Mask s : subs) {
            if (!indep[s]) continue;
            bool max_in_x = true;
            for (int i = 0; i < n; ++i)
                if ((x & bit(i)) && !(s & bit(i)) && indep[s | bit(i)]) {
                    max_in_x = false;
                    break;
                }
            bool reach = max_in_x;
            for (int i = 0; i < n && !reach; ++i)
                if ((x & bit(i)) && !(s & bit(i)) && has_max_sup.count(s | bit(i))) reach = true;
            if (reach) has_max_sup[s] = 1;
        }
        for (Mask s : subs) {
            if (indep[s] && !has_max_sup.count(s)) {
                rep.im.pass = false;
                rep.im.witness = {s, x};
                break;
            }
        }
    }
    return rep;
}

IndependenceOracle dual(const IndependenceOracle& m, int cap) {
    require_cap(m.ground(), cap, "dual");
    int n = m.ground().size();
    auto indep = sweep(m);
    auto maximal = maximal_sets(indep, n);
    std::vector<Mask> cobases;
    Mask full = m.ground().full();
    for (Mask s = 0; s < indep.size(); ++s)
        if (maximal[s]) cobases.push_back(full & ~s);
    return IndependenceOracle(m.ground(), [cobases](Mask s) {
        for (Mask c : cobases)
            if ((s & ~c) == 0) return true;
        return false;
    });
}

MinorSpec minor_normalize(const IndependenceOracle& m, Mask contract, Mask del) {
    if (contract & del) throw InputError("contract and delete sets intersect");
    MinorSpec spec;
    spec.contract = contract;
    spec.del = del;
    Mask full = m.ground().full();
    // base of M|C
    Mask s1 = m.greedy_base(contract);
    // base of M.D: extend a base of M restricted to E\D through D, keep the D part
    Mask outside = m.greedy_base(full & ~del);
    Mask s2 = 0;
    for (int i = 0; i < m.ground().size(); ++i) {
        if (!(del & bit(i))) continue;
        if (m.independent(outside | s2 | bit(i))) s2 |= bit(i);
    }
    spec.normalized_s = s1 | s2;
    spec.normalized_r = (contract | del) & ~spec.normalized_s;
    if (!m.independent(spec.normalized_s))
        throw InternalError("minor normalization produced a dependent set; oracle is not a matroid");
    return spec;
}

IndependenceOracle minor(const IndependenceOracle& m, Mask contract, Mask del) {
    MinorSpec spec = minor_normalize(m, contract, del);
    Mask removed = contract | del;
    std::vector<std::string> names;
    std::vector<int> host_index;
    for (int i = 0; i < m.ground().size(); ++i) {
        if (removed & bit(i)) continue;
        names.push_back(m.ground().name(i));
        host_index.push_back(i);
    }
    Mask s = spec.normalized_s;
    IndependenceOracle host = m;
    return IndependenceOracle(GroundSet(names), [host, host_index, s](Mask sub) {
        Mask lifted = s;
        for (std::size_t i = 0; i < host_index.size(); ++i)
            if (sub & bit(static_cast<int>(i))) lifted |= bit(host_index[i]);
        return host.independent(lifted);
    });
}

std::vector<Mask> enumerate(const IndependenceOracle& m, SubsetKind kind, int cap) {
    require_cap(m.ground(), cap, "enumerate");
    if (kind == SubsetKind::Cocircuits) return enumerate(dual(m, cap), SubsetKind::Circuits, cap);
    int n = m.ground().size();
    auto indep = sweep(m);
    std::vector<Mask> out;
    if (kind == SubsetKind::Bases) {
        auto maximal = maximal_sets(indep, n);
        for (Mask s = 0; s < indep.size(); ++s)
            if (maximal[s]) out.push_back(s);
    } else {
        // circuits: minimal dependent sets
        std::vector<char> has_dep_sub(indep.size(), 0);
        for (Mask s = 0; s < indep.size(); ++s) {
            for (int i = 0; i < n; ++i) {
                if (!(s & bit(i))) continue;
                Mask t = s ^ bit(i);
                if (!indep[t] || has_dep_sub[t]) {
                    has_dep_sub[s] = 1;
                    break;
                }
            }
        }
        for (Mask s = 0; s < indep.size(); ++s)
            if (!indep[s] && !has_dep_sub[s]) out.push_back(s);
    }
    return out;
}

Mask coloops(const IndependenceOracle& m, int cap) {
    auto bases = enumerate(m, SubsetKind::Bases, cap);
    Mask acc = m.ground().full();
    for (Mask b : bases) acc &= b;
    return acc;
}

bool same_matroid(const IndependenceOracle& a, const IndependenceOracle& b) {
    if (!(a.ground() == b.ground())) return false;
    for (Mask s = 0; s <= a.ground().full(); ++s) {
        if (a.independent(s) != b.independent(s)) return false;
        if (s == a.ground().full()) break;
    }
    return true;
}

}  // namespace gammoidlab
