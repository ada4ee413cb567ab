#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace gammoidlab {

// Subsets of a ground set are bitmasks; bit i = i-th element in ground order.
using Mask = std::uint32_t;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

constexpr int kDefaultCap = 20;

// Effective enumeration cap: GAMMOID_LAB_CAP env var, else 20.
int enumeration_cap();

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }

class GroundSet {
  public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    int index(const std::string& name) const;          // throws InputError if absent
    int find(const std::string& name) const;           // -1 if absent
    bool contains(const std::string& name) const { return find(name) >= 0; }

    Mask full() const;
    Mask mask_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(Mask m) const;

    bool operator==(const GroundSet& o) const { return names_ == o.names_; }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

class IndependenceOracle {
  public:
    IndependenceOracle() = default;
    IndependenceOracle(GroundSet ground, std::function<bool(Mask)> predicate);
    IndependenceOracle(const IndependenceOracle& o);
    IndependenceOracle& operator=(const IndependenceOracle& o);

    const GroundSet& ground() const { return ground_; }
    bool independent(Mask subset) const;
    bool independent(const std::vector<std::string>& names) const;
    int rank() const;                                   // greedy over ground order
    Mask greedy_base(Mask within) const;                // maximal independent subset of `within`

  private:
    GroundSet ground_;
    std::function<bool(Mask)> predicate_;
    mutable std::unordered_map<Mask, bool> cache_;
    mutable std::mutex mutex_;
};

struct AxiomCheck {
    bool pass = true;
    // Witness of a failure; meaning depends on the axiom:
    //  i1: (0,0); i2: (dependent subset, its independent superset);
    //  i3: (the non-augmentable set, the maximal set); im: (I, X).
    std::optional<std::pair<Mask, Mask>> witness;
};

struct AxiomReport {
    AxiomCheck i1, i2, i3, im;
    bool all_pass() const { return i1.pass && i2.pass && i3.pass && im.pass; }
};

struct MinorSpec {
    Mask contract = 0;
    Mask del = 0;
    Mask normalized_s = 0;  // base of M|C together with a base of M.D
    Mask normalized_r = 0;  // (C ∪ D) \ S, coindependent
};

enum class SubsetKind { Bases, Circuits, Cocircuits };

AxiomReport check_axioms(const IndependenceOracle& m, int cap = -1);
IndependenceOracle dual(const IndependenceOracle& m, int cap = -1);
MinorSpec minor_normalize(const IndependenceOracle& m, Mask contract, Mask del);
IndependenceOracle minor(const IndependenceOracle& m, Mask contract, Mask del);
std::vector<Mask> enumerate(const IndependenceOracle& m, SubsetKind kind, int cap = -1);
Mask coloops(const IndependenceOracle& m, int cap = -1);
bool same_matroid(const IndependenceOracle& a, const IndependenceOracle& b);

}  // namespace gammoidlab
