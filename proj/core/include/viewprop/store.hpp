#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "viewprop/domain.hpp"
#include "viewprop/values.hpp"

namespace viewprop {

// Total assignment over an explicit variable list (held by the surrounding
// ExtensionalConstraint or passed alongside).
struct Assignment {
    std::vector<Value> vals;

    bool operator==(const Assignment&) const = default;
};

bool assignment_less(const Assignment& a, const Assignment& b);

// A constraint in extension: the oracle's ground truth.
struct ExtensionalConstraint {
    std::vector<VarId> vars;
    std::vector<Assignment> tuples; // sorted, duplicate-free

    void normalize();
    bool operator==(const ExtensionalConstraint&) const = default;
};

ExtensionalConstraint intersect(const ExtensionalConstraint& a,
                                const ExtensionalConstraint& b);

/*
 * The propagation state: per-variable domains plus the universe bounds the
 * views must respect. A store is a value; cloning it is the only sharing
 * mechanism.
 */
class DomainStore {
public:
    // Shared integer universe; view images outside it raise OverflowError.
    static constexpr std::int64_t kDefaultIntLo = -(std::int64_t{1} << 24);
    static constexpr std::int64_t kDefaultIntHi = (std::int64_t{1} << 24);

    DomainStore() = default;
    DomainStore(std::int64_t int_lo, std::int64_t int_hi, IntSet set_universe)
        : int_lo_(int_lo), int_hi_(int_hi), set_universe_(std::move(set_universe)) {}

    VarId add_int(std::int64_t lo, std::int64_t hi);
    VarId add_int(IntDomain d);
    VarId add_bool();
    VarId add_bool(BoolDomain d);
    VarId add_set(IntSet ub);
    VarId add_set(SetDomain d);
    // Places a variable at an explicit index (image stores mirror the base
    // propagator's variable numbering).
    void put(VarId id, VariableDomain d);

    bool has(VarId id) const;
    const VariableDomain& at(VarId id) const;
    void assign(VarId id, VariableDomain d); // marks the store failed on empty

    bool failed() const { return failed_; }
    void mark_failed() { failed_ = true; }

    std::size_t var_count() const;
    std::vector<VarId> vars() const;

    std::int64_t int_lo() const { return int_lo_; }
    std::int64_t int_hi() const { return int_hi_; }
    const IntSet& set_universe() const { return set_universe_; }

    bool operator==(const DomainStore&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const DomainStore& s);

private:
    std::vector<std::optional<VariableDomain>> doms_;
    bool failed_ = false;
    std::int64_t int_lo_ = kDefaultIntLo;
    std::int64_t int_hi_ = kDefaultIntHi;
    IntSet set_universe_;
};

// d1 ⊆ d2, pointwise over a shared variable set. UsageError on mismatch.
bool is_stronger(const DomainStore& d1, const DomainStore& d2);

// Strongest domain containing all tuples of c; untouched variables keep the
// domains of `universe`. Empty c fails the store.
DomainStore dom_of(const ExtensionalConstraint& c, const DomainStore& universe);

// Strongest convex domain containing c (integer/Boolean vars only).
DomainStore conv_of(const ExtensionalConstraint& c, const DomainStore& universe);

// Pointwise intersection (greatest lower bound of ⊆).
DomainStore meet(const DomainStore& d1, const DomainStore& d2);

// Per-variable interval hull inside one store (conv of a domain).
DomainStore conv_store(const DomainStore& d, std::span<const VarId> vars);

// Streams the Cartesian product of the variable domains. A failed store
// yields nothing. CapExceeded if the product exceeds `cap`.
void for_each_assignment(const DomainStore& d, std::span<const VarId> vars,
                         const std::function<void(const Assignment&)>& fn,
                         std::uint64_t cap = 2'000'000);

std::vector<Assignment> enumerate_assignments(const DomainStore& d,
                                              std::span<const VarId> vars,
                                              std::uint64_t cap = 2'000'000);

std::uint64_t assignment_space_size(const DomainStore& d, std::span<const VarId> vars);

// Singleton store: clone of `universe` with `vars` pinned to `a`.
DomainStore singleton_store(const DomainStore& universe, std::span<const VarId> vars,
                            const Assignment& a);

// All tuples of `universe` over `vars` that satisfy `pred`.
ExtensionalConstraint constraint_where(const DomainStore& universe,
                                       std::span<const VarId> vars,
                                       const std::function<bool(const Assignment&)>& pred,
                                       std::uint64_t cap = 2'000'000);

} // namespace viewprop
