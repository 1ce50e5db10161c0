#include "viewprop/store.hpp"

#include <algorithm>

#include "viewprop/errors.hpp"

namespace viewprop {

bool assignment_less(const Assignment& a, const Assignment& b) {
    return std::lexicographical_compare(a.vals.begin(), a.vals.end(),
                                        b.vals.begin(), b.vals.end(), value_less);
}

void ExtensionalConstraint::normalize() {
    std::sort(tuples.begin(), tuples.end(), assignment_less);
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

ExtensionalConstraint intersect(const ExtensionalConstraint& a,
                                const ExtensionalConstraint& b) {
    if (a.vars != b.vars) throw UsageError("constraint intersect: variable lists differ");
    ExtensionalConstraint r;
    r.vars = a.vars;
    std::set_intersection(a.tuples.begin(), a.tuples.end(), b.tuples.begin(),
                          b.tuples.end(), std::back_inserter(r.tuples), assignment_less);
    return r;
}

/*
 * DomainStore
 */

VarId DomainStore::add_int(std::int64_t lo, std::int64_t hi) {
    return add_int(IntDomain::range(lo, hi));
}

VarId DomainStore::add_int(IntDomain d) {
    VarId id{static_cast<std::uint32_t>(doms_.size()), Sort::Int};
    doms_.emplace_back(VariableDomain(std::move(d)));
    if (dom_is_empty(*doms_.back())) failed_ = true;
    return id;
}

VarId DomainStore::add_bool() { return add_bool(BoolDomain::both()); }

VarId DomainStore::add_bool(BoolDomain d) {
    VarId id{static_cast<std::uint32_t>(doms_.size()), Sort::Bool};
    doms_.emplace_back(VariableDomain(d));
    if (d.is_empty()) failed_ = true;
    return id;
}

VarId DomainStore::add_set(IntSet ub) {
    return add_set(SetDomain(IntSet{}, std::move(ub)));
}

VarId DomainStore::add_set(SetDomain d) {
    VarId id{static_cast<std::uint32_t>(doms_.size()), Sort::Set};
    bool empty = d.is_empty();
    doms_.emplace_back(VariableDomain(std::move(d)));
    if (empty) failed_ = true;
    return id;
}

void DomainStore::put(VarId id, VariableDomain d) {
    if (domain_sort(d) != id.sort) throw UsageError("put: domain sort does not match VarId");
    if (doms_.size() <= id.index) doms_.resize(id.index + 1);
    bool empty = dom_is_empty(d);
    doms_[id.index] = std::move(d);
    if (empty) failed_ = true;
}

bool DomainStore::has(VarId id) const {
    return id.index < doms_.size() && doms_[id.index].has_value() &&
           domain_sort(*doms_[id.index]) == id.sort;
}

const VariableDomain& DomainStore::at(VarId id) const {
    if (!has(id)) throw UsageError("store access to unknown variable");
    return *doms_[id.index];
}

void DomainStore::assign(VarId id, VariableDomain d) {
    if (!has(id)) throw UsageError("assign to unknown variable");
    if (domain_sort(d) != id.sort) throw UsageError("assign: sort mismatch");
    bool empty = dom_is_empty(d);
    doms_[id.index] = std::move(d);
    if (empty) failed_ = true;
}

std::size_t DomainStore::var_count() const {
    std::size_t n = 0;
    for (const auto& d : doms_) n += d.has_value();
    return n;
}

std::vector<VarId> DomainStore::vars() const {
    std::vector<VarId> out;
    for (std::size_t i = 0; i < doms_.size(); ++i)
        if (doms_[i].has_value())
            out.push_back(VarId{static_cast<std::uint32_t>(i), domain_sort(*doms_[i])});
    return out;
}

std::ostream& operator<<(std::ostream& os, const DomainStore& s) {
    bool first = true;
    for (VarId v : s.vars()) {
        if (!first) os << ';';
        first = false;
        os << 'x' << v.index << '=' << s.at(v);
    }
    if (s.failed()) os << (first ? "" : ";") << "FAILED";
    return os;
}

/*
 * Store-level operations
 */

bool is_stronger(const DomainStore& d1, const DomainStore& d2) {
    auto v1 = d1.vars();
    auto v2 = d2.vars();
    if (v1 != v2) throw UsageError("is_stronger: variable sets differ");
    for (VarId v : v1)
        if (!dom_subset(d1.at(v), d2.at(v))) return false;
    return true;
}

DomainStore dom_of(const ExtensionalConstraint& c, const DomainStore& universe) {
    DomainStore out = universe;
    for (std::size_t i = 0; i < c.vars.size(); ++i) {
        std::vector<Value> column;
        column.reserve(c.tuples.size());
        for (const Assignment& a : c.tuples) column.push_back(a.vals[i]);
        out.assign(c.vars[i], dom_from_values(c.vars[i].sort, column));
    }
    return out;
}

DomainStore conv_of(const ExtensionalConstraint& c, const DomainStore& universe) {
    DomainStore out = universe;
    for (std::size_t i = 0; i < c.vars.size(); ++i) {
        VarId v = c.vars[i];
        if (v.sort == Sort::Set)
            throw UsageError("conv_of: set variables are out of scope");
        if (c.tuples.empty()) {
            out.assign(v, v.sort == Sort::Int ? VariableDomain(IntDomain::empty())
                                              : VariableDomain(BoolDomain::empty()));
            continue;
        }
        std::int64_t lo = std::get<0>(c.tuples.front().vals[i]);
        std::int64_t hi = lo;
        for (const Assignment& a : c.tuples) {
            std::int64_t x = std::get<0>(a.vals[i]);
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        if (v.sort == Sort::Int) {
            out.assign(v, IntDomain::range(lo, hi));
        } else {
            std::uint8_t m = (lo == 0 ? 1 : 0) | (hi == 1 ? 2 : 0);
            out.assign(v, BoolDomain::from_mask(m));
        }
    }
    return out;
}

DomainStore meet(const DomainStore& d1, const DomainStore& d2) {
    auto v1 = d1.vars();
    if (v1 != d2.vars()) throw UsageError("meet: variable sets differ");
    DomainStore out = d1;
    for (VarId v : v1) out.assign(v, dom_intersect(d1.at(v), d2.at(v)));
    return out;
}

DomainStore conv_store(const DomainStore& d, std::span<const VarId> vars) {
    DomainStore out = d;
    for (VarId v : vars) {
        if (v.sort != Sort::Int) continue; // bool/set domains are convex already
        const auto& id = std::get<IntDomain>(d.at(v));
        if (!id.is_empty()) out.assign(v, IntDomain::range(id.min(), id.max()));
    }
    return out;
}

std::uint64_t assignment_space_size(const DomainStore& d, std::span<const VarId> vars) {
    std::uint64_t n = 1;
    for (VarId v : vars) {
        std::uint64_t s = dom_size(d.at(v));
        if (s == 0) return 0;
        if (n > (std::uint64_t{1} << 62) / s) return ~std::uint64_t{0};
        n *= s;
    }
    return n;
}

void for_each_assignment(const DomainStore& d, std::span<const VarId> vars,
                         const std::function<void(const Assignment&)>& fn,
                         std::uint64_t cap) {
    if (d.failed()) return;
    std::uint64_t space = assignment_space_size(d, vars);
    if (space > cap)
        throw CapExceeded("assignment enumeration over cap", static_cast<double>(space));
    std::vector<std::vector<Value>> columns;
    columns.reserve(vars.size());
    for (VarId v : vars) columns.push_back(dom_values(d.at(v)));
    Assignment a;
    a.vals.resize(vars.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == vars.size()) {
            fn(a);
            return;
        }
        for (const Value& v : columns[i]) {
            a.vals[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

std::vector<Assignment> enumerate_assignments(const DomainStore& d,
                                              std::span<const VarId> vars,
                                              std::uint64_t cap) {
    std::vector<Assignment> out;
    for_each_assignment(d, vars, [&](const Assignment& a) { out.push_back(a); }, cap);
    return out;
}

DomainStore singleton_store(const DomainStore& universe, std::span<const VarId> vars,
                            const Assignment& a) {
    DomainStore out = universe;
    for (std::size_t i = 0; i < vars.size(); ++i)
        out.assign(vars[i], dom_singleton_of(vars[i].sort, a.vals[i]));
    return out;
}

ExtensionalConstraint constraint_where(const DomainStore& universe,
                                       std::span<const VarId> vars,
                                       const std::function<bool(const Assignment&)>& pred,
                                       std::uint64_t cap) {
    ExtensionalConstraint c;
    c.vars.assign(vars.begin(), vars.end());
    for_each_assignment(universe, vars,
                        [&](const Assignment& a) {
                            if (pred(a)) c.tuples.push_back(a);
                        },
                        cap);
    c.normalize();
    return c;
}

} // namespace viewprop
