#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <variant>
#include <vector>

#include "viewprop/values.hpp"

namespace viewprop {

/*
 * Variable domains for the three sorts. IntDomain is a normalized list of
 * disjoint, non-adjacent closed ranges: bounds operations dominate in the
 * propagators, so min/max must stay O(1) and offset/minus images O(ranges).
 */

class IntDomain {
public:
    struct Range {
        std::int64_t lo, hi;
        bool operator==(const Range&) const = default;
    };

    IntDomain() = default;

    static IntDomain empty() { return IntDomain(); }
    static IntDomain range(std::int64_t lo, std::int64_t hi);
    static IntDomain singleton(std::int64_t v) { return range(v, v); }
    static IntDomain from_values(const std::vector<std::int64_t>& vs);
    // Ranges may arrive unsorted/overlapping; they are normalized.
    static IntDomain from_ranges(std::vector<Range> rs);

    bool is_empty() const { return ranges_.empty(); }
    bool is_singleton() const {
        return ranges_.size() == 1 && ranges_[0].lo == ranges_[0].hi;
    }
    std::int64_t min() const;
    std::int64_t max() const;
    std::uint64_t size() const;
    bool contains(std::int64_t v) const;

    IntDomain intersect(const IntDomain& other) const;
    IntDomain intersect_range(std::int64_t lo, std::int64_t hi) const;
    IntDomain remove(std::int64_t v) const;
    bool subset_of(const IntDomain& other) const;

    const std::vector<Range>& ranges() const { return ranges_; }
    std::vector<std::int64_t> values() const;
    void for_each(const std::function<void(std::int64_t)>& fn) const;

    bool operator==(const IntDomain&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const IntDomain& d);

private:
    std::vector<Range> ranges_;
};

// One of {}, {0}, {1}, {0,1}.
class BoolDomain {
public:
    BoolDomain() : mask_(0) {}
    static BoolDomain empty() { return BoolDomain(0); }
    static BoolDomain both() { return BoolDomain(3); }
    static BoolDomain of(bool v) { return BoolDomain(v ? 2 : 1); }
    static BoolDomain from_mask(std::uint8_t m) { return BoolDomain(m); }

    bool is_empty() const { return mask_ == 0; }
    bool is_singleton() const { return mask_ == 1 || mask_ == 2; }
    bool contains(std::int64_t v) const {
        return (v == 0 && (mask_ & 1)) || (v == 1 && (mask_ & 2));
    }
    std::int64_t min() const;
    std::int64_t max() const;
    std::uint64_t size() const { return ((mask_ & 1) != 0) + ((mask_ & 2) != 0); }
    std::uint8_t mask() const { return mask_; }

    BoolDomain intersect(const BoolDomain& o) const { return BoolDomain(mask_ & o.mask_); }
    bool subset_of(const BoolDomain& o) const { return (mask_ & ~o.mask_) == 0; }
    std::vector<std::int64_t> values() const;

    bool operator==(const BoolDomain&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const BoolDomain& d);

private:
    explicit BoolDomain(std::uint8_t m) : mask_(m) {}
    std::uint8_t mask_;
};

// Convex set domain: all sets s with lb ⊆ s ⊆ ub. Failed iff lb ⊄ ub.
class SetDomain {
public:
    SetDomain() = default;
    SetDomain(IntSet lb, IntSet ub) : lb_(std::move(lb)), ub_(std::move(ub)) {}

    static SetDomain interval(IntSet lb, IntSet ub) { return SetDomain(std::move(lb), std::move(ub)); }
    static SetDomain fixed(IntSet s) { return SetDomain(s, s); }
    static SetDomain failed();

    const IntSet& lb() const { return lb_; }
    const IntSet& ub() const { return ub_; }

    bool is_empty() const { return !lb_.subset_of(ub_); }
    bool is_singleton() const { return !is_empty() && lb_ == ub_; }
    std::uint64_t size() const;
    bool contains(const IntSet& s) const { return lb_.subset_of(s) && s.subset_of(ub_); }

    SetDomain intersect(const SetDomain& o) const {
        return SetDomain(lb_.unite(o.lb_), ub_.intersect(o.ub_));
    }
    bool subset_of(const SetDomain& o) const {
        if (is_empty()) return true;
        return o.lb_.subset_of(lb_) && ub_.subset_of(o.ub_);
    }
    std::vector<IntSet> values() const;

    bool operator==(const SetDomain& o) const {
        if (is_empty() && o.is_empty()) return true;
        return lb_ == o.lb_ && ub_ == o.ub_;
    }

    friend std::ostream& operator<<(std::ostream& os, const SetDomain& d);

private:
    IntSet lb_, ub_;
};

using VariableDomain = std::variant<IntDomain, BoolDomain, SetDomain>;

Sort domain_sort(const VariableDomain& d);
bool dom_is_empty(const VariableDomain& d);
bool dom_is_singleton(const VariableDomain& d);
std::uint64_t dom_size(const VariableDomain& d);
bool dom_subset(const VariableDomain& a, const VariableDomain& b);
bool dom_equal(const VariableDomain& a, const VariableDomain& b);
VariableDomain dom_intersect(const VariableDomain& a, const VariableDomain& b);
bool dom_contains(const VariableDomain& d, const Value& v);
std::vector<Value> dom_values(const VariableDomain& d);
VariableDomain dom_from_values(Sort sort, const std::vector<Value>& vs);
VariableDomain dom_singleton_of(Sort sort, const Value& v);
std::ostream& operator<<(std::ostream& os, const VariableDomain& d);

} // namespace viewprop
