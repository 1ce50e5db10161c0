#include "viewprop/domain.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "viewprop/errors.hpp"

namespace viewprop {

/*
 * IntDomain
 */

IntDomain IntDomain::range(std::int64_t lo, std::int64_t hi) {
    IntDomain d;
    if (lo <= hi) d.ranges_.push_back({lo, hi});
    return d;
}

IntDomain IntDomain::from_values(const std::vector<std::int64_t>& vs) {
    std::vector<std::int64_t> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    IntDomain d;
    for (std::int64_t v : sorted) {
        if (!d.ranges_.empty() && d.ranges_.back().hi + 1 == v) {
            d.ranges_.back().hi = v;
        } else {
            d.ranges_.push_back({v, v});
        }
    }
    return d;
}

IntDomain IntDomain::from_ranges(std::vector<Range> rs) {
    std::erase_if(rs, [](const Range& r) { return r.lo > r.hi; });
    std::sort(rs.begin(), rs.end(),
              [](const Range& a, const Range& b) { return a.lo < b.lo; });
    IntDomain d;
    for (const Range& r : rs) {
        if (!d.ranges_.empty() && r.lo <= d.ranges_.back().hi + 1) {
            d.ranges_.back().hi = std::max(d.ranges_.back().hi, r.hi);
        } else {
            d.ranges_.push_back(r);
        }
    }
    return d;
}

std::int64_t IntDomain::min() const {
    if (is_empty()) throw UsageError("min() on empty IntDomain");
    return ranges_.front().lo;
}

std::int64_t IntDomain::max() const {
    if (is_empty()) throw UsageError("max() on empty IntDomain");
    return ranges_.back().hi;
}

std::uint64_t IntDomain::size() const {
    std::uint64_t n = 0;
    for (const Range& r : ranges_) n += static_cast<std::uint64_t>(r.hi - r.lo + 1);
    return n;
}

bool IntDomain::contains(std::int64_t v) const {
    auto it = std::upper_bound(ranges_.begin(), ranges_.end(), v,
                               [](std::int64_t x, const Range& r) { return x < r.lo; });
    if (it == ranges_.begin()) return false;
    --it;
    return v <= it->hi;
}

IntDomain IntDomain::intersect(const IntDomain& other) const {
    IntDomain d;
    auto a = ranges_.begin();
    auto b = other.ranges_.begin();
    while (a != ranges_.end() && b != other.ranges_.end()) {
        std::int64_t lo = std::max(a->lo, b->lo);
        std::int64_t hi = std::min(a->hi, b->hi);
        if (lo <= hi) d.ranges_.push_back({lo, hi});
        if (a->hi < b->hi) ++a; else ++b;
    }
    return d;
}

IntDomain IntDomain::intersect_range(std::int64_t lo, std::int64_t hi) const {
    return intersect(IntDomain::range(lo, hi));
}

IntDomain IntDomain::remove(std::int64_t v) const {
    if (!contains(v)) return *this;
    IntDomain d;
    for (const Range& r : ranges_) {
        if (v < r.lo || v > r.hi) {
            d.ranges_.push_back(r);
        } else {
            if (r.lo <= v - 1) d.ranges_.push_back({r.lo, v - 1});
            if (v + 1 <= r.hi) d.ranges_.push_back({v + 1, r.hi});
        }
    }
    return d;
}

bool IntDomain::subset_of(const IntDomain& other) const {
    auto b = other.ranges_.begin();
    for (const Range& r : ranges_) {
        while (b != other.ranges_.end() && b->hi < r.lo) ++b;
        if (b == other.ranges_.end() || r.lo < b->lo || r.hi > b->hi) return false;
    }
    return true;
}

std::vector<std::int64_t> IntDomain::values() const {
    std::vector<std::int64_t> vs;
    vs.reserve(size());
    for_each([&](std::int64_t v) { vs.push_back(v); });
    return vs;
}

void IntDomain::for_each(const std::function<void(std::int64_t)>& fn) const {
    for (const Range& r : ranges_)
        for (std::int64_t v = r.lo; v <= r.hi; ++v) fn(v);
}

std::ostream& operator<<(std::ostream& os, const IntDomain& d) {
    os << '{';
    bool first = true;
    for (const IntDomain::Range& r : d.ranges_) {
        if (!first) os << ',';
        first = false;
        if (r.lo == r.hi) os << r.lo;
        else os << r.lo << ".." << r.hi;
    }
    return os << '}';
}

/*
 * BoolDomain
 */

std::int64_t BoolDomain::min() const {
    if (is_empty()) throw UsageError("min() on empty BoolDomain");
    return (mask_ & 1) ? 0 : 1;
}

std::int64_t BoolDomain::max() const {
    if (is_empty()) throw UsageError("max() on empty BoolDomain");
    return (mask_ & 2) ? 1 : 0;
}

std::vector<std::int64_t> BoolDomain::values() const {
    std::vector<std::int64_t> vs;
    if (mask_ & 1) vs.push_back(0);
    if (mask_ & 2) vs.push_back(1);
    return vs;
}

std::ostream& operator<<(std::ostream& os, const BoolDomain& d) {
    os << '{';
    if (d.mask_ & 1) os << '0';
    if (d.mask_ == 3) os << ',';
    if (d.mask_ & 2) os << '1';
    return os << '}';
}

/*
 * SetDomain
 */

SetDomain SetDomain::failed() {
    // Canonical failed interval: lb ⊄ ub.
    return SetDomain(IntSet{0}, IntSet{});
}

std::uint64_t SetDomain::size() const {
    if (is_empty()) return 0;
    std::size_t free = ub_.difference(lb_).size();
    if (free >= 63) throw CapExceeded("SetDomain::size overflow", 9e18);
    return std::uint64_t{1} << free;
}

std::vector<IntSet> SetDomain::values() const {
    std::vector<IntSet> out;
    if (is_empty()) return out;
    IntSet free = ub_.difference(lb_);
    const auto& fv = free.values();
    if (fv.size() >= 24)
        throw CapExceeded("SetDomain::values too large", std::pow(2.0, double(fv.size())));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << fv.size()); ++m) {
        IntSet s = lb_;
        for (std::size_t i = 0; i < fv.size(); ++i)
            if (m & (std::uint64_t{1} << i)) s = s.with(fv[i]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::ostream& operator<<(std::ostream& os, const SetDomain& d) {
    return os << "[lb" << d.lb_ << ",ub" << d.ub_ << ']';
}

/*
 * Generic helpers over VariableDomain
 */

Sort domain_sort(const VariableDomain& d) {
    switch (d.index()) {
        case 0: return Sort::Int;
        case 1: return Sort::Bool;
        default: return Sort::Set;
    }
}

bool dom_is_empty(const VariableDomain& d) {
    return std::visit([](const auto& x) { return x.is_empty(); }, d);
}

bool dom_is_singleton(const VariableDomain& d) {
    return std::visit([](const auto& x) { return x.is_singleton(); }, d);
}

std::uint64_t dom_size(const VariableDomain& d) {
    return std::visit([](const auto& x) { return x.size(); }, d);
}

bool dom_subset(const VariableDomain& a, const VariableDomain& b) {
    if (a.index() != b.index()) throw UsageError("dom_subset: sort mismatch");
    return std::visit(
        [&](const auto& x) {
            return x.subset_of(std::get<std::decay_t<decltype(x)>>(b));
        },
        a);
}

bool dom_equal(const VariableDomain& a, const VariableDomain& b) {
    if (a.index() != b.index()) return false;
    return a == b;
}

VariableDomain dom_intersect(const VariableDomain& a, const VariableDomain& b) {
    if (a.index() != b.index()) throw UsageError("dom_intersect: sort mismatch");
    return std::visit(
        [&](const auto& x) -> VariableDomain {
            return x.intersect(std::get<std::decay_t<decltype(x)>>(b));
        },
        a);
}

bool dom_contains(const VariableDomain& d, const Value& v) {
    switch (d.index()) {
        case 0: return v.index() == 0 && std::get<IntDomain>(d).contains(std::get<0>(v));
        case 1: return v.index() == 0 && std::get<BoolDomain>(d).contains(std::get<0>(v));
        default: return v.index() == 1 && std::get<SetDomain>(d).contains(std::get<1>(v));
    }
}

std::vector<Value> dom_values(const VariableDomain& d) {
    std::vector<Value> out;
    switch (d.index()) {
        case 0:
            for (std::int64_t v : std::get<IntDomain>(d).values()) out.emplace_back(v);
            break;
        case 1:
            for (std::int64_t v : std::get<BoolDomain>(d).values()) out.emplace_back(v);
            break;
        default:
            for (IntSet s : std::get<SetDomain>(d).values()) out.emplace_back(std::move(s));
            break;
    }
    return out;
}

VariableDomain dom_from_values(Sort sort, const std::vector<Value>& vs) {
    switch (sort) {
        case Sort::Int: {
            std::vector<std::int64_t> is;
            for (const Value& v : vs) is.push_back(std::get<0>(v));
            return IntDomain::from_values(is);
        }
        case Sort::Bool: {
            std::uint8_t m = 0;
            for (const Value& v : vs) m |= (std::get<0>(v) == 0) ? 1 : 2;
            return BoolDomain::from_mask(m);
        }
        case Sort::Set: {
            if (vs.empty()) return SetDomain::failed();
            IntSet lb = std::get<1>(vs.front());
            IntSet ub = lb;
            for (const Value& v : vs) {
                lb = lb.intersect(std::get<1>(v));
                ub = ub.unite(std::get<1>(v));
            }
            return SetDomain(std::move(lb), std::move(ub));
        }
    }
    throw UsageError("dom_from_values: bad sort");
}

VariableDomain dom_singleton_of(Sort sort, const Value& v) {
    switch (sort) {
        case Sort::Int: return IntDomain::singleton(std::get<0>(v));
        case Sort::Bool: return BoolDomain::of(std::get<0>(v) != 0);
        case Sort::Set: return SetDomain::fixed(std::get<1>(v));
    }
    throw UsageError("dom_singleton_of: bad sort");
}

std::ostream& operator<<(std::ostream& os, const VariableDomain& d) {
    std::visit([&](const auto& x) { os << x; }, d);
    return os;
}

} // namespace viewprop
