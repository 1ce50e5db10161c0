#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace viewprop {

// Finite set of integers, kept sorted and duplicate-free. Used both as the
// value type of set variables and as the bound representation of SetDomain.
class IntSet {
public:
    IntSet() = default;
    IntSet(std::initializer_list<std::int64_t> vs) : vals_(vs) { normalize(); }
    explicit IntSet(std::vector<std::int64_t> vs) : vals_(std::move(vs)) { normalize(); }

    static IntSet range(std::int64_t lo, std::int64_t hi) {
        IntSet s;
        for (std::int64_t v = lo; v <= hi; ++v) s.vals_.push_back(v);
        return s;
    }

    bool empty() const { return vals_.empty(); }
    std::size_t size() const { return vals_.size(); }
    const std::vector<std::int64_t>& values() const { return vals_; }

    bool contains(std::int64_t v) const {
        return std::binary_search(vals_.begin(), vals_.end(), v);
    }

    bool subset_of(const IntSet& other) const {
        return std::includes(other.vals_.begin(), other.vals_.end(),
                             vals_.begin(), vals_.end());
    }

    IntSet unite(const IntSet& other) const {
        IntSet r;
        std::set_union(vals_.begin(), vals_.end(), other.vals_.begin(), other.vals_.end(),
                       std::back_inserter(r.vals_));
        return r;
    }

    IntSet intersect(const IntSet& other) const {
        IntSet r;
        std::set_intersection(vals_.begin(), vals_.end(), other.vals_.begin(),
                              other.vals_.end(), std::back_inserter(r.vals_));
        return r;
    }

    IntSet difference(const IntSet& other) const {
        IntSet r;
        std::set_difference(vals_.begin(), vals_.end(), other.vals_.begin(),
                            other.vals_.end(), std::back_inserter(r.vals_));
        return r;
    }

    IntSet with(std::int64_t v) const {
        IntSet r = *this;
        auto it = std::lower_bound(r.vals_.begin(), r.vals_.end(), v);
        if (it == r.vals_.end() || *it != v) r.vals_.insert(it, v);
        return r;
    }

    bool operator==(const IntSet& other) const = default;
    // Lexicographic; gives assignments over set sorts a deterministic order.
    bool operator<(const IntSet& other) const { return vals_ < other.vals_; }

    friend std::ostream& operator<<(std::ostream& os, const IntSet& s) {
        os << '{';
        for (std::size_t i = 0; i < s.vals_.size(); ++i) {
            if (i > 0) os << ',';
            os << s.vals_[i];
        }
        return os << '}';
    }

private:
    void normalize() {
        std::sort(vals_.begin(), vals_.end());
        vals_.erase(std::unique(vals_.begin(), vals_.end()), vals_.end());
    }

    std::vector<std::int64_t> vals_;
};

} // namespace viewprop
