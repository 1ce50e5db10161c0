#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <variant>

#include "viewprop/intset.hpp"

namespace viewprop {

enum class Sort : std::uint8_t { Int, Bool, Set };

inline const char* sort_name(Sort s) {
    switch (s) {
        case Sort::Int: return "int";
        case Sort::Bool: return "bool";
        case Sort::Set: return "set";
    }
    return "?";
}

// Identifies a variable in a DomainStore. The sort is part of the identity:
// it is fixed for the variable's lifetime.
struct VarId {
    std::uint32_t index = 0;
    Sort sort = Sort::Int;

    bool operator==(const VarId&) const = default;
    auto operator<=>(const VarId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, VarId v) {
    return os << sort_name(v.sort) << '#' << v.index;
}

// A single value: integers and Booleans (0/1) share the integer alternative.
using Value = std::variant<std::int64_t, IntSet>;

inline bool value_less(const Value& a, const Value& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (a.index() == 0) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
}

inline std::ostream& operator<<(std::ostream& os, const Value& v) {
    if (v.index() == 0) return os << std::get<0>(v);
    return os << std::get<1>(v);
}

} // namespace viewprop
