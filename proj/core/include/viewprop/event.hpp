#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "viewprop/store.hpp"

namespace viewprop {

// Domain-change events, used to schedule propagators.
namespace ev {
inline constexpr std::uint8_t fix = 1; // domain became a singleton
inline constexpr std::uint8_t lbc = 2; // minimum changed (set sort: lower bound grew)
inline constexpr std::uint8_t ubc = 4; // maximum changed (set sort: upper bound shrank)
inline constexpr std::uint8_t dmc = 8; // any change
inline constexpr std::uint8_t any = fix | lbc | ubc | dmc;
} // namespace ev

struct Event {
    std::uint8_t kind; // one of the ev:: bits
    VarId var;
    bool operator==(const Event&) const = default;
};

// Per-variable event masks, kept sorted by variable index.
class EventSet {
public:
    EventSet() = default;

    void add(VarId v, std::uint8_t mask);
    std::uint8_t mask_for(std::uint32_t index) const;
    bool intersects(const EventSet& other) const;
    bool empty() const { return items_.empty(); }

    const std::vector<std::pair<std::uint32_t, std::uint8_t>>& items() const {
        return items_;
    }
    std::vector<Event> events(std::span<const VarId> vars) const;

    static EventSet on(std::span<const VarId> vars, std::uint8_t mask);

    bool operator==(const EventSet&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const EventSet& es);

private:
    std::vector<std::pair<std::uint32_t, std::uint8_t>> items_;
};

// Event bits for one variable domain shrinking from `before` to `after`.
std::uint8_t var_change_events(const VariableDomain& before, const VariableDomain& after);

// Events occurring when `before` shrinks to `after`, restricted to `vars`.
// UsageError unless after ⊆ before pointwise on those variables.
EventSet events_between(const DomainStore& before, const DomainStore& after,
                        std::span<const VarId> vars);

// All shared variables.
EventSet events_between(const DomainStore& before, const DomainStore& after);

} // namespace viewprop
