#include "viewprop/event.hpp"

#include <algorithm>

#include "viewprop/errors.hpp"

namespace viewprop {

void EventSet::add(VarId v, std::uint8_t mask) {
    if (mask == 0) return;
    auto it = std::lower_bound(items_.begin(), items_.end(), v.index,
                               [](const auto& p, std::uint32_t i) { return p.first < i; });
    if (it != items_.end() && it->first == v.index) {
        it->second |= mask;
    } else {
        items_.insert(it, {v.index, mask});
    }
}

std::uint8_t EventSet::mask_for(std::uint32_t index) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), index,
                               [](const auto& p, std::uint32_t i) { return p.first < i; });
    if (it != items_.end() && it->first == index) return it->second;
    return 0;
}

bool EventSet::intersects(const EventSet& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
        if (a->first == b->first) {
            if (a->second & b->second) return true;
            ++a;
            ++b;
        } else if (a->first < b->first) {
            ++a;
        } else {
            ++b;
        }
    }
    return false;
}

std::vector<Event> EventSet::events(std::span<const VarId> vars) const {
    std::vector<Event> out;
    for (VarId v : vars) {
        std::uint8_t m = mask_for(v.index);
        for (std::uint8_t bit : {ev::fix, ev::lbc, ev::ubc, ev::dmc})
            if (m & bit) out.push_back(Event{bit, v});
    }
    return out;
}

EventSet EventSet::on(std::span<const VarId> vars, std::uint8_t mask) {
    EventSet es;
    for (VarId v : vars) es.add(v, mask);
    return es;
}

std::ostream& operator<<(std::ostream& os, const EventSet& es) {
    bool first = true;
    for (const auto& [idx, mask] : es.items_) {
        if (!first) os << ',';
        first = false;
        os << 'x' << idx << ':';
        if (mask & ev::fix) os << 'f';
        if (mask & ev::lbc) os << 'l';
        if (mask & ev::ubc) os << 'u';
        if (mask & ev::dmc) os << 'd';
    }
    return os;
}

std::uint8_t var_change_events(const VariableDomain& before, const VariableDomain& after) {
    if (dom_equal(before, after)) return 0;
    std::uint8_t m = ev::dmc;
    if (dom_is_empty(after)) return m; // failure short-circuits; no bound events
    switch (before.index()) {
        case 0: {
            const auto& b = std::get<IntDomain>(before);
            const auto& a = std::get<IntDomain>(after);
            if (a.min() > b.min()) m |= ev::lbc;
            if (a.max() < b.max()) m |= ev::ubc;
            if (a.is_singleton()) m |= ev::fix;
            break;
        }
        case 1: {
            const auto& b = std::get<BoolDomain>(before);
            const auto& a = std::get<BoolDomain>(after);
            if (a.min() > b.min()) m |= ev::lbc;
            if (a.max() < b.max()) m |= ev::ubc;
            if (a.is_singleton()) m |= ev::fix;
            break;
        }
        default: {
            const auto& b = std::get<SetDomain>(before);
            const auto& a = std::get<SetDomain>(after);
            if (!a.lb().subset_of(b.lb())) m |= ev::lbc; // lower bound grew
            if (!b.ub().subset_of(a.ub())) m |= ev::ubc; // upper bound shrank
            if (a.is_singleton()) m |= ev::fix;
            break;
        }
    }
    return m;
}

EventSet events_between(const DomainStore& before, const DomainStore& after,
                        std::span<const VarId> vars) {
    EventSet es;
    for (VarId v : vars) {
        const VariableDomain& b = before.at(v);
        const VariableDomain& a = after.at(v);
        if (!dom_subset(a, b))
            throw UsageError("events_between: second store is not stronger");
        es.add(v, var_change_events(b, a));
    }
    return es;
}

EventSet events_between(const DomainStore& before, const DomainStore& after) {
    auto vars = before.vars();
    if (vars != after.vars()) throw UsageError("events_between: variable sets differ");
    return events_between(before, after, vars);
}

} // namespace viewprop
