#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "viewprop/propagator.hpp"

namespace viewprop {

enum class FixpointOutcome : std::uint8_t { Stable, Failed };

struct FixpointStats {
    std::uint64_t executions = 0;
    std::uint64_t events = 0;
};

struct EngineOptions {
    // Subscribe every propagator to every event on its variables instead of
    // its declared event set.
    bool wake_on_any_change = false;
    // Permutes the initial queue; the stable store must not depend on it.
    std::optional<std::uint64_t> shuffle_seed;
};

/*
 * Event-driven fixpoint loop: a single FIFO queue of propagator ids with an
 * already-queued bit. A propagator is enqueued when the events of a change
 * intersect its event set; idempotent propagators are never re-enqueued by
 * their own changes.
 *
 * `alive` (optional, in/out) tracks subsumption across calls: entries set to
 * 0 are never executed again.
 */
FixpointOutcome run_fixpoint(DomainStore& store, const std::vector<PropagatorPtr>& props,
                             FixpointStats* stats = nullptr,
                             std::vector<std::uint8_t>* alive = nullptr,
                             const EngineOptions& opts = {});

struct EventSetCheck {
    bool ok = true;
    std::uint64_t instances = 0;
    // Condition 1 witness: (d, p(d)); condition 2 witness: (fixpoint d, d').
    std::optional<std::pair<DomainStore, DomainStore>> witness;
};

// Verifies both dependency conditions of an event set by exhaustive
// enumeration of stores (and store pairs) over `universe`.
EventSetCheck check_event_set(const Propagator& p, const DomainStore& universe,
                              std::uint64_t cap = 2'000'000);

} // namespace viewprop
