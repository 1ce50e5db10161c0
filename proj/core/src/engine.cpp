#include "viewprop/engine.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "viewprop/enumerate.hpp"
#include "viewprop/errors.hpp"

namespace viewprop {

namespace {

std::vector<VariableDomain> snapshot_vars(const DomainStore& store,
                                          const std::vector<VarId>& vars) {
    std::vector<VariableDomain> out;
    out.reserve(vars.size());
    for (VarId v : vars) out.push_back(store.at(v));
    return out;
}

} // namespace

FixpointOutcome run_fixpoint(DomainStore& store, const std::vector<PropagatorPtr>& props,
                             FixpointStats* stats, std::vector<std::uint8_t>* alive,
                             const EngineOptions& opts) {
    const std::size_t n = props.size();

    std::vector<std::uint8_t> local_alive;
    if (alive == nullptr) {
        local_alive.assign(n, 1);
        alive = &local_alive;
    } else if (alive->size() != n) {
        throw UsageError("run_fixpoint: alive mask size mismatch");
    }

    if (store.failed()) return FixpointOutcome::Failed;

    for (const PropagatorPtr& p : props)
        for (VarId v : p->vars())
            if (!store.has(v)) throw UsageError("run_fixpoint: propagator variable missing");

    // Per-variable subscriber lists.
    std::size_t max_index = 0;
    for (const PropagatorPtr& p : props)
        for (VarId v : p->vars()) max_index = std::max<std::size_t>(max_index, v.index);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> subs(max_index + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (opts.wake_on_any_change) {
            for (VarId v : props[i]->vars())
                subs[v.index].push_back({static_cast<std::uint32_t>(i), ev::any});
        } else {
            for (const auto& [idx, mask] : props[i]->event_set().items())
                if (idx < subs.size())
                    subs[idx].push_back({static_cast<std::uint32_t>(i), mask});
        }
    }

    std::deque<std::uint32_t> queue;
    std::vector<std::uint8_t> queued(n, 0);
    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
    if (opts.shuffle_seed) {
        std::mt19937_64 rng(*opts.shuffle_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    for (std::uint32_t i : order) {
        if ((*alive)[i]) {
            queue.push_back(i);
            queued[i] = 1;
        }
    }

    while (!queue.empty()) {
        std::uint32_t i = queue.front();
        queue.pop_front();
        queued[i] = 0;
        if (!(*alive)[i]) continue;

        const Propagator& p = *props[i];
        const std::vector<VarId>& pv = p.vars();
        std::vector<VariableDomain> before = snapshot_vars(store, pv);

        PropagatorStatus status = p.propagate(store);
        if (stats) stats->executions++;

        if (status == PropagatorStatus::Failed || store.failed())
            return FixpointOutcome::Failed;

        // Contract check plus event computation against the snapshot.
        EventSet occurred;
        for (std::size_t k = 0; k < pv.size(); ++k) {
            const VariableDomain& after = store.at(pv[k]);
            if (!dom_subset(after, before[k])) {
                std::ostringstream os;
                os << "propagator " << p.name() << " expanded variable x" << pv[k].index;
                throw ContractViolation(os.str());
            }
            occurred.add(pv[k], var_change_events(before[k], after));
        }

        if (stats)
            for (const auto& [idx, mask] : occurred.items()) {
                (void)idx;
                stats->events += __builtin_popcount(mask);
            }

        if (status == PropagatorStatus::Subsumed) (*alive)[i] = 0;

        for (const auto& [idx, mask] : occurred.items()) {
            if (idx >= subs.size()) continue;
            for (const auto& [j, submask] : subs[idx]) {
                if ((mask & submask) == 0) continue;
                if (j == i) {
                    // Self-wakeup: only non-idempotent propagators that did
                    // not reach their own fixpoint need it.
                    if (status != PropagatorStatus::Progress || p.idempotent()) continue;
                }
                if (!(*alive)[j] || queued[j]) continue;
                queue.push_back(j);
                queued[j] = 1;
            }
        }
    }
    return FixpointOutcome::Stable;
}

EventSetCheck check_event_set(const Propagator& p, const DomainStore& universe,
                              std::uint64_t cap) {
    EventSetCheck result;
    const std::vector<VarId>& vars = p.vars();
    const EventSet& es = p.event_set();

    auto apply = [&](const DomainStore& d) {
        DomainStore out = d;
        p.propagate(out);
        return out;
    };

    // Condition 1: a call that did not reach a fixpoint must have produced a
    // triggering event.
    bool failed = false;
    for_each_substore(universe, vars, [&](const DomainStore& d) {
        if (failed) return;
        result.instances++;
        DomainStore pd = apply(d);
        if (pd.failed()) return;
        DomainStore ppd = apply(pd);
        bool at_fixpoint = !ppd.failed();
        if (at_fixpoint)
            for (VarId v : vars)
                if (!dom_equal(pd.at(v), ppd.at(v))) { at_fixpoint = false; break; }
        if (!at_fixpoint && !events_between(d, pd, vars).intersects(es)) {
            result.ok = false;
            result.witness = {d, pd};
            failed = true;
        }
    }, cap);
    if (!result.ok) return result;

    // Condition 2: shrinking a fixpoint store so that the fixpoint is
    // destroyed must produce a triggering event.
    for_each_substore(universe, vars, [&](const DomainStore& d) {
        if (failed) return;
        DomainStore pd = apply(d);
        if (pd.failed()) return;
        for (VarId v : vars)
            if (!dom_equal(pd.at(v), d.at(v))) return; // not a fixpoint of p
        for_each_substore(d, vars, [&](const DomainStore& d2) {
            if (failed) return;
            result.instances++;
            DomainStore pd2 = apply(d2);
            bool still_fix = !pd2.failed();
            if (still_fix)
                for (VarId v : vars)
                    if (!dom_equal(pd2.at(v), d2.at(v))) { still_fix = false; break; }
            if (!still_fix && !events_between(d, d2, vars).intersects(es)) {
                result.ok = false;
                result.witness = {d, d2};
                failed = true;
            }
        }, cap);
    }, cap);

    return result;
}

} // namespace viewprop
