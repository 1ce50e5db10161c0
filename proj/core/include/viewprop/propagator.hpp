#pragma once

#include <memory>
#include <string>
#include <vector>

#include "viewprop/event.hpp"
#include "viewprop/rational.hpp"
#include "viewprop/store.hpp"

namespace viewprop {

// Propagation strength, ordered Domain > BoundsD > BoundsZ > BoundsR > Weak:
// a propagator at one level passes every weaker check.
enum class CompletenessLevel : std::uint8_t { Domain, BoundsD, BoundsZ, BoundsR, Weak };

const char* level_name(CompletenessLevel l);

// True iff `a` is at least as strong as `b`.
inline bool level_at_least(CompletenessLevel a, CompletenessLevel b) {
    return static_cast<std::uint8_t>(a) <= static_cast<std::uint8_t>(b);
}

enum class PropagatorStatus : std::uint8_t {
    Failed,   // produced an empty variable domain
    Fixpoint, // result is a fixpoint of this propagator
    Progress, // contracted, fixpoint not known
    Subsumed, // no stronger store can ever be contracted (may under-report)
};

const char* status_name(PropagatorStatus s);

/*
 * The propagator contract: a contracting, monotone transformer on domain
 * stores. propagate() may touch only the declared variables, and its result
 * must be a subset of the input there; the engine enforces this and treats
 * violations as hard errors.
 */
class Propagator {
public:
    virtual ~Propagator() = default;

    virtual const std::vector<VarId>& vars() const = 0;
    virtual const EventSet& event_set() const = 0;
    virtual bool idempotent() const { return false; }
    virtual std::string name() const = 0;
    virtual CompletenessLevel declared_level() const { return CompletenessLevel::Weak; }

    virtual PropagatorStatus propagate(DomainStore& d) const = 0;

    // Tightens `box` (one interval per parameter position) to the exact hull
    // of the real-relaxed constraint inside it. Returns false when the
    // constraint has no real relaxation; an empty interval signals
    // infeasibility. Only the arithmetic catalog entries support this.
    virtual bool relax_box(std::vector<RatInterval>& box) const {
        (void)box;
        return false;
    }
};

using PropagatorPtr = std::shared_ptr<const Propagator>;

// Common storage for catalog propagators.
class SimplePropagator : public Propagator {
public:
    SimplePropagator(std::string name, std::vector<VarId> vars, EventSet es,
                     CompletenessLevel level, bool idem)
        : name_(std::move(name)), vars_(std::move(vars)), es_(std::move(es)),
          level_(level), idem_(idem) {}

    const std::vector<VarId>& vars() const override { return vars_; }
    const EventSet& event_set() const override { return es_; }
    bool idempotent() const override { return idem_; }
    std::string name() const override { return name_; }
    CompletenessLevel declared_level() const override { return level_; }

private:
    std::string name_;
    std::vector<VarId> vars_;
    EventSet es_;
    CompletenessLevel level_;
    bool idem_;
};

// Wrapper overriding the declared event set (the event-set checker probes
// deliberately wrong sets with this).
PropagatorPtr with_event_set(PropagatorPtr p, EventSet es);

// Wrapper downgrading the declared completeness level; UsageError if `level`
// is stronger than the wrapped declaration.
PropagatorPtr with_declared_level(PropagatorPtr p, CompletenessLevel level);

} // namespace viewprop
