#include "viewprop/propagator.hpp"

#include "viewprop/errors.hpp"

namespace viewprop {

const char* level_name(CompletenessLevel l) {
    switch (l) {
        case CompletenessLevel::Domain: return "domain";
        case CompletenessLevel::BoundsD: return "boundsD";
        case CompletenessLevel::BoundsZ: return "boundsZ";
        case CompletenessLevel::BoundsR: return "boundsR";
        case CompletenessLevel::Weak: return "weak";
    }
    return "?";
}

const char* status_name(PropagatorStatus s) {
    switch (s) {
        case PropagatorStatus::Failed: return "Failed";
        case PropagatorStatus::Fixpoint: return "Fixpoint";
        case PropagatorStatus::Progress: return "Progress";
        case PropagatorStatus::Subsumed: return "Subsumed";
    }
    return "?";
}

namespace {

class EventSetOverride : public Propagator {
public:
    EventSetOverride(PropagatorPtr p, EventSet es) : p_(std::move(p)), es_(std::move(es)) {}

    const std::vector<VarId>& vars() const override { return p_->vars(); }
    const EventSet& event_set() const override { return es_; }
    bool idempotent() const override { return p_->idempotent(); }
    std::string name() const override { return p_->name(); }
    CompletenessLevel declared_level() const override { return p_->declared_level(); }
    PropagatorStatus propagate(DomainStore& d) const override { return p_->propagate(d); }
    bool relax_box(std::vector<RatInterval>& box) const override {
        return p_->relax_box(box);
    }

private:
    PropagatorPtr p_;
    EventSet es_;
};

class LevelOverride : public Propagator {
public:
    LevelOverride(PropagatorPtr p, CompletenessLevel level)
        : p_(std::move(p)), level_(level) {}

    const std::vector<VarId>& vars() const override { return p_->vars(); }
    const EventSet& event_set() const override { return p_->event_set(); }
    bool idempotent() const override { return p_->idempotent(); }
    std::string name() const override { return p_->name(); }
    CompletenessLevel declared_level() const override { return level_; }
    PropagatorStatus propagate(DomainStore& d) const override { return p_->propagate(d); }
    bool relax_box(std::vector<RatInterval>& box) const override {
        return p_->relax_box(box);
    }

private:
    PropagatorPtr p_;
    CompletenessLevel level_;
};

} // namespace

PropagatorPtr with_event_set(PropagatorPtr p, EventSet es) {
    return std::make_shared<EventSetOverride>(std::move(p), std::move(es));
}

PropagatorPtr with_declared_level(PropagatorPtr p, CompletenessLevel level) {
    if (level_at_least(level, p->declared_level()) && level != p->declared_level())
        throw UsageError("with_declared_level: cannot strengthen a declaration");
    return std::make_shared<LevelOverride>(std::move(p), level);
}

} // namespace viewprop
