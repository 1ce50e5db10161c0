#pragma once

#include "viewprop/propagator.hpp"
#include "viewprop/view.hpp"

namespace viewprop {

// Safe approximation of the derived event set: fix survives any view, bound
// events follow the view's monotonicity (anti-monotone views swap lbc/ubc,
// untagged views degrade to dmc), constants contribute nothing.
EventSet translate_events(const EventSet& base_es, const std::vector<VarId>& base_vars,
                          const ViewFamily& family);

// Expected completeness of a derived propagator per base level and family
// classification.
CompletenessLevel table1_expected(CompletenessLevel base, ViewClass family);

/*
 * A base propagator wrapped by a view family: observably equal to
 * φ⁻ ∘ p ∘ φ on every store. Each propagation call materializes the image
 * store (constants become pseudo-variables fixed inside the wrapper, never
 * part of the outer store), runs the base once, and pulls the result back
 * through the per-position preimages.
 */
class DerivedPropagator final : public Propagator {
public:
    DerivedPropagator(PropagatorPtr base, ViewFamily family);

    const std::vector<VarId>& vars() const override { return vars_; }
    const EventSet& event_set() const override { return es_; }
    bool idempotent() const override { return idempotent_; }
    std::string name() const override;
    CompletenessLevel declared_level() const override { return level_; }
    PropagatorStatus propagate(DomainStore& d) const override;
    bool relax_box(std::vector<RatInterval>& box) const override;

    const Propagator& base() const { return *base_; }
    PropagatorPtr base_ptr() const { return base_; }
    const ViewFamily& family() const { return family_; }

private:
    PropagatorPtr base_;
    ViewFamily family_;
    std::vector<VarId> vars_; // bound (non-constant) positions, in order
    EventSet es_;
    bool idempotent_;
    CompletenessLevel level_;
};

// Builds φ̂(p). Deriving a derived propagator flattens by view composition,
// so the result always carries exactly one wrapper layer.
PropagatorPtr derive(PropagatorPtr base, ViewFamily family);

} // namespace viewprop
