#include "viewprop/derive.hpp"

#include <algorithm>
#include <sstream>

#include "viewprop/errors.hpp"

namespace viewprop {

EventSet translate_events(const EventSet& base_es, const std::vector<VarId>& base_vars,
                          const ViewFamily& family) {
    EventSet out;
    for (std::size_t j = 0; j < family.size(); ++j) {
        const auto& slot = family.slot(j);
        if (slot.index() == 1) continue; // constants produce no events
        const auto& b = std::get<ViewFamily::Binding>(slot);
        std::uint8_t mask = base_es.mask_for(base_vars[j].index);
        if (mask == 0) continue;
        std::uint8_t t = mask & ev::fix;
        std::uint8_t rest = mask & ~ev::fix;
        if (rest != 0) {
            switch (b.view.monotonicity()) {
                case Monotonicity::Increasing:
                    t |= rest;
                    break;
                case Monotonicity::Decreasing: {
                    std::uint8_t swapped = rest & ev::dmc;
                    if (rest & ev::lbc) swapped |= ev::ubc;
                    if (rest & ev::ubc) swapped |= ev::lbc;
                    t |= swapped;
                    break;
                }
                case Monotonicity::None:
                    t |= ev::dmc;
                    break;
            }
        }
        out.add(b.var, t);
    }
    return out;
}

CompletenessLevel table1_expected(CompletenessLevel base, ViewClass family) {
    if (base == CompletenessLevel::Domain) return CompletenessLevel::Domain;
    if (base == CompletenessLevel::Weak) return CompletenessLevel::Weak;
    switch (family) {
        case ViewClass::IntervalBijective:
            return base;
        case ViewClass::IntervalInjective:
            return base == CompletenessLevel::BoundsZ ? CompletenessLevel::BoundsR : base;
        case ViewClass::Arbitrary:
            return CompletenessLevel::Weak;
    }
    return CompletenessLevel::Weak;
}

namespace {

void check_family(const Propagator& base, const ViewFamily& family) {
    const auto& bv = base.vars();
    if (family.size() != bv.size())
        throw UsageError("derive: family arity does not match the base propagator");
    family.validate();
    for (std::size_t j = 0; j < family.size(); ++j) {
        const auto& slot = family.slot(j);
        if (slot.index() == 1) {
            const Value& c = std::get<Value>(slot);
            Sort got = c.index() == 0 ? Sort::Int : Sort::Set;
            bool ok = (bv[j].sort == Sort::Set) ? got == Sort::Set : got == Sort::Int;
            if (!ok) throw UsageError("derive: constant sort mismatch");
        } else {
            const auto& b = std::get<ViewFamily::Binding>(slot);
            if (b.view.source_sort() != b.var.sort)
                throw UsageError("derive: view source sort does not match variable");
            if (b.view.target_sort() != bv[j].sort)
                throw UsageError("derive: view target sort does not match base parameter");
        }
    }
    std::vector<std::uint32_t> seen;
    for (VarId v : bv) {
        if (std::find(seen.begin(), seen.end(), v.index) != seen.end())
            throw UsageError("derive: base parameter positions must be distinct");
        seen.push_back(v.index);
    }
}

ViewFamily flatten(const DerivedPropagator& inner, const ViewFamily& outer) {
    // ψ̂(φ̂(p)) = (φ∘ψ)^(p): outer views feed the inner ones.
    const auto& iv = inner.vars();
    ViewFamily flat;
    for (std::size_t j = 0; j < inner.family().size(); ++j) {
        const auto& slot = inner.family().slot(j);
        if (slot.index() == 1) {
            flat.bind_constant(std::get<Value>(slot));
            continue;
        }
        const auto& b = std::get<ViewFamily::Binding>(slot);
        std::size_t t = std::find(iv.begin(), iv.end(), b.var) - iv.begin();
        const auto& outer_slot = outer.slot(t);
        if (outer_slot.index() == 1) {
            flat.bind_constant(b.view.map_value(std::get<Value>(outer_slot)));
        } else {
            const auto& ob = std::get<ViewFamily::Binding>(outer_slot);
            flat.bind(ob.var, compose(b.view, ob.view));
        }
    }
    return flat;
}

} // namespace

DerivedPropagator::DerivedPropagator(PropagatorPtr base, ViewFamily family)
    : base_(std::move(base)), family_(std::move(family)) {
    check_family(*base_, family_);
    for (const auto& slot : family_.slots())
        if (slot.index() == 0) vars_.push_back(std::get<ViewFamily::Binding>(slot).var);
    es_ = translate_events(base_->event_set(), base_->vars(), family_);
    // Constant positions may violate |φ⁻(d)| = |d| at the application point,
    // so the inherited flag is dropped conservatively.
    idempotent_ = base_->idempotent() && !family_.has_constants();
    level_ = table1_expected(base_->declared_level(), family_.classification());
}

std::string DerivedPropagator::name() const {
    std::ostringstream os;
    os << base_->name() << "@[";
    for (std::size_t j = 0; j < family_.size(); ++j) {
        if (j > 0) os << ',';
        const auto& slot = family_.slot(j);
        if (slot.index() == 1) {
            os << "const " << std::get<Value>(slot);
        } else {
            os << std::get<ViewFamily::Binding>(slot).view.name();
        }
    }
    os << ']';
    return os.str();
}

PropagatorStatus DerivedPropagator::propagate(DomainStore& d) const {
    const auto& bv = base_->vars();

    DomainStore img(d.int_lo(), d.int_hi(), d.set_universe());
    for (std::size_t j = 0; j < family_.size(); ++j) {
        const auto& slot = family_.slot(j);
        if (slot.index() == 1) {
            img.put(bv[j], dom_singleton_of(bv[j].sort, std::get<Value>(slot)));
        } else {
            const auto& b = std::get<ViewFamily::Binding>(slot);
            img.put(bv[j], b.view.image(d.at(b.var), d));
        }
    }

    PropagatorStatus status = base_->propagate(img);

    if (status == PropagatorStatus::Failed || img.failed()) {
        // φ⁻ of the empty constraint: every position becomes empty. This also
        // realizes failure preservation for constant pseudo-variables.
        for (VarId v : vars_) {
            switch (v.sort) {
                case Sort::Int: d.assign(v, IntDomain::empty()); break;
                case Sort::Bool: d.assign(v, BoolDomain::empty()); break;
                case Sort::Set: d.assign(v, SetDomain::failed()); break;
            }
        }
        d.mark_failed();
        return PropagatorStatus::Failed;
    }

    bool lossless = true;
    bool changed = false;
    for (std::size_t j = 0; j < family_.size(); ++j) {
        const auto& slot = family_.slot(j);
        if (slot.index() == 1) continue;
        const auto& b = std::get<ViewFamily::Binding>(slot);
        VariableDomain nd = b.view.preimage(img.at(bv[j]));
        if (!dom_subset(nd, d.at(b.var)))
            throw ContractViolation("base propagator expanded through view " + b.view.name());
        if (dom_size(nd) != dom_size(img.at(bv[j]))) lossless = false;
        if (!dom_equal(nd, d.at(b.var))) changed = true;
        d.assign(b.var, nd);
    }
    if (d.failed()) return PropagatorStatus::Failed;

    switch (status) {
        case PropagatorStatus::Subsumed:
            return PropagatorStatus::Subsumed;
        case PropagatorStatus::Fixpoint:
            // A lossy preimage re-images to a strictly smaller store, so the
            // base's fixpoint claim does not carry over.
            return (lossless || !changed) ? PropagatorStatus::Fixpoint
                                          : PropagatorStatus::Progress;
        default:
            return PropagatorStatus::Progress;
    }
}

bool DerivedPropagator::relax_box(std::vector<RatInterval>& box) const {
    if (box.size() != vars_.size()) throw UsageError("relax_box: box arity mismatch");
    const auto& bv = base_->vars();
    std::vector<RatInterval> base_box(bv.size());
    std::vector<std::pair<Rat, Rat>> coeffs(bv.size(), {Rat(1), Rat(0)});

    std::size_t k = 0;
    for (std::size_t j = 0; j < family_.size(); ++j) {
        const auto& slot = family_.slot(j);
        if (slot.index() == 1) {
            const Value& c = std::get<Value>(slot);
            if (c.index() != 0) return false; // set constants are not relaxable
            Rat x(std::get<0>(c));
            base_box[j] = {x, x};
        } else {
            const auto& b = std::get<ViewFamily::Binding>(slot);
            auto aff = b.view.affine();
            if (!aff) return false;
            coeffs[j] = *aff;
            base_box[j] = affine_image(box[k], aff->first, aff->second);
            ++k;
        }
    }

    if (!base_->relax_box(base_box)) return false;

    bool infeasible = false;
    for (const RatInterval& i : base_box)
        if (i.empty()) infeasible = true;

    k = 0;
    for (std::size_t j = 0; j < family_.size(); ++j) {
        if (family_.slot(j).index() == 1) continue;
        if (infeasible) {
            box[k] = {Rat(1), Rat(0)};
        } else {
            box[k] = affine_preimage(base_box[j], coeffs[j].first, coeffs[j].second);
        }
        ++k;
    }
    return true;
}

PropagatorPtr derive(PropagatorPtr base, ViewFamily family) {
    if (auto inner = std::dynamic_pointer_cast<const DerivedPropagator>(base)) {
        if (family.size() != inner->vars().size())
            throw UsageError("derive: family arity does not match the base propagator");
        family.validate();
        ViewFamily flat = flatten(*inner, family);
        return std::make_shared<DerivedPropagator>(inner->base_ptr(), std::move(flat));
    }
    return std::make_shared<DerivedPropagator>(std::move(base), std::move(family));
}

} // namespace viewprop
