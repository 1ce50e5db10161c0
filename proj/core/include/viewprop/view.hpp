#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "viewprop/rational.hpp"
#include "viewprop/store.hpp"

namespace viewprop {

// How a view interacts with interval hulls; governs completeness inheritance.
enum class ViewClass : std::uint8_t { IntervalBijective, IntervalInjective, Arbitrary };

enum class Monotonicity : std::uint8_t { Increasing, Decreasing, None };

const char* view_class_name(ViewClass c);

/*
 * A per-variable injective value map together with its whole-domain image and
 * preimage transforms. Views are immutable values; the elementwise maps and
 * the domain transforms must agree (tested, not assumed).
 */
class View {
public:
    Sort source_sort() const;
    Sort target_sort() const;
    ViewClass classification() const;
    Monotonicity monotonicity() const;
    std::string name() const;
    bool is_identity() const;

    // Elementwise maps (the oracle's semantics).
    Value map_value(const Value& v) const;
    std::optional<Value> unmap_value(const Value& v) const;

    // Exact whole-domain image; OverflowError if it leaves the target
    // universe of `limits`.
    VariableDomain image(const VariableDomain& d, const DomainStore& limits) const;

    // Exact whole-domain preimage (may be empty).
    VariableDomain preimage(const VariableDomain& d) const;

    // v ↦ a·v + b over rationals, when the view is affine on integers.
    std::optional<std::pair<Rat, Rat>> affine() const;

    struct Impl;
    explicit View(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

private:
    std::shared_ptr<const Impl> impl_;
};

View identity_view(Sort sort = Sort::Int);
View bool_neg_view();
View minus_view();
View offset_view(std::int64_t o);
View scale_view(std::int64_t a); // a = 0 is a UsageError
View set_complement_view(IntSet universe);
View singleton_view();
// Arbitrary injective table over an explicit source universe; the oracle uses
// order-scrambling instances of this to exercise the "arbitrary" column.
View table_view(std::vector<std::pair<std::int64_t, std::int64_t>> pairs);

// map = outer ∘ inner; classification is the weaker of the two and
// monotonicity composes by sign. UsageError on sort mismatch.
View compose(const View& outer, const View& inner);

// Verifies the interval-classification equations exhaustively over all
// subsets of `universe` (elementwise semantics) and returns the strongest
// class that holds. ContractViolation if the view declares a stronger class.
ViewClass classify(const View& v, const IntDomain& universe);

/*
 * Binds each parameter position of a propagator to either a store variable
 * accessed through a view, or a constant pseudo-variable.
 */
class ViewFamily {
public:
    struct Binding {
        VarId var;
        View view;
    };
    using Slot = std::variant<Binding, Value>;

    ViewFamily() = default;

    ViewFamily& bind(VarId var, View view);
    ViewFamily& bind_constant(Value v);

    std::size_t size() const { return slots_.size(); }
    const Slot& slot(std::size_t i) const { return slots_[i]; }
    const std::vector<Slot>& slots() const { return slots_; }

    bool has_constants() const;
    bool all_identity() const;
    // Weakest classification over the bound positions (constants excluded).
    ViewClass classification() const;

    // UsageError if some store variable is bound to two positions.
    void validate() const;

private:
    std::vector<Slot> slots_;
};

// Identity family over the given variables.
ViewFamily identity_family(std::span<const VarId> vars);

} // namespace viewprop
