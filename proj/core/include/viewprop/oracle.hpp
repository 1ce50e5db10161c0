#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "viewprop/derive.hpp"
#include "viewprop/propagator.hpp"
#include "viewprop/view.hpp"

namespace viewprop {

// Failed stores compare equal regardless of which domain went empty.
bool store_eq_on(const DomainStore& a, const DomainStore& b, std::span<const VarId> vars);
bool store_leq_on(const DomainStore& a, const DomainStore& b, std::span<const VarId> vars);

namespace oracle {

struct CheckReport {
    std::string name;
    bool verdict = true;
    bool skipped = false;
    std::string skip_reason;
    std::uint64_t instances = 0;
    bool sampled = false; // seeded sample instead of exhaustive enumeration

    struct Counterexample {
        DomainStore store;
        std::string expected;
        std::string actual;
    };
    std::optional<Counterexample> counterexample;

    // `CHECK <name> <PASS|FAIL|SKIP> instances=<n> [witness=<store>]`
    std::string render() const;

    static CheckReport pass(std::string name, std::uint64_t instances, bool sampled = false);
    static CheckReport fail(std::string name, std::uint64_t instances, Counterexample ce);
    static CheckReport skip(std::string name, std::string reason);
};

struct Budget {
    std::uint64_t stores = 2'000'000;  // exhaustive below, seeded sample above
    std::uint64_t samples = 20'000;    // sample size when over budget
    std::uint64_t subsumption = 20'000; // hard cap; subsumption is never sampled
    std::uint64_t seed = 0;
};

// c_p = set of assignments accepted as singleton stores.
ExtensionalConstraint associated_constraint(const Propagator& p, const DomainStore& universe,
                                            std::uint64_t cap = 2'000'000);

// Applies p once to a copy of d.
DomainStore apply_once(const Propagator& p, const DomainStore& d);

// Contraction, monotonicity, and (when flagged) idempotence.
CheckReport check_contract(const Propagator& p, const DomainStore& universe,
                           const Budget& budget = {});

// The level's inclusion for every store over the universe. BoundsR uses the
// propagator's exact rational relaxation and refuses when none exists.
CheckReport check_complete(const Propagator& p, const ExtensionalConstraint& c,
                           CompletenessLevel level, const DomainStore& universe,
                           const Budget& budget = {});

// Derives base with family, computes the expected level per the completeness
// table, and verifies the derived propagator meets it.
CheckReport check_table1(const PropagatorPtr& base, const ViewFamily& family,
                         const DomainStore& universe, const Budget& budget = {});

// dom-injectivity, intersection commutation, and the declared interval
// classification of one view.
std::vector<CheckReport> check_view_lemmas(const View& v, const DomainStore& universe,
                                           std::span<const VarId> vars,
                                           const Budget& budget = {});

// Idempotence inheritance and the subsumption biconditional (brute force over
// all stronger stores; refuses above the subsumption cap).
std::vector<CheckReport> check_idempotence_subsumption(const PropagatorPtr& base,
                                                       const ViewFamily& family,
                                                       const DomainStore& universe,
                                                       const Budget& budget = {});

// Seeded order-scrambling bijection on the universe values: injective but not
// interval injective (classification Arbitrary).
View scramble_view(const IntDomain& universe, std::uint64_t seed);

} // namespace oracle
} // namespace viewprop
