#include "viewprop/propagators.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "viewprop/errors.hpp"

namespace viewprop {

namespace {

constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;
constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t div_floor(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t div_ceil(std::int64_t a, std::int64_t b) { return -div_floor(-a, b); }

void require_sort(VarId v, Sort s, const char* who) {
    if (v.sort != s) throw UsageError(std::string(who) + ": wrong variable sort");
}

// Unsatisfiability detected without an empty domain in sight: the associated
// constraint restricted to d is empty, so dom(c ∩ d) maps every variable to
// the empty domain.
void fail_all(DomainStore& d, const std::vector<VarId>& vars) {
    for (VarId v : vars) {
        switch (v.sort) {
            case Sort::Int: d.assign(v, IntDomain::empty()); break;
            case Sort::Bool: d.assign(v, BoolDomain::empty()); break;
            case Sort::Set: d.assign(v, SetDomain::failed()); break;
        }
    }
}

const IntDomain& idom(const DomainStore& d, VarId v) {
    return std::get<IntDomain>(d.at(v));
}

const BoolDomain& bdom(const DomainStore& d, VarId v) {
    return std::get<BoolDomain>(d.at(v));
}

const SetDomain& sdom(const DomainStore& d, VarId v) {
    return std::get<SetDomain>(d.at(v));
}

// Support filtering to dom(c ∩ d) for small extensional-style constraints:
// keeps each value that extends to a full tuple accepted by `sat`.
class DomFilterPropagator : public SimplePropagator {
public:
    using Pred = std::function<bool(const std::vector<std::int64_t>&)>;

    DomFilterPropagator(std::string name, std::vector<VarId> vars, EventSet es, Pred sat)
        : SimplePropagator(std::move(name), std::move(vars), std::move(es),
                           CompletenessLevel::Domain, false),
          sat_(std::move(sat)) {}

    PropagatorStatus propagate(DomainStore& d) const override {
        const auto& vs = vars();
        std::vector<std::vector<std::int64_t>> vals;
        for (VarId v : vs)
            vals.push_back(v.sort == Sort::Bool ? bdom(d, v).values() : idom(d, v).values());

        bool changed = false;
        std::vector<std::vector<std::int64_t>> kept(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::int64_t v : vals[i]) {
                if (has_support(vals, i, v))
                    kept[i].push_back(v);
                else
                    changed = true;
            }
            if (kept[i].empty()) {
                fail_all(d, vs);
                return PropagatorStatus::Failed;
            }
        }
        if (changed) {
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (vs[i].sort == Sort::Bool) {
                    std::uint8_t m = 0;
                    for (std::int64_t v : kept[i]) m |= (v == 0) ? 1 : 2;
                    d.assign(vs[i], BoolDomain::from_mask(m));
                } else {
                    d.assign(vs[i], IntDomain::from_values(kept[i]));
                }
            }
        }

        bool all_fixed = true;
        for (std::size_t i = 0; i < vs.size(); ++i) all_fixed &= kept[i].size() == 1;
        return all_fixed ? PropagatorStatus::Subsumed : PropagatorStatus::Fixpoint;
    }

private:
    bool has_support(const std::vector<std::vector<std::int64_t>>& vals, std::size_t fixed,
                     std::int64_t fv) const {
        std::vector<std::int64_t> a(vals.size());
        a[fixed] = fv;
        std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
            if (i == vals.size()) return sat_(a);
            if (i == fixed) return rec(i + 1);
            for (std::int64_t v : vals[i]) {
                a[i] = v;
                if (rec(i + 1)) return true;
            }
            return false;
        };
        return rec(0);
    }

    Pred sat_;
};

/*
 * max(x,y) = z, bounds(Z) complete
 */
class MaxTernary : public SimplePropagator {
public:
    MaxTernary(VarId x, VarId y, VarId z)
        : SimplePropagator("max", {x, y, z},
                           EventSet::on(std::vector<VarId>{x, y, z}, ev::lbc | ev::ubc),
                           CompletenessLevel::BoundsZ, false) {}

    PropagatorStatus propagate(DomainStore& d) const override {
        VarId x = vars()[0], y = vars()[1], z = vars()[2];
        while (true) {
            const IntDomain &dx = idom(d, x), &dy = idom(d, y), &dz = idom(d, z);
            IntDomain nz = dz.intersect_range(std::max(dx.min(), dy.min()),
                                              std::max(dx.max(), dy.max()));
            if (nz.is_empty()) {
                d.assign(z, nz);
                return PropagatorStatus::Failed;
            }
            IntDomain nx = dx.intersect_range(kNegInf, nz.max());
            IntDomain ny = dy.intersect_range(kNegInf, nz.max());
            // Only one side can reach z when the other tops out below it.
            if (!ny.is_empty() && ny.max() < nz.min())
                nx = nx.intersect_range(nz.min(), kPosInf);
            if (!nx.is_empty() && !ny.is_empty() && nx.max() < nz.min())
                ny = ny.intersect_range(nz.min(), kPosInf);
            if (nx.is_empty() || ny.is_empty()) {
                d.assign(x, nx);
                d.assign(y, ny);
                return PropagatorStatus::Failed;
            }
            bool step = !(nx == dx && ny == dy && nz == dz);
            d.assign(x, nx);
            d.assign(y, ny);
            d.assign(z, nz);
            if (!step) break;
        }
        if (idom(d, x).is_singleton() && idom(d, y).is_singleton() &&
            idom(d, z).is_singleton())
            return PropagatorStatus::Subsumed;
        return PropagatorStatus::Fixpoint;
    }
};

/*
 * x1 + ... + xn = c, bounds(Z) complete (one interval round per call)
 */
class LinearEqUnit : public SimplePropagator {
public:
    LinearEqUnit(std::vector<VarId> xs, EventSet es, std::int64_t c)
        : SimplePropagator("linear_eq", std::move(xs), std::move(es),
                           CompletenessLevel::BoundsZ, false),
          c_(c) {}

    PropagatorStatus propagate(DomainStore& d) const override {
        const auto& vs = vars();
        std::int64_t sum_min = 0, sum_max = 0;
        std::vector<std::int64_t> mins(vs.size()), maxs(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const IntDomain& di = idom(d, vs[i]);
            mins[i] = di.min();
            maxs[i] = di.max();
            sum_min += mins[i];
            sum_max += maxs[i];
        }
        if (c_ < sum_min || c_ > sum_max) {
            fail_all(d, vs);
            return PropagatorStatus::Failed;
        }
        bool changed = false;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            IntDomain ni = idom(d, vs[i]).intersect_range(c_ - (sum_max - maxs[i]),
                                                          c_ - (sum_min - mins[i]));
            if (!(ni == idom(d, vs[i]))) {
                changed = true;
                d.assign(vs[i], ni);
                if (ni.is_empty()) return PropagatorStatus::Failed;
            }
        }
        if (!changed) {
            if (sum_min == sum_max && sum_min == c_) return PropagatorStatus::Subsumed;
            return PropagatorStatus::Fixpoint;
        }
        return PropagatorStatus::Progress;
    }

    bool relax_box(std::vector<RatInterval>& box) const override {
        if (box.size() != vars().size()) throw UsageError("relax_box: box arity mismatch");
        Rat sum_lo(0), sum_hi(0);
        for (const RatInterval& i : box) {
            if (i.empty()) return true; // already infeasible
            sum_lo += i.lo;
            sum_hi += i.hi;
        }
        Rat c(c_);
        if (c < sum_lo || c > sum_hi) {
            for (RatInterval& i : box) i = {Rat(1), Rat(0)};
            return true;
        }
        std::vector<RatInterval> out(box.size());
        for (std::size_t i = 0; i < box.size(); ++i) {
            Rat lo = c - (sum_hi - box[i].hi);
            Rat hi = c - (sum_lo - box[i].lo);
            out[i] = {std::max(lo, box[i].lo), std::min(hi, box[i].hi)};
        }
        box = std::move(out);
        return true;
    }

private:
    std::int64_t c_;
};

/*
 * x1 + ... + xn != c, domain complete
 */
class LinearNeqUnit : public SimplePropagator {
public:
    LinearNeqUnit(std::vector<VarId> xs, EventSet es, std::int64_t c)
        : SimplePropagator("linear_neq", std::move(xs), std::move(es),
                           CompletenessLevel::Domain, false),
          c_(c) {}

    PropagatorStatus propagate(DomainStore& d) const override {
        const auto& vs = vars();
        std::int64_t fixed_sum = 0;
        int unfixed = -1;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const IntDomain& di = idom(d, vs[i]);
            if (di.is_singleton()) {
                fixed_sum += di.min();
            } else if (unfixed >= 0) {
                return PropagatorStatus::Fixpoint; // two free vars: nothing to prune
            } else {
                unfixed = static_cast<int>(i);
            }
        }
        if (unfixed < 0) {
            if (fixed_sum == c_) {
                fail_all(d, vs);
                return PropagatorStatus::Failed;
            }
            return PropagatorStatus::Subsumed;
        }
        IntDomain ni = idom(d, vs[unfixed]).remove(c_ - fixed_sum);
        d.assign(vs[unfixed], ni);
        if (ni.is_empty()) return PropagatorStatus::Failed;
        return PropagatorStatus::Subsumed;
    }

private:
    std::int64_t c_;
};

/*
 * Boolean cardinality sum xs >= c, watched-style counting
 */
class BoolCardGeq : public SimplePropagator {
public:
    BoolCardGeq(std::vector<VarId> xs, EventSet es, std::int64_t c)
        : SimplePropagator("bool_card_geq", std::move(xs), std::move(es),
                           CompletenessLevel::Domain, false),
          c_(c) {}

    PropagatorStatus propagate(DomainStore& d) const override {
        const auto& vs = vars();
        if (c_ <= 0) return PropagatorStatus::Subsumed;
        // The first c+1 possible literals act as watches; only when fewer
        // exist is any pruning or failure possible.
        std::int64_t possible = 0, ones = 0;
        for (VarId v : vs) {
            const BoolDomain& b = bdom(d, v);
            if (b.contains(1)) {
                ++possible;
                if (b.is_singleton()) ++ones;
            }
        }
        if (ones >= c_) return PropagatorStatus::Subsumed;
        if (possible < c_) {
            fail_all(d, vs);
            return PropagatorStatus::Failed;
        }
        if (possible == c_) {
            for (VarId v : vs) {
                const BoolDomain& b = bdom(d, v);
                if (b.contains(1) && !b.is_singleton()) d.assign(v, BoolDomain::of(true));
            }
            return PropagatorStatus::Subsumed;
        }
        return PropagatorStatus::Fixpoint;
    }

private:
    std::int64_t c_;
};

/*
 * x1 v ... v xn = y, domain complete
 */
class BoolOrN : public SimplePropagator {
public:
    BoolOrN(std::vector<VarId> all, EventSet es)
        : SimplePropagator("bool_or", std::move(all), std::move(es),
                           CompletenessLevel::Domain, false) {}

    PropagatorStatus propagate(DomainStore& d) const override {
        const auto& vs = vars();
        VarId y = vs.back();
        std::size_t n = vs.size() - 1;

        std::int64_t possible = 0;
        bool some_one = false;
        for (std::size_t i = 0; i < n; ++i) {
            const BoolDomain& b = bdom(d, vs[i]);
            if (b.contains(1)) {
                ++possible;
                if (b.is_singleton()) some_one = true;
            }
        }

        BoolDomain dy = bdom(d, y);
        if (some_one && dy.contains(0)) {
            dy = dy.intersect(BoolDomain::of(true));
            d.assign(y, dy);
            if (dy.is_empty()) return PropagatorStatus::Failed;
        }
        if (possible == 0 && dy.contains(1)) {
            dy = dy.intersect(BoolDomain::of(false));
            d.assign(y, dy);
            if (dy.is_empty()) return PropagatorStatus::Failed;
        }

        if (dy == BoolDomain::of(false)) {
            for (std::size_t i = 0; i < n; ++i) {
                BoolDomain nb = bdom(d, vs[i]).intersect(BoolDomain::of(false));
                d.assign(vs[i], nb);
                if (nb.is_empty()) return PropagatorStatus::Failed;
            }
            return PropagatorStatus::Subsumed;
        }
        if (dy == BoolDomain::of(true)) {
            if (some_one) return PropagatorStatus::Subsumed;
            if (possible == 0) {
                fail_all(d, vs);
                return PropagatorStatus::Failed;
            }
            if (possible == 1) {
                for (std::size_t i = 0; i < n; ++i) {
                    const BoolDomain& b = bdom(d, vs[i]);
                    if (b.contains(1)) {
                        d.assign(vs[i], BoolDomain::of(true));
                        return PropagatorStatus::Subsumed;
                    }
                }
            }
        }
        return PropagatorStatus::Fixpoint;
    }
};

/*
 * distinct, weak variant: fixed-value elimination with cascading
 */
class DistinctWeak : public SimplePropagator {
public:
    DistinctWeak(std::vector<VarId> xs, EventSet es)
        : SimplePropagator("distinct", std::move(xs), std::move(es),
                           CompletenessLevel::Weak, false) {}

    PropagatorStatus propagate(DomainStore& d) const override {
        const auto& vs = vars();
        std::vector<std::int64_t> fixed;
        std::vector<std::uint8_t> done(vs.size(), 0);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const IntDomain& di = idom(d, vs[i]);
            if (di.is_singleton()) {
                fixed.push_back(di.min());
                done[i] = 1;
            }
        }
        {
            std::vector<std::int64_t> sorted = fixed;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                fail_all(d, vs);
                return PropagatorStatus::Failed;
            }
        }
        std::size_t next = 0;
        while (next < fixed.size()) {
            std::int64_t v = fixed[next++];
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (done[i]) continue;
                IntDomain ni = idom(d, vs[i]).remove(v);
                if (ni == idom(d, vs[i])) continue;
                d.assign(vs[i], ni);
                if (ni.is_empty()) return PropagatorStatus::Failed;
                if (ni.is_singleton()) {
                    std::int64_t w = ni.min();
                    if (std::find(fixed.begin(), fixed.end(), w) != fixed.end()) {
                        fail_all(d, vs);
                        return PropagatorStatus::Failed;
                    }
                    fixed.push_back(w);
                    done[i] = 1;
                }
            }
        }
        bool all_fixed = true;
        for (VarId v : vs) all_fixed &= idom(d, v).is_singleton();
        return all_fixed ? PropagatorStatus::Subsumed : PropagatorStatus::Fixpoint;
    }
};

/*
 * element(<c1..cn>, x) = y, domain complete
 */
class ElementVals : public SimplePropagator {
public:
    ElementVals(std::vector<std::int64_t> cs, VarId x, VarId y)
        : SimplePropagator("element", {x, y},
                           EventSet::on(std::vector<VarId>{x, y}, ev::dmc),
                           CompletenessLevel::Domain, false),
          cs_(std::move(cs)) {}

    PropagatorStatus propagate(DomainStore& d) const override {
        VarId x = vars()[0], y = vars()[1];
        const IntDomain& dx = idom(d, x);
        const IntDomain& dy = idom(d, y);

        std::vector<std::int64_t> xi, yv;
        dx.for_each([&](std::int64_t i) {
            if (i >= 1 && i <= static_cast<std::int64_t>(cs_.size()) &&
                dy.contains(cs_[i - 1]))
                xi.push_back(i);
        });
        for (std::int64_t i : xi) yv.push_back(cs_[i - 1]);

        IntDomain nx = IntDomain::from_values(xi);
        IntDomain ny = IntDomain::from_values(yv);
        d.assign(x, nx);
        d.assign(y, ny);
        if (nx.is_empty() || ny.is_empty()) return PropagatorStatus::Failed;
        if (nx.is_singleton() && ny.is_singleton()) return PropagatorStatus::Subsumed;
        return PropagatorStatus::Fixpoint;
    }

private:
    std::vector<std::int64_t> cs_;
};

/*
 * x * y = z over strictly positive domains, bounds(R) complete, idempotent
 */
class MultPPP : public SimplePropagator {
public:
    MultPPP(VarId x, VarId y, VarId z)
        : SimplePropagator("mult_ppp", {x, y, z},
                           EventSet::on(std::vector<VarId>{x, y, z}, ev::lbc | ev::ubc),
                           CompletenessLevel::BoundsR, true) {}

    PropagatorStatus propagate(DomainStore& d) const override {
        const auto& vs = vars();
        for (VarId v : vs)
            if (idom(d, v).min() <= 0)
                throw UsageError("mult_ppp: domains must be strictly positive");
        VarId x = vs[0], y = vs[1], z = vs[2];
        while (true) {
            const IntDomain &dx = idom(d, x), &dy = idom(d, y), &dz = idom(d, z);
            IntDomain nx = dx.intersect_range(div_ceil(dz.min(), dy.max()),
                                              div_floor(dz.max(), dy.min()));
            IntDomain ny = dy.intersect_range(div_ceil(dz.min(), dx.max()),
                                              div_floor(dz.max(), dx.min()));
            IntDomain nz = dz.intersect_range(dx.min() * dy.min(), dx.max() * dy.max());
            bool step = !(nx == dx && ny == dy && nz == dz);
            d.assign(x, nx);
            d.assign(y, ny);
            d.assign(z, nz);
            if (nx.is_empty() || ny.is_empty() || nz.is_empty())
                return PropagatorStatus::Failed;
            if (!step) break;
        }
        if (idom(d, x).is_singleton() && idom(d, y).is_singleton() &&
            idom(d, z).is_singleton())
            return PropagatorStatus::Subsumed;
        return PropagatorStatus::Fixpoint;
    }

    bool relax_box(std::vector<RatInterval>& box) const override {
        if (box.size() != 3) throw UsageError("relax_box: box arity mismatch");
        for (const RatInterval& i : box)
            if (i.empty()) return true;
        const RatInterval x = box[0], y = box[1], z = box[2];
        if (x.lo <= Rat(0) || y.lo <= Rat(0) || z.lo <= Rat(0)) return false;
        box[0] = {std::max(x.lo, z.lo / y.hi), std::min(x.hi, z.hi / y.lo)};
        box[1] = {std::max(y.lo, z.lo / x.hi), std::min(y.hi, z.hi / x.lo)};
        box[2] = {std::max(z.lo, x.lo * y.lo), std::min(z.hi, x.hi * y.hi)};
        return true;
    }
};

/*
 * x ∩ y = z over set intervals
 */
class SetIntersect : public SimplePropagator {
public:
    SetIntersect(VarId x, VarId y, VarId z)
        : SimplePropagator("set_intersect", {x, y, z},
                           EventSet::on(std::vector<VarId>{x, y, z}, ev::lbc | ev::ubc),
                           CompletenessLevel::Domain, false) {}

    PropagatorStatus propagate(DomainStore& d) const override {
        VarId x = vars()[0], y = vars()[1], z = vars()[2];
        while (true) {
            const SetDomain &dx = sdom(d, x), &dy = sdom(d, y), &dz = sdom(d, z);
            SetDomain nz(dz.lb().unite(dx.lb().intersect(dy.lb())),
                         dz.ub().intersect(dx.ub()).intersect(dy.ub()));
            SetDomain nx(dx.lb().unite(nz.lb()),
                         dx.ub().difference(dy.lb().difference(nz.ub())));
            SetDomain ny(dy.lb().unite(nz.lb()),
                         dy.ub().difference(nx.lb().difference(nz.ub())));
            bool step = !(nx == dx && ny == dy && nz == dz);
            d.assign(x, nx);
            d.assign(y, ny);
            d.assign(z, nz);
            if (nx.is_empty() || ny.is_empty() || nz.is_empty())
                return PropagatorStatus::Failed;
            if (!step) break;
        }
        if (sdom(d, x).is_singleton() && sdom(d, y).is_singleton() &&
            sdom(d, z).is_singleton())
            return PropagatorStatus::Subsumed;
        return PropagatorStatus::Fixpoint;
    }
};

/*
 * x ⊆ y over set intervals
 */
class Subset : public SimplePropagator {
public:
    Subset(VarId x, VarId y)
        : SimplePropagator("subset", {x, y},
                           EventSet::on(std::vector<VarId>{x, y}, ev::lbc | ev::ubc),
                           CompletenessLevel::Domain, false) {}

    PropagatorStatus propagate(DomainStore& d) const override {
        VarId x = vars()[0], y = vars()[1];
        const SetDomain &dx = sdom(d, x), &dy = sdom(d, y);
        SetDomain nx(dx.lb(), dx.ub().intersect(dy.ub()));
        SetDomain ny(dy.lb().unite(dx.lb()), dy.ub());
        d.assign(x, nx);
        d.assign(y, ny);
        if (nx.is_empty() || ny.is_empty()) return PropagatorStatus::Failed;
        if (nx.ub().subset_of(ny.lb())) return PropagatorStatus::Subsumed;
        return PropagatorStatus::Fixpoint;
    }
};

/*
 * (x = y) <-> b, domain complete
 */
class ReifiedEq : public SimplePropagator {
public:
    ReifiedEq(VarId x, VarId y, VarId b, EventSet es)
        : SimplePropagator("reified_eq", {x, y, b}, std::move(es),
                           CompletenessLevel::Domain, false) {}

    PropagatorStatus propagate(DomainStore& d) const override {
        VarId x = vars()[0], y = vars()[1], b = vars()[2];
        const BoolDomain& db = bdom(d, b);

        if (db == BoolDomain::of(true)) {
            IntDomain e = idom(d, x).intersect(idom(d, y));
            d.assign(x, e);
            d.assign(y, e);
            if (e.is_empty()) return PropagatorStatus::Failed;
            return e.is_singleton() ? PropagatorStatus::Subsumed
                                    : PropagatorStatus::Fixpoint;
        }
        if (db == BoolDomain::of(false)) {
            IntDomain nx = idom(d, x);
            IntDomain ny = idom(d, y);
            if (nx.is_singleton()) ny = ny.remove(nx.min());
            if (ny.is_singleton()) nx = nx.remove(ny.min());
            d.assign(x, nx);
            d.assign(y, ny);
            if (nx.is_empty() || ny.is_empty()) return PropagatorStatus::Failed;
            if (nx.intersect(ny).is_empty()) return PropagatorStatus::Subsumed;
            return PropagatorStatus::Fixpoint;
        }

        // b undecided: only entailment can propagate.
        const IntDomain& dx = idom(d, x);
        const IntDomain& dy = idom(d, y);
        if (dx.intersect(dy).is_empty()) {
            d.assign(b, BoolDomain::of(false));
            return PropagatorStatus::Subsumed;
        }
        if (dx.is_singleton() && dy.is_singleton() && dx.min() == dy.min()) {
            d.assign(b, BoolDomain::of(true));
            return PropagatorStatus::Subsumed;
        }
        return PropagatorStatus::Fixpoint;
    }
};

} // namespace

/*
 * Constructors
 */

PropagatorPtr max_ternary(VarId x, VarId y, VarId z) {
    require_sort(x, Sort::Int, "max_ternary");
    require_sort(y, Sort::Int, "max_ternary");
    require_sort(z, Sort::Int, "max_ternary");
    return std::make_shared<MaxTernary>(x, y, z);
}

PropagatorPtr linear_eq_unit(std::vector<VarId> xs, std::int64_t c) {
    if (xs.empty()) throw UsageError("linear_eq_unit: needs at least one variable");
    for (VarId v : xs) require_sort(v, Sort::Int, "linear_eq_unit");
    EventSet es = EventSet::on(xs, ev::lbc | ev::ubc);
    return std::make_shared<LinearEqUnit>(std::move(xs), std::move(es), c);
}

PropagatorPtr linear_eq_dom(std::vector<VarId> xs, std::int64_t c) {
    if (xs.empty() || xs.size() > 3)
        throw UsageError("linear_eq_dom: supported for 1 to 3 variables");
    for (VarId v : xs) require_sort(v, Sort::Int, "linear_eq_dom");
    EventSet es = EventSet::on(xs, ev::dmc);
    return std::make_shared<DomFilterPropagator>(
        "linear_eq_dom", std::move(xs), std::move(es),
        [c](const std::vector<std::int64_t>& a) {
            std::int64_t s = 0;
            for (std::int64_t v : a) s += v;
            return s == c;
        });
}

PropagatorPtr linear_neq_unit(std::vector<VarId> xs, std::int64_t c) {
    if (xs.empty()) throw UsageError("linear_neq_unit: needs at least one variable");
    for (VarId v : xs) require_sort(v, Sort::Int, "linear_neq_unit");
    EventSet es = EventSet::on(xs, ev::fix);
    return std::make_shared<LinearNeqUnit>(std::move(xs), std::move(es), c);
}

PropagatorPtr bool_card_geq(std::vector<VarId> xs, std::int64_t c) {
    if (c < 0 || c > static_cast<std::int64_t>(xs.size()))
        throw UsageError("bool_card_geq: c must be between 0 and n");
    for (VarId v : xs) require_sort(v, Sort::Bool, "bool_card_geq");
    EventSet es = EventSet::on(xs, ev::fix);
    return std::make_shared<BoolCardGeq>(std::move(xs), std::move(es), c);
}

PropagatorPtr bool_or_n(std::vector<VarId> xs, VarId y) {
    if (xs.empty()) throw UsageError("bool_or_n: needs at least one variable");
    for (VarId v : xs) require_sort(v, Sort::Bool, "bool_or_n");
    require_sort(y, Sort::Bool, "bool_or_n");
    xs.push_back(y);
    EventSet es = EventSet::on(xs, ev::fix);
    return std::make_shared<BoolOrN>(std::move(xs), std::move(es));
}

PropagatorPtr bool_eqv(VarId x, VarId y, VarId z) {
    require_sort(x, Sort::Bool, "bool_eqv");
    require_sort(y, Sort::Bool, "bool_eqv");
    require_sort(z, Sort::Bool, "bool_eqv");
    std::vector<VarId> vs{x, y, z};
    EventSet es = EventSet::on(vs, ev::fix);
    return std::make_shared<DomFilterPropagator>(
        "bool_eqv", std::move(vs), std::move(es),
        [](const std::vector<std::int64_t>& a) { return (a[0] == a[1] ? 1 : 0) == a[2]; });
}

PropagatorPtr distinct(std::vector<VarId> xs) {
    if (xs.empty()) throw UsageError("distinct: needs at least one variable");
    for (VarId v : xs) require_sort(v, Sort::Int, "distinct");
    if (xs.size() <= 6) {
        EventSet es = EventSet::on(xs, ev::dmc);
        return std::make_shared<DomFilterPropagator>(
            "distinct_dom", std::move(xs), std::move(es),
            [](const std::vector<std::int64_t>& a) {
                for (std::size_t i = 0; i < a.size(); ++i)
                    for (std::size_t j = i + 1; j < a.size(); ++j)
                        if (a[i] == a[j]) return false;
                return true;
            });
    }
    EventSet es = EventSet::on(xs, ev::fix);
    return std::make_shared<DistinctWeak>(std::move(xs), std::move(es));
}

PropagatorPtr element_vals(std::vector<std::int64_t> cs, VarId x, VarId y) {
    if (cs.empty()) throw UsageError("element_vals: empty value table");
    require_sort(x, Sort::Int, "element_vals");
    require_sort(y, Sort::Int, "element_vals");
    return std::make_shared<ElementVals>(std::move(cs), x, y);
}

PropagatorPtr mult_ppp(VarId x, VarId y, VarId z) {
    require_sort(x, Sort::Int, "mult_ppp");
    require_sort(y, Sort::Int, "mult_ppp");
    require_sort(z, Sort::Int, "mult_ppp");
    return std::make_shared<MultPPP>(x, y, z);
}

PropagatorPtr set_intersect(VarId x, VarId y, VarId z) {
    require_sort(x, Sort::Set, "set_intersect");
    require_sort(y, Sort::Set, "set_intersect");
    require_sort(z, Sort::Set, "set_intersect");
    return std::make_shared<SetIntersect>(x, y, z);
}

PropagatorPtr subset(VarId x, VarId y) {
    require_sort(x, Sort::Set, "subset");
    require_sort(y, Sort::Set, "subset");
    return std::make_shared<Subset>(x, y);
}

PropagatorPtr reified_eq(VarId x, VarId y, VarId b) {
    require_sort(x, Sort::Int, "reified_eq");
    require_sort(y, Sort::Int, "reified_eq");
    require_sort(b, Sort::Bool, "reified_eq");
    EventSet es;
    es.add(x, ev::dmc);
    es.add(y, ev::dmc);
    es.add(b, ev::fix);
    return std::make_shared<ReifiedEq>(x, y, b, std::move(es));
}

} // namespace viewprop
