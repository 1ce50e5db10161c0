#include "viewprop/view.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "viewprop/errors.hpp"

namespace viewprop {

const char* view_class_name(ViewClass c) {
    switch (c) {
        case ViewClass::IntervalBijective: return "interval-bijective";
        case ViewClass::IntervalInjective: return "interval-injective";
        case ViewClass::Arbitrary: return "arbitrary";
    }
    return "?";
}

namespace {

std::int64_t div_floor(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t div_ceil(std::int64_t a, std::int64_t b) { return -div_floor(-a, b); }

void check_int_range(std::int64_t v, const DomainStore& limits, const char* who) {
    if (v < limits.int_lo() || v > limits.int_hi()) {
        std::ostringstream os;
        os << who << ": image value " << v << " outside the integer universe ["
           << limits.int_lo() << "," << limits.int_hi() << "]";
        throw OverflowError(os.str());
    }
}

void check_set_universe(const IntSet& ub, const DomainStore& limits, const char* who) {
    if (!limits.set_universe().empty() && !ub.subset_of(limits.set_universe()))
        throw OverflowError(std::string(who) + ": image leaves the set universe");
}

} // namespace

struct View::Impl {
    virtual ~Impl() = default;
    virtual Sort source() const = 0;
    virtual Sort target() const = 0;
    virtual ViewClass cls() const = 0;
    virtual Monotonicity mono() const = 0;
    virtual std::string name() const = 0;
    virtual bool identity() const { return false; }
    virtual Value map(const Value& v) const = 0;
    virtual std::optional<Value> unmap(const Value& v) const = 0;
    virtual VariableDomain image(const VariableDomain& d, const DomainStore& limits) const = 0;
    virtual VariableDomain preimage(const VariableDomain& d) const = 0;
    virtual std::optional<std::pair<Rat, Rat>> affine() const { return std::nullopt; }
};

Sort View::source_sort() const { return impl_->source(); }
Sort View::target_sort() const { return impl_->target(); }
ViewClass View::classification() const { return impl_->cls(); }
Monotonicity View::monotonicity() const { return impl_->mono(); }
std::string View::name() const { return impl_->name(); }
bool View::is_identity() const { return impl_->identity(); }
Value View::map_value(const Value& v) const { return impl_->map(v); }
std::optional<Value> View::unmap_value(const Value& v) const { return impl_->unmap(v); }
VariableDomain View::image(const VariableDomain& d, const DomainStore& limits) const {
    if (domain_sort(d) != impl_->source())
        throw UsageError("view image: domain sort does not match view source");
    return impl_->image(d, limits);
}
VariableDomain View::preimage(const VariableDomain& d) const {
    if (domain_sort(d) != impl_->target())
        throw UsageError("view preimage: domain sort does not match view target");
    return impl_->preimage(d);
}
std::optional<std::pair<Rat, Rat>> View::affine() const { return impl_->affine(); }

namespace {

/*
 * Concrete views
 */

struct IdentityImpl final : View::Impl {
    explicit IdentityImpl(Sort s) : sort(s) {}
    Sort sort;

    Sort source() const override { return sort; }
    Sort target() const override { return sort; }
    ViewClass cls() const override { return ViewClass::IntervalBijective; }
    Monotonicity mono() const override { return Monotonicity::Increasing; }
    std::string name() const override { return "id"; }
    bool identity() const override { return true; }
    Value map(const Value& v) const override { return v; }
    std::optional<Value> unmap(const Value& v) const override { return v; }
    VariableDomain image(const VariableDomain& d, const DomainStore&) const override {
        return d;
    }
    VariableDomain preimage(const VariableDomain& d) const override { return d; }
    std::optional<std::pair<Rat, Rat>> affine() const override {
        if (sort == Sort::Set) return std::nullopt;
        return std::pair{Rat(1), Rat(0)};
    }
};

struct BoolNegImpl final : View::Impl {
    Sort source() const override { return Sort::Bool; }
    Sort target() const override { return Sort::Bool; }
    ViewClass cls() const override { return ViewClass::IntervalBijective; }
    Monotonicity mono() const override { return Monotonicity::Decreasing; }
    std::string name() const override { return "neg"; }
    Value map(const Value& v) const override { return Value(1 - std::get<0>(v)); }
    std::optional<Value> unmap(const Value& v) const override {
        std::int64_t x = std::get<0>(v);
        if (x != 0 && x != 1) return std::nullopt;
        return Value(1 - x);
    }
    VariableDomain image(const VariableDomain& d, const DomainStore&) const override {
        const auto& b = std::get<BoolDomain>(d);
        std::uint8_t m = 0;
        if (b.contains(0)) m |= 2;
        if (b.contains(1)) m |= 1;
        return BoolDomain::from_mask(m);
    }
    VariableDomain preimage(const VariableDomain& d) const override {
        return image(d, DomainStore());
    }
    std::optional<std::pair<Rat, Rat>> affine() const override {
        return std::pair{Rat(-1), Rat(1)};
    }
};

struct MinusImpl final : View::Impl {
    Sort source() const override { return Sort::Int; }
    Sort target() const override { return Sort::Int; }
    ViewClass cls() const override { return ViewClass::IntervalBijective; }
    Monotonicity mono() const override { return Monotonicity::Decreasing; }
    std::string name() const override { return "minus"; }
    Value map(const Value& v) const override { return Value(-std::get<0>(v)); }
    std::optional<Value> unmap(const Value& v) const override {
        return Value(-std::get<0>(v));
    }
    VariableDomain image(const VariableDomain& d, const DomainStore& limits) const override {
        const auto& id = std::get<IntDomain>(d);
        std::vector<IntDomain::Range> rs;
        for (auto it = id.ranges().rbegin(); it != id.ranges().rend(); ++it)
            rs.push_back({-it->hi, -it->lo});
        if (!rs.empty()) {
            check_int_range(rs.front().lo, limits, "minus");
            check_int_range(rs.back().hi, limits, "minus");
        }
        return IntDomain::from_ranges(std::move(rs));
    }
    VariableDomain preimage(const VariableDomain& d) const override {
        const auto& id = std::get<IntDomain>(d);
        std::vector<IntDomain::Range> rs;
        for (auto it = id.ranges().rbegin(); it != id.ranges().rend(); ++it)
            rs.push_back({-it->hi, -it->lo});
        return IntDomain::from_ranges(std::move(rs));
    }
    std::optional<std::pair<Rat, Rat>> affine() const override {
        return std::pair{Rat(-1), Rat(0)};
    }
};

struct OffsetImpl final : View::Impl {
    explicit OffsetImpl(std::int64_t o) : off(o) {}
    std::int64_t off;

    Sort source() const override { return Sort::Int; }
    Sort target() const override { return Sort::Int; }
    ViewClass cls() const override { return ViewClass::IntervalBijective; }
    Monotonicity mono() const override { return Monotonicity::Increasing; }
    std::string name() const override { return "offset(" + std::to_string(off) + ")"; }
    bool identity() const override { return off == 0; }
    Value map(const Value& v) const override { return Value(std::get<0>(v) + off); }
    std::optional<Value> unmap(const Value& v) const override {
        return Value(std::get<0>(v) - off);
    }
    VariableDomain image(const VariableDomain& d, const DomainStore& limits) const override {
        const auto& id = std::get<IntDomain>(d);
        std::vector<IntDomain::Range> rs;
        for (const auto& r : id.ranges()) rs.push_back({r.lo + off, r.hi + off});
        if (!rs.empty()) {
            check_int_range(rs.front().lo, limits, "offset");
            check_int_range(rs.back().hi, limits, "offset");
        }
        return IntDomain::from_ranges(std::move(rs));
    }
    VariableDomain preimage(const VariableDomain& d) const override {
        const auto& id = std::get<IntDomain>(d);
        std::vector<IntDomain::Range> rs;
        for (const auto& r : id.ranges()) rs.push_back({r.lo - off, r.hi - off});
        return IntDomain::from_ranges(std::move(rs));
    }
    std::optional<std::pair<Rat, Rat>> affine() const override {
        return std::pair{Rat(1), Rat(off)};
    }
};

struct ScaleImpl final : View::Impl {
    explicit ScaleImpl(std::int64_t a) : scale(a) {}
    std::int64_t scale;

    Sort source() const override { return Sort::Int; }
    Sort target() const override { return Sort::Int; }
    ViewClass cls() const override {
        return (scale == 1 || scale == -1) ? ViewClass::IntervalBijective
                                           : ViewClass::IntervalInjective;
    }
    Monotonicity mono() const override {
        return scale > 0 ? Monotonicity::Increasing : Monotonicity::Decreasing;
    }
    std::string name() const override { return "scale(" + std::to_string(scale) + ")"; }
    bool identity() const override { return scale == 1; }
    Value map(const Value& v) const override { return Value(scale * std::get<0>(v)); }
    std::optional<Value> unmap(const Value& v) const override {
        std::int64_t x = std::get<0>(v);
        if (x % scale != 0) return std::nullopt;
        return Value(x / scale);
    }
    VariableDomain image(const VariableDomain& d, const DomainStore& limits) const override {
        const auto& id = std::get<IntDomain>(d);
        if (id.is_empty()) return IntDomain::empty();
        check_int_range(scale * id.min(), limits, "scale");
        check_int_range(scale * id.max(), limits, "scale");
        if (scale == 1) return id;
        std::vector<IntDomain::Range> rs;
        if (scale == -1) {
            for (const auto& r : id.ranges()) rs.push_back({-r.hi, -r.lo});
        } else {
            // Non-unit strides fragment into singletons.
            id.for_each([&](std::int64_t v) { rs.push_back({scale * v, scale * v}); });
        }
        return IntDomain::from_ranges(std::move(rs));
    }
    VariableDomain preimage(const VariableDomain& d) const override {
        const auto& id = std::get<IntDomain>(d);
        std::vector<IntDomain::Range> rs;
        for (const auto& r : id.ranges()) {
            std::int64_t lo, hi;
            if (scale > 0) {
                lo = div_ceil(r.lo, scale);
                hi = div_floor(r.hi, scale);
            } else {
                lo = div_ceil(r.hi, scale);
                hi = div_floor(r.lo, scale);
            }
            if (lo <= hi) rs.push_back({lo, hi});
        }
        return IntDomain::from_ranges(std::move(rs));
    }
    std::optional<std::pair<Rat, Rat>> affine() const override {
        return std::pair{Rat(scale), Rat(0)};
    }
};

struct SetComplementImpl final : View::Impl {
    explicit SetComplementImpl(IntSet u) : universe(std::move(u)) {}
    IntSet universe;

    Sort source() const override { return Sort::Set; }
    Sort target() const override { return Sort::Set; }
    ViewClass cls() const override { return ViewClass::Arbitrary; }
    Monotonicity mono() const override { return Monotonicity::Decreasing; }
    std::string name() const override { return "complement"; }
    Value map(const Value& v) const override {
        const IntSet& s = std::get<1>(v);
        if (!s.subset_of(universe))
            throw UsageError("complement view applied outside its universe");
        return Value(universe.difference(s));
    }
    std::optional<Value> unmap(const Value& v) const override {
        const IntSet& s = std::get<1>(v);
        if (!s.subset_of(universe)) return std::nullopt;
        return Value(universe.difference(s));
    }
    VariableDomain image(const VariableDomain& d, const DomainStore& limits) const override {
        const auto& sd = std::get<SetDomain>(d);
        if (!sd.ub().subset_of(universe))
            throw UsageError("complement view applied outside its universe");
        SetDomain out(universe.difference(sd.ub()), universe.difference(sd.lb()));
        check_set_universe(out.ub(), limits, "complement");
        return out;
    }
    VariableDomain preimage(const VariableDomain& d) const override {
        const auto& sd = std::get<SetDomain>(d);
        // A lower bound outside the universe is unreachable by any image.
        if (!sd.lb().subset_of(universe)) return SetDomain::failed();
        return SetDomain(universe.difference(sd.ub()), universe.difference(sd.lb()));
    }
};

struct SingletonImpl final : View::Impl {
    Sort source() const override { return Sort::Int; }
    Sort target() const override { return Sort::Set; }
    ViewClass cls() const override { return ViewClass::Arbitrary; }
    Monotonicity mono() const override { return Monotonicity::None; }
    std::string name() const override { return "singleton"; }
    Value map(const Value& v) const override { return Value(IntSet{std::get<0>(v)}); }
    std::optional<Value> unmap(const Value& v) const override {
        const IntSet& s = std::get<1>(v);
        if (s.size() != 1) return std::nullopt;
        return Value(s.values()[0]);
    }
    VariableDomain image(const VariableDomain& d, const DomainStore& limits) const override {
        const auto& id = std::get<IntDomain>(d);
        IntSet ub(id.values());
        // Strongest interval-representable image: lb is fixed only once the
        // integer is.
        IntSet lb = id.is_singleton() ? ub : IntSet{};
        check_set_universe(ub, limits, "singleton");
        return SetDomain(std::move(lb), std::move(ub));
    }
    VariableDomain preimage(const VariableDomain& d) const override {
        const auto& sd = std::get<SetDomain>(d);
        if (sd.is_empty() || sd.lb().size() > 1) return IntDomain::empty();
        if (sd.lb().size() == 1) {
            std::int64_t v = sd.lb().values()[0];
            return sd.ub().contains(v) ? IntDomain::singleton(v) : IntDomain::empty();
        }
        return IntDomain::from_values(sd.ub().values());
    }
};

struct TableImpl final : View::Impl {
    explicit TableImpl(std::vector<std::pair<std::int64_t, std::int64_t>> ps) {
        for (auto [k, v] : ps) {
            if (!fwd.emplace(k, v).second) throw UsageError("table view: duplicate key");
            if (!rev.emplace(v, k).second) throw UsageError("table view: not injective");
        }
    }
    std::map<std::int64_t, std::int64_t> fwd, rev;

    Sort source() const override { return Sort::Int; }
    Sort target() const override { return Sort::Int; }
    ViewClass cls() const override { return ViewClass::Arbitrary; }
    Monotonicity mono() const override { return Monotonicity::None; }
    std::string name() const override { return "table"; }
    Value map(const Value& v) const override {
        auto it = fwd.find(std::get<0>(v));
        if (it == fwd.end()) throw UsageError("table view applied outside its universe");
        return Value(it->second);
    }
    std::optional<Value> unmap(const Value& v) const override {
        auto it = rev.find(std::get<0>(v));
        if (it == rev.end()) return std::nullopt;
        return Value(it->second);
    }
    VariableDomain image(const VariableDomain& d, const DomainStore& limits) const override {
        const auto& id = std::get<IntDomain>(d);
        std::vector<std::int64_t> out;
        id.for_each([&](std::int64_t v) {
            auto it = fwd.find(v);
            if (it == fwd.end()) throw UsageError("table view applied outside its universe");
            check_int_range(it->second, limits, "table");
            out.push_back(it->second);
        });
        return IntDomain::from_values(out);
    }
    VariableDomain preimage(const VariableDomain& d) const override {
        const auto& id = std::get<IntDomain>(d);
        std::vector<std::int64_t> out;
        for (const auto& [v, k] : rev)
            if (id.contains(v)) out.push_back(k);
        return IntDomain::from_values(out);
    }
};

struct ComposeImpl final : View::Impl {
    ComposeImpl(View o, View i) : outer(std::move(o)), inner(std::move(i)) {}
    View outer, inner;

    Sort source() const override { return inner.source_sort(); }
    Sort target() const override { return outer.target_sort(); }
    ViewClass cls() const override {
        return static_cast<ViewClass>(std::max(
            static_cast<std::uint8_t>(outer.classification()),
            static_cast<std::uint8_t>(inner.classification())));
    }
    Monotonicity mono() const override {
        Monotonicity a = outer.monotonicity(), b = inner.monotonicity();
        if (a == Monotonicity::None || b == Monotonicity::None) return Monotonicity::None;
        return (a == b) ? Monotonicity::Increasing : Monotonicity::Decreasing;
    }
    std::string name() const override { return outer.name() + "∘" + inner.name(); }
    Value map(const Value& v) const override { return outer.map_value(inner.map_value(v)); }
    std::optional<Value> unmap(const Value& v) const override {
        auto mid = outer.unmap_value(v);
        if (!mid) return std::nullopt;
        return inner.unmap_value(*mid);
    }
    VariableDomain image(const VariableDomain& d, const DomainStore& limits) const override {
        return outer.image(inner.image(d, limits), limits);
    }
    VariableDomain preimage(const VariableDomain& d) const override {
        return inner.preimage(outer.preimage(d));
    }
    std::optional<std::pair<Rat, Rat>> affine() const override {
        auto ao = outer.affine();
        auto ai = inner.affine();
        if (!ao || !ai) return std::nullopt;
        return std::pair{ao->first * ai->first, ao->first * ai->second + ao->second};
    }
};

} // namespace

View identity_view(Sort sort) { return View(std::make_shared<IdentityImpl>(sort)); }
View bool_neg_view() { return View(std::make_shared<BoolNegImpl>()); }
View minus_view() { return View(std::make_shared<MinusImpl>()); }
View offset_view(std::int64_t o) { return View(std::make_shared<OffsetImpl>(o)); }

View scale_view(std::int64_t a) {
    if (a == 0) throw UsageError("scale view: factor must be non-zero");
    return View(std::make_shared<ScaleImpl>(a));
}

View set_complement_view(IntSet universe) {
    return View(std::make_shared<SetComplementImpl>(std::move(universe)));
}

View singleton_view() { return View(std::make_shared<SingletonImpl>()); }

View table_view(std::vector<std::pair<std::int64_t, std::int64_t>> pairs) {
    return View(std::make_shared<TableImpl>(std::move(pairs)));
}

View compose(const View& outer, const View& inner) {
    if (inner.target_sort() != outer.source_sort())
        throw UsageError("compose: inner target sort must match outer source sort");
    return View(std::make_shared<ComposeImpl>(outer, inner));
}

ViewClass classify(const View& v, const IntDomain& universe) {
    if (v.source_sort() == Sort::Set || v.target_sort() == Sort::Set)
        throw UsageError("classify: interval classification needs integer sorts");
    auto uvals = universe.values();
    if (uvals.size() > 16) throw CapExceeded("classify: universe too large", 1e9);

    std::vector<std::int64_t> mapped;
    for (std::int64_t x : uvals) mapped.push_back(std::get<0>(v.map_value(Value(x))));

    bool injective_eq = true;
    bool bijective_eq = true;
    std::uint64_t total = std::uint64_t{1} << uvals.size();
    for (std::uint64_t m = 1; m < total; ++m) {
        std::vector<std::int64_t> src, img;
        for (std::size_t i = 0; i < uvals.size(); ++i) {
            if (m & (std::uint64_t{1} << i)) {
                src.push_back(uvals[i]);
                img.push_back(mapped[i]);
            }
        }
        auto [ilo, ihi] = std::minmax_element(img.begin(), img.end());
        auto [slo, shi] = std::minmax_element(src.begin(), src.end());

        // φ⁻(conv(φ(B))) vs conv(φ⁻(φ(B))) = conv(B).
        std::vector<std::int64_t> left;
        for (std::size_t i = 0; i < uvals.size(); ++i)
            if (mapped[i] >= *ilo && mapped[i] <= *ihi) left.push_back(uvals[i]);
        IntDomain right = IntDomain::range(*slo, *shi);
        if (IntDomain::from_values(left) != right.intersect(universe)) injective_eq = false;

        // φ(conv(B)) vs conv(φ(B)).
        std::vector<std::int64_t> img_of_hull;
        for (std::size_t i = 0; i < uvals.size(); ++i)
            if (uvals[i] >= *slo && uvals[i] <= *shi) img_of_hull.push_back(mapped[i]);
        if (IntDomain::from_values(img_of_hull) != IntDomain::range(*ilo, *ihi))
            bijective_eq = false;

        if (!injective_eq && !bijective_eq) break;
    }

    ViewClass computed = ViewClass::Arbitrary;
    if (injective_eq) computed = bijective_eq ? ViewClass::IntervalBijective
                                              : ViewClass::IntervalInjective;
    if (static_cast<std::uint8_t>(v.classification()) < static_cast<std::uint8_t>(computed)) {
        std::ostringstream os;
        os << "view " << v.name() << " declares " << view_class_name(v.classification())
           << " but verifies only " << view_class_name(computed);
        throw ContractViolation(os.str());
    }
    return computed;
}

/*
 * ViewFamily
 */

ViewFamily& ViewFamily::bind(VarId var, View view) {
    slots_.emplace_back(Binding{var, std::move(view)});
    return *this;
}

ViewFamily& ViewFamily::bind_constant(Value v) {
    slots_.emplace_back(std::move(v));
    return *this;
}

bool ViewFamily::has_constants() const {
    for (const Slot& s : slots_)
        if (s.index() == 1) return true;
    return false;
}

bool ViewFamily::all_identity() const {
    for (const Slot& s : slots_) {
        if (s.index() == 1) return false;
        if (!std::get<Binding>(s).view.is_identity()) return false;
    }
    return true;
}

ViewClass ViewFamily::classification() const {
    ViewClass c = ViewClass::IntervalBijective;
    for (const Slot& s : slots_) {
        if (s.index() == 1) continue; // constants never weaken the class
        ViewClass vc = std::get<Binding>(s).view.classification();
        if (static_cast<std::uint8_t>(vc) > static_cast<std::uint8_t>(c)) c = vc;
    }
    return c;
}

void ViewFamily::validate() const {
    std::vector<std::uint32_t> seen;
    for (const Slot& s : slots_) {
        if (s.index() == 1) continue;
        std::uint32_t idx = std::get<Binding>(s).var.index;
        if (std::find(seen.begin(), seen.end(), idx) != seen.end())
            throw UsageError("view family binds one store variable twice");
        seen.push_back(idx);
    }
}

ViewFamily identity_family(std::span<const VarId> vars) {
    ViewFamily f;
    for (VarId v : vars) f.bind(v, identity_view(v.sort));
    return f;
}

} // namespace viewprop
