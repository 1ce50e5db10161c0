#include "viewprop/enumerate.hpp"

#include "viewprop/errors.hpp"

namespace viewprop {

namespace {

// Non-empty subsets of a value list, as domains.
std::vector<VariableDomain> int_subdomains(const IntDomain& d) {
    auto vals = d.values();
    std::vector<VariableDomain> out;
    if (vals.size() > 20) throw CapExceeded("subdomains_of: domain too large", 1e18);
    std::uint64_t total = std::uint64_t{1} << vals.size();
    for (std::uint64_t m = 1; m < total; ++m) {
        std::vector<std::int64_t> sub;
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (m & (std::uint64_t{1} << i)) sub.push_back(vals[i]);
        out.emplace_back(IntDomain::from_values(sub));
    }
    return out;
}

std::vector<VariableDomain> bool_subdomains(const BoolDomain& d) {
    std::vector<VariableDomain> out;
    for (std::uint8_t m = 1; m <= 3; ++m)
        if ((m & ~d.mask()) == 0) out.emplace_back(BoolDomain::from_mask(m));
    return out;
}

std::vector<VariableDomain> set_subdomains(const SetDomain& d) {
    // Each free element is pinned into lb', left optional, or removed.
    IntSet free = d.ub().difference(d.lb());
    const auto& fv = free.values();
    if (fv.size() > 12) throw CapExceeded("subdomains_of: set domain too large", 1e18);
    std::vector<VariableDomain> out;
    std::vector<int> state(fv.size(), 0);
    while (true) {
        IntSet lb = d.lb();
        IntSet ub = d.lb();
        for (std::size_t i = 0; i < fv.size(); ++i) {
            if (state[i] == 1) { lb = lb.with(fv[i]); ub = ub.with(fv[i]); }
            if (state[i] == 2) ub = ub.with(fv[i]);
        }
        out.emplace_back(SetDomain(std::move(lb), std::move(ub)));
        std::size_t i = 0;
        for (; i < fv.size(); ++i) {
            if (++state[i] <= 2) break;
            state[i] = 0;
        }
        if (i == fv.size()) break;
    }
    return out;
}

} // namespace

std::vector<VariableDomain> subdomains_of(const VariableDomain& d) {
    switch (d.index()) {
        case 0: return int_subdomains(std::get<IntDomain>(d));
        case 1: return bool_subdomains(std::get<BoolDomain>(d));
        default: return set_subdomains(std::get<SetDomain>(d));
    }
}

std::uint64_t subdomain_count(const VariableDomain& d) {
    switch (d.index()) {
        case 0: {
            std::uint64_t n = dom_size(d);
            if (n > 62) throw CapExceeded("subdomain_count overflow", 1e18);
            return (std::uint64_t{1} << n) - 1;
        }
        case 1:
            return std::get<BoolDomain>(d).mask() == 3 ? 3 : 1;
        default: {
            const auto& sd = std::get<SetDomain>(d);
            std::size_t f = sd.ub().difference(sd.lb()).size();
            if (f > 39) throw CapExceeded("subdomain_count overflow", 1e18);
            std::uint64_t n = 1;
            for (std::size_t i = 0; i < f; ++i) n *= 3;
            return n;
        }
    }
}

std::uint64_t substore_space_size(const DomainStore& universe, std::span<const VarId> vars) {
    std::uint64_t n = 1;
    for (VarId v : vars) {
        std::uint64_t s = subdomain_count(universe.at(v));
        if (s != 0 && n > (std::uint64_t{1} << 62) / s) return ~std::uint64_t{0};
        n *= s;
    }
    return n;
}

void for_each_substore(const DomainStore& universe, std::span<const VarId> vars,
                       const std::function<void(const DomainStore&)>& fn,
                       std::uint64_t cap) {
    std::uint64_t space = substore_space_size(universe, vars);
    if (space > cap)
        throw CapExceeded("substore enumeration over cap", static_cast<double>(space));
    std::vector<std::vector<VariableDomain>> choices;
    for (VarId v : vars) choices.push_back(subdomains_of(universe.at(v)));
    DomainStore d = universe;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == vars.size()) {
            fn(d);
            return;
        }
        for (const VariableDomain& sub : choices[i]) {
            d.assign(vars[i], sub);
            rec(i + 1);
        }
        d.assign(vars[i], universe.at(vars[i]));
    };
    rec(0);
}

std::uint64_t substore_pair_space_size(const DomainStore& universe,
                                       std::span<const VarId> vars) {
    // Per variable: ordered pairs sub' ⊆ sub of the universe domain.
    std::uint64_t n = 1;
    for (VarId v : vars) {
        std::uint64_t s = 0;
        for (const VariableDomain& sub : subdomains_of(universe.at(v)))
            s += subdomain_count(sub);
        if (s != 0 && n > (std::uint64_t{1} << 62) / s) return ~std::uint64_t{0};
        n *= s;
    }
    return n;
}

void for_each_substore_pair(const DomainStore& universe, std::span<const VarId> vars,
                            const std::function<void(const DomainStore&, const DomainStore&)>& fn,
                            std::uint64_t cap) {
    std::uint64_t space = substore_pair_space_size(universe, vars);
    if (space > cap)
        throw CapExceeded("substore pair enumeration over cap", static_cast<double>(space));
    for_each_substore(universe, vars, [&](const DomainStore& outer) {
        for_each_substore(outer, vars,
                          [&](const DomainStore& inner) { fn(outer, inner); }, cap);
    }, cap);
}

} // namespace viewprop
