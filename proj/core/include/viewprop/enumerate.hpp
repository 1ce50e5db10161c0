#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "viewprop/store.hpp"

namespace viewprop {

// All non-empty subdomains of a variable domain, in a deterministic order.
// For sets these are the sub-intervals (lb', ub') with lb ⊆ lb' ⊆ ub' ⊆ ub.
std::vector<VariableDomain> subdomains_of(const VariableDomain& d);

std::uint64_t subdomain_count(const VariableDomain& d);

// Number of stores visited by for_each_substore.
std::uint64_t substore_space_size(const DomainStore& universe, std::span<const VarId> vars);

// Streams every store d ⊆ universe (non-empty per-variable subdomains of the
// universe domains on `vars`; other variables keep their universe domains).
// CapExceeded if the space exceeds `cap`.
void for_each_substore(const DomainStore& universe, std::span<const VarId> vars,
                       const std::function<void(const DomainStore&)>& fn,
                       std::uint64_t cap = 2'000'000);

// Streams pairs (d, d') with d' ⊆ d ⊆ universe, both pointwise non-empty.
void for_each_substore_pair(const DomainStore& universe, std::span<const VarId> vars,
                            const std::function<void(const DomainStore&, const DomainStore&)>& fn,
                            std::uint64_t cap = 2'000'000);

std::uint64_t substore_pair_space_size(const DomainStore& universe,
                                       std::span<const VarId> vars);

} // namespace viewprop
