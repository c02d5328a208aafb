#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tf/groebner.hpp"

namespace tf::detail {

/// Content key of a Groebner computation: version stamp, field, variable
/// names, weights, order and the exact generator list.
template <class F>
std::string gb_cache_key(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens);

template <class F>
std::optional<GroebnerBasis<F>> gb_cache_lookup(const RingPtr<F>& ring, const std::string& key);

template <class F>
void gb_cache_store(const std::string& key, const GroebnerBasis<F>& gb);

}  // namespace tf::detail
