#pragma once

#include <string>

#include "catv/congruence.hpp"
#include "catv/fincat.hpp"

namespace catv {

/// JSON interchange for categories: objects by label, non-identity morphisms
/// by name with dom/cod labels, composition as name triples (f, g, f-then-g);
/// identities are implicit under the names id_<object>. Parsing validates via
/// CatBuilder; malformed documents raise ValidationError(FixtureInvalid),
/// law violations keep their builder kinds.
json cat_to_json(const CatPtr& c);
CatPtr cat_from_json(const json& j);

/// Interchange for internal double-category data: the three categories plus
/// the six structure functors as index tables. Parsing stops short of
/// validate_double so that broken fixtures can be shipped and rejected at
/// check time.
json double_to_json(const RawDouble& d);
RawDouble double_from_json(const json& j);

/// Dispatch on the "kind" field ("category" or "double_category").
bool is_double_fixture(const json& j);

/// DOT renderings: a category as a labelled digraph of its non-identity
/// morphisms; double-category data as three clusters with the object parts of
/// the structure functors drawn as dashed cross-cluster edges.
std::string cat_to_dot(const CatPtr& c);
std::string double_to_dot(const RawDouble& d);

}  // namespace catv
