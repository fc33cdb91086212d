#pragma once

// Group specifications and JSON renderings of the library's results.

#include <string_view>

#include <nlohmann/json.hpp>

#include "braidcx/braid.hpp"
#include "braidcx/coxeter.hpp"
#include "braidcx/poset.hpp"
#include "braidcx/simplicial.hpp"

namespace braidcx {

/// "A3", "B4", "C3", "D4", "E6", "F4", "H3", "I2:5" or "I2(5)".
CoxeterMatrix group_from_name(std::string_view name);

/// {"type": "A", "rank": 3}, {"type": "I2", "m": 5} or {"matrix": [[1,3],[3,1]]}.
CoxeterMatrix group_from_json(const nlohmann::json& spec);

/// A name, or the path of a JSON file holding a specification.
CoxeterMatrix parse_group(std::string_view spec);

/// "w0" for the longest element, otherwise a word whose product is taken.
GroupElement parse_element(const CoxeterSystem& sys, std::string_view text);

nlohmann::json to_json(const HPoly& h);
nlohmann::json to_json(const GammaPoly& g);

/// vertices, facets (indices into vertices), f, h, gamma (null unless
/// `spherical`), flag, spherical, void.
nlohmann::json complex_json(const LabeledComplex& x, bool spherical);

nlohmann::json to_json(const CaseReport& r);
nlohmann::json to_json(const SequenceStep& s);
nlohmann::json to_json(const RhoPoset& p, const std::optional<SemilatticeReport>& semilattice);

}  // namespace braidcx
