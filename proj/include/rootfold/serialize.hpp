#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootfold/diagram.hpp"
#include "rootfold/exact.hpp"
#include "rootfold/folding.hpp"
#include "rootfold/root_system.hpp"

namespace rootfold {

using nlohmann::json;

json to_json(const Rational& x);
json to_json(const RationalVector& v);
json to_json(std::span<const RationalVector> vs);
RationalVector vector_from_json(const json& j);

// {label, ambient_dim, simple[], positive[], marks[], coweights[]}.
json system_json(const RootSystem& rs);

// {source_label, j, order, orbits[], m[], folded_label, folded_simple[], vanish[],
//  profiles: [{root, P[]}]}. The first profile is the zero class.
json fold_report_json(const FoldedRootSystem& folded);

// Positive roots as an ordered list of tab-separated rows.
std::string system_tsv(const RootSystem& rs);
std::string fold_report_tsv(const FoldedRootSystem& folded);

}  // namespace rootfold
