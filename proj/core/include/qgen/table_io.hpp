#pragma once

#include <optional>
#include <string>

#include "qgen/genocchi.hpp"

namespace qgen {

// {"q": "1/2", "alpha": 1, "N": 10, "polys": [["...", ...], ...]}
// Coefficient strings lowest degree first, bit-exact round trip.
std::string table_to_json(const GenocchiTable& table);
GenocchiTable table_from_json(const std::string& text);

// One row per n: "n,c0,c1,..."; with eval_at set, "n,value,c0,c1,...".
std::string table_to_csv(const GenocchiTable& table, const std::optional<Rational>& eval_at);

}  // namespace qgen
