#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace wk::embedded {

// Copies of the text corpora under data/, compiled in at build time.
std::string_view braid_relations();
std::string_view arrow_relators();
/// (name, PD text) for every knot under data/knots, sorted by name.
const std::vector<std::pair<std::string_view, std::string_view>>& knot_inventory();

}  // namespace wk::embedded
