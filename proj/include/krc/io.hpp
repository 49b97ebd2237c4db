#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "krc/crystal.hpp"

namespace krc {

/// "A6" / "C5" -> CartanType. Throws ParseError.
CartanType parse_cartan(std::string_view text);

/// Comma separated integers, e.g. "2,2,1". Throws ParseError.
std::vector<int> parse_int_list(std::string_view text);

/// `<TYPE><n>; col | col | ...` with columns left to right and letters in
/// increasing order, barred letters negative. Throws ParseError for syntax
/// and the column validation errors for inadmissible columns.
TensorElement parse_filling(std::string_view text);

/// Canonical form, e.g. "C5; -5,-3,-2,-1 | 3,-4,-3 | 1,3,-3".
std::string serialize_filling(const TensorElement& b);

/// Factors only, e.g. "-5,-3,-2,-1 | 3,-4,-3 | 1,3,-3".
std::string columns_str(const TensorElement& b);

/// Deterministic DOT rendering. Vertices are labeled by their serialization
/// and edges by their index; 0-edges are dashed, and those that are not
/// Demazure arrows are also drawn red.
std::string crystal_graph_dot(const CrystalGraph& g);

}  // namespace krc
