#pragma once

// Bracket notation.
//
//   [3,5,2]            chain
//   [2,2*,6]           mk1A; '*' (or U+203E) after the entry met by the (-1)-curve
//   [4]-[2,6,2,3]      mk2A [f_s2..f_1]-[e_1..e_s1]; `[]` is an absent side
//   [4]-3, 3-[4], 5    extremal P-resolution with absent sides omitted
//   [4]-1-[3,5,2]      extremal P-resolution with both sides

#include "smmp/hjcf.hpp"
#include "smmp/neighborhoods.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace smmp {

using Notation = std::variant<Chain, MK1A, MK2A, EPRes>;

/// Throws ParseError for malformed text and SemanticError when the text is
/// well formed but names no valid object (non-Wahl side, C.C >= 0, ...).
Notation parse(std::string_view text);

Subject parse_subject(std::string_view text);
Neighborhood parse_neighborhood(std::string_view text);

std::string format(const MK1A& n);
std::string format(const MK2A& n);
std::string format(const EPRes& p);
std::string format(const Subject& s);
std::string format(const Neighborhood& n);
std::string format(const Notation& x);

std::string kind_name(const Subject& s);

}  // namespace smmp
