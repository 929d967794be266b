#pragma once

#include <string>
#include <vector>

#include "polytile/core.hpp"

namespace polytile {

/// "0,1,3,7" <-> IntegerSet.  Throws std::invalid_argument on malformed text.
IntegerSet parse_set(const std::string& text);
std::string format_set(const IntegerSet& s);

/// Two-line coloring format:
///   k=<num_colors> m=<period>
///   <word>
/// The word is a run of single digits, or comma-separated integers when k > 10.
std::string format_coloring(const PeriodicColoring& c);
PeriodicColoring parse_coloring(const std::string& text);

/// Inline flag form "k=3,m=6,word=010212".
PeriodicColoring parse_coloring_inline(const std::string& text);

/// "(0,0);(1,2);(3,4)" <-> list of lattice points (all the same dimension).
std::vector<std::vector<Int>> parse_points(const std::string& text);
std::string format_points(const std::vector<std::vector<Int>>& pts);

/// Comma-separated integer vector "1,0,1".
std::vector<Int> parse_int_vector(const std::string& text);

}  // namespace polytile
