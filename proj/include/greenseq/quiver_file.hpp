#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>

#include "greenseq/quiver.hpp"
#include "greenseq/sequence.hpp"

namespace greenseq {

/// Text format, 1-based:
///
///   quiver <n> <f>          n vertices, the last f frozen
///   label <i> <text>        optional, one per vertex
///   arrow <src> <dst> <m>   m >= 1 arrows src -> dst
///
/// Blank lines and lines starting with '#' are ignored. Repeated arrow lines
/// for the same pair add up; arrows in both directions, loops and arrows
/// between frozen vertices are rejected with ArgumentError (the message
/// carries the line number).
LabeledQuiver parse_quiver(std::istream& in);
LabeledQuiver parse_quiver(std::string_view text);
LabeledQuiver read_quiver_file(const std::string& path);

/// Canonical serialisation: header, every label in vertex order, then arrows
/// sorted by (src, dst). parse_quiver(format_quiver(q)) == q, labels included.
std::string format_quiver(const LabeledQuiver& q);

/// Steps separated by commas and/or whitespace. Each token is resolved as a
/// vertex label first, then as a 1-based index; with indices_only every token
/// must be an index. Throws ArgumentError naming the known labels.
MutationSequence parse_sequence(const LabeledQuiver& q, std::string_view text, bool indices_only = false);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string text_digest(std::string_view bytes);

}  // namespace greenseq
