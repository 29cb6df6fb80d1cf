#pragma once

#include "gonality/graph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace gonality {

enum class Format { Graph6, Sparse6, EdgeList };

/// Accepts "g6"/"graph6", "s6"/"sparse6", "edgelist".
Format parse_format_name(std::string_view name);
std::string_view format_name(Format format);

/// Guess the format of `text`: a leading ':' (after an optional >>sparse6<<
/// header) is sparse6, a line of whitespace-separated integers is an edge
/// list, anything else is tried as graph6.
Format detect_format(std::string_view text);

/// graph6 and sparse6 read a single line; the edge list reads the whole text,
/// one "u v" pair per line with an optional leading "n m" header.
Multigraph parse(std::string_view text, Format format);

/// Canonical, deterministic encoding without a trailing newline.
std::string encode(const Multigraph& g, Format format);

} // namespace gonality
