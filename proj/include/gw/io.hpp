#pragma once

#include <string>
#include <string_view>

#include "gw/graph.hpp"

namespace gw {

enum class Format { json, dot, edgelist };

/// Throws InvalidArgument for anything but "json", "dot", "edgelist".
Format format_from_string(std::string_view name);

/// Byte-stable text form. JSON is one line plus a trailing newline.
std::string serialize(const Graph& g, Format format);

/// json or edgelist; dot is export-only. Throws ParseError with line/column.
Graph parse(std::string_view text, Format format);

/// json when the first non-blank character is '{', edgelist otherwise.
Graph parse_auto(std::string_view text);

}  // namespace gw
