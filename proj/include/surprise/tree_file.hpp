#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "surprise/decision_tree.hpp"

namespace surprise::io {

/// Why a tree description was rejected.
enum class TreeErrorCategory { Io, Syntax, Invariant };

class TreeFileError : public std::runtime_error {
 public:
  TreeFileError(TreeErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  TreeErrorCategory category() const { return category_; }

 private:
  TreeErrorCategory category_;
};

/// Reads a JSON tree description:
///
///   node  := { "p": <probability>,            (required except at the root)
///              "outcome": <number>             (leaf)
///            | "children": [ node, ... ],      (branch)
///              "label": <string> }            (optional)
///
/// Invariant diagnostics name the node by JSON pointer (and label, if any);
/// syntax diagnostics carry line and column.
DecisionTree parse_tree_file(const std::filesystem::path& path);

/// Same as parse_tree_file on in-memory text; `source` prefixes diagnostics.
DecisionTree parse_tree_text(std::string_view text,
                             std::string_view source = "<input>");

}  // namespace surprise::io
