#include "surprise/tree_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace surprise::io {

namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  DecisionTree node(const json& j, const std::string& pointer, bool is_root) {
    if (!j.is_object()) {
      fail(pointer, j, "node must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
      if (key != "p" && key != "outcome" && key != "children" && key != "label") {
        fail(pointer, j, "unknown field '" + key + "'");
      }
    }
    if (j.contains("label") && !j["label"].is_string()) {
      fail(pointer, j, "field 'label' must be a string");
    }
    if (is_root && j.contains("p")) {
      const double p = probability(j, pointer);
      if (std::abs(p - 1.0) > 1e-9) {
        fail(pointer, j, "root probability must be 1");
      }
    }

    const bool leaf = j.contains("outcome");
    const bool branch = j.contains("children");
    if (leaf == branch) {
      fail(pointer, j, leaf ? "node has both 'outcome' and 'children'"
                            : "missing field: node needs 'outcome' or 'children'");
    }
    if (leaf) {
      const json& x = j["outcome"];
      if (!x.is_number() || !std::isfinite(x.get<double>())) {
        fail(pointer, j, "field 'outcome' must be a finite number");
      }
      return DecisionTree::leaf(x.get<double>());
    }

    const json& kids = j["children"];
    if (!kids.is_array() || kids.empty()) {
      fail(pointer, j, "field 'children' must be a non-empty array");
    }
    std::vector<Transition> children;
    double total = 0.0;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const std::string child_pointer = pointer + "/children/" + std::to_string(i);
      if (!kids[i].is_object() || !kids[i].contains("p")) {
        fail(child_pointer, kids[i], "missing field 'p'");
      }
      const double p = probability(kids[i], child_pointer);
      total += p;
      children.push_back({p, node(kids[i], child_pointer, false)});
    }
    if (std::abs(total - 1.0) > 1e-9) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "probability sum: children sum to " << total << ", expected 1 within 1e-9";
      fail(pointer, j, msg.str());
    }
    return DecisionTree::branch(std::move(children));
  }

 private:
  double probability(const json& j, const std::string& pointer) {
    const json& p = j["p"];
    if (!p.is_number()) {
      fail(pointer, j, "field 'p' must be a number");
    }
    const double value = p.get<double>();
    if (!std::isfinite(value) || value < 0.0) {
      fail(pointer, j, "negative probability");
    }
    if (value > 1.0) {
      fail(pointer, j, "probability above 1");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& pointer, const json& j,
                         const std::string& what) {
    std::string where = pointer.empty() ? "/" : pointer;
    if (j.is_object() && j.contains("label") && j["label"].is_string()) {
      where += " (label '" + j["label"].get<std::string>() + "')";
    }
    throw TreeFileError(TreeErrorCategory::Invariant,
                        std::string(source_) + ": node " + where + ": " + what);
  }

  std::string_view source_;
};

}  // namespace

DecisionTree parse_tree_text(std::string_view text, std::string_view source) {
  json document;
  try {
    document = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw TreeFileError(TreeErrorCategory::Syntax,
                        std::string(source) + ": " + e.what());
  }
  return Reader(source).node(document, "", true);
}

DecisionTree parse_tree_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw TreeFileError(TreeErrorCategory::Io,
                        path.string() + ": cannot open tree file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw TreeFileError(TreeErrorCategory::Io, path.string() + ": read failed");
  }
  return parse_tree_text(buffer.str(), path.string());
}

}  // namespace surprise::io
