#include <doctest.h>

#include <string>

#include "surprise/tree_file.hpp"

using namespace surprise;
using namespace surprise::io;

namespace {

TreeErrorCategory category_of(const std::string& text) {
  try {
    parse_tree_text(text);
  } catch (const TreeFileError& e) {
    return e.category();
  }
  FAIL("accepted: " << text);
  return TreeErrorCategory::Io;
}

std::string message_of(const std::string& text) {
  try {
    parse_tree_text(text, "t.json");
  } catch (const TreeFileError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse leaves and branches") {
  CHECK(parse_tree_text(R"({"outcome": 5.0})") == DecisionTree::leaf(5.0));
  const auto t = parse_tree_text(R"({"p": 1, "children": [
      {"p": 0.25, "outcome": 4, "label": "win"},
      {"p": 0.75, "outcome": 0}]})");
  CHECK(t == DecisionTree::branch({{0.25, DecisionTree::leaf(4.0)},
                                   {0.75, DecisionTree::leaf(0.0)}}));
}

TEST_CASE("shipped example files") {
  const std::string dir = SURPRISE_DATA_DIR "/trees/";
  const auto allais = parse_tree_file(dir + "allais2_grouped.json");
  CHECK(std::abs(annotate(allais).expectation - 1.39) < 1e-12);
  const auto certain = parse_tree_file(dir + "certain.json");
  CHECK(surprise_tree(certain, SurpriseSpec::power(1.5, 2.0)) == 0.0);
  const auto hit = parse_tree_file(dir + "blackjack_hit.json");
  CHECK(enumerate_trajectories(hit).size() == 3);
  CHECK(std::abs(annotate(hit).expectation + 0.54) < 1e-12);
}

TEST_CASE("invariant violations name the node") {
  const std::string sum = R"({"children": [{"p": 0.5, "outcome": 1},
      {"p": 0.48, "outcome": 2, "label": "short"}]})";
  CHECK(category_of(sum) == TreeErrorCategory::Invariant);
  CHECK(message_of(sum).find("probability sum") != std::string::npos);
  CHECK(message_of(sum).find("t.json") == 0);

  const std::string negative = R"({"children": [{"p": 0.5, "outcome": 1},
      {"p": -0.5, "outcome": 2, "label": "neg"}, {"p": 1.0, "outcome": 3}]})";
  CHECK(message_of(negative).find("/children/1 (label 'neg')") != std::string::npos);
  CHECK(message_of(negative).find("negative probability") != std::string::npos);

  const std::string missing_p = R"({"children": [{"outcome": 1}]})";
  CHECK(message_of(missing_p).find("missing field 'p'") != std::string::npos);
  CHECK(category_of(R"({"p": 1})") == TreeErrorCategory::Invariant);
  CHECK(message_of(R"({"p": 1})").find("missing field") != std::string::npos);
  CHECK(category_of(R"({"outcome": 1, "children": []})") == TreeErrorCategory::Invariant);
  CHECK(category_of(R"({"outcome": "1"})") == TreeErrorCategory::Invariant);
  CHECK(category_of(R"({"outcome": 1, "prob": 1})") == TreeErrorCategory::Invariant);
  CHECK(category_of(R"({"p": 0.5, "outcome": 1})") == TreeErrorCategory::Invariant);
  CHECK(category_of(R"({"children": []})") == TreeErrorCategory::Invariant);
  CHECK(category_of(R"([1, 2])") == TreeErrorCategory::Invariant);
}

TEST_CASE("syntax and io errors") {
  CHECK(category_of(R"({"outcome": 5.0,})") == TreeErrorCategory::Syntax);
  const auto msg = message_of("{\n  \"outcome\": \n}");
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK_THROWS_AS(parse_tree_file("/nonexistent/tree.json"), TreeFileError);
  try {
    parse_tree_file("/nonexistent/tree.json");
  } catch (const TreeFileError& e) {
    CHECK(e.category() == TreeErrorCategory::Io);
  }
}
