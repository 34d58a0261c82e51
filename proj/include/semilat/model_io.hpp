#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semilat/atlas.hpp"
#include "semilat/errors.hpp"
#include "semilat/generators.hpp"
#include "semilat/poset.hpp"
#include "semilat/semilattice.hpp"

namespace semilat {

// One parsed model file: either an explicit element/relation listing or a
// generator reference, plus any expected flag values.
struct ModelDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  std::vector<std::pair<std::string, bool>> expectations;
  std::optional<std::pair<std::string, std::size_t>> generator;
};

namespace detail {

struct LineTokens {
  std::vector<std::string> words;
  std::vector<std::size_t> columns;
};

inline LineTokens split_line(std::string_view line) {
  LineTokens out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
    out.words.emplace_back(line.substr(start, i - start));
    out.columns.push_back(start + 1);
  }
  return out;
}

}  // namespace detail

// Line-oriented reader for the model format:
//   model <name>
//   elements <l1> <l2> ...
//   le <a> <b>
//   expect <FLAG> <true|false>
//   generator <family> <n>
// with `#` starting a comment. A document names its model exactly once and
// carries either element/le lines or one generator line, never both.
inline ModelDocument parse_model(std::string_view text) {
  ModelDocument doc;
  bool named = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    const auto fail = [&](const std::string& message, std::size_t column) -> ParseError {
      return ParseError(message, line_no, column);
    };

    const auto tokens = detail::split_line(line);
    pos = eol + 1;
    if (tokens.words.empty()) continue;
    const std::string& head = tokens.words.front();
    const std::size_t args = tokens.words.size() - 1;

    if (head == "model") {
      if (named) throw fail("duplicate model line", tokens.columns[0]);
      if (args != 1) throw fail("model takes exactly one name", tokens.columns[0]);
      doc.name = tokens.words[1];
      named = true;
    } else if (head == "elements") {
      if (doc.generator) throw fail("elements clash with the generator line", tokens.columns[0]);
      if (args == 0) throw fail("elements line lists no labels", tokens.columns[0]);
      for (std::size_t k = 1; k < tokens.words.size(); ++k)
        doc.elements.push_back(tokens.words[k]);
    } else if (head == "le") {
      if (doc.generator) throw fail("le clashes with the generator line", tokens.columns[0]);
      if (args != 2) throw fail("le takes exactly two labels", tokens.columns[0]);
      doc.relations.emplace_back(tokens.words[1], tokens.words[2]);
    } else if (head == "expect") {
      if (args != 2) throw fail("expect takes a flag and true|false", tokens.columns[0]);
      const std::string& flag = tokens.words[1];
      if (!detail::known_flag(flag))
        throw fail("unknown flag '" + flag + "'", tokens.columns[1]);
      const std::string& value = tokens.words[2];
      if (value != "true" && value != "false")
        throw fail("expected true or false, got '" + value + "'", tokens.columns[2]);
      doc.expectations.emplace_back(flag, value == "true");
    } else if (head == "generator") {
      if (!doc.elements.empty() || !doc.relations.empty())
        throw fail("generator clashes with element lines", tokens.columns[0]);
      if (doc.generator) throw fail("duplicate generator line", tokens.columns[0]);
      if (args != 2) throw fail("generator takes a family and a size", tokens.columns[0]);
      const std::string& family = tokens.words[1];
      if (family != "hk" && family != "grid")
        throw fail("unknown generator family '" + family + "'", tokens.columns[1]);
      const std::string& digits = tokens.words[2];
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                         [](char c) { return c >= '0' && c <= '9'; }))
        throw fail("generator size must be a positive integer", tokens.columns[2]);
      doc.generator = {family, static_cast<std::size_t>(std::stoul(digits))};
    } else {
      throw fail("unknown directive '" + head + "'", tokens.columns[0]);
    }
    if (eol == text.size()) break;
  }

  if (!named) throw ParseError("missing model line", line_no, 1);
  if (!doc.generator && doc.elements.empty())
    throw ParseError("model has no elements and no generator", line_no, 1);
  for (const auto& [a, b] : doc.relations) {
    for (const std::string& l : {a, b}) {
      if (std::find(doc.elements.begin(), doc.elements.end(), l) == doc.elements.end())
        throw UnknownLabel("le references undeclared element '" + l + "'", l);
    }
  }
  return doc;
}

inline std::string serialize_model(const ModelDocument& doc) {
  std::string out = "model " + doc.name + "\n";
  if (doc.generator) {
    out += "generator " + doc.generator->first + " " + std::to_string(doc.generator->second) +
           "\n";
  } else {
    out += "elements";
    for (const std::string& l : doc.elements) out += " " + l;
    out += "\n";
    for (const auto& [a, b] : doc.relations) out += "le " + a + " " + b + "\n";
  }
  for (const auto& [flag, value] : doc.expectations)
    out += "expect " + flag + (value ? " true" : " false") + "\n";
  return out;
}

// Materializes the document's model, expanding generator references.
inline JoinSemilattice instantiate(const ModelDocument& doc) {
  if (doc.generator) {
    const auto& [family, n] = *doc.generator;
    return family == "hk" ? hk_truncation(n) : grid_lattice(n);
  }
  return JoinSemilattice::validate(Poset::from_hasse(doc.elements, doc.relations));
}

}  // namespace semilat
