#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "semilat/atlas.hpp"
#include "semilat/errors.hpp"
#include "semilat/model_io.hpp"
#include "semilat/semilattice.hpp"

namespace semilat {

struct ExpectationOutcome {
  std::string flag;
  bool expected = false;
  bool actual = false;

  bool pass() const { return expected == actual; }
};

struct ModelOutcome {
  std::string file;
  ModelDocument doc;
  JoinSemilattice model;
  SpectrumRecord record;
  std::vector<ExpectationOutcome> expectations;

  bool all_pass() const {
    for (const auto& e : expectations)
      if (!e.pass()) return false;
    return true;
  }
};

struct RunReport {
  std::vector<ModelOutcome> outcomes;

  bool all_pass() const {
    for (const auto& o : outcomes)
      if (!o.all_pass()) return false;
    return true;
  }
  std::size_t failed_expectations() const {
    std::size_t failed = 0;
    for (const auto& o : outcomes)
      for (const auto& e : o.expectations)
        if (!e.pass()) ++failed;
    return failed;
  }
};

inline ModelOutcome run_document(const ModelDocument& doc, std::string file = {}) {
  ModelOutcome outcome{std::move(file), doc, instantiate(doc), {}, {}};
  outcome.record = classify(outcome.model);
  for (const auto& [flag, expected] : doc.expectations)
    outcome.expectations.push_back({flag, expected, flag_value(outcome.record, flag)});
  return outcome;
}

// Classifies every .jsl document in the directory, in filename order, and
// evaluates its expectations. An empty directory is a passing (empty) run.
inline RunReport run_corpus(const std::filesystem::path& directory) {
  if (!std::filesystem::is_directory(directory))
    throw Error("corpus directory '" + directory.string() + "' does not exist");

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory))
    if (entry.is_regular_file() && entry.path().extension() == ".jsl")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  RunReport report;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
      report.outcomes.push_back(run_document(parse_model(text.str()), path.filename().string()));
    } catch (const Error& e) {
      throw Error(path.filename().string() + ": " + e.what());
    }
  }
  return report;
}

}  // namespace semilat
