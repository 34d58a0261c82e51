#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semilat.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw semilat::Error("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void emit(const nlohmann::json& json) { std::cout << json.dump(2) << "\n"; }

const char* yes_no(bool value) { return value ? "yes" : "no"; }

int cmd_validate(const std::string& file, bool as_json) {
  const auto doc = semilat::parse_model(slurp(file));
  const auto model = semilat::instantiate(doc);
  const auto& poset = model.poset();
  if (as_json) {
    nlohmann::json out;
    out["name"] = doc.name;
    out["size"] = model.size();
    out["top"] = poset.label(model.top());
    out["lattice"] = semilat::is_lattice(model);
    out["downward_directed"] = semilat::is_downward_directed(model);
    emit(out);
  } else {
    std::cout << "model " << doc.name << ": join-semilattice, " << model.size()
              << " elements, top " << poset.label(model.top()) << "\n"
              << "lattice: " << yes_no(semilat::is_lattice(model)) << "\n"
              << "downward directed: " << yes_no(semilat::is_downward_directed(model)) << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& file, bool as_json) {
  const auto outcome = semilat::run_document(semilat::parse_model(slurp(file)), file);
  if (as_json) {
    emit(semilat::outcome_json(outcome));
  } else {
    std::cout << outcome.doc.name << " (" << outcome.record.size << " elements)\n"
              << semilat::flags_table(outcome.record);
    for (const auto& e : outcome.expectations) {
      std::cout << "expect " << e.flag << " " << (e.expected ? "true" : "false") << ": ";
      if (e.pass())
        std::cout << "ok\n";
      else
        std::cout << "FAIL (got " << (e.actual ? "true" : "false") << ")\n";
    }
  }
  return outcome.all_pass() ? 0 : kExitViolation;
}

int cmd_ideals(const std::string& file, bool as_json) {
  const auto model = semilat::instantiate(semilat::parse_model(slurp(file)));
  if (as_json)
    emit(semilat::ideal_families_json(model));
  else
    std::cout << semilat::ideal_families_text(model);
  return semilat::verify_characterizations(model).all_agree() ? 0 : kExitViolation;
}

int cmd_arrow(const std::string& file, const std::vector<std::string>& subset, bool as_json) {
  const auto model = semilat::instantiate(semilat::parse_model(slurp(file)));
  const auto& poset = model.poset();

  if (subset.empty()) {
    const auto table = semilat::arrow_table(model);
    if (as_json)
      emit(semilat::arrow_json(model, table));
    else
      std::cout << semilat::arrow_text(model, table);
    return 0;
  }

  semilat::ElementSet members;
  for (const std::string& label : subset) members.insert(poset.index(label));
  const auto report = semilat::closed_subalgebra_report(model, members);
  if (as_json) {
    emit(semilat::subalgebra_json(model, report));
    return 0;
  }

  std::cout << "subset {";
  const char* sep = "";
  for (const semilat::ElementId e : report.members) {
    std::cout << sep << poset.label(e);
    sep = ", ";
  }
  std::cout << "}\n";

  std::cout << "join closed: " << yes_no(report.join_closed) << "\n";
  for (const auto& [a, b] : report.join_escapes)
    std::cout << "  " << poset.label(a) << " v " << poset.label(b) << " = "
              << poset.label(model.join(a, b)) << " escapes\n";

  std::cout << "ambient arrow closed: " << yes_no(report.ambient_arrow_closed) << "\n";
  for (const auto& [a, b] : report.arrow_escapes) {
    const auto entry = semilat::arrow_entry(model, a, b);
    std::cout << "  " << poset.label(a) << " -> " << poset.label(b) << " = "
              << poset.label(*entry.value) << " escapes\n";
  }
  for (const auto& [a, b] : report.ambient_undefined)
    std::cout << "  " << poset.label(a) << " -> " << poset.label(b)
              << " undefined in the ambient model\n";

  if (report.sub && report.intrinsic) {
    std::cout << "intrinsic arrow on the subset:\n"
              << semilat::arrow_text(*report.sub, *report.intrinsic);
  }
  return 0;
}

int cmd_atlas(std::size_t max_n, std::size_t workers, bool as_json) {
  const auto summary = semilat::verify_chain(max_n, workers);
  if (as_json) {
    nlohmann::json out;
    out["max_size"] = summary.max_size;
    out["models_per_size"] = summary.models_per_size;
    out["total"] = summary.total();
    out["flag_counts"] = summary.flag_counts;
    out["chain_violations"] = 0;
    emit(out);
  } else {
    std::cout << summary.text();
  }
  return 0;
}

int cmd_search(const std::string& predicate, std::size_t max_n, bool as_json) {
  const auto result = semilat::find_minimal(predicate, max_n);
  if (as_json) {
    nlohmann::json out;
    out["predicate"] = predicate;
    out["searched_to"] = result.searched_to;
    auto models = nlohmann::json::array();
    for (const auto& rec : result.models) {
      nlohmann::json entry;
      entry["code"] = rec.code;
      entry["size"] = rec.size;
      entry["flags"] = rec.flags;
      models.push_back(entry);
    }
    out["models"] = models;
    if (!result.models.empty()) out["minimal_size"] = result.models.front().size;
    emit(out);
    return 0;
  }

  if (result.models.empty()) {
    std::cout << "no model of size <= " << result.searched_to << " satisfies " << predicate
              << "\n";
    return 0;
  }
  std::cout << result.models.size() << " minimal model(s) of size " << result.models.front().size
            << " satisfy " << predicate << "\n";
  for (const auto& rec : result.models) std::cout << "  code " << rec.code << "\n";
  return 0;
}

int cmd_corpus(const std::string& directory, bool as_json) {
  const auto report = semilat::run_corpus(directory);
  if (as_json)
    emit(semilat::run_report_json(report));
  else
    std::cout << semilat::run_report_text(report);
  return report.all_pass() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite join-semilattice toolkit"};
  app.require_subcommand(1);

  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  std::string file;
  std::string directory;
  std::string predicate;
  std::vector<std::string> subset;
  std::size_t max_n = 6;
  std::size_t workers = 1;

  auto* validate = app.add_subcommand("validate", "check that a document is a join-semilattice");
  validate->add_option("file", file, "model document")->required()->check(CLI::ExistingFile);

  auto* classify = app.add_subcommand("classify", "compute every distributivity flag");
  classify->add_option("file", file, "model document")->required()->check(CLI::ExistingFile);

  auto* ideals = app.add_subcommand("ideals", "list ideal families and their characterizations");
  ideals->add_option("file", file, "model document")->required()->check(CLI::ExistingFile);

  auto* arrow = app.add_subcommand("arrow", "print the arrow table, or analyze a subset");
  arrow->add_option("file", file, "model document")->required()->check(CLI::ExistingFile);
  arrow->add_option("--subset", subset, "comma-separated element labels")->delimiter(',');

  const auto size_range = CLI::Range(std::size_t{1}, semilat::kEnumerationCap);
  auto* atlas = app.add_subcommand("atlas", "enumerate all models and verify the implication chain");
  atlas->add_option("--max-n", max_n, "largest model size")->capture_default_str()->check(size_range);
  atlas->add_option("--workers", workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "find the minimal models satisfying a predicate");
  search->add_option("--pred", predicate, "boolean expression over flag names")->required();
  search->add_option("--max-n", max_n, "largest size searched")->capture_default_str()->check(size_range);

  auto* corpus = app.add_subcommand("corpus", "classify a directory of documents");
  corpus->add_option("directory", directory, "corpus directory")
      ->required()
      ->check(CLI::ExistingDirectory);

  for (auto* sub : {validate, classify, ideals, arrow, atlas, search, corpus})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const bool as_json = format == "json";
  try {
    if (validate->parsed()) return cmd_validate(file, as_json);
    if (classify->parsed()) return cmd_classify(file, as_json);
    if (ideals->parsed()) return cmd_ideals(file, as_json);
    if (arrow->parsed()) return cmd_arrow(file, subset, as_json);
    if (atlas->parsed()) return cmd_atlas(max_n, workers, as_json);
    if (search->parsed()) return cmd_search(predicate, max_n, as_json);
    if (corpus->parsed()) return cmd_corpus(directory, as_json);
  } catch (const semilat::ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": "
              << e.what() << "\n";
    return kExitUsage;
  } catch (const semilat::UnknownLabel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const semilat::ChainViolation& e) {
    std::cerr << "error: " << e.what() << " (" << e.detail() << ")\n";
    return kExitViolation;
  } catch (const semilat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return 0;
}
