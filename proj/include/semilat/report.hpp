#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "semilat/arrow.hpp"
#include "semilat/atlas.hpp"
#include "semilat/corpus.hpp"
#include "semilat/distributivity.hpp"
#include "semilat/ideals.hpp"
#include "semilat/semilattice.hpp"

namespace semilat {

inline nlohmann::json witness_json(const JoinSemilattice& j, const Witness& w) {
  nlohmann::json out;
  out["bindings"] = nlohmann::json::object();
  for (const Binding& b : w.bindings) out["bindings"][b.var] = j.poset().label(b.value);
  if (w.subset) {
    auto subset = nlohmann::json::array();
    for (const ElementId e : *w.subset) subset.push_back(j.poset().label(e));
    out["subset"] = subset;
  }
  return out;
}

// The stable per-model report object: {name, size, flags, witnesses} plus an
// expectations array when the document carried expect lines.
inline nlohmann::json spectrum_json(const JoinSemilattice& j, const SpectrumRecord& rec,
                                    const std::string& name) {
  nlohmann::json out;
  out["name"] = name;
  out["size"] = rec.size;
  out["code"] = rec.code;
  out["flags"] = nlohmann::json::object();
  for (const auto& [flag, value] : rec.flags) out["flags"][flag] = value;
  out["witnesses"] = nlohmann::json::object();
  for (const CheckReport& report : rec.failures)
    if (report.witness)
      out["witnesses"][report.notion.name()] = witness_json(j, *report.witness);
  return out;
}

inline std::string flags_table(const SpectrumRecord& rec) {
  std::size_t width = 0;
  for (const auto& [flag, value] : rec.flags) width = std::max(width, flag.size());
  std::string out;
  for (const auto& [flag, value] : rec.flags) {
    out += flag;
    out.append(width - flag.size() + 2, ' ');
    out += value ? "true" : "false";
    out += '\n';
  }
  return out;
}

inline nlohmann::json arrow_json(const JoinSemilattice& j, const ArrowTable& table) {
  const Poset& p = j.poset();
  nlohmann::json out;
  out["total"] = table.total();
  out["cells"] = nlohmann::json::object();
  for (ElementId a = 0; a < table.n; ++a) {
    nlohmann::json row = nlohmann::json::object();
    for (ElementId b = 0; b < table.n; ++b) {
      const ArrowEntry& e = table.at(a, b);
      if (e.value) {
        row[p.label(b)] = p.label(*e.value);
      } else {
        nlohmann::json cell;
        cell["undefined"] = true;
        cell["maximal_candidates"] = {p.label(e.certificate->first),
                                      p.label(e.certificate->second)};
        row[p.label(b)] = cell;
      }
    }
    out["cells"][p.label(a)] = row;
  }
  return out;
}

inline std::string arrow_text(const JoinSemilattice& j, const ArrowTable& table) {
  const Poset& p = j.poset();
  std::size_t width = 1;
  for (ElementId e = 0; e < j.size(); ++e) width = std::max(width, p.label(e).size());
  const auto pad = [width](const std::string& s) {
    return s + std::string(width - s.size() + 1, ' ');
  };

  std::string out = pad("->");
  for (ElementId b = 0; b < table.n; ++b) out += pad(p.label(b));
  out += '\n';
  std::string notes;
  for (ElementId a = 0; a < table.n; ++a) {
    out += pad(p.label(a));
    for (ElementId b = 0; b < table.n; ++b) {
      const ArrowEntry& e = table.at(a, b);
      out += pad(e.value ? p.label(*e.value) : "-");
      if (!e.value)
        notes += p.label(a) + " -> " + p.label(b) + " undefined: maximal candidates {" +
                 p.label(e.certificate->first) + ", " + p.label(e.certificate->second) + "}\n";
    }
    out += '\n';
  }
  return out + notes;
}

inline nlohmann::json subalgebra_json(const JoinSemilattice& j, const SubalgebraReport& r) {
  const Poset& p = j.poset();
  const auto pair_list = [&p](const std::vector<std::pair<ElementId, ElementId>>& pairs) {
    auto out = nlohmann::json::array();
    for (const auto& [a, b] : pairs) out.push_back({p.label(a), p.label(b)});
    return out;
  };
  nlohmann::json out;
  auto members = nlohmann::json::array();
  for (const ElementId e : r.members) members.push_back(p.label(e));
  out["members"] = members;
  out["join_closed"] = r.join_closed;
  out["join_escapes"] = pair_list(r.join_escapes);
  out["ambient_arrow_closed"] = r.ambient_arrow_closed;
  out["arrow_escapes"] = pair_list(r.arrow_escapes);
  out["ambient_undefined"] = pair_list(r.ambient_undefined);
  if (r.sub && r.intrinsic) out["intrinsic"] = arrow_json(*r.sub, *r.intrinsic);
  return out;
}

inline std::string family_name(FamilyVariant variant) {
  switch (variant) {
    case FamilyVariant::kAll: return "ideals";
    case FamilyVariant::kAllPlusEmpty: return "ideals plus empty";
    case FamilyVariant::kFp: return "principal intersections";
  }
  return "";
}

inline nlohmann::json ideal_families_json(const JoinSemilattice& j) {
  const auto family = [&](const IdealFamily& fam) {
    auto members = nlohmann::json::array();
    for (const ElementSet& ideal : fam.ideals) members.push_back(detail::ideal_label(j.poset(), ideal));
    return members;
  };
  const CharacterizationReport report = verify_characterizations(j);
  nlohmann::json out;
  out["ideals"] = family(all_ideals(j));
  out["ideals_plus_empty"] = family(all_ideals_plus_empty(j));
  out["principal_intersections"] = family(id_fp(j));
  auto pairs = nlohmann::json::array();
  for (const CharacterizationPair& pair :
       {report.gs_vs_ideals, report.k_vs_ideals_plus_empty, report.nd_vs_fp}) {
    nlohmann::json entry;
    entry["notion"] = pair.notion;
    entry["family"] = family_name(pair.family);
    entry["notion_holds"] = pair.notion_holds;
    entry["family_distributive"] = pair.family_distributive;
    entry["agree"] = pair.agree();
    pairs.push_back(entry);
  }
  out["characterizations"] = pairs;
  out["all_agree"] = report.all_agree();
  return out;
}

inline std::string ideal_families_text(const JoinSemilattice& j) {
  const auto line = [&](const char* title, const IdealFamily& fam) {
    std::string out = std::string(title) + ":";
    for (const ElementSet& ideal : fam.ideals) out += " " + detail::ideal_label(j.poset(), ideal);
    return out + "\n";
  };
  std::string out;
  out += line("ideals", all_ideals(j));
  out += line("ideals plus empty", all_ideals_plus_empty(j));
  out += line("principal intersections", id_fp(j));
  const CharacterizationReport report = verify_characterizations(j);
  for (const CharacterizationPair& pair :
       {report.gs_vs_ideals, report.k_vs_ideals_plus_empty, report.nd_vs_fp}) {
    out += pair.notion + " " + (pair.notion_holds ? "holds" : "fails") + ", " +
           family_name(pair.family) +
           (pair.family_distributive ? " is" : " is not") + " a distributive lattice: " +
           (pair.agree() ? "agree" : "DISAGREE") + "\n";
  }
  return out;
}

inline nlohmann::json outcome_json(const ModelOutcome& o) {
  nlohmann::json out = spectrum_json(o.model, o.record, o.doc.name);
  auto expectations = nlohmann::json::array();
  for (const ExpectationOutcome& e : o.expectations) {
    nlohmann::json entry;
    entry["flag"] = e.flag;
    entry["expected"] = e.expected;
    entry["actual"] = e.actual;
    expectations.push_back(entry);
  }
  out["expectations"] = expectations;
  return out;
}

inline nlohmann::json run_report_json(const RunReport& report) {
  auto models = nlohmann::json::array();
  for (const ModelOutcome& o : report.outcomes) models.push_back(outcome_json(o));
  nlohmann::json out;
  out["models"] = models;
  out["failed_expectations"] = report.failed_expectations();
  out["pass"] = report.all_pass();
  return out;
}

inline std::string run_report_text(const RunReport& report) {
  std::string out;
  for (const ModelOutcome& o : report.outcomes) {
    out += o.doc.name + " (" + std::to_string(o.record.size) + " elements): ";
    if (o.all_pass()) {
      out += "ok, " + std::to_string(o.expectations.size()) + " expectations\n";
    } else {
      out += "FAIL\n";
      for (const ExpectationOutcome& e : o.expectations)
        if (!e.pass())
          out += "  expect " + e.flag + " " + (e.expected ? "true" : "false") + ", got " +
                 (e.actual ? "true" : "false") + "\n";
    }
  }
  out += report.all_pass() ? "all expectations pass\n"
                           : std::to_string(report.failed_expectations()) +
                                 " expectation(s) failed\n";
  return out;
}

}  // namespace semilat
