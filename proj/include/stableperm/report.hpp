#ifndef STABLEPERM_REPORT_HPP
#define STABLEPERM_REPORT_HPP

// Machine- and human-readable renderings of verdicts and reports.
//
// JSON output is one object per invocation with keys in a fixed order:
// "command", "inputs", "result", "tool_version", then "seed" for sampled runs.
// Timing is left out unless asked for, so repeated runs are byte-identical.

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "json.hpp"

#include "cycles.hpp"
#include "enumeration.hpp"
#include "family.hpp"
#include "stability.hpp"
#include "version.hpp"

namespace stableperm::report {

using json = nlohmann::ordered_json;

inline json letters(const MultiIndex& m) {
  json out = json::array();
  for (int l : m.letters())
    out.push_back(l);
  return out;
}

inline json to_json(const Witness& w) {
  json j;
  j["alpha"] = letters(w.alpha);
  j["lhs"] = letters(w.lhs);
  j["rhs"] = letters(w.rhs);
  return j;
}

inline json to_json(const FamilySpec& s) {
  json j;
  j["n"] = s.n;
  j["a1"] = s.a1;
  j["a2"] = s.a2;
  j["b1"] = s.b1;
  j["b2"] = s.b2;
  j["b3"] = s.b3;
  j["b4"] = s.b4;
  return j;
}

inline json to_json(const StabilityVerdict& v) {
  json j;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, StableWithRank>) {
          j["status"] = "StableWithRank";
          j["rank"] = s.rank;
        } else if constexpr (std::is_same_v<S, NotStableWithinHorizon>) {
          j["status"] = "NotStableWithinHorizon";
          j["rank"] = nullptr;
        } else {
          j["status"] = "Rank1Exact";
          j["rank"] = s.stable ? json(1) : json(nullptr);
        }
      },
      v.status);
  j["stable"] = v.stable();
  j["k_max"] = v.k_max;
  j["l_max"] = v.l_max;
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return j;
}

inline json to_json(const CaseWitness& w) {
  json j = to_json(w.witness);
  j["case"] = std::string(label(w.which));
  j["normalized"] = to_json(w.normalized);
  j["reductions"] = json::array();
  for (Reduction r : w.reductions)
    j["reductions"].push_back(std::string(label(r)));
  return j;
}

inline json to_json(const FamilyVerdict& v) {
  json j;
  j["condition_i"] = v.conditions.condition_i;
  j["condition_ii"] = v.conditions.condition_ii;
  j["predicted_stable"] = v.predicted_stable();
  j["verified_stable"] = v.verified_stable;
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return j;
}

inline json to_json(const PsiTrace& t) {
  json levels = json::array();
  for (std::size_t j = 0; j < t.terms.size(); ++j) {
    json level;
    level["j"] = j;
    level["length"] = t.terms[j].length();
    level["cycles"] = format_cycles(t.terms[j]);
    level["settled"] = j == 0 ? json(nullptr) : json(static_cast<bool>(t.settled[j]));
    levels.push_back(std::move(level));
  }
  json j;
  j["horizon"] = t.horizon();
  j["levels"] = std::move(levels);
  return j;
}

inline json to_json(const EnumReport& r, bool timing = false) {
  json j;
  json space;
  space["kind"] = std::string(label(r.space.kind));
  space["n"] = r.space.n;
  space["cardinality"] = r.space.cardinality;
  j["space"] = std::move(space);
  if (r.sampling) {
    json s;
    s["seed"] = r.sampling->seed;
    s["samples"] = r.sampling->samples;
    j["sampling"] = std::move(s);
  } else {
    j["sampling"] = nullptr;
  }
  j["examined"] = r.examined;
  j["complete"] = r.complete();
  j["stable_count"] = r.stable_count;
  if (r.theorem) {
    json t;
    t["condition_i"] = r.theorem->condition_i;
    t["condition_ii"] = r.theorem->condition_ii;
    t["predicted_stable"] = r.theorem->predicted_stable;
    t["verified_stable"] = r.theorem->verified_stable;
    j["theorem"] = std::move(t);
  } else {
    j["theorem"] = nullptr;
  }
  json classes = json::array();
  for (const ClassTally& c : r.classes) {
    json row;
    row["class"] = c.name;
    row["examined"] = c.examined;
    row["stable"] = c.stable;
    classes.push_back(std::move(row));
  }
  j["classes"] = std::move(classes);
  j["mismatches"] = r.mismatches;
  j["stable_elements"] = r.stable_elements;
  j["partitions"] = r.partitions;
  if (timing)
    j["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(r.wall_time).count();
  return j;
}

inline json envelope(std::string_view command, json inputs, json result,
                     std::optional<std::uint64_t> seed = std::nullopt) {
  json j;
  j["command"] = std::string(command);
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  j["tool_version"] = std::string(version);
  if (seed)
    j["seed"] = *seed;
  return j;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Header: space,n,class,examined,stable. One row per class.
inline std::string to_csv(const EnumReport& r) {
  std::ostringstream os;
  os << "space,n,class,examined,stable\n";
  for (const ClassTally& c : r.classes)
    os << label(r.space.kind) << ',' << r.space.n << ",\"" << c.name << "\"," << c.examined << ','
       << c.stable << '\n';
  return os.str();
}

inline std::string to_text(const Witness& w) {
  return "alpha=" + to_string(w.alpha) + " lhs=" + to_string(w.lhs) + " rhs=" + to_string(w.rhs);
}

inline std::string to_text(const StabilityVerdict& v) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, StableWithRank>)
          os << "stable of rank " << s.rank << " (k_max=" << v.k_max << ", l_max=" << v.l_max
             << ")\n";
        else if constexpr (std::is_same_v<S, NotStableWithinHorizon>)
          os << "not stable within horizon (k_max=" << v.k_max << ", l_max=" << v.l_max << ")\n";
        else
          os << (s.stable ? "stable of rank 1 (exact criterion)\n"
                          : "not stable of rank 1 (exact criterion)\n");
      },
      v.status);
  if (v.witness)
    os << "witness: " << to_text(*v.witness) << '\n';
  return os.str();
}

inline std::string to_text(const FamilyVerdict& v) {
  std::ostringstream os;
  os << "condition (i):    " << (v.conditions.condition_i ? "yes" : "no") << '\n'
     << "condition (ii):   " << (v.conditions.condition_ii ? "yes" : "no") << '\n'
     << "predicted stable: " << (v.predicted_stable() ? "yes" : "no") << '\n'
     << "verified stable:  " << (v.verified_stable ? "yes" : "no") << '\n';
  if (v.witness) {
    os << "case: " << label(v.witness->which);
    for (Reduction r : v.witness->reductions)
      os << " [" << label(r) << ']';
    os << '\n' << "witness: " << to_text(v.witness->witness) << '\n';
  }
  return os.str();
}

inline std::string to_text(const PsiTrace& t) {
  std::ostringstream os;
  for (std::size_t j = 0; j < t.terms.size(); ++j) {
    os << "Psi_" << j << " [length " << t.terms[j].length() << "]";
    if (j > 0)
      os << " settled=" << (t.settled[j] ? "true" : "false");
    os << ": " << format_cycles(t.terms[j]) << '\n';
  }
  return os.str();
}

inline std::string to_text(const EnumReport& r) {
  std::ostringstream os;
  os << label(r.space.kind) << " n=" << r.space.n << '\n';
  if (r.sampling)
    os << "sampled " << r.sampling->samples << " of " << r.space.cardinality << " (seed "
       << r.sampling->seed << ")\n";
  os << "examined: " << r.examined << " / " << r.expected() << '\n'
     << "stable:   " << r.stable_count << '\n';
  if (r.theorem)
    os << "condition (i): " << r.theorem->condition_i
       << "  condition (ii): " << r.theorem->condition_ii
       << "  predicted stable: " << r.theorem->predicted_stable
       << "  verified stable: " << r.theorem->verified_stable << '\n';
  for (const ClassTally& c : r.classes)
    os << "  " << c.name << ": " << c.stable << " / " << c.examined << '\n';
  os << "mismatches: " << r.mismatches.size() << '\n';
  for (const auto& m : r.mismatches)
    os << "  " << m << '\n';
  if (!r.stable_elements.empty()) {
    os << "stable elements:\n";
    for (const auto& e : r.stable_elements)
      os << "  " << e << '\n';
  }
  return os.str();
}

}  // namespace stableperm::report

#endif  // STABLEPERM_REPORT_HPP
