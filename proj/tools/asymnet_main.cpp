/*
 * Copyright 2026 the asymnet authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// asymnet: command-line front end over .acpt model files.
//
// Exit codes: 0 success, 1 validation or semantic failure, 2 usage error,
// 3 I/O error, 4 atom-limit exceeded.  Identical invocations on identical
// inputs produce byte-identical output.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "asymnet/model.hpp"

namespace {

using nlohmann::json;
using namespace asymnet;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitResource = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::atom_limit_exceeded: return kExitResource;
    case ErrorCode::io_error: return kExitIo;
    default: return kExitFailure;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::io_error, "cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::io_error, "failed while reading '" + path + "'");
  }
  return std::move(buffer).str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::io_error, "cannot open '" + out_path + "' for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw Error(ErrorCode::io_error, "failed while writing '" + out_path + "'");
  }
}

ModelDocument load(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse(text, path);
  } catch (const ParseError& e) {
    // Rebuild the message with the file name attached.
    throw Error(ErrorCode::parse_failed, e.diagnostic().format(path));
  }
}

json violation_to_json(const Violation& v) {
  json out;
  out["kind"] = violation_kind_name(v.kind);
  out["message"] = v.message;
  out["witness"] = v.witness;
  return out;
}

json report_to_json(const ValidationReport& report) {
  json out;
  out["valid"] = report.valid();
  out["coverage_checked"] = report.coverage_checked;
  out["uncovered_count"] = report.uncovered_count;
  out["violations"] = json::array();
  for (const Violation& v : report.violations) {
    out["violations"].push_back(violation_to_json(v));
  }
  return out;
}

struct CommonOptions {
  std::size_t max_atoms = kDefaultAtomLimit;
  bool json_output = false;
};

// ---------------------------------------------------------------------------
// validate

int run_validate(const std::string& path, const CommonOptions& opts) {
  ModelDocument doc = load(path);
  StateSpaceTable spaces = doc.spaces();

  struct Entry {
    std::string kind;
    std::string name;
    ValidationReport report;
  };
  std::vector<Entry> entries;
  for (const AsymmetrySubnetwork& n : doc.networks) {
    ValidationReport report = n.context
                                  ? validate_subnetwork(n, spaces, opts.max_atoms)
                                  : validate_network(n, spaces, opts.max_atoms);
    entries.push_back(Entry{n.context ? "subnetwork" : "network", n.name,
                            std::move(report)});
  }
  for (const FactoredCPT& f : doc.factored) {
    entries.push_back(
        Entry{"factored", f.name, validate_factored(f, spaces, opts.max_atoms)});
  }

  bool all_valid = true;
  for (const Entry& entry : entries) {
    all_valid = all_valid && entry.report.valid();
  }

  if (opts.json_output) {
    json out;
    out["file"] = path;
    out["valid"] = all_valid;
    out["objects"] = json::array();
    for (const Entry& entry : entries) {
      json object = report_to_json(entry.report);
      object["kind"] = entry.kind;
      object["name"] = entry.name;
      out["objects"].push_back(std::move(object));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Entry& entry : entries) {
      std::cout << entry.kind << " " << entry.name << ": "
                << (entry.report.valid() ? "ok" : "invalid") << "\n";
      if (!entry.report.valid() || !entry.report.coverage_checked) {
        std::istringstream lines(to_text(entry.report));
        std::string line;
        while (std::getline(lines, line)) {
          std::cout << "  " << line << "\n";
        }
      }
    }
    std::cout << (all_valid ? "ok" : "invalid") << "\n";
  }
  if (!all_valid) {
    std::cerr << "validate: " << path << ": invalid\n";
    return kExitFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// atoms

int run_atoms(const std::string& path, const std::string& element_name,
              const CommonOptions& opts) {
  ModelDocument doc = load(path);

  std::vector<std::pair<std::string, const Element*>> matches;
  for (const NamedBrace& c : doc.contexts) {
    if (c.name == element_name) {
      matches.emplace_back("context " + c.name, &c.brace);
    }
  }
  for (const AsymmetrySubnetwork& n : doc.networks) {
    for (const PartitionElement& e : n.partition.elements) {
      if (e.name == element_name) {
        matches.emplace_back("network " + n.name + " element " + e.name,
                             &e.brace);
      }
    }
  }
  for (const FactoredCPT& f : doc.factored) {
    for (const FactoredMapping& m : f.mappings) {
      if (m.name == element_name) {
        matches.emplace_back("factored " + f.name + " element " + m.name,
                             &m.brace);
      }
    }
  }

  if (matches.empty()) {
    std::cerr << "atoms: no brace named '" << element_name << "' in " << path
              << "\n";
    return kExitFailure;
  }
  if (matches.size() > 1) {
    std::cerr << "atoms: name '" << element_name << "' is ambiguous:\n";
    for (const auto& [label, _] : matches) {
      std::cerr << "  " << label << "\n";
    }
    return kExitFailure;
  }

  AtomSet s = atoms(*matches.front().second, opts.max_atoms);
  if (opts.json_output) {
    json out;
    out["name"] = element_name;
    out["variables"] = json::array();
    for (const VariableType& v : s.variables) {
      out["variables"].push_back(v.display());
    }
    out["atoms"] = json::array();
    for (const Atom& atom : s.atoms) {
      out["atoms"].push_back(atom);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "variables:";
    for (const VariableType& v : s.variables) {
      std::cout << " " << v.display();
    }
    std::cout << "\n";
    for (const Atom& atom : s.atoms) {
      std::cout << to_string(atom) << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// canon

int run_canon(const std::string& path, const CommonOptions& opts) {
  ModelDocument doc = load(path);
  std::cout << serialize(doc, opts.max_atoms);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// combine

int run_combine(const std::vector<std::string>& paths,
                const std::string& policy_name, double tol,
                const std::string& out_path, const CommonOptions& opts) {
  CombinePolicy policy;
  policy.kind = policy_name == "merge" ? CombinePolicy::Kind::merge_if_equal
                                       : CombinePolicy::Kind::error_on_overlap;
  policy.tol = tol;

  StateSpaceTable spaces;
  std::vector<StateSpace> variables;
  std::vector<FactoredCPT> candidates;
  for (const std::string& path : paths) {
    ModelDocument doc = load(path);
    for (const StateSpace& space : doc.variables) {
      if (const StateSpace* known = spaces.find(space.variable)) {
        if (known->states != space.states) {
          throw Error(ErrorCode::invalid_model,
                      "variable " + space.variable.display() +
                          " declared with different states across inputs");
        }
        continue;
      }
      spaces.add(space);
      variables.push_back(space);
    }
    for (const FactoredCPT& f : doc.factored) {
      candidates.push_back(f);
    }
    for (const AsymmetrySubnetwork& n : doc.networks) {
      candidates.push_back(
          network_to_factored(n, spaces, /*lift=*/true, opts.max_atoms));
    }
  }
  if (candidates.empty()) {
    std::cerr << "combine: no networks or factored CPTs found\n";
    return kExitFailure;
  }

  std::map<VariableType, std::vector<const FactoredCPT*>> groups;
  for (const FactoredCPT& f : candidates) {
    groups[f.dependent].push_back(&f);
  }

  ModelDocument out_doc;
  out_doc.variables = std::move(variables);
  std::set<std::string> used_names;
  for (const auto& [dependent, members] : groups) {
    FactoredCPT merged = *members.front();
    for (std::size_t i = 1; i < members.size(); ++i) {
      merged = combine(merged, *members[i], policy, spaces, opts.max_atoms);
    }
    std::string base = "combined_" + dependent.name();
    std::string name = base;
    for (int k = 2; used_names.count(name) != 0; ++k) {
      name = base + "_" + std::to_string(k);
    }
    used_names.insert(name);
    merged.name = name;
    out_doc.factored.push_back(std::move(merged));
  }

  write_output(out_path, serialize(out_doc, opts.max_atoms));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lift

int run_lift(const std::string& path, const std::string& network_name,
             const std::string& out_path, const CommonOptions& opts) {
  ModelDocument doc = load(path);
  StateSpaceTable spaces = doc.spaces();

  const AsymmetrySubnetwork* found = nullptr;
  for (const AsymmetrySubnetwork& n : doc.networks) {
    if (n.name == network_name) {
      found = &n;
      break;
    }
  }
  if (found == nullptr) {
    std::cerr << "lift: no network named '" << network_name << "' in " << path
              << "\n";
    return kExitFailure;
  }

  FactoredCPT lifted =
      network_to_factored(*found, spaces, /*lift=*/true, opts.max_atoms);
  ModelDocument out_doc;
  out_doc.variables = doc.variables;
  out_doc.factored.push_back(std::move(lifted));
  write_output(out_path, serialize(out_doc, opts.max_atoms));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// expand

int run_expand(const std::string& path, const std::string& cpt_name,
               const std::string& out_path, const CommonOptions& opts) {
  ModelDocument doc = load(path);
  StateSpaceTable spaces = doc.spaces();

  std::optional<FactoredCPT> target;
  for (const FactoredCPT& f : doc.factored) {
    if (f.name == cpt_name) {
      target = f;
      break;
    }
  }
  if (!target) {
    for (const AsymmetrySubnetwork& n : doc.networks) {
      if (n.name == cpt_name) {
        target = network_to_factored(n, spaces, /*lift=*/true, opts.max_atoms);
        break;
      }
    }
  }
  if (!target) {
    std::cerr << "expand: no factored CPT or network named '" << cpt_name
              << "' in " << path << "\n";
    return kExitFailure;
  }

  DenseCPT dense = expand_to_cpt(*target, spaces, opts.max_atoms);
  write_output(out_path, export_dense(dense));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// stats

int run_stats(const std::string& path, const CommonOptions& opts) {
  ModelDocument doc = load(path);
  StateSpaceTable spaces = doc.spaces();

  struct Entry {
    std::string kind;
    std::string name;
    CompressionStats stats;
  };
  std::vector<Entry> entries;
  for (const FactoredCPT& f : doc.factored) {
    entries.push_back(
        Entry{"factored", f.name, compression_stats(f, spaces, opts.max_atoms)});
  }
  for (const AsymmetrySubnetwork& n : doc.networks) {
    FactoredCPT f = network_to_factored(n, spaces, /*lift=*/true, opts.max_atoms);
    entries.push_back(
        Entry{"network", n.name, compression_stats(f, spaces, opts.max_atoms)});
  }

  if (opts.json_output) {
    json out;
    out["file"] = path;
    out["objects"] = json::array();
    for (const Entry& entry : entries) {
      json object;
      object["kind"] = entry.kind;
      object["name"] = entry.name;
      object["dense_rows"] = entry.stats.dense_rows;
      object["mappings"] = entry.stats.mapping_count;
      object["distinct_distributions"] = entry.stats.distinct_distributions;
      object["covered_atoms"] = entry.stats.covered_atoms;
      object["ratio"] = entry.stats.ratio;
      out["objects"].push_back(std::move(object));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Entry& entry : entries) {
      std::ostringstream line;
      line << entry.kind << " " << entry.name
           << ": dense_rows=" << entry.stats.dense_rows
           << " mappings=" << entry.stats.mapping_count
           << " distinct_distributions=" << entry.stats.distinct_distributions
           << " covered_atoms=" << entry.stats.covered_atoms
           << " ratio=" << entry.stats.ratio;
      std::cout << line.str() << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// diff

int run_diff(const std::vector<std::string>& paths, double tol,
             const CommonOptions& opts) {
  ModelDocument a = load(paths[0]);
  ModelDocument b = load(paths[1]);
  std::vector<std::string> differences =
      document_differences(a, b, tol, opts.max_atoms);

  if (opts.json_output) {
    json out;
    out["equal"] = differences.empty();
    out["differences"] = differences;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const std::string& line : differences) {
      std::cout << line << "\n";
    }
  }
  if (!differences.empty()) {
    std::cerr << "diff: " << differences.size() << " difference"
              << (differences.size() == 1 ? "" : "s") << " between "
              << paths[0] << " and " << paths[1] << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asymmetry network toolkit: validate, transform and export "
               ".acpt model files"};
  app.require_subcommand(1);

  CommonOptions opts;
  auto add_common = [&](CLI::App* sub, bool with_json) {
    sub->add_option("--max-atoms", opts.max_atoms,
                    "Atom budget for brace expansion")
        ->capture_default_str();
    if (with_json) {
      sub->add_flag("--json", opts.json_output, "Emit a JSON report");
    }
  };

  std::string file;
  std::vector<std::string> files;
  std::string element_name;
  std::string network_name;
  std::string cpt_name;
  std::string out_path;
  std::string policy = "error";
  double tol = kDefaultTol;

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check every declaration in a file");
  validate_cmd->add_option("file", file, "Model file")->required();
  add_common(validate_cmd, /*with_json=*/true);

  CLI::App* atoms_cmd =
      app.add_subcommand("atoms", "Print the atom set of a named brace");
  atoms_cmd->add_option("file", file, "Model file")->required();
  atoms_cmd->add_option("--element", element_name, "Context or element name")
      ->required();
  add_common(atoms_cmd, /*with_json=*/true);

  CLI::App* canon_cmd =
      app.add_subcommand("canon", "Print the canonical serialization");
  canon_cmd->add_option("file", file, "Model file")->required();
  add_common(canon_cmd, /*with_json=*/false);

  CLI::App* combine_cmd = app.add_subcommand(
      "combine", "Combine all networks and factored CPTs per dependent "
                 "variable across the inputs");
  combine_cmd->add_option("files", files, "Model files")
      ->required()
      ->expected(-1);
  combine_cmd
      ->add_option("--policy", policy, "Overlap policy: error rejects any "
                                       "shared atom, merge accepts agreeing "
                                       "distributions")
      ->check(CLI::IsMember({"error", "merge"}))
      ->capture_default_str();
  combine_cmd->add_option("--tol", tol, "Agreement tolerance for merge")
      ->capture_default_str();
  combine_cmd->add_option("--out", out_path, "Output file (default stdout)");
  add_common(combine_cmd, /*with_json=*/false);

  CLI::App* lift_cmd = app.add_subcommand(
      "lift", "Rewrite a context subnetwork with its context made explicit");
  lift_cmd->add_option("file", file, "Model file")->required();
  lift_cmd->add_option("--network", network_name, "Network name")->required();
  lift_cmd->add_option("--out", out_path, "Output file (default stdout)");
  add_common(lift_cmd, /*with_json=*/false);

  CLI::App* expand_cmd = app.add_subcommand(
      "expand", "Export a dense table with one row per parent atom");
  expand_cmd->add_option("file", file, "Model file")->required();
  expand_cmd->add_option("--cpt", cpt_name, "Factored CPT or network name")
      ->required();
  expand_cmd->add_option("--out", out_path, "Output file (default stdout)");
  add_common(expand_cmd, /*with_json=*/false);

  CLI::App* stats_cmd = app.add_subcommand(
      "stats", "Compression statistics for every factored CPT and network");
  stats_cmd->add_option("file", file, "Model file")->required();
  add_common(stats_cmd, /*with_json=*/true);

  CLI::App* diff_cmd =
      app.add_subcommand("diff", "Compare two files at the atom-map level");
  diff_cmd->add_option("files", files, "Two model files")
      ->required()
      ->expected(2);
  diff_cmd->add_option("--tol", tol, "Distribution agreement tolerance")
      ->capture_default_str();
  add_common(diff_cmd, /*with_json=*/true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the usage error
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(file, opts);
    if (atoms_cmd->parsed()) return run_atoms(file, element_name, opts);
    if (canon_cmd->parsed()) return run_canon(file, opts);
    if (combine_cmd->parsed())
      return run_combine(files, policy, tol, out_path, opts);
    if (lift_cmd->parsed()) return run_lift(file, network_name, out_path, opts);
    if (expand_cmd->parsed()) return run_expand(file, cpt_name, out_path, opts);
    if (stats_cmd->parsed()) return run_stats(file, opts);
    if (diff_cmd->parsed()) return run_diff(files, tol, opts);
  } catch (const Error& e) {
    std::cerr << app.get_name() << ": " << error_code_name(e.code()) << ": "
              << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << app.get_name() << ": internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  std::cerr << "no command selected\n";
  return kExitUsage;
}
