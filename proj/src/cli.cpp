#include "isorep/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isorep/error.hpp"
#include "isorep/io.hpp"

namespace isorep::cli {
namespace {

using io::json;

struct Inputs {
  std::istream& in;
  bool stdin_used = false;

  json load(const std::string& path) {
    std::string text;
    if (path == "-") {
      if (stdin_used) throw InputError("'-' (stdin) may be given only once");
      stdin_used = true;
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(path);
      if (!f) throw InputError("cannot open '" + path + "'");
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError((path == "-" ? std::string("<stdin>") : path) + ": invalid JSON: " + e.what());
    }
  }
};

std::optional<std::uint64_t> state_cap_from_env() {
  const char* raw = std::getenv("ISOREP_STATE_CAP");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw InputError(std::string("ISOREP_STATE_CAP must be a positive integer, got '") + raw + "'");
  return v;
}

// Table mode: an indented rendering of the JSON document, nothing added.
bool is_scalar_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (is_scalar_array(j)) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    return s + ")";
  }
  return j.dump();
}

void render_table(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !is_scalar_array(value) && !value.empty()) {
        out << pad << key << ":\n";
        render_table(value, out, indent + 1);
      } else {
        out << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const json& value = j[i];
      if (value.is_structured() && !is_scalar_array(value)) {
        out << pad << "[" << i << "]\n";
        render_table(value, out, indent + 1);
      } else {
        out << pad << "[" << i << "] " << scalar_text(value) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

void emit(const json& j, bool table, std::ostream& out) {
  if (table)
    render_table(j, out, 0);
  else
    out << j.dump(2) << "\n";
}

json domain_report(const DomainError& e) {
  return {{"error", e.what()}, {"ids", e.ids()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Split equivariant principal bundles from cellular isotropy data", "isorep"};
  app.require_subcommand(1, 1);
  std::string format = "json";
  app.add_option("--format", format, "Output mode")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  bool table_flag = false;
  app.add_flag("--table", table_flag, "Shorthand for --format table");
  app.fallthrough();

  std::string groupoid_path, family_path, coords_path, instance_path;

  auto* validate = app.add_subcommand("validate", "Check a groupoid (or a bare complex) for consistency");
  validate->add_option("input", groupoid_path, "Groupoid or complex JSON, '-' for stdin")->required();

  auto* rep = app.add_subcommand("rep", "Cellular representations into an abelian group");
  std::size_t torus_rank = 1;
  std::vector<std::string> finite;
  rep->add_option("groupoid", groupoid_path)->required();
  rep->add_option("--torus-rank", torus_rank, "Number of circle factors")->capture_default_str();
  rep->add_option("--finite", finite, "Orders of cyclic factors Z/q")->delimiter(',');

  auto* gkm = app.add_subcommand("gkm-check", "Check the GKM conditions for a weight family");
  gkm->add_option("groupoid", groupoid_path)->required();
  gkm->add_option("family", family_path)->required();

  auto* euler = app.add_subcommand("euler", "Euler numbers of a GKM family on a one-toric groupoid");
  euler->add_option("groupoid", groupoid_path)->required();
  euler->add_option("family", family_path)->required();

  auto* bundle = app.add_subcommand("bundle-group", "Representation group paired with H^2 of the orbit space");
  std::string h2_spec;
  bundle->add_option("groupoid", groupoid_path)->required();
  bundle->add_option("--h2", h2_spec, "Override H^2 as \"free=r,torsion=d1,d2\"");

  auto* affine = app.add_subcommand("affine", "Moment-polytope consistency of a weight family");
  affine->add_option("groupoid", groupoid_path)->required();
  affine->add_option("coordinates", coords_path)->required();
  affine->add_option("family", family_path)->required();

  auto* kappa = app.add_subcommand("kappa-lift", "Search sign lifts of classes to a GKM family");
  bool fix_components = false;
  kappa->add_option("groupoid", groupoid_path)->required();
  kappa->add_option("classes", family_path)->required();
  kappa->add_flag("--fix-components", fix_components, "Fix the sign of each component's smallest vertex");

  auto* cosets = app.add_subcommand("cosets", "Double-coset fibres over a graph");
  cosets->add_option("instance", instance_path)->required();

  auto* canon = app.add_subcommand("canon", "Weyl canonical form of an integer vector");
  std::string series;
  std::vector<std::string> entries;
  canon->add_option("--series", series)->required()->check(CLI::IsMember({"b", "d", "B", "D"}));
  canon->add_option("entries", entries, "Vector entries (negative values allowed)")->required();
  canon->positionals_at_end();

  auto* example = app.add_subcommand("example", "Print a built-in example groupoid");
  std::string example_name, example_params;
  example->add_option("name", example_name)->required();
  example->add_option("params", example_params, "JSON object of builder parameters");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "isorep: " << e.what() << "\n";
    return kUsageError;
  }
  const bool table = table_flag || format == "table";

  Inputs inputs{in};
  try {
    auto load_groupoid = [&] { return io::groupoid_from_json(inputs.load(groupoid_path)); };

    if (validate->parsed()) {
      const json j = inputs.load(groupoid_path);
      std::vector<GroupoidViolation> violations;
      if (j.is_object() && j.contains("groups")) {
        violations = validate_groupoid(io::groupoid_from_json(j));
      } else {
        for (const auto& v : validate_regular(io::complex_from_json(j))) violations.push_back({"", v.cell, v.reason});
      }
      emit({{"valid", violations.empty()}, {"violations", io::to_json(violations)}}, table, out);
      return violations.empty() ? kOk : kDomainFailure;
    }
    if (rep->parsed()) {
      const CellularGroupoid g = load_groupoid();
      AbelianTarget target{torus_rank, {}};
      for (const auto& q : finite) {
        Int x;
        if (x.set_str(q, 10) != 0 || x < 1) throw InputError("--finite: '" + q + "' is not a positive integer");
        target.finite_factors.push_back(x);
      }
      emit(io::to_json(rep_abelian(g, target)), table, out);
      return kOk;
    }
    if (gkm->parsed()) {
      const CellularGroupoid g = load_groupoid();
      require_valid(g);
      const auto failing = gkm_check(g, io::family_from_json(inputs.load(family_path)));
      emit({{"gkm", failing.empty() ? "ok" : "fails"}, {"failing_edges", failing}}, table, out);
      return failing.empty() ? kOk : kDomainFailure;
    }
    if (euler->parsed()) {
      const CellularGroupoid g = load_groupoid();
      emit(io::to_json(euler_numbers(g, io::family_from_json(inputs.load(family_path)))), table, out);
      return kOk;
    }
    if (bundle->parsed()) {
      const CellularGroupoid g = load_groupoid();
      std::optional<CohomologyGroup> h2;
      if (!h2_spec.empty()) h2 = io::parse_h2_override(h2_spec);
      emit(io::to_json(bundle_group(g, h2)), table, out);
      return kOk;
    }
    if (affine->parsed()) {
      const CellularGroupoid g = load_groupoid();
      const WeightFamily coords = io::family_from_json(inputs.load(coords_path));
      const WeightFamily family = io::family_from_json(inputs.load(family_path));
      emit(io::to_json(affine_report(g, coords, family)), table, out);
      return kOk;
    }
    if (kappa->parsed()) {
      const CellularGroupoid g = load_groupoid();
      const WeightFamily classes = io::family_from_json(inputs.load(family_path));
      KappaLiftOptions options;
      options.fix_component_signs = fix_components;
      if (const auto cap = state_cap_from_env()) {
        std::size_t bits = 0;
        while (bits < 63 && (std::uint64_t{1} << (bits + 1)) <= *cap) ++bits;
        options.max_vertices = bits;
      }
      const KappaLiftResult r = kappa_lift_rank1(g, classes, options);
      emit(io::to_json(r), table, out);
      return r.witness ? kOk : kDomainFailure;
    }
    if (cosets->parsed()) {
      const DoubleCosetInstance inst = io::instance_from_json(inputs.load(instance_path));
      const DoubleCosetResult r = double_cosets(inst, state_cap_from_env().value_or(kDefaultStateCap));
      emit(io::to_json(inst, r), table, out);
      return kOk;
    }
    if (canon->parsed()) {
      IntVector v;
      for (const auto& s : entries) {
        Int x;
        const std::string digits = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
        if (digits.empty() || x.set_str(digits, 10) != 0) throw InputError("canon: '" + s + "' is not an integer");
        v.push_back(x);
      }
      const WeylSeries ws = (series == "b" || series == "B") ? WeylSeries::B : WeylSeries::D;
      emit({{"series", ws == WeylSeries::B ? "B" : "D"}, {"input", io::to_json(v)},
            {"canonical", io::to_json(weyl_canonical(ws, v))}},
           table, out);
      return kOk;
    }
    if (example->parsed()) {
      json params;
      if (!example_params.empty()) {
        try {
          params = json::parse(example_params);
        } catch (const json::parse_error& e) {
          throw InputError(std::string("example parameters: invalid JSON: ") + e.what());
        }
      }
      if (example_name == "hirzebruch_coordinates") {
        emit(io::to_json(hirzebruch_coordinates()), table, out);
      } else {
        emit(io::to_json(io::build_example(example_name, params)), table, out);
      }
      return kOk;
    }
  } catch (const DomainError& e) {
    emit(domain_report(e), table, out);
    return kDomainFailure;
  } catch (const InputError& e) {
    err << "isorep: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "isorep: " << e.what() << "\n";
    return kUsageError;
  }
  err << "isorep: no subcommand given\n";
  return kUsageError;
}

}  // namespace isorep::cli
