#include "covlat/cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covlat/classify.hpp"
#include "covlat/io.hpp"
#include "json.hpp"

namespace covlat {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

// "partition:3", "subspace:q,n", "dowling:n,m"
GradedLattice lattice_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw Error("ParseError", "generator spec needs the form family:params");
  }
  std::string family = spec.substr(0, colon);
  std::vector<long long> params;
  std::string rest = spec.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    std::string token = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    try {
      std::size_t consumed = 0;
      long long value = std::stoll(token, &consumed);
      if (consumed != token.size()) throw std::invalid_argument(token);
      params.push_back(value);
    } catch (const std::exception&) {
      throw Error("ParseError", "bad generator parameter \"" + token + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }

  if (family == "partition" && params.size() == 1) {
    return gen_partition_lattice(static_cast<int>(params[0]));
  }
  if (family == "subspace" && params.size() == 2) {
    return gen_subspace_lattice(params[0], static_cast<int>(params[1]));
  }
  if (family == "dowling" && params.size() == 2) {
    return gen_dowling_lattice(static_cast<int>(params[0]),
                               GroupTable::cyclic(static_cast<int>(params[1])));
  }
  throw Error("ParseError", "unknown generator spec \"" + spec + "\"");
}

// A side of `iso`: generator spec, covering document, or lattice document.
GradedLattice resolve_lattice(const std::string& arg) {
  if (arg.find(':') != std::string::npos) return lattice_from_spec(arg);
  std::string text = read_file(arg);
  nlohmann::json probe = nlohmann::json::parse(text, nullptr, false);
  if (probe.is_object() && probe.contains("blocks")) {
    return build_lattice(MatroidOracle(covering_from_json(text))).graph();
  }
  return lattice_from_json(text);
}

int cmd_build(const std::string& file, const std::string& format, bool apply_simplify,
              std::ostream& out) {
  Covering covering = covering_from_json(read_file(file));
  if (apply_simplify) covering = simplify(covering).covering;
  FlatLattice lattice = build_lattice(MatroidOracle(covering));
  out << (format == "dot" ? export_dot(lattice) : export_json(lattice));
  return kExitOk;
}

int cmd_classify(const std::string& file, const std::string& family, std::ostream& out) {
  Covering covering = covering_from_json(read_file(file));
  std::vector<ClassificationReport> reports;
  if (family == "partition" || family == "all") reports.push_back(classify_partition(covering));
  if (family == "subspace" || family == "all") reports.push_back(classify_subspace(covering));
  if (family == "dowling" || family == "all") reports.push_back(classify_dowling(covering));

  bool any_yes = false;
  if (reports.size() == 1) {
    out << report_to_json(reports.front());
    any_yes = reports.front().verdict;
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::string body = report_to_json(reports[i]);
      body.pop_back();  // newline, re-added below
      out << body << (i + 1 < reports.size() ? ",\n" : "\n");
      any_yes = any_yes || reports[i].verdict;
    }
    out << "]\n";
  }
  return any_yes ? kExitOk : kExitNegative;
}

int cmd_gen(const std::string& family, int n, long long q, int group_order,
            const std::string& cayley_file, const std::string& format, std::ostream& out) {
  GradedLattice lattice;
  if (family == "partition") {
    lattice = gen_partition_lattice(n);
  } else if (family == "subspace") {
    lattice = gen_subspace_lattice(q, n);
  } else if (family == "dowling") {
    GroupTable group = cayley_file.empty() ? GroupTable::cyclic(group_order)
                                           : cayley_from_json(read_file(cayley_file));
    lattice = gen_dowling_lattice(n, group);
  } else {
    throw Error("ParseError", "unknown family \"" + family + "\"");
  }
  out << (format == "dot" ? export_dot(lattice) : export_json(lattice));
  return kExitOk;
}

int cmd_iso(const std::string& a_arg, const std::string& b_arg, std::ostream& out,
            std::ostream& err) {
  GradedLattice a = resolve_lattice(a_arg);
  GradedLattice b = resolve_lattice(b_arg);
  auto bijection = lattice_isomorphic(a, b);
  if (!bijection.has_value()) {
    err << "not isomorphic\n";
    return kExitNegative;
  }
  for (int i = 0; i < a.size(); ++i) {
    out << a.labels[i] << " -> " << b.labels[(*bijection)[i]] << "\n";
  }
  return kExitOk;
}

int cmd_search(int max_elements, int max_blocks, const std::string& target_spec,
               int threads, std::ostream& out) {
  GradedLattice target = lattice_from_spec(target_spec);
  SearchOptions opts;
  opts.max_elements = max_elements;
  opts.max_blocks = max_blocks;
  opts.threads = threads;
  for (const Covering& c : search_isomorphic_coverings(target, opts)) {
    out << covering_to_json(c, /*pretty=*/false);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"transversal matroid lattices of coverings"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "json";
  bool apply_simplify = false;
  auto* build = app.add_subcommand("build", "build and export the lattice of flats");
  build->add_option("file", file, "covering document")->required();
  build->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
  build->add_flag("--simplify", apply_simplify, "collapse equivalent elements first");

  std::string family = "all";
  auto* classify = app.add_subcommand("classify", "match the lattice against the classical families");
  classify->add_option("file", file, "covering document")->required();
  classify->add_option("--family", family, "partition|subspace|dowling|all")
      ->check(CLI::IsMember({"partition", "subspace", "dowling", "all"}));

  std::string gen_family;
  int n = 0;
  long long q = 2;
  int group_order = 1;
  std::string cayley_file;
  auto* gen = app.add_subcommand("gen", "generate a classical lattice");
  gen->add_option("--family", gen_family, "partition|subspace|dowling")->required();
  gen->add_option("--n", n, "rank parameter");
  gen->add_option("--q", q, "field size (subspace)");
  gen->add_option("--group-order", group_order, "cyclic group order (dowling)");
  gen->add_option("--cayley", cayley_file, "Cayley table document (dowling)");
  gen->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "decide isomorphism of two lattices");
  iso->add_option("a", iso_a, "covering file, lattice file, or family:params")->required();
  iso->add_option("b", iso_b, "covering file, lattice file, or family:params")->required();

  int max_elements = 0, max_blocks = 0, threads = 0;
  std::string target_spec;
  auto* search = app.add_subcommand("search", "find all coverings matching a target lattice");
  search->add_option("--max-elements", max_elements, "ground set bound")->required();
  search->add_option("--max-blocks", max_blocks, "block count bound")->required();
  search->add_option("--target", target_spec, "family:params")->required();
  search->add_option("--threads", threads, "worker count (0 = hardware)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (build->parsed()) return cmd_build(file, format, apply_simplify, out);
    if (classify->parsed()) return cmd_classify(file, family, out);
    if (gen->parsed()) return cmd_gen(gen_family, n, q, group_order, cayley_file, format, out);
    if (iso->parsed()) return cmd_iso(iso_a, iso_b, out, err);
    if (search->parsed()) return cmd_search(max_elements, max_blocks, target_spec, threads, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (e.kind() == "TooLarge" || e.kind() == "BudgetExceeded") return kExitBudget;
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace covlat
