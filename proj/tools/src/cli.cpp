// SPDX-License-Identifier: Apache-2.0
#include "latwidth_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "latwidth/error.hpp"

namespace latwidth::cli {

namespace {

InstanceFile load(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open instance file '" + path + "'");
    buf << file.rdbuf();
  }
  return parse_instance(buf.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact lattice width, cone decomposition and integer optimization over simplices",
               "latwidth"};
  app.require_subcommand(1);

  Flags flags;
  std::uint64_t budget = 10'000'000;
  long radius = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", flags.json, "Emit a JSON record; all numbers are exact strings");
    sub->add_option("--budget", budget, "Oracle point budget; larger searches are refused")
        ->check(CLI::PositiveNumber);
    sub->add_option("--oracle-radius", radius, "Oracle search radius (direction ball or box)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", flags.seed, "Seed for corpus generation");
  };

  std::string file;
  std::string command;
  std::string sub;
  auto simple = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    add_common(c);
    c->add_option("file", file, "Instance file ('-' for stdin)")->required();
    c->callback([&, name] { command = name; });
    return c;
  };
  simple("decompose", "Unimodular decomposition of a CONE instance");
  simple("width", "Lattice width and flat direction of an H or V simplex")
      ->add_flag("--lattice-free", flags.lattice_free,
                 "Search only layers up to the delta_n(A) cutoff (lattice-free input)");
  simple("cone-ip", "Integer optimization over a polytope and a shifted cone (CONEIP)");
  simple("opt-punctured", "Maximize OBJ over a simplex minus its vertices");

  auto nested = [&](const char* name, const char* help,
                    std::initializer_list<std::pair<const char*, const char*>> subs) {
    CLI::App* group = app.add_subcommand(name, help);
    group->require_subcommand(1);
    for (auto [sname, shelp] : subs) {
      CLI::App* c = group->add_subcommand(sname, shelp);
      add_common(c);
      c->add_option("file", file, "Instance file ('-' for stdin)")->required();
      if (std::string(name) == "verify" && std::string(sname) == "width")
        c->add_flag("--lattice-free", flags.lattice_free,
                    "Also run and compare the lattice-free variant");
      c->callback([&, name, sname] {
        command = name;
        sub = sname;
      });
    }
    return group;
  };
  nested("oracle", "Brute-force reference answers",
         {{"points", "Enumerate lattice points of a simplex"},
          {"width", "Lattice width over directions with |c_i| <= radius (default 10)"},
          {"cone-ip", "Cone IP by enumerating [-R, R]^n (default R = 30)"},
          {"punctured", "Punctured-simplex maximum by enumeration"}});
  nested("verify", "Run algorithm and oracle, diff, exit 3 on mismatch",
         {{"decompose", "Unimodularity and box coverage (box radius default 10)"},
          {"width", "Width against the direction-ball oracle"},
          {"cone-ip", "Cone IP against box enumeration"},
          {"opt-punctured", "Punctured optimum against enumeration"}});

  GenParams gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a seeded instance file to stdout");
  gen_cmd->require_subcommand(1);
  for (const char* kind : {"cone", "simplex", "vsimplex", "lattice-free", "cone-ip"}) {
    CLI::App* c = gen_cmd->add_subcommand(kind, std::string("Generate a ") + kind + " instance");
    add_common(c);
    c->add_option("-n,--dim", gen.dim, "Dimension")->check(CLI::PositiveNumber);
    c->add_option("--det", gen.det, "Target |det| (cone)");
    c->add_option("--bound", gen.bound, "Coordinate bound (simplex, vsimplex)");
    c->add_option("--objective", gen.objective_bound,
                  "Append a random OBJ row with entries in [-B, B]");
    c->callback([&, kind] {
      command = "gen";
      sub = kind;
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  flags.budget = budget;
  if (radius > 0 || std::find(args.begin(), args.end(), "--oracle-radius") != args.end())
    flags.oracle_radius = radius;

  Output o{out, err};
  try {
    if (command == "gen") return cmd_gen(sub, gen, flags, o);
    InstanceFile inst = load(file, in);
    if (command == "decompose") return cmd_decompose(inst, flags, o);
    if (command == "width") return cmd_width(inst, flags, o);
    if (command == "cone-ip") return cmd_cone_ip(inst, flags, o);
    if (command == "opt-punctured") return cmd_opt_punctured(inst, flags, o);
    if (command == "oracle") return cmd_oracle(sub, inst, flags, o);
    if (command == "verify") return cmd_verify(sub, inst, flags, o);
    err << "error: no command\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace latwidth::cli
