#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "coulomb/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Coulomb branch calculator for 3d N=4 gauge theories"};
  app.require_subcommand(1);

  coulomb::RunConfig cfg;
  long long seed = 0;

  auto add_input = [&cfg](CLI::App* cmd) {
    cmd->add_option("input", cfg.input_path, "input file")->required();
  };
  auto add_json = [&cfg](CLI::App* cmd) {
    cmd->add_flag("--json", cfg.json, "emit a JSON document instead of text");
  };

  CLI::App* hil = app.add_subcommand("hilbert", "monopole-formula Hilbert series");
  add_input(hil);
  hil->add_option("--order", cfg.order, "truncation order in t")->required();
  hil->add_flag("--refined", cfg.refined, "grade by topological fugacities");
  hil->add_option("--shift", cfg.shift, "background charge shift, one integer per class")
      ->delimiter(',');
  add_json(hil);

  CLI::App* pre = app.add_subcommand("present", "generators and relations of the branch");
  add_input(pre);
  add_json(pre);

  CLI::App* poi = app.add_subcommand("poisson", "Poisson bracket of two elements");
  add_input(poi);
  poi->add_option("--expr", cfg.exprs, "element expression (give twice)")
      ->required()
      ->expected(2);
  add_json(poi);

  CLI::App* qch = app.add_subcommand("quantize-check", "randomized quantization checks");
  add_input(qch);
  qch->add_option("--trials", cfg.trials, "number of random triples");
  CLI::Option* qseed = qch->add_option("--seed", seed, "RNG seed");
  add_json(qch);

  CLI::App* dua = app.add_subcommand("check-duality", "compare Coulomb and Higgs series");
  add_input(dua);
  dua->add_option("--order", cfg.order, "comparison order in t")->required();
  add_json(dua);

  CLI::App* frq = app.add_subcommand("from-quiver", "convert a quiver to a theory file");
  add_input(frq);
  frq->add_option("--output", cfg.output_path, "write the theory file here");
  add_json(frq);

  CLI::App* ver = app.add_subcommand("verify", "run the internal consistency suites");
  CLI::Option* vseed = ver->add_option("--seed", seed, "RNG seed");
  add_json(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if ((qseed->count() > 0 && cfg.command == "quantize-check") ||
      (vseed->count() > 0 && cfg.command == "verify")) {
    cfg.seed = seed;
  }
  return coulomb::run(cfg, std::cout, std::cerr);
}
