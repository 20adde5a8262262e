#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "rtorsion/cli.hpp"

namespace {

void add_common(CLI::App* cmd, rt::JobSpec& spec) {
  cmd->add_option("--json", spec.json, "write JSON output to a file ('-' for stdout)");
  cmd->add_flag("-v,--verbose", spec.verbose, "per-class provenance");
}

}  // namespace

int main(int argc, char** argv) {
  rt::JobSpec spec;
  CLI::App app{"Twisted Reidemeister torsion of knot surgeries and Seifert manifolds"};
  app.require_subcommand(1);

  auto* torsion = app.add_subcommand("torsion", "T_K^phi for every peripheral class");
  torsion->add_option("--knot", spec.knot, "knot file")->required();
  torsion->add_flag("--mirror", spec.mirror, "use the mirror image");
  torsion->add_option("--group", spec.groups, "group name (A5, S3, C6, D4, trivial) or file");
  torsion->add_option("--rep", spec.rep, "representation name (A5-standard, standard, permutation, trivial-n) or file");
  add_common(torsion, spec);

  auto* homs = app.add_subcommand("homs", "surjections onto a finite group up to conjugation");
  homs->add_option("--knot", spec.knot, "knot file");
  homs->add_flag("--mirror", spec.mirror, "use the mirror image");
  homs->add_option("--params", spec.params, "Seifert parameters a/b,c/d,... or file");
  homs->add_option("--group", spec.groups, "group")->required();
  homs->add_option("--slope", spec.slope, "keep classes satisfying the filling relation of p/q");
  add_common(homs, spec);

  auto* surgery = app.add_subcommand("surgery", "T_{K(p/q), beta}^phi");
  surgery->add_option("--knot", spec.knot, "knot file")->required();
  surgery->add_flag("--mirror", spec.mirror, "use the mirror image");
  surgery->add_option("--slope", spec.slope, "p/q")->required();
  surgery->add_option("--group", spec.groups, "group");
  surgery->add_option("--rep", spec.rep, "representation");
  surgery->add_option("--char", spec.character, "exponent u with beta(mu) = zeta^u")->delimiter(',');
  add_common(surgery, spec);

  auto* seifert = app.add_subcommand("seifert", "T_{M, beta'}^phi for M(p_1/q_1, ..., p_m/q_m)");
  seifert->add_option("--params", spec.params, "a/b,c/d,... or file")->required();
  seifert->add_option("--group", spec.groups, "group");
  seifert->add_option("--rep", spec.rep, "representation");
  seifert->add_option("--char", spec.character, "a,b_1,...,b_m (default: every character)")->delimiter(',');
  add_common(seifert, spec);

  auto* obstruct = app.add_subcommand("obstruct", "compare K(p/q) with Seifert candidates");
  obstruct->add_option("--knot", spec.knot, "knot file")->required();
  obstruct->add_flag("--mirror", spec.mirror, "use the mirror image");
  obstruct->add_option("--slope", spec.slope, "p/q")->required();
  obstruct->add_option("--group", spec.groups, "groups (default A4 A5)")->delimiter(',');
  obstruct->add_option("--rep", spec.rep, "representation used where it applies (default A5-standard)");
  obstruct->add_option("--bounds", spec.bounds, "max_p[,max_q] (default 16, |q_i| < p_i)");
  obstruct->add_option("--workers", spec.workers, "threads (default RTORSION_WORKERS or all cores)");
  add_common(obstruct, spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rt::kParseError;
  }
  for (auto* cmd : app.get_subcommands()) spec.verb = cmd->get_name();

  const rt::JobResult result = rt::run(spec);
  if (spec.json == "-") {
    std::cout << result.output.dump(2) << "\n";
  } else {
    std::cout << result.text;
    if (!spec.json.empty()) {
      std::ofstream out(spec.json);
      if (!out) {
        std::cerr << "cannot write " << spec.json << "\n";
        return rt::kParseError;
      }
      out << result.output.dump(2) << "\n";
    }
  }
  if (result.status != rt::kOk && spec.json == "-") std::cerr << result.output.value("error", std::string()) << "\n";
  return result.status;
}
