#include <CLI11.hpp>

#include "torbar/cdga.hpp"
#include "torbar/checks.hpp"
#include "torbar/parser.hpp"
#include "torbar/report.hpp"
#include "torbar/tor.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace torbar;

struct CommonArgs {
  std::string input;
  int max_degree = 8;
  std::string output = "human";
  std::string mode = "over-R";
  bool ring = false;
  bool representatives = false;
  std::string oracle;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_oracle = false) {
  cmd->add_option("input", args.input, "algebra presentation file")->required();
  cmd->add_option("--max-degree", args.max_degree, "truncation degree");
  cmd->add_option("--output", args.output, "human or json")
      ->check(CLI::IsMember({"human", "json"}));
  cmd->add_option("--mode", args.mode, "over-R, over-k or both")
      ->check(CLI::IsMember({"over-R", "over-r", "over-k", "both"}));
  cmd->add_flag("--ring", args.ring, "compute ring structure constants");
  cmd->add_flag("--representatives", args.representatives, "print representatives");
  if (with_oracle)
    cmd->add_option("--oracle", args.oracle, "oracle CDGA presentation for crosscheck");
}

OutputFormat format_of(const CommonArgs& a) {
  return a.output == "json" ? OutputFormat::Json : OutputFormat::Human;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedInput {
  std::string digest;
  std::shared_ptr<const AlgebraContext> algebra;
};

LoadedInput load(const std::string& path) {
  std::string text = read_file(path);
  AlgebraPresentation pres = parse_presentation(text);
  return {digest_hex(render_presentation(pres)),
          std::make_shared<AlgebraContext>(std::move(pres))};
}

int run_tor(const CommonArgs& a) {
  LoadedInput in = load(a.input);
  TorRequest req;
  req.algebra = in.algebra;
  req.max_degree = a.max_degree;
  req.mode = a.mode == "both"     ? TorMode::Both
             : a.mode == "over-k" ? TorMode::OverK
                                  : TorMode::OverR;
  req.want_ring = a.ring;
  req.want_representatives = true;
  TorResult res = tor_compute(req);

  CrosscheckReport oc;
  bool have_oracle = !a.oracle.empty();
  if (have_oracle) {
    LoadedInput om = load(a.oracle);
    CdgaInstance inst(om.algebra, a.max_degree);
    CohomologyTable table = cohomology(inst, a.ring);
    oc = crosscheck_oracle(res, table, a.max_degree);
  }

  ReportHeader hdr{"tor", in.digest, a.max_degree};
  TorRequest printed = req;
  printed.want_representatives = a.representatives;
  std::cout << format_tor_report(hdr, printed, res, have_oracle ? &oc : nullptr,
                                 format_of(a));
  if (req.mode == TorMode::Both && !res.modes_agree) return 2;
  if (have_oracle && !oc.ok) return 2;
  return 0;
}

int run_cohomology(const CommonArgs& a) {
  LoadedInput in = load(a.input);
  CdgaInstance inst(in.algebra, a.max_degree);
  CohomologyTable table = cohomology(inst, a.ring);
  ReportHeader hdr{"cohomology", in.digest, a.max_degree};
  std::cout << format_cohomology_report(hdr, table, in.algebra->presentation(), a.ring,
                                        format_of(a));
  return 0;
}

int run_massey(const CommonArgs& a, const std::string& ea, const std::string& eb,
               const std::string& ec) {
  LoadedInput in = load(a.input);
  const auto& pres = in.algebra->presentation();
  CdgaInstance inst(in.algebra, a.max_degree);
  GradedElement ga = in.algebra->element(parse_polynomial(ea, pres));
  GradedElement gb = in.algebra->element(parse_polynomial(eb, pres));
  GradedElement gc = in.algebra->element(parse_polynomial(ec, pres));
  MasseyResult res = massey_triple(ga, gb, gc, inst);
  ReportHeader hdr{"massey", in.digest, a.max_degree};
  std::cout << format_massey_report(hdr, res, pres, format_of(a));
  return 0;
}

int run_homotopy(const CommonArgs& a) {
  LoadedInput in = load(a.input);
  CdgaInstance inst(in.algebra, a.max_degree);
  AugTarget target = a.mode == "over-k" ? AugTarget::OverK : AugTarget::OverR;
  std::map<int, int> dims = indecomposables_homotopy(inst, target);
  ReportHeader hdr{"homotopy", in.digest, a.max_degree};
  std::cout << format_homotopy_report(hdr, dims, format_of(a));
  return 0;
}

int run_check(const CommonArgs& a) {
  LoadedInput in = load(a.input);
  BarMode mode = a.mode == "over-R" || a.mode == "over-r" ? BarMode::OverR : BarMode::OverK;
  auto checks = structural_checks(in.algebra, mode, a.max_degree);
  ReportHeader hdr{"check", in.digest, a.max_degree};
  std::cout << format_check_report(hdr, checks, format_of(a));
  for (const auto& [name, ok] : checks)
    if (!ok) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bar-complex engine for equivariant loop-space cohomology"};
  app.require_subcommand(1);

  CommonArgs tor_args, coh_args, massey_args, hom_args, check_args;
  std::string ma, mb, mc;

  CLI::App* tor_cmd = app.add_subcommand("tor", "Tor of the augmented algebra over R");
  add_common(tor_cmd, tor_args, true);

  CLI::App* coh_cmd = app.add_subcommand("cohomology", "CDGA cohomology with ring");
  add_common(coh_cmd, coh_args);

  CLI::App* massey_cmd = app.add_subcommand("massey", "triple Massey product");
  add_common(massey_cmd, massey_args);
  massey_cmd->add_option("--a", ma, "first class (expression)")->required();
  massey_cmd->add_option("--b", mb, "second class (expression)")->required();
  massey_cmd->add_option("--c", mc, "third class (expression)")->required();

  CLI::App* hom_cmd = app.add_subcommand("homotopy", "indecomposable cohomology dims");
  add_common(hom_cmd, hom_args);

  CLI::App* check_cmd = app.add_subcommand("check", "structural invariant suite");
  add_common(check_cmd, check_args);
  check_cmd->get_option("--mode")->default_str("over-k");
  check_args.mode = "over-k";

  CLI11_PARSE(app, argc, argv);

  const CommonArgs& active = tor_cmd->parsed()      ? tor_args
                             : coh_cmd->parsed()    ? coh_args
                             : massey_cmd->parsed() ? massey_args
                             : hom_cmd->parsed()    ? hom_args
                                                    : check_args;
  OutputFormat fmt = format_of(active);

  auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (tor_cmd->parsed()) code = run_tor(tor_args);
    else if (coh_cmd->parsed()) code = run_cohomology(coh_args);
    else if (massey_cmd->parsed()) code = run_massey(massey_args, ma, mb, mc);
    else if (hom_cmd->parsed()) code = run_homotopy(hom_args);
    else code = run_check(check_args);
  } catch (const torbar::TruncationError& e) {
    std::cout << torbar::format_error("truncation", e.what(), fmt);
    code = 3;
  } catch (const torbar::InvariantError& e) {
    std::cout << torbar::format_error("invariant", e.what(), fmt);
    code = 2;
  } catch (const torbar::InputError& e) {
    std::cout << torbar::format_error("input", e.what(), fmt);
    code = 1;
  } catch (const std::exception& e) {
    std::cout << torbar::format_error("input", e.what(), fmt);
    code = 1;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  // timing goes to stderr so stdout stays byte-identical across runs
  std::cerr << "elapsed: " << elapsed << " ms\n";
  return code;
}
