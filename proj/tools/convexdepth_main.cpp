#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>

#include "convexdepth/run.hpp"
#include "convexdepth/util.hpp"

namespace {

struct CommonOpts {
  std::string input;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 42;
};

void attach_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
  if (with_input) cmd->add_option("-i,--input", opts.input, "input file");
  cmd->add_option("-o,--output", opts.output, "output file (default: stdout)");
  cmd->add_option("--format", opts.format, "json | csv | svg");
  cmd->add_option("--seed", opts.seed, "RNG seed (default 42)");
}

cdepth::OutputFormat parse_format(const std::string& f) {
  if (f == "json") return cdepth::OutputFormat::Json;
  if (f == "csv") return cdepth::OutputFormat::Csv;
  if (f == "svg") return cdepth::OutputFormat::Svg;
  throw std::invalid_argument("--format must be json, csv or svg");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"depth queries, center regions and hitting-set bounds for families of polytopes"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: machine parallelism)");

  CommonOpts opts;
  std::map<std::string, std::string> params;

  auto add_param_option = [&params](CLI::App* cmd, const std::string& name,
                                    const std::string& desc) {
    cmd->add_option_function<std::string>(
        "--" + name, [&params, name](const std::string& v) { params[name] = v; }, desc);
  };
  auto add_param_flag = [&params](CLI::App* cmd, const std::string& name,
                                  const std::string& desc) {
    cmd->add_flag_callback(
        "--" + name, [&params, name]() { params[name] = "1"; }, desc);
  };

  auto* depth = app.add_subcommand("depth", "depth of a point w.r.t. a family");
  attach_common(depth, opts);
  add_param_option(depth, "point", "query point x,y");
  add_param_option(depth, "method", "exact | sampled");
  add_param_option(depth, "directions", "sample count for --method sampled");

  auto* maxd = app.add_subcommand("max-depth", "maximum depth point of a family");
  attach_common(maxd, opts);

  auto* plank = app.add_subcommand("plank", "level-r plank in a direction");
  attach_common(plank, opts);
  add_param_option(plank, "dir", "direction x,y");
  add_param_option(plank, "r", "depth level");

  auto* region = app.add_subcommand("region", "outer approximation of the r-center");
  attach_common(region, opts);
  add_param_option(region, "r", "depth level");
  add_param_option(region, "steps", "angular steps (default 360)");
  add_param_option(region, "svg", "also write an SVG drawing to this path");
  add_param_flag(region, "debug-planks", "draw sampled planks in SVG output");

  auto* witness = app.add_subcommand("witness", "deep point or empty-halfspace witness");
  attach_common(witness, opts);
  add_param_option(witness, "r", "depth level");
  add_param_option(witness, "resolution", "uniform direction count (default 360)");

  auto* trans = app.add_subcommand("transversal", "min sets met by a line through a point");
  attach_common(trans, opts);
  add_param_option(trans, "point", "query point x,y");

  auto* tukey = app.add_subcommand("tukey", "point depth / centerpoint of a point set");
  attach_common(tukey, opts);
  add_param_option(tukey, "point", "query point x,y");
  add_param_flag(tukey, "centerpoint", "return a deepest point instead");

  auto* beta = app.add_subcommand("beta", "exhaustive small-scale hitting threshold");
  attach_common(beta, opts, false);
  add_param_option(beta, "m", "number of subsets");
  add_param_option(beta, "k", "hitting set budget");
  add_param_option(beta, "maxN", "max ground set size");

  auto* blemish = app.add_subcommand("blemish", "probabilistic hitting bound");
  attach_common(blemish, opts, false);
  add_param_option(blemish, "m", "number of subsets");
  add_param_option(blemish, "k", "hitting set budget");
  add_param_option(blemish, "ell", "number of blemishes");
  add_param_option(blemish, "beta", "subset size fraction");

  auto* table = app.add_subcommand("table", "known bounds per dimension");
  attach_common(table, opts, false);
  add_param_option(table, "dmax", "largest dimension");

  auto* reduce = app.add_subcommand("reduce", "hitting instance -> simplex-face family");
  attach_common(reduce, opts);
  add_param_option(reduce, "d", "ambient dimension (default m-1)");
  add_param_option(reduce, "k", "also run the m=3 consistency report for this k");
  add_param_option(reduce, "sidecar", "write the element->subset index map here");
  add_param_option(reduce, "report", "write the consistency report here (needs --k)");

  auto* verify = app.add_subcommand("verify", "run a named scenario end to end");
  attach_common(verify, opts, false);
  std::string scenario;
  verify->add_option("scenario", scenario, "scenario name (figure1)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (threads > 0) cdepth::set_thread_budget(threads);
    cdepth::RunConfig cfg;
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = cdepth::command_from_name(sub->get_name());
    cfg.input_path = opts.input;
    cfg.output_path = opts.output;
    cfg.format = parse_format(opts.format);
    cfg.params = params;
    cfg.params["seed"] = std::to_string(opts.seed);
    if (cfg.command == cdepth::Command::Verify) cfg.params["scenario"] = scenario;
    return cdepth::run(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
