// Command-line front end: `dyana verify <suite>` runs an invariant battery,
// `dyana transform <input> <command> [args]` applies one operation to a
// JSON/CSV payload. Exit codes: 0 ok, 1 violated inequality/identity,
// 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dyana/hardy.hpp"
#include "dyana/interp.hpp"
#include "dyana/io.hpp"
#include "dyana/probab.hpp"
#include "dyana/quasisym.hpp"
#include "dyana/rng.hpp"
#include "dyana/suites.hpp"
#include "dyana/varmin.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dyana::io::ParseError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw dyana::io::ParseError("cannot open output file: " + out_path);
  out << payload;
}

double parse_number(const std::string& tok, const std::string& what) {
  if (tok == "inf" || tok == "infinity") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw dyana::io::ParseError("bad " + what + ": " + tok);
  }
}

int parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw dyana::io::ParseError("bad " + what + ": " + tok);
  }
}

int run_verify(const std::string& suite, std::uint64_t seed, const std::string& size_name,
               const std::string& format, const std::string& out_path, bool timings) {
  const dyana::SuiteSize size =
      size_name == "medium" ? dyana::SuiteSize::Medium : dyana::SuiteSize::Small;
  std::vector<dyana::SuiteReport> reports;
  try {
    reports = dyana::run_suites(suite, seed, size);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const std::string payload = format == "json" ? dyana::reports_to_json(reports, timings)
                                               : dyana::reports_to_csv(reports, timings);
  write_output(out_path, payload);
  for (const auto& rep : reports)
    if (!rep.ok()) return kExitViolation;
  return kExitOk;
}

int run_transform(const std::string& input, const std::string& command,
                  const std::vector<std::string>& args, const std::string& format,
                  const std::string& out_path, std::uint64_t seed) {
  using namespace dyana;
  Rng rng(seed);

  if (command == "haar") {
    const DyadicStepFn f = io::stepfn_from_json(read_file(input));
    write_output(out_path, io::haar_to_json(haar_analyze(f)));
    return kExitOk;
  }
  if (command == "expect") {
    if (args.size() != 1) throw io::ParseError("expect needs one argument: k");
    const DyadicStepFn f = io::stepfn_from_json(read_file(input));
    const int k = parse_int(args[0], "generation");
    if (k < 0) throw io::ParseError("generation must be nonnegative");
    write_output(out_path, io::stepfn_to_json(expectation(f, k)));
    return kExitOk;
  }
  if (command == "maximal") {
    const DyadicStepFn f = io::stepfn_from_json(read_file(input));
    write_output(out_path, io::stepfn_to_json(maximal(f)));
    return kExitOk;
  }
  if (command == "square") {
    const DyadicStepFn f = io::stepfn_from_json(read_file(input));
    write_output(out_path, io::stepfn_to_json(square(f)));
    return kExitOk;
  }
  if (command == "cz") {
    if (args.size() != 1) throw io::ParseError("cz needs one argument: lambda");
    const double lambda = parse_number(args[0], "lambda");
    if (!(lambda > 0.0)) throw io::ParseError("lambda must be positive");
    const DyadicStepFn f = io::stepfn_from_json(read_file(input));
    const auto level = maximal_level_set(f, lambda);
    const auto flat = cz_flatten_m(f, lambda);
    std::ostringstream os;
    os << "{\"level_set\":" << io::level_set_to_json(level)
       << ",\"flattened\":" << io::stepfn_to_json(flat.flattened) << ",\"parents\":[";
    for (std::size_t i = 0; i < flat.intervals.size(); ++i) {
      if (i) os << ',';
      os << '[' << flat.intervals[i].k << ',' << flat.intervals[i].j << ']';
    }
    os << "]}";
    write_output(out_path, os.str());
    return kExitOk;
  }
  if (command == "khintchine") {
    if (args.size() != 1) throw io::ParseError("khintchine needs one argument: p");
    const double p = parse_number(args[0], "exponent");
    if (!(p > 0.0)) throw io::ParseError("exponent must be positive");
    // input: {"alpha":[...]}
    const std::string text = read_file(input);
    std::vector<double> alpha;
    {
      const auto fail = [&]() { throw io::ParseError("khintchine input needs {\"alpha\":[numbers]}"); };
      const auto pos = text.find("alpha");
      if (pos == std::string::npos) fail();
      const auto lb = text.find('[', pos);
      const auto rb = text.find(']', pos);
      if (lb == std::string::npos || rb == std::string::npos || rb < lb) fail();
      std::stringstream ss(text.substr(lb + 1, rb - lb - 1));
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) alpha.push_back(parse_number(tok, "coefficient"));
      if (alpha.empty()) fail();
    }
    const auto rep = khintchine_report(alpha, p);
    std::ostringstream os;
    os << "{\"p_norm\":" << io::format_double(rep.p_norm)
       << ",\"l2\":" << io::format_double(rep.l2)
       << ",\"ratio\":" << io::format_double(rep.ratio) << "}";
    write_output(out_path, os.str());
    return kExitOk;
  }
  if (command == "riesz") {
    if (args.size() != 3) throw io::ParseError("riesz needs three arguments: p q t");
    const double p = parse_number(args[0], "p");
    const double q = parse_number(args[1], "q");
    const double t = parse_number(args[2], "t");
    const Matrix a = io::matrix_from_json(read_file(input));
    const auto rep = riesz_convexity_report(a, p, q, t, 8, &rng);
    std::ostringstream os;
    os << "{\"r\":" << io::format_double(rep.r)
       << ",\"m_r_lower\":" << io::format_double(rep.m_r_lower)
       << ",\"m_r_exact\":" << (rep.m_r_exact ? "true" : "false")
       << ",\"m_p\":" << io::format_double(rep.m_p)
       << ",\"m_q\":" << io::format_double(rep.m_q)
       << ",\"endpoint_product\":" << io::format_double(rep.endpoint_product)
       << ",\"holds\":"
       << (rep.m_r_lower <= rep.endpoint_product * (1.0 + 1e-9) ? "true" : "false") << "}";
    write_output(out_path, os.str());
    return rep.m_r_lower <= rep.endpoint_product * (1.0 + 1e-9) ? kExitOk : kExitViolation;
  }
  if (command == "pvar") {
    if (args.size() != 1) throw io::ParseError("pvar needs one argument: p");
    const double p = parse_number(args[0], "exponent");
    if (!(p >= 1.0)) throw io::ParseError("exponent must be >= 1");
    const io::GridProblem prob = io::grid_from_json(read_file(input));
    const GridFn star = minimize_vp(prob.domain, prob.boundary, p, {}, &rng);
    write_output(out_path, io::solution_to_csv(prob.domain, star));
    return kExitOk;
  }
  if (command == "cantor") {
    if (args.size() != 2) throw io::ParseError("cantor needs two arguments: r depth");
    const double r = parse_number(args[0], "ratio");
    const int depth = parse_int(args[1], "depth");
    if (!(r > 0.0 && r < 1.0)) throw io::ParseError("ratio must lie in (0,1)");
    if (depth < 0 || depth > 24) throw io::ParseError("depth must lie in [0,24]");
    write_output(out_path, io::intervals_to_json(cantor_level(r, depth)));
    return kExitOk;
  }
  if (command == "eta") {
    const io::MapSamples samples = io::map_samples_from_csv(read_file(input));
    const auto table = eta_empirical(samples.source, samples.target, 2000000, rng);
    write_output(out_path, io::modulus_table_to_csv(table));
    return kExitOk;
  }
  (void)format;
  throw io::ParseError("unknown transform command: " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dyadic analysis workbench"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string size_name = "small";
  std::string format = "csv";
  std::string out_path;
  bool timings = false;

  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "run a per-module verification suite");
  verify->add_option("suite", suite, "dyadic|inequalities|linops|hardy|probab|interp|varmin|quasisym|all")
      ->required();
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--size", size_name, "small|medium")
      ->check(CLI::IsMember({"small", "medium"}));
  verify->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", out_path, "output path (default stdout)");
  verify->add_flag("--timings", timings, "include wall-clock timings (non-deterministic)");

  std::string input, command;
  std::vector<std::string> cmd_args;
  CLI::App* transform = app.add_subcommand("transform", "apply one operation to a payload");
  transform->add_option("input", input, "input file, or - for stdin")->required();
  transform->add_option("command", command,
                        "haar|expect|maximal|square|cz|khintchine|riesz|pvar|cantor|eta")
      ->required();
  transform->add_option("args", cmd_args, "command arguments");
  transform->add_option("--seed", seed, "random seed");
  transform->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  transform->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (verify->parsed()) return run_verify(suite, seed, size_name, format, out_path, timings);
    return run_transform(input, command, cmd_args, format, out_path, seed);
  } catch (const dyana::io::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
}
