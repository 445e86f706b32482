// Command-line front end: analyze, check, profile.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cshapes/analyze.hpp"
#include "cshapes/oracle.hpp"
#include "cshapes/profile.hpp"
#include "cshapes/syntax.hpp"

using namespace cshapes;

namespace {

enum Exit { kOk = 0, kInputError = 1, kUnknown = 2, kViolations = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
auto parseFile(const std::string& path, F parse) {
  try {
    return parse(slurp(path));
  } catch (const SourceError& e) {
    throw InputError(path + ":" + e.what());
  }
}

struct RunConfig {
  std::string queryPath, shapesPath;
  bool debug = false;
  std::string format = "text";
  std::size_t nodeBudget = ReasonerLimits{}.maxNodes;
  std::size_t ruleBudget = ReasonerLimits{}.maxRuleFirings;
  bool parallel = false;
  unsigned threads = 0;
  int bound = 3;
  std::vector<std::string> injected;
};

void addRunOptions(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--query,-q", cfg.queryPath, "SPARQL CONSTRUCT query")->required();
  cmd->add_option("--shapes,-s", cfg.shapesPath, "input shapes, one inclusion per line (default: none)");
  cmd->add_flag("--debug", cfg.debug, "dump the generated axioms before the result");
  cmd->add_option("--format", cfg.format, "text or lines")->check(CLI::IsMember({"text", "lines"}));
  cmd->add_option("--node-budget", cfg.nodeBudget, "tableau nodes per entailment check")->check(CLI::PositiveNumber);
  cmd->add_option("--rule-budget", cfg.ruleBudget, "rule firings per entailment check")->check(CLI::PositiveNumber);
  cmd->add_flag("--parallel", cfg.parallel, "check candidates on several threads");
  cmd->add_option("--threads", cfg.threads, "worker count for --parallel (default: all cores)");
}

struct Loaded {
  Query query;
  std::vector<Axiom> shapes;
  Analysis analysis;
};

Loaded load(const RunConfig& cfg) {
  Loaded l;
  l.query = parseFile(cfg.queryPath, parseQuery);
  if (!cfg.shapesPath.empty()) l.shapes = parseFile(cfg.shapesPath, parseShapes);
  AnalyzeOptions opts;
  opts.limits.maxNodes = cfg.nodeBudget;
  opts.limits.maxRuleFirings = cfg.ruleBudget;
  opts.parallel = cfg.parallel;
  opts.threads = cfg.threads;
  l.analysis = analyze(l.shapes, l.query, opts);
  return l;
}

void dumpSection(std::ostream& out, const char* title, const std::set<Axiom>& axioms) {
  out << "# " << title << " (" << axioms.size() << ")\n";
  for (const auto& ax : axioms) out << render(ax) << "\n";
}

int report(const RunConfig& cfg, const Loaded& l, const std::vector<Shape>& shapes) {
  const Analysis& a = l.analysis;
  if (cfg.debug) {
    dumpSection(std::cout, "Σ_in", a.sigma.in);
    dumpSection(std::cout, "Σ_vkb", a.sigma.vkb);
    dumpSection(std::cout, "Σ_map", a.sigma.map);
    dumpSection(std::cout, "Σ_prop", a.sigma.prop);
  }
  if (cfg.format == "text")
    std::cout << "# " << shapes.size() << " shapes out of " << a.candidates.shapes.size() << " candidates\n";
  for (const auto& s : shapes) std::cout << render(s) << "\n";
  for (const auto& s : a.unknown) std::cerr << "unknown (budget exhausted, not emitted): " << render(s) << "\n";
  return a.unknown.empty() ? kOk : kUnknown;
}

int runAnalyze(const RunConfig& cfg) {
  Loaded l = load(cfg);
  return report(cfg, l, presented(l.analysis));
}

int runCheck(const RunConfig& cfg) {
  Loaded l = load(cfg);
  std::vector<Shape> shapes = presented(l.analysis);
  for (const auto& text : cfg.injected)
    for (const auto& ax : parseShapes(text))
      if (auto s = asShape(ax)) shapes.push_back(*s);
  int code = report(cfg, l, shapes);
  auto violations = checkSoundness(l.shapes, l.query, shapes, {cfg.bound});
  std::cout << violations.size() << " violations\n";
  for (const auto& v : violations) {
    std::cout << "violated: " << render(v.shape) << "\ninput graph:\n"
              << render(v.input) << "query result:\n"
              << render(v.output);
  }
  return violations.empty() ? code : kViolations;
}

int runProfile(const std::string& cls, int samples, std::uint64_t seed, long timeoutMs, bool parallel) {
  SizeClass c{};
  if (!parseSizeClass(cls, c)) throw InputError("unknown size class: " + cls);
  AnalyzeOptions opts;
  opts.parallel = parallel;
  auto s = profile(c, samples, seed, std::chrono::milliseconds(timeoutMs), opts);
  std::cout << "class " << cls << "\nsamples " << s.samples << "\ntimeouts " << s.timeouts << "\naverage_ms "
            << s.averageMs << "\nmedian_ms " << s.medianMs << "\nmax_ms " << s.maxMs << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infer result shapes of SPARQL CONSTRUCT queries from input shapes"};
  app.require_subcommand(1);

  RunConfig analyzeCfg, checkCfg;
  auto* analyzeCmd = app.add_subcommand("analyze", "print the shapes every query result satisfies");
  addRunOptions(analyzeCmd, analyzeCfg);

  auto* checkCmd = app.add_subcommand("check", "analyze, then test the result on all small valid inputs");
  addRunOptions(checkCmd, checkCfg);
  checkCmd->add_option("--bound", checkCfg.bound, "domain size for the exhaustive check")->check(CLI::Range(1, 6));
  checkCmd->add_option("--inject-shape", checkCfg.injected, "extra shape to check (harness self-test)")->group("");

  std::string cls = "SMALL";
  int samples = 100;
  std::uint64_t seed = 42;
  long timeoutMs = 60000;
  bool profParallel = false;
  auto* profileCmd = app.add_subcommand("profile", "time the analysis on random problems");
  profileCmd->add_option("--class", cls, "SMALL, MEDIUM or LARGE");
  profileCmd->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
  profileCmd->add_option("--seed", seed);
  profileCmd->add_option("--timeout-ms", timeoutMs)->check(CLI::PositiveNumber);
  profileCmd->add_flag("--parallel", profParallel);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyzeCmd) return runAnalyze(analyzeCfg);
    if (*checkCmd) return runCheck(checkCfg);
    return runProfile(cls, samples, seed, timeoutMs, profParallel);
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const SourceError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
}
