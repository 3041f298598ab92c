// mcat command-line front end. Talks to the library only through mcat.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "mcat/mcat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuntimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using WordPtr = std::unique_ptr<mcat_word, Deleter<mcat_word, mcat_word_free>>;
using PolyPtr = std::unique_ptr<mcat_poly, Deleter<mcat_poly, mcat_poly_free>>;
using ParamsPtr = std::unique_ptr<mcat_params, Deleter<mcat_params, mcat_params_free>>;
using GridPtr = std::unique_ptr<mcat_grid, Deleter<mcat_grid, mcat_grid_free>>;
using RulesPtr = std::unique_ptr<mcat_ruleset, Deleter<mcat_ruleset, mcat_ruleset_free>>;
using ReportPtr = std::unique_ptr<mcat_report, Deleter<mcat_report, mcat_report_free>>;

// Throws on anything but OK/CHECK_FAILED.
mcat_status check(mcat_status s) {
  if (s == MCAT_OK || s == MCAT_CHECK_FAILED) return s;
  if (s == MCAT_INVALID_ARGUMENT) throw UsageError(mcat_last_error());
  throw RuntimeError(mcat_last_error());
}

std::string take(char* s) {
  std::string out(s);
  mcat_string_free(s);
  return out;
}

struct Options {
  std::string word;
  std::optional<int> m;
  std::optional<int> r;
  std::optional<int> k;
  std::string alpha = "1";
  std::string beta = "1";
  std::string q = "0";
  std::string grid;
  std::string ruleset;
  std::string format;
  std::string out;
  bool staircase = false;
  bool brute = false;
};

mcat_format format_or(const Options& o, mcat_format fallback) {
  if (o.format.empty()) return fallback;
  if (o.format == "json") return MCAT_FORMAT_JSON;
  if (o.format == "csv") return MCAT_FORMAT_CSV;
  if (o.format == "ascii") return MCAT_FORMAT_ASCII;
  if (o.format == "dot") return MCAT_FORMAT_DOT;
  throw UsageError("unknown format '" + o.format + "' (json, csv, ascii or dot)");
}

WordPtr word_arg(const Options& o) {
  if (o.word.empty()) throw UsageError("--word is required");
  mcat_word* w = nullptr;
  check(mcat_word_parse(o.word.c_str(), &w, nullptr));
  return WordPtr(w);
}

int m_arg(const Options& o) {
  if (!o.m) throw UsageError("--m is required");
  if (*o.m < 1) throw UsageError("--m must be at least 1");
  if (o.r && *o.r > *o.m) {
    throw UsageError("r = " + std::to_string(*o.r) + " exceeds m = " + std::to_string(*o.m));
  }
  return *o.m;
}

int r_or_all(const Options& o) { return o.r ? *o.r : -1; }

GridPtr grid_arg(const Options& o) {
  if (o.grid.empty()) return GridPtr(mcat_grid_default());
  mcat_grid* g = nullptr;
  check(mcat_grid_parse(o.grid.c_str(), &g));
  return GridPtr(g);
}

// --ruleset takes a JSON file path or inline JSON.
RulesPtr rules_arg(const Options& o) {
  if (o.ruleset.empty()) return RulesPtr(mcat_ruleset_default());
  std::string text = o.ruleset;
  if (text.front() != '{') {
    std::ifstream in(text);
    if (!in) throw UsageError("cannot read ruleset file '" + text + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  mcat_ruleset* r = nullptr;
  check(mcat_ruleset_from_json(text.c_str(), &r));
  return RulesPtr(r);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw RuntimeError("cannot write '" + o.out + "'");
  f << text;
}

int emit_report(const Options& o, mcat_status s, mcat_report* raw) {
  ReportPtr report(raw);
  char* json = nullptr;
  check(mcat_report_json(report.get(), &json));
  emit(o, take(json));
  return s == MCAT_OK ? kExitOk : kExitCheckFailed;
}

int cmd_enumerate(const Options& o) {
  auto w = word_arg(o);
  char* s = nullptr;
  check(mcat_enumerate(w.get(), o.staircase ? 1 : 0, format_or(o, MCAT_FORMAT_JSON), &s));
  emit(o, take(s));
  return kExitOk;
}

int cmd_weight(const Options& o) {
  mcat_poly* raw = nullptr;
  if (!o.word.empty()) {
    auto w = word_arg(o);
    check(mcat_word_weight(w.get(), &raw));
  } else {
    const int m = m_arg(o);
    if (!o.r) throw UsageError("weight needs --word, or --m with --r");
    check(mcat_partition_function(m, *o.r, &raw));
  }
  PolyPtr p(raw);
  char* s = nullptr;
  const auto format = format_or(o, MCAT_FORMAT_ASCII);
  if (format == MCAT_FORMAT_JSON) {
    check(mcat_poly_json(p.get(), &s));
  } else if (format == MCAT_FORMAT_ASCII) {
    check(mcat_poly_text(p.get(), &s));
  } else {
    throw UsageError("weight supports json and ascii output");
  }
  emit(o, take(s));
  return kExitOk;
}

int cmd_stationary(const Options& o) {
  const int m = m_arg(o);
  if (!o.r) throw UsageError("--r is required");
  mcat_params* raw = nullptr;
  check(mcat_params_create(o.alpha.c_str(), o.beta.c_str(), o.q.c_str(), &raw));
  ParamsPtr params(raw);
  char* s = nullptr;
  check(mcat_stationary(m, *o.r, params.get(), format_or(o, MCAT_FORMAT_CSV), &s));
  emit(o, take(s));
  return kExitOk;
}

int cmd_count(const Options& o) {
  const int m = m_arg(o);
  const auto format = format_or(o, MCAT_FORMAT_CSV);
  char* s = nullptr;
  check(mcat_count_table(m, r_or_all(o), o.brute ? 1 : 0, format, &s));
  std::string text = take(s);
  if (o.k && format == MCAT_FORMAT_CSV) {
    // Keep the header and the rows whose third column is k.
    std::istringstream in(text);
    std::string line;
    std::string filtered;
    std::getline(in, line);
    filtered += line + "\n";
    while (std::getline(in, line)) {
      std::istringstream cells(line);
      std::string cell;
      for (int i = 0; i < 3; ++i) std::getline(cells, cell, ',');
      if (cell == std::to_string(*o.k)) filtered += line + "\n";
    }
    text = filtered;
  } else if (o.k) {
    throw UsageError("--k filtering applies to csv output");
  }
  emit(o, text);
  return kExitOk;
}

int cmd_det(const Options& o) {
  auto w = word_arg(o);
  char* s = nullptr;
  check(mcat_det(w.get(), &s));
  emit(o, take(s));
  return kExitOk;
}

int cmd_graph(const Options& o) {
  const int m = m_arg(o);
  if (!o.r) throw UsageError("--r is required");
  char* s = nullptr;
  check(mcat_tableau_graph(m, *o.r, format_or(o, MCAT_FORMAT_JSON), &s));
  emit(o, take(s));
  return kExitOk;
}

int cmd_q1_enumerate(const Options& o) {
  auto w = word_arg(o);
  auto rules = rules_arg(o);
  char* s = nullptr;
  check(mcat_q1_enumerate(w.get(), rules.get(), format_or(o, MCAT_FORMAT_JSON), &s));
  emit(o, take(s));
  return kExitOk;
}

int cmd_q1_verify(const Options& o) {
  const int m = m_arg(o);
  auto rules = rules_arg(o);
  auto grid = grid_arg(o);
  mcat_report* rep = nullptr;
  const auto s = check(mcat_q1_verify(m, r_or_all(o), rules.get(), grid.get(), &rep));
  return emit_report(o, s, rep);
}

int cmd_q1_consistency(const Options& o) {
  const int m = m_arg(o);
  auto rules = rules_arg(o);
  mcat_report* rep = nullptr;
  const auto s = check(mcat_q1_consistency(m, r_or_all(o), rules.get(), &rep));
  return emit_report(o, s, rep);
}

int cmd_q1_sweep(const Options& o) {
  const int m = m_arg(o);
  auto grid = grid_arg(o);
  mcat_report* rep = nullptr;
  const auto s = check(mcat_q1_sweep(m, grid.get(), &rep));
  return emit_report(o, s, rep);
}

int cmd_verify_main(const Options& o) {
  const int m = m_arg(o);
  auto grid = grid_arg(o);
  mcat_report* rep = nullptr;
  const auto s = check(mcat_verify_main_theorem(m, r_or_all(o), grid.get(), &rep));
  return emit_report(o, s, rep);
}

int cmd_verify_ansatz(const Options& o) {
  const int m = m_arg(o);
  mcat_report* rep = nullptr;
  const auto s = check(mcat_verify_ansatz(m, &rep));
  return emit_report(o, s, rep);
}

int cmd_verify_balance(const Options& o) {
  const int m = m_arg(o);
  auto grid = grid_arg(o);
  mcat_report* rep = nullptr;
  const auto s = check(mcat_verify_balance(m, r_or_all(o), grid.get(), &rep));
  return emit_report(o, s, rep);
}

int cmd_verify_projection(const Options& o) {
  const int m = m_arg(o);
  auto grid = grid_arg(o);
  mcat_report* rep = nullptr;
  const auto s = check(mcat_verify_projection(m, r_or_all(o), grid.get(), &rep));
  return emit_report(o, s, rep);
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--out", o.out, "Write output to this file instead of stdout");
}

void add_word(CLI::App* app, Options& o) { app->add_option("--word", o.word, "Word over {D, E, A}"); }

void add_sector(CLI::App* app, Options& o) {
  app->add_option("--m", o.m, "Word length");
  app->add_option("--r", o.r, "Number of A letters (all r when omitted, where allowed)");
}

void add_format(CLI::App* app, Options& o, const std::string& choices) {
  app->add_option("--format", o.format, "Output format: " + choices);
}

void add_grid(CLI::App* app, Options& o) {
  app->add_option("--grid", o.grid, "Rate points \"a/b,c/d;e,f\" (default grid when omitted)");
}

void add_ruleset(CLI::App* app, Options& o) {
  app->add_option("--ruleset", o.ruleset, "Rule set as a JSON file path or inline JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-Catalan tableaux and the two-species exclusion process, exactly", "mcat"};
  app.set_version_flag("--version", std::string(mcat_version()));
  app.require_subcommand(1, 1);

  Options o;
  int (*handler)(const Options&) = nullptr;
  auto on = [&](CLI::App* sub, int (*h)(const Options&)) {
    sub->callback([&handler, h] { handler = h; });
    add_common(sub, o);
  };

  auto* enumerate = app.add_subcommand("enumerate", "All tableaux of a word");
  add_word(enumerate, o);
  add_format(enumerate, o, "json (default) or ascii");
  enumerate->add_flag("--staircase", o.staircase, "Staircase form instead of condensed");
  on(enumerate, cmd_enumerate);

  auto* weight = app.add_subcommand("weight", "Weight polynomial of a word, or Z of a sector");
  add_word(weight, o);
  add_sector(weight, o);
  add_format(weight, o, "ascii (default) or json");
  on(weight, cmd_weight);

  auto* stationary = app.add_subcommand("stationary", "Exact stationary distribution of a sector");
  add_sector(stationary, o);
  stationary->add_option("--alpha", o.alpha, "Entry rate (default 1)");
  stationary->add_option("--beta", o.beta, "Exit rate (default 1)");
  stationary->add_option("--q", o.q, "Reverse swap rate (default 0)");
  add_format(stationary, o, "csv (default) or json");
  on(stationary, cmd_stationary);

  auto* count = app.add_subcommand("count", "Tableau counts by number of D letters");
  add_sector(count, o);
  count->add_option("--k", o.k, "Only rows with this number of D letters");
  count->add_flag("--brute", o.brute, "Add a column counted by enumeration");
  add_format(count, o, "csv (default) or json");
  on(count, cmd_count);

  auto* det = app.add_subcommand("det", "Determinant matrices and the weight identity for a word");
  add_word(det, o);
  on(det, cmd_det);

  auto* graph = app.add_subcommand("graph", "The tableau chain of a sector");
  add_sector(graph, o);
  add_format(graph, o, "json (default), csv or dot");
  on(graph, cmd_graph);

  auto* q1 = app.add_subcommand("q1", "Two-species alternative tableaux at q = 1");
  q1->require_subcommand(1, 1);
  auto* q1_verify = q1->add_subcommand("verify", "Stationary law at q = 1 against tableau weights");
  add_sector(q1_verify, o);
  add_grid(q1_verify, o);
  add_ruleset(q1_verify, o);
  on(q1_verify, cmd_q1_verify);
  auto* q1_consistency = q1->add_subcommand("consistency", "q^0 slice against multi-Catalan weights");
  add_sector(q1_consistency, o);
  add_ruleset(q1_consistency, o);
  on(q1_consistency, cmd_q1_consistency);
  auto* q1_sweep = q1->add_subcommand("sweep", "Try every built-in rule set up to length m");
  q1_sweep->add_option("--m", o.m, "Largest word length");
  add_grid(q1_sweep, o);
  on(q1_sweep, cmd_q1_sweep);
  auto* q1_enumerate = q1->add_subcommand("enumerate", "All alternative tableaux of a word");
  add_word(q1_enumerate, o);
  add_ruleset(q1_enumerate, o);
  add_format(q1_enumerate, o, "json (default) or ascii");
  on(q1_enumerate, cmd_q1_enumerate);

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1, 1);
  auto* main_theorem = verify->add_subcommand("main-theorem", "Stationary law at q = 0 against tableau weights");
  add_sector(main_theorem, o);
  add_grid(main_theorem, o);
  on(main_theorem, cmd_verify_main);
  auto* ansatz = verify->add_subcommand("ansatz", "Weight recurrences for every word up to length m");
  ansatz->add_option("--m", o.m, "Largest word length");
  on(ansatz, cmd_verify_ansatz);
  auto* balance = verify->add_subcommand("balance", "Balance of the tableau chain");
  add_sector(balance, o);
  add_grid(balance, o);
  on(balance, cmd_verify_balance);
  auto* projection = verify->add_subcommand("projection", "Tableau chain projects onto the particle chain");
  add_sector(projection, o);
  add_grid(projection, o);
  on(projection, cmd_verify_projection);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "mcat: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return handler != nullptr ? handler(o) : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "mcat: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "mcat: " << e.what() << "\n";
    return kExitRuntime;
  }
}
