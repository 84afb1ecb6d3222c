// Copyright 2026 The qbn Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <locale>
#include <optional>
#include <sstream>
#include <utility>

#include "digest.hpp"
#include "qbn/builtin.hpp"
#include "qbn/classical.hpp"
#include "qbn/error.hpp"
#include "qbn/network_io.hpp"
#include "qbn/phase_search.hpp"
#include "qbn/quantum.hpp"
#include "qbn/reproduce.hpp"
#include "qbn/validate.hpp"
#include "text_format.hpp"

namespace qbn::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kDefaultPrecision = 4;
constexpr int kDefaultSweepPrecision = 10;

// Bad flags or flag combinations; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedNetwork {
  Network net;
  std::string source;  // "builtin" or the file path
  std::string sha256;
};

LoadedNetwork load(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::exists(spec, ec)) {
    const auto text = read_text_file(spec);
    return {parse_network(text), spec, sha256_hex(text)};
  }
  const auto names = builtin_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) {
    auto net = builtin(spec);
    auto digest = sha256_hex(serialize_network(net));
    return {std::move(net), "builtin", std::move(digest)};
  }
  std::string known;
  for (auto n : names) known += (known.empty() ? "" : ", ") + std::string(n);
  throw IoError("'" + spec + "' is neither a readable file nor a builtin network (" +
                known + ")");
}

Json network_json(const LoadedNetwork& n) {
  return Json{{"name", n.net.name()}, {"source", n.source}, {"sha256", n.sha256}};
}

std::vector<std::pair<std::string, std::string>> split_evidence(
    const std::vector<std::string>& tokens) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& token : tokens) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size()) {
      throw UsageError("evidence '" + token + "' is not of the form Var=State");
    }
    pairs.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  return pairs;
}

std::vector<double> numbers(const std::string& text, const std::string& flag) {
  auto parsed = parse_number_list(text);
  if (!parsed) throw UsageError(flag + ": cannot parse number list '" + text + "'");
  return *parsed;
}

std::vector<double> read_theta_file(const std::string& path) {
  const auto text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return Json::parse(text).get<std::vector<double>>();
    } catch (const Json::exception& e) {
      throw UsageError("--theta-file " + path + ": " + e.what());
    }
  }
  return numbers(text, "--theta-file " + path);
}

std::string join(const std::vector<double>& values, const std::string& sep,
                 const std::function<std::string(double)>& fmt) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += fmt(values[i]);
  }
  return out;
}

std::string describe_query(const Network& net, VarId q, const Evidence& ev,
                           const std::string& state = {}) {
  std::string out = "Pr(" + net.variable(q).name;
  if (!state.empty()) out += "=" + state;
  std::string given;
  for (const auto& [v, s] : ev) {
    if (!given.empty()) given += ", ";
    given += net.variable(v).name + "=" + net.variable(v).states[s];
  }
  if (!given.empty()) out += " | " + given;
  return out + ")";
}

Json evidence_json(const Network& net, const Evidence& ev) {
  Json out = Json::object();
  for (const auto& [v, s] : ev) out[net.variable(v).name] = net.variable(v).states[s];
  return out;
}

// Display width of UTF-8 text (code points, not bytes).
std::size_t width(const std::string& text) {
  return static_cast<std::size_t>(std::count_if(
      text.begin(), text.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

// Whitespace-padded columns without trailing blanks.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], width(row[c]));
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - width(row[c]) + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json report(const std::string& command, const LoadedNetwork* net, Json parameters,
            Json results, std::optional<std::uint64_t> seed, Clock::time_point start) {
  Json out;
  out["command"] = command;
  out["network"] = net ? network_json(*net) : Json(nullptr);
  out["parameters"] = std::move(parameters);
  out["results"] = std::move(results);
  out["seed"] = seed ? Json(*seed) : Json(nullptr);
  out["wall_ms"] = elapsed_ms(start);
  return out;
}

enum class Format { Table, Csv, Json };

const std::map<std::string, Format> kFormats = {
    {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::string path;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  const auto text = read_text_file(a.path);
  std::vector<Violation> violations;
  try {
    violations = validate(parse_document(text));
  } catch (const ParseError& e) {
    out << "ParseError " << (e.path().empty() ? "/" : e.path()) << ": " << e.what() << '\n';
    return kExitFailure;
  }
  for (const auto& v : violations) out << format(v) << '\n';
  if (violations.empty()) out << a.path << ": ok\n";
  return violations.empty() ? kExitOk : kExitFailure;
}

// ------------------------------------------------------------------- infer

struct CommonQueryArgs {
  std::string net;
  std::string query;
  std::vector<std::string> evidence;
};

struct InferArgs {
  CommonQueryArgs common;
  std::string state;
  std::string mode = "classical";
  std::string theta;
  std::string theta_file;
  std::string format = "table";
  int precision = kDefaultPrecision;
};

struct ResolvedQuery {
  LoadedNetwork loaded;
  VarId query;
  Evidence evidence;
};

ResolvedQuery resolve(const CommonQueryArgs& a) {
  auto loaded = load(a.net);
  const auto q = loaded.net.id(a.query);
  const auto pairs = split_evidence(a.evidence);
  auto ev = Evidence::from_labels(loaded.net, pairs);
  check_query(loaded.net, q, ev);
  return {std::move(loaded), q, std::move(ev)};
}

std::optional<StateIndex> resolve_state(const Network& net, VarId q, const std::string& label) {
  if (label.empty()) return std::nullopt;
  return net.state(q, label);
}

int cmd_infer(const InferArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const auto [loaded, q, ev] = resolve(a.common);
  const auto& net = loaded.net;
  const auto selected = resolve_state(net, q, a.state);
  const auto& states = net.variable(q).states;
  const bool quantum = a.mode == "quantum";
  if (!a.theta.empty() && !a.theta_file.empty()) {
    throw UsageError("--theta and --theta-file are mutually exclusive");
  }
  if (!quantum && (!a.theta.empty() || !a.theta_file.empty())) {
    throw UsageError("--theta only applies to --mode quantum");
  }

  std::vector<double> probabilities;
  std::optional<QuantumInferenceResult> qr;
  std::vector<double> thetas;
  if (quantum) {
    const QuantumQuery query(net, q, ev);
    if (!a.theta.empty()) {
      thetas = numbers(a.theta, "--theta");
    } else if (!a.theta_file.empty()) {
      thetas = read_theta_file(a.theta_file);
    } else if (query.path_count() <= 1) {
      thetas.assign(query.path_count(), 0.0);
    } else {
      throw UsageError("--mode quantum needs --theta or --theta-file (K = " +
                       std::to_string(query.path_count()) + " paths)");
    }
    qr = query.evaluate(ThetaVector(thetas));
    probabilities = qr->distribution;
  } else {
    probabilities = infer_classical(net, q, ev).probabilities;
  }
  const std::size_t k = path_count(net, q, ev);

  const auto fmt = [&](double v) { return fixed(v, a.precision); };
  switch (kFormats.at(a.format)) {
    case Format::Table: {
      out << "network  " << net.name() << " (" << loaded.source << ")\n";
      out << "query    " << describe_query(net, q, ev) << '\n';
      out << "mode     " << a.mode;
      if (quantum) out << ", K = " << k << ", theta = (" << join(thetas, ", ", shortest) << ")";
      out << '\n';
      std::vector<std::vector<std::string>> rows;
      if (quantum) {
        rows.push_back({"state", "probability", "classical_mass", "interference", "unnormalized"});
      } else {
        rows.push_back({"state", "probability"});
      }
      for (std::size_t s = 0; s < states.size(); ++s) {
        std::string label = states[s];
        if (selected && *selected == s) label = "* " + label;
        if (quantum) {
          const auto& t = qr->states[s];
          rows.push_back({label, fmt(probabilities[s]), fmt(t.classical_mass),
                          fmt(t.interference), fmt(t.unnormalized)});
        } else {
          rows.push_back({label, fmt(probabilities[s])});
        }
      }
      print_table(out, rows);
      if (quantum) out << "alpha    " << fmt(qr->alpha) << '\n';
      break;
    }
    case Format::Csv: {
      out << (quantum ? "state,probability,classical_mass,interference,unnormalized,alpha\n"
                      : "state,probability\n");
      for (std::size_t s = 0; s < states.size(); ++s) {
        out << states[s] << ',' << fmt(probabilities[s]);
        if (quantum) {
          const auto& t = qr->states[s];
          out << ',' << fmt(t.classical_mass) << ',' << fmt(t.interference) << ','
              << fmt(t.unnormalized) << ',' << fmt(qr->alpha);
        }
        out << '\n';
      }
      break;
    }
    case Format::Json: {
      Json params{{"query", net.variable(q).name},
                  {"state", selected ? Json(states[*selected]) : Json(nullptr)},
                  {"evidence", evidence_json(net, ev)},
                  {"mode", a.mode}};
      if (quantum) params["theta"] = thetas;
      Json results{{"path_count", k}};
      Json dist = Json::object();
      for (std::size_t s = 0; s < states.size(); ++s) dist[states[s]] = probabilities[s];
      results["distribution"] = dist;
      if (quantum) {
        Json terms = Json::array();
        for (std::size_t s = 0; s < states.size(); ++s) {
          const auto& t = qr->states[s];
          terms.push_back({{"state", states[s]},
                           {"classical_mass", t.classical_mass},
                           {"interference", t.interference},
                           {"unnormalized", t.unnormalized}});
        }
        results["terms"] = terms;
        results["alpha"] = qr->alpha;
      }
      if (selected) results["probability"] = probabilities[*selected];
      out << report("infer", &loaded, params, results, std::nullopt, start).dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------------- sweep

struct SweepArgs {
  CommonQueryArgs common;
  std::vector<std::string> vary{"shared"};
  std::string fixed;
  double origin = 0.0;
  std::optional<double> step;
  std::string output;
  std::string format = "csv";
  int precision = kDefaultSweepPrecision;
};

std::size_t parse_index(const std::string& text, const std::string& flag) {
  const auto v = parse_double(text);
  if (!v || *v < 1 || *v != std::floor(*v)) {
    throw UsageError(flag + ": '" + text + "' is not a 1-based θ index");
  }
  return static_cast<std::size_t>(*v) - 1;
}

void write_sweep_csv(std::ostream& out, const Network& net, const SweepTrace& trace,
                     int precision) {
  std::string header;
  for (std::size_t i = 0; i < trace.path_count; ++i) {
    header += "theta_" + std::to_string(i + 1) + ",";
  }
  const auto& states = net.variable(trace.query).states;
  for (std::size_t s = 0; s < states.size(); ++s) {
    header += "p_" + states[s] + (s + 1 < states.size() ? "," : "");
  }
  out << header << '\n';
  std::string line;
  for (const auto& sample : trace.samples) {
    line.clear();
    for (double th : sample.thetas) {
      line += fixed(th, precision);
      line += ',';
    }
    for (std::size_t s = 0; s < sample.probabilities.size(); ++s) {
      line += fixed(sample.probabilities[s], precision);
      if (s + 1 < sample.probabilities.size()) line += ',';
    }
    line += '\n';
    out << line;
  }
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const auto [loaded, q, ev] = resolve(a.common);
  const auto& net = loaded.net;
  SweepTrace trace;
  Json params{{"query", net.variable(q).name}, {"evidence", evidence_json(net, ev)}};
  if (a.vary.size() == 1 && a.vary[0] == "shared") {
    if (!a.fixed.empty()) throw UsageError("--fixed only applies to --vary pair");
    const double step = a.step.value_or(kDefaultSweepStep);
    trace = sweep_shared_phase(net, q, ev, step);
    params["vary"] = "shared";
    params["step"] = step;
  } else if (a.vary.size() == 3 && a.vary[0] == "pair") {
    const auto first = parse_index(a.vary[1], "--vary pair");
    const auto second = parse_index(a.vary[2], "--vary pair");
    const std::size_t k = path_count(net, q, ev);
    std::vector<double> fixed_values(k, 0.0);
    if (!a.fixed.empty()) fixed_values = numbers(a.fixed, "--fixed");
    const double step = a.step.value_or(kDefaultSearchStep);
    trace = sweep_pair(net, q, ev, ThetaVector(fixed_values), first, second, step, a.origin);
    params["vary"] = Json{"pair", first + 1, second + 1};
    params["fixed"] = fixed_values;
    params["origin"] = a.origin;
    params["step"] = step;
  } else {
    throw UsageError("--vary expects 'shared' or 'pair I J'");
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.output.empty()) {
    file.open(a.output, std::ios::binary);
    if (!file) throw IoError("cannot write '" + a.output + "'");
    sink = &file;
  }
  if (kFormats.at(a.format) == Format::Json) {
    Json samples = Json::array();
    for (const auto& s : trace.samples) samples.push_back({{"theta", s.thetas}, {"p", s.probabilities}});
    Json results{{"path_count", trace.path_count},
                 {"states", net.variable(q).states},
                 {"samples", std::move(samples)}};
    *sink << report("sweep", &loaded, params, results, std::nullopt, start).dump(2) << '\n';
  } else {
    write_sweep_csv(*sink, net, trace, a.precision);
  }
  if (file.is_open()) {
    file.close();
    if (!file) throw IoError("error writing '" + a.output + "'");
    out << "wrote " << trace.samples.size() << " samples to " << a.output << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ search

struct SearchArgs {
  CommonQueryArgs common;
  std::string state;
  double step = kDefaultSearchStep;
  std::string strategy = "coordinate-ascent";
  std::size_t restarts = 100;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string fixed;
  std::vector<std::string> pair;
  std::string format = "table";
  int precision = kDefaultPrecision;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const auto [loaded, q, ev] = resolve(a.common);
  const auto& net = loaded.net;
  const auto target = net.state(q, a.state);
  SearchOptions options;
  options.step = a.step;
  const auto strategy = parse_strategy(a.strategy);
  if (!strategy) {
    throw UsageError("--strategy must be exhaustive, fix-and-vary-2 or coordinate-ascent");
  }
  options.strategy = *strategy;
  options.restarts = a.restarts;
  options.seed = a.seed;
  options.threads = std::max(1u, a.threads);
  if (!a.fixed.empty()) options.fixed = ThetaVector(numbers(a.fixed, "--fixed"));
  if (!a.pair.empty()) {
    if (a.pair.size() != 2) throw UsageError("--pair expects two 1-based θ indices");
    options.pair = {parse_index(a.pair[0], "--pair"), parse_index(a.pair[1], "--pair")};
  }
  const auto r = grid_search(net, q, target, ev, options);
  const std::vector<double> best(r.best_thetas.phases().begin(), r.best_thetas.phases().end());
  const bool seeded = r.strategy == SearchStrategy::CoordinateAscent;

  if (kFormats.at(a.format) == Format::Json) {
    Json params{{"query", net.variable(q).name},
                {"state", a.state},
                {"evidence", evidence_json(net, ev)},
                {"strategy", std::string(to_string(r.strategy))},
                {"step", r.step},
                {"restarts", seeded ? Json(r.restarts) : Json(nullptr)},
                {"threads", options.threads}};
    if (options.fixed) {
      const auto f = options.fixed->phases();
      params["fixed"] = std::vector<double>(f.begin(), f.end());
      params["pair"] = {options.pair.first + 1, options.pair.second + 1};
    }
    Json results{{"best_probability", r.best_probability},
                 {"best_thetas", best},
                 {"evaluations", r.evaluations},
                 {"path_count", best.size()}};
    out << report("search", &loaded, params, results,
                  seeded ? std::optional<std::uint64_t>(r.seed) : std::nullopt, start)
               .dump(2)
        << '\n';
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows = {
      {"network", net.name() + " (" + loaded.source + ")"},
      {"objective", describe_query(net, q, ev, a.state)},
      {"best", fixed(r.best_probability, a.precision)},
      {"theta", "(" + join(best, ", ", shortest) + ")"},
      {"evaluations", std::to_string(r.evaluations)},
      {"strategy", std::string(to_string(r.strategy))},
      {"step", shortest(r.step)},
  };
  if (seeded) {
    rows.push_back({"restarts", std::to_string(r.restarts)});
    rows.push_back({"seed", std::to_string(r.seed)});
  }
  print_table(out, rows);
  return kExitOk;
}

// --------------------------------------------------------------- reproduce

struct ReproduceArgs {
  std::vector<std::string> what{"all"};
  std::string format = "table";
  int precision = kDefaultPrecision;
};

int cmd_reproduce(const ReproduceArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  std::vector<std::string> names;
  for (const auto& w : a.what) {
    if (w == "all") {
      for (auto n : reproduce::experiment_names()) names.emplace_back(n);
    } else {
      const auto known = reproduce::experiment_names();
      if (std::find(known.begin(), known.end(), w) == known.end()) {
        std::string list = "all";
        for (auto n : known) list += ", " + std::string(n);
        throw UsageError("--what: unknown experiment '" + w + "' (choose from " + list + ")");
      }
      names.push_back(w);
    }
  }
  bool all_pass = true;
  Json reports = Json::array();
  for (const auto& name : names) {
    const auto r = reproduce::run(name);
    all_pass = all_pass && r.all_pass();
    if (kFormats.at(a.format) == Format::Json) {
      Json checks = Json::array();
      for (const auto& c : r.checks) {
        checks.push_back({{"label", c.label},
                          {"expected", c.expected},
                          {"got", c.got},
                          {"tolerance", c.tolerance},
                          {"comparison", c.comparison == reproduce::Comparison::Near ? "near" : "at_least"},
                          {"pass", c.pass},
                          {"note", c.note}});
      }
      reports.push_back({{"what", r.what},
                         {"passed", r.pass_count()},
                         {"total", r.checks.size()},
                         {"checks", std::move(checks)}});
      continue;
    }
    out << "== " << r.what << ": " << r.pass_count() << "/" << r.checks.size() << " PASS\n";
    std::vector<std::vector<std::string>> rows = {
        {"result", "check", "expected", "got", "tolerance", "note"}};
    for (const auto& c : r.checks) {
      const std::string expected = (c.comparison == reproduce::Comparison::AtLeast ? ">= " : "") +
                                   fixed(c.comparison == reproduce::Comparison::AtLeast
                                             ? c.expected - c.tolerance
                                             : c.expected,
                                         a.precision);
      std::ostringstream tol;
      tol.imbue(std::locale::classic());
      tol << c.tolerance;
      rows.push_back({c.pass ? "PASS" : "FAIL", c.label, expected, fixed(c.got, a.precision),
                      tol.str(), c.note});
    }
    print_table(out, rows);
  }
  if (kFormats.at(a.format) == Format::Json) {
    Json results{{"all_pass", all_pass}, {"experiments", std::move(reports)}};
    out << report("reproduce", nullptr, Json{{"what", names}}, results, std::nullopt, start).dump(2)
        << '\n';
  }
  return all_pass ? kExitOk : kExitFailure;
}

// ------------------------------------------------------------------ export

struct ExportArgs {
  std::string net;
  std::string output;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
  const auto loaded = load(a.net);
  const auto text = serialize_network(loaded.net);
  if (a.output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(a.output, std::ios::binary);
  if (!(file << text) || !(file.close(), file)) throw IoError("cannot write '" + a.output + "'");
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonQueryArgs& a) {
  cmd->add_option("--net", a.net, "Builtin network name or JSON network file")->required();
  cmd->add_option("--query", a.query, "Query variable")->required();
  cmd->add_option("--evidence", a.evidence, "Observations as Var=State (repeatable)");
}

CLI::Option* add_format(CLI::App* cmd, std::string& format, std::vector<std::string> allowed) {
  return cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(std::move(allowed)))
      ->capture_default_str();
}

}  // namespace

namespace {

// Streams print numbers the same way whatever the caller's locale.
class ClassicLocale {
 public:
  ClassicLocale(std::ostream& out, std::ostream& err)
      : out_(out), err_(err),
        out_locale_(out.imbue(std::locale::classic())),
        err_locale_(err.imbue(std::locale::classic())) {}
  ~ClassicLocale() {
    out_.imbue(out_locale_);
    err_.imbue(err_locale_);
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  std::locale out_locale_;
  std::locale err_locale_;
};

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  const ClassicLocale classic(out, err);
  CLI::App app{"Classical and quantum-like inference on discrete Bayesian networks", "qbn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qbn 0.1.0");

  ValidateArgs validate_args;
  auto* validate_cmd = app.add_subcommand("validate", "Check a network file");
  validate_cmd->add_option("path", validate_args.path, "Network JSON file")->required();

  InferArgs infer_args;
  auto* infer_cmd = app.add_subcommand("infer", "Classical or quantum-like inference");
  add_common(infer_cmd, infer_args.common);
  infer_cmd->add_option("--state", infer_args.state, "Query state to highlight");
  infer_cmd->add_option("--mode", infer_args.mode, "Inference mode")
      ->check(CLI::IsMember({"classical", "quantum"}))
      ->capture_default_str();
  infer_cmd->add_option("--theta", infer_args.theta, "Phases θ_1..θ_K, comma separated");
  infer_cmd->add_option("--theta-file", infer_args.theta_file, "File with phases θ_1..θ_K");
  add_format(infer_cmd, infer_args.format, {"table", "csv", "json"});
  infer_cmd->add_option("--precision", infer_args.precision, "Decimal places")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep phases over [0, 2π) and emit CSV");
  add_common(sweep_cmd, sweep_args.common);
  sweep_cmd->add_option("--vary", sweep_args.vary, "'shared' or 'pair I J' (1-based θ indices)")
      ->expected(1, 3)
      ->capture_default_str();
  sweep_cmd->add_option("--fixed", sweep_args.fixed, "Base θ vector for a pair sweep");
  sweep_cmd->add_option("--origin", sweep_args.origin, "Start of the pair sweep axes")
      ->capture_default_str();
  sweep_cmd->add_option("--step", sweep_args.step,
                        "Grid step in radians (default 0.0001 shared, 0.1 pair)");
  sweep_cmd->add_option("--output", sweep_args.output, "Write the trace to a file");
  add_format(sweep_cmd, sweep_args.format, {"csv", "json"});
  sweep_cmd->add_option("--precision", sweep_args.precision, "Decimal places in CSV")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Search θ maximizing one query state");
  add_common(search_cmd, search_args.common);
  search_cmd->add_option("--state", search_args.state, "Target query state")->required();
  search_cmd->add_option("--step", search_args.step, "Grid step in radians")->capture_default_str();
  search_cmd->add_option("--strategy", search_args.strategy,
                         "exhaustive, fix-and-vary-2 or coordinate-ascent")
      ->capture_default_str();
  search_cmd->add_option("--restarts", search_args.restarts, "Coordinate-ascent restarts")
      ->capture_default_str();
  search_cmd->add_option("--seed", search_args.seed, "Restart seed")->capture_default_str();
  search_cmd->add_option("--threads", search_args.threads, "Worker threads")->capture_default_str();
  search_cmd->add_option("--fixed", search_args.fixed, "Base θ vector for fix-and-vary-2");
  search_cmd->add_option("--pair", search_args.pair, "Varied θ indices for fix-and-vary-2 (1-based)")
      ->expected(2);
  add_format(search_cmd, search_args.format, {"table", "json"});
  search_cmd->add_option("--precision", search_args.precision, "Decimal places")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();

  ReproduceArgs reproduce_args;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Check the reference experiments");
  reproduce_cmd->add_option("--what", reproduce_args.what, "Experiment name(s) or 'all'")
      ->capture_default_str();
  add_format(reproduce_cmd, reproduce_args.format, {"table", "json"});
  reproduce_cmd->add_option("--precision", reproduce_args.precision, "Decimal places")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "Write a network in canonical JSON");
  export_cmd->add_option("--net", export_args.net, "Builtin network name or file")->required();
  export_cmd->add_option("--output", export_args.output, "Destination file (default stdout)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(validate_args, out);
    if (infer_cmd->parsed()) return cmd_infer(infer_args, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_args, out);
    if (search_cmd->parsed()) return cmd_search(search_args, out);
    if (reproduce_cmd->parsed()) return cmd_reproduce(reproduce_args, out);
    if (export_cmd->parsed()) return cmd_export(export_args, out);
  } catch (const UsageError& e) {
    err << "qbn: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "qbn: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "qbn: invalid network\n";
    for (const auto& v : e.violations()) err << "  " << format(v) << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "qbn: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qbn::cli
