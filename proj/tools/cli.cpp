// Copyright 2026 The pauliprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "pauliprop/analytics.hpp"
#include "pauliprop/operator_io.hpp"
#include "pauliprop/verify.hpp"
#include "pauliprop/version.hpp"

namespace pauliprop::cli {
namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double to_real(const std::string& key, const std::string& value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    throw ConfigError("key '" + key + "': expected a real number, got '" + value + "'");
  }
  return out;
}

std::uint64_t to_unsigned(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("key '" + key + "': expected a non-negative integer, got '" + value + "'");
  }
  return out;
}

// Accepts an integer, 2^N, or inf/none for no cap.
std::size_t to_budget(const std::string& key, const std::string& value) {
  if (value == "inf" || value == "none" || value == "unbounded") return kUnbounded;
  if (value.rfind("2^", 0) == 0) {
    const auto e = to_unsigned(key, value.substr(2));
    if (e >= 63) throw ConfigError("key '" + key + "': 2^" + std::to_string(e) + " is too large");
    return std::size_t{1} << e;
  }
  const auto v = to_unsigned(key, value);
  if (v == 0) throw ConfigError("key '" + key + "' must be >= 1");
  return static_cast<std::size_t>(v);
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  throw ConfigError("key '" + key + "': expected a boolean, got '" + value + "'");
}

std::string budget_text(std::size_t k) { return k == kUnbounded ? "inf" : std::to_string(k); }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

RunConfig SimConfig::run_config() const {
  RunConfig cfg;
  cfg.total_time = t;
  cfg.steps = steps;
  cfg.policy = policy;
  cfg.record_every = record_every;
  cfg.record_ose = ose;
  return cfg;
}

std::vector<std::string> SimConfig::echo() const {
  std::vector<std::string> lines;
  auto add = [&](const std::string& key, const std::string& value) { lines.push_back("config " + key + "=" + value); };
  add("model", model);
  if (model == "file") add("hamiltonian", hamiltonian_file);
  add("L", std::to_string(length));
  add("Jx", fmt17(jx));
  add("Jy", fmt17(jy));
  add("Jz", fmt17(jz));
  add("boundary", to_string(boundary));
  add("t", fmt17(t));
  add("steps", std::to_string(steps));
  add("tau", fmt17(t / static_cast<double>(steps)));
  add("K", budget_text(policy.budget));
  add("policy", to_string(policy.kind));
  add("buckets", std::to_string(policy.buckets));
  add("weight_cap", budget_text(policy.weight_cap));
  add("prune_eps", fmt17(policy.prune_eps));
  add("observable", observable);
  add("mode", mode == MagnetizationMode::PerSite ? "per_site" : "joint");
  add("state", state);
  add("record_every", std::to_string(record_every));
  add("seed", std::to_string(seed));
  add("out_dir", out_dir.string());
  add("snapshot_every", std::to_string(snapshot_every));
  add("ose", ose ? "1" : "0");
  return lines;
}

SimConfig parse_config(const std::string& text) {
  SimConfig c;
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
    if (!kv.emplace(key, value).second) throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
  }

  static const std::set<std::string> known = {
      "model", "hamiltonian", "L", "Jx", "Jy", "Jz", "boundary", "t", "steps", "tau", "K",
      "policy", "buckets", "weight_cap", "prune_eps", "observable", "mode", "state",
      "record_every", "seed", "out_dir", "snapshot_every", "ose", "threads"};
  for (const auto& [key, value] : kv) {
    if (!known.count(key)) throw ConfigError("unknown key '" + key + "'");
  }
  auto get = [&](const std::string& key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  try {
    if (auto v = get("model")) c.model = *v;
    if (c.model != "xxz" && c.model != "file") throw ConfigError("model must be 'xxz' or 'file'");
    if (auto v = get("hamiltonian")) c.hamiltonian_file = *v;
    if (c.model == "file" && c.hamiltonian_file.empty()) throw ConfigError("model=file requires 'hamiltonian'");
    if (auto v = get("L")) c.length = to_unsigned("L", *v);
    if (c.model == "xxz" && c.length < 2) throw ConfigError("model=xxz requires L >= 2");
    if (auto v = get("Jx")) c.jx = to_real("Jx", *v);
    if (auto v = get("Jy")) c.jy = to_real("Jy", *v);
    if (auto v = get("Jz")) c.jz = to_real("Jz", *v);
    if (auto v = get("boundary")) c.boundary = parse_boundary(*v);
    if (!get("t")) throw ConfigError("missing required key 't'");
    c.t = to_real("t", *get("t"));
    if (c.t < 0.0) throw ConfigError("t must be >= 0");
    const auto* steps = get("steps");
    const auto* tau = get("tau");
    if (steps && tau) throw ConfigError("give either 'steps' or 'tau', not both");
    if (steps) {
      c.steps = to_unsigned("steps", *steps);
    } else if (tau) {
      c.tau = to_real("tau", *tau);
      if (!(c.tau > 0.0)) throw ConfigError("tau must be > 0");
      c.steps = static_cast<std::size_t>(std::max(1.0, std::round(c.t / c.tau)));
    } else {
      throw ConfigError("missing 'steps' or 'tau'");
    }
    if (c.steps < 1) throw ConfigError("steps must be >= 1");
    c.tau = c.t / static_cast<double>(c.steps);

    std::size_t budget = kUnbounded;
    if (auto v = get("K")) budget = to_budget("K", *v);
    if (auto v = get("policy")) {
      c.policy.kind = parse_policy_kind(*v);
    } else {
      c.policy.kind = TruncationPolicy::Kind::TopKExact;
    }
    c.policy.budget = budget;
    if (auto v = get("buckets")) c.policy.buckets = to_unsigned("buckets", *v);
    if (auto v = get("weight_cap")) c.policy.weight_cap = to_budget("weight_cap", *v);
    if (auto v = get("prune_eps")) c.policy.prune_eps = to_real("prune_eps", *v);
    if (c.policy.kind == TruncationPolicy::Kind::TopKBucket && budget == kUnbounded) {
      throw ConfigError("policy=bucket requires a finite K");
    }
    if (c.policy.kind == TruncationPolicy::Kind::WeightCap && c.policy.weight_cap == kUnbounded) {
      throw ConfigError("policy=weight requires weight_cap");
    }
    c.policy.validate();

    if (auto v = get("observable")) c.observable = *v;
    if (auto v = get("mode")) c.mode = parse_magnetization_mode(*v);
    if (auto v = get("state")) c.state = *v;
    if (auto v = get("record_every")) c.record_every = to_unsigned("record_every", *v);
    if (c.record_every < 1) throw ConfigError("record_every must be >= 1");
    if (auto v = get("seed")) c.seed = to_unsigned("seed", *v);
    if (auto v = get("out_dir")) c.out_dir = *v;
    if (auto v = get("snapshot_every")) c.snapshot_every = to_unsigned("snapshot_every", *v);
    if (auto v = get("ose")) c.ose = to_bool("ose", *v);
    if (auto v = get("threads")) c.threads = to_unsigned("threads", *v);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

Hamiltonian build_hamiltonian(const SimConfig& config) {
  if (config.model == "xxz") {
    try {
      return build_xxz_chain(config.length, config.jx, config.jy, config.jz, config.boundary);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  std::string text;
  try {
    text = read_text_file(config.hamiltonian_file);
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
  try {
    Hamiltonian h = parse_hamiltonian(text);
    if (config.length != 0 && config.length != h.num_qubits()) {
      throw ConfigError("L=" + std::to_string(config.length) + " but the Hamiltonian file has " +
                        std::to_string(h.num_qubits()) + " sites");
    }
    if (h.order_label().empty()) h.set_order_label("file order; terms act on the observable in list order");
    return h;
  } catch (const ParseError& e) {
    throw ConfigError(config.hamiltonian_file + ": " + e.what());
  }
}

PauliSum parse_observable(const std::string& spec, std::size_t n) {
  PauliSum out(n);
  if (spec.size() >= 2 && (spec[0] == 'X' || spec[0] == 'Y' || spec[0] == 'Z') &&
      std::all_of(spec.begin() + 1, spec.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    const auto site = to_unsigned("observable", spec.substr(1));
    if (site >= n) throw ConfigError("observable site " + std::to_string(site) + " outside the chain");
    out.accumulate(PauliWord::single(n, site, spec[0]), 1.0);
    return out;
  }
  if (spec.size() != n) throw ConfigError("observable '" + spec + "' is neither staggered, <P><site>, nor a length-" + std::to_string(n) + " Pauli string");
  try {
    const PauliWord w = PauliWord::from_string(spec);
    if (w.is_identity()) throw ConfigError("observable must not be the identity");
    out.accumulate(w, 1.0);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("observable: ") + e.what());
  }
  return out;
}

std::vector<std::string> version_header() {
  return {std::string("pauliprop version=") + kVersion + " git=" + kGitDescribe};
}

namespace {

std::vector<std::string> run_header(const SimConfig& config, const Hamiltonian& h) {
  auto lines = version_header();
  for (auto& line : config.echo()) lines.push_back(std::move(line));
  lines.push_back("term_order " + h.order_label());
  for (std::size_t i = 0; i < h.size(); ++i) {
    lines.push_back("term " + std::to_string(i) + " " + fmt17(h[i].weight) + " " + h[i].word.to_string());
  }
  return lines;
}

ProductState make_state(const SimConfig& config, std::size_t n) {
  if (config.state == "random") {
    random_gen::Rng rng(config.seed);
    return random_gen::state(n, rng, false);
  }
  try {
    return ProductState::parse(config.state, n);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("state: ") + e.what());
  }
}

std::string snapshot_name(std::size_t step) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "step_%06zu.txt", step);
  return buf;
}

}  // namespace

int cmd_simulate(const std::filesystem::path& config_path, std::ostream& out, std::ostream& err) {
  SimConfig config;
  Hamiltonian h(1);
  std::optional<ProductState> state;
  PauliSum single(1);
  try {
    if (!std::filesystem::is_regular_file(config_path)) throw ConfigError("config file not found: " + config_path.string());
    config = parse_config(read_text_file(config_path));
    h = build_hamiltonian(config);
    config.length = h.num_qubits();
    if (config.state != "none") state = make_state(config, config.length);
    if (config.observable == "staggered") {
      if (!state) throw ConfigError("observable=staggered needs a state");
    } else {
      single = parse_observable(config.observable, config.length);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  const auto header = run_header(config, h);
  const RunConfig cfg = config.run_config();
  const std::size_t threads = config.threads ? config.threads : default_thread_count();
  const auto snap_dir = config.out_dir / "snapshots";
  std::size_t snapshots = 0;

  auto snapshot_observer = [&](const std::string& label) -> StepObserver {
    if (config.snapshot_every == 0) return {};
    return [&, label](const TrajectoryRecord& rec, const PauliSum& op) {
      if (rec.step % config.snapshot_every != 0 && rec.step != cfg.steps) return;
      PauliSum scaled = op;
      scaled.scale(1.0 / rec.norm_ratio);
      auto lines = header;
      lines.push_back("snapshot_observable=" + label);
      lines.push_back("step=" + std::to_string(rec.step) + " time=" + fmt17(rec.time) + " terms=" + std::to_string(op.size()));
      write_text_file(snap_dir / snapshot_name(rec.step), format_operator(scaled, lines));
      ++snapshots;
    };
  };

  std::vector<TrajectoryRecord> records;
  try {
    RunConfig snap_cfg = cfg;
    snap_cfg.record_every = 1;
    if (config.observable == "staggered" && config.mode == MagnetizationMode::PerSite) {
      records = staggered_magnetization(h, *state, cfg, MagnetizationMode::PerSite, threads);
      if (config.snapshot_every) {
        // Per-site runs dump the center-site operator.
        const std::size_t center = config.length / 2;
        PauliSum z(config.length);
        z.accumulate(PauliWord::single(config.length, center, 'Z'), 1.0);
        backpropagate(z, h, snap_cfg, nullptr, snapshot_observer("Z" + std::to_string(center)));
      }
    } else {
      const PauliSum o = config.observable == "staggered" ? staggered_observable(config.length) : single;
      auto observer = snapshot_observer(config.observable);
      std::vector<TrajectoryRecord> all;
      const auto result = backpropagate(o, h, snap_cfg, state ? &*state : nullptr,
                                        [&](const TrajectoryRecord& rec, const PauliSum& op) {
                                          if (observer) observer(rec, op);
                                          if (rec.step % cfg.record_every == 0 || rec.step == cfg.steps) {
                                            records.push_back(rec);
                                          }
                                        });
      (void)result;
    }
  } catch (const PropagationError& e) {
    err << "engine abort: " << e.what() << '\n';
    return kEngineAbort;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    std::ostringstream csv;
    write_trajectory_csv(csv, records, header, config.ose);
    write_text_file(config.out_dir / "trajectory.csv", csv.str());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  out << "wrote " << (config.out_dir / "trajectory.csv").string() << " (" << records.size() << " records";
  if (snapshots) out << ", " << snapshots << " snapshots";
  out << ")\n";
  return kOk;
}

namespace {

struct DumpEntry {
  std::filesystem::path path;
  OperatorDump dump;
  std::size_t step = 0;
  double time = 0.0;
};

std::vector<DumpEntry> load_dumps(const std::filesystem::path& input) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_regular_file(input)) {
    files.push_back(input);
  } else if (fs::is_directory(input)) {
    const fs::path dir = fs::is_directory(input / "snapshots") ? input / "snapshots" : input;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ConfigError("no operator dumps (*.txt) in " + dir.string());
  } else {
    throw ConfigError("input not found: " + input.string());
  }
  std::vector<DumpEntry> dumps;
  for (std::size_t i = 0; i < files.size(); ++i) {
    DumpEntry e;
    e.path = files[i];
    e.step = i;
    e.time = static_cast<double>(i);
    try {
      e.dump = read_operator_file(files[i]);
    } catch (const ParseError& ex) {
      throw ConfigError(files[i].string() + ": " + ex.what());
    }
    if (auto it = e.dump.header.find("step"); it != e.dump.header.end()) e.step = std::stoull(it->second);
    if (auto it = e.dump.header.find("time"); it != e.dump.header.end()) e.time = std::stod(it->second);
    if (e.dump.op.empty()) throw ConfigError(files[i].string() + ": operator dump has no terms");
    dumps.push_back(std::move(e));
  }
  std::stable_sort(dumps.begin(), dumps.end(), [](const DumpEntry& a, const DumpEntry& b) { return a.step < b.step; });
  return dumps;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::vector<DumpEntry> dumps;
  try {
    for (double a : options.alphas) {
      if (!(a > 0.0 && a <= 1.0)) throw ConfigError("alpha must lie in (0, 1], got " + fmt17(a));
    }
    for (std::size_t k : options.budgets) {
      if (k < 1) throw ConfigError("K must be >= 1");
    }
    if (options.epsilon && !(*options.epsilon > 0.0)) throw ConfigError("eps must be > 0");
    dumps = load_dumps(options.input);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  fs::path out_dir = options.out_dir;
  if (out_dir.empty()) out_dir = (fs::is_directory(options.input) ? options.input : options.input.parent_path()) / "analysis";

  auto header = version_header();
  header.push_back("analyze input=" + options.input.string());

  std::ostringstream ose_csv, bounds_csv, growth_csv;
  for (const auto& line : header) ose_csv << "# " << line << '\n', bounds_csv << "# " << line << '\n', growth_csv << "# " << line << '\n';
  ose_csv << "time,alpha,value\n";
  bounds_csv << "time,alpha,K,entropy,ln_delta_bound,exact_error,error_bound,epsilon,K_required\n";
  growth_csv << "step,time,terms\n";

  try {
    for (const auto& d : dumps) {
      const std::string time = fmt17(d.time);
      growth_csv << d.step << ',' << time << ',' << d.dump.op.size() << '\n';
      for (double alpha : options.alphas) {
        const double s = ose(d.dump.op, alpha).value;
        ose_csv << time << ',' << fmt17(alpha) << ',' << fmt17(s) << '\n';
        if (alpha >= 1.0) continue;
        for (std::size_t k : options.budgets) {
          std::string k_required = "", eps = "";
          if (options.epsilon) {
            eps = fmt17(*options.epsilon);
            try {
              k_required = std::to_string(k_prescription(s, *options.epsilon, alpha));
            } catch (const BudgetOverflow&) {
              k_required = "overflow";
            }
          }
          const auto err_report = truncation_error(d.dump.op, k);
          bounds_csv << time << ',' << fmt17(alpha) << ',' << k << ',' << fmt17(s) << ','
                     << fmt17(delta_bound(s, static_cast<double>(k), alpha)) << ',' << fmt17(err_report.exact)
                     << ',' << fmt17(err_report.bound) << ',' << eps << ',' << k_required << '\n';
        }
      }
      const auto dist = distributions(d.dump.op);
      auto hist_header = header;
      hist_header.push_back("source=" + d.path.filename().string() + " step=" + std::to_string(d.step) + " time=" + time);
      const std::string stem = d.path.stem().string();
      std::ostringstream mag, wt;
      write_histogram_csv(mag, dist.magnitude, hist_header);
      write_histogram_csv(wt, dist.weight, hist_header);
      write_text_file(out_dir / "histograms" / (stem + "_magnitude.csv"), mag.str());
      write_text_file(out_dir / "histograms" / (stem + "_weight.csv"), wt.str());
    }
    write_text_file(out_dir / "ose.csv", ose_csv.str());
    write_text_file(out_dir / "bounds.csv", bounds_csv.str());
    write_text_file(out_dir / "growth.csv", growth_csv.str());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  out << "analyzed " << dumps.size() << " dump(s) into " << out_dir.string() << '\n';
  return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  std::vector<SuiteReport> reports;
  try {
    reports = run_suite(suite, seed);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  bool ok = true;
  for (const auto& r : reports) {
    out << r.summary() << '\n';
    for (const auto& note : r.notes) out << "  note: " << note << '\n';
    for (const auto& f : r.failures) out << "  counterexample: " << f << '\n';
    if (!r.passed && !r.informational) ok = false;
  }
  out << "verify " << suite << " seed=" << seed << ' ' << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kVerifyFailed;
}

int cmd_bound(double entropy, double epsilon, double alpha, std::ostream& out, std::ostream& err) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(epsilon > 0.0) || !std::isfinite(entropy)) {
    err << "error: need 0 < alpha < 1, eps > 0 and a finite entropy\n";
    return kInvalidInput;
  }
  const double ln_k = ln_k_prescription(entropy, epsilon, alpha);
  out << "entropy=" << fmt17(entropy) << " eps=" << fmt17(epsilon) << " alpha=" << fmt17(alpha) << '\n';
  out << "ln_K_required=" << fmt17(ln_k) << '\n';
  try {
    const auto k = k_prescription(entropy, epsilon, alpha);
    out << "K_required=" << k << '\n';
    out << "ln_delta_bound_at_K=" << fmt17(delta_bound(entropy, static_cast<double>(k), alpha)) << '\n';
  } catch (const BudgetOverflow&) {
    out << "K_required=overflow\n";
  }
  out << "target_delta=" << fmt17(epsilon * epsilon / 2.0) << '\n';
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Sparse Pauli propagation for spin chains"};
  app.set_version_flag("--version", std::string(kVersion) + " (" + kGitDescribe + ")");
  app.require_subcommand(1);

  std::string config_path;
  auto* simulate = app.add_subcommand("simulate", "Run a configured simulation");
  simulate->add_option("--config", config_path, "key=value configuration file")->required();

  AnalyzeOptions analyze_opts;
  std::string alpha_list = "0.5,1", k_list = "4096";
  std::optional<double> analyze_eps;
  std::string analyze_in, analyze_out;
  auto* analyze = app.add_subcommand("analyze", "OSE, bound and histogram reports for operator dumps");
  analyze->add_option("--in", analyze_in, "operator dump or simulation output directory")->required();
  analyze->add_option("--out", analyze_out, "output directory (default <in>/analysis)");
  analyze->add_option("--alpha", alpha_list, "comma-separated alpha values in (0, 1]");
  analyze->add_option("--k", k_list, "comma-separated truncation budgets");
  analyze->add_option("--eps", analyze_eps, "target error for the K prescription");

  std::string suite = "all";
  std::uint64_t seed = 7;
  auto* verify = app.add_subcommand("verify", "Run invariant and benchmark suites");
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", seed, "random seed");

  double entropy = 0.0, epsilon = 0.0, alpha = 0.5;
  auto* bound = app.add_subcommand("bound", "Truncation budget for a target error");
  bound->add_option("--s", entropy, "operator stabilizer Renyi entropy")->required();
  bound->add_option("--eps", epsilon, "target error")->required();
  bound->add_option("--alpha", alpha, "Renyi index in (0, 1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  if (simulate->parsed()) return cmd_simulate(config_path, std::cout, std::cerr);
  if (analyze->parsed()) {
    analyze_opts.input = analyze_in;
    analyze_opts.out_dir = analyze_out;
    analyze_opts.epsilon = analyze_eps;
    try {
      analyze_opts.alphas.clear();
      for (const auto& a : split_list(alpha_list)) analyze_opts.alphas.push_back(to_real("alpha", a));
      analyze_opts.budgets.clear();
      for (const auto& k : split_list(k_list)) analyze_opts.budgets.push_back(to_budget("k", k));
    } catch (const ConfigError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kInvalidInput;
    }
    return cmd_analyze(analyze_opts, std::cout, std::cerr);
  }
  if (verify->parsed()) return cmd_verify(suite, seed, std::cout, std::cerr);
  return cmd_bound(entropy, epsilon, alpha, std::cout, std::cerr);
}

}  // namespace pauliprop::cli
