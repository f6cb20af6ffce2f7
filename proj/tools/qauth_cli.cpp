// Command-line front end for the qauth library: analytic bounds, Monte Carlo
// estimation, weight sweeps, scheme comparison, exact oracles, and report
// validation. Talks to the library exclusively through the public C API.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qauth.h"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

void check_ok(qauth_status status) {
  if (status != QAUTH_OK) {
    die(std::string(qauth_status_name(status)) + ": " + qauth_last_error());
  }
}

// One estimator result row; the CSV column set is fixed.
struct ReportRow {
  std::string scheme;        // trap | threshold | clifford | code
  std::string base;          // inner/base code name ("" for clifford)
  uint64_t inner_count = 0;  // levels M, or trap count for clifford
  std::optional<uint32_t> outer_levels;
  std::optional<double> p;
  std::optional<double> alpha;
  std::optional<uint64_t> attack_w;
  uint64_t trials = 0;
  uint64_t failures = 0;
  double point = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::optional<double> bound_value;
  std::string bound_name;
  uint64_t seed = 0;
};

std::string format_double(double v) {
  std::ostringstream oss;
  oss.precision(17);
  oss << v;
  return oss.str();
}

const char* kCsvHeader =
    "scheme,base,M,L,p,alpha,attack_w,trials,failures,point,ci_low,ci_high,"
    "bound_value,bound_name,seed";

std::string row_to_csv(const ReportRow& r) {
  std::ostringstream oss;
  oss << r.scheme << ',' << r.base << ',' << r.inner_count << ',';
  if (r.outer_levels) oss << *r.outer_levels;
  oss << ',';
  if (r.p) oss << format_double(*r.p);
  oss << ',';
  if (r.alpha) oss << format_double(*r.alpha);
  oss << ',';
  if (r.attack_w) oss << *r.attack_w;
  oss << ',' << r.trials << ',' << r.failures << ',' << format_double(r.point) << ','
      << format_double(r.ci_low) << ',' << format_double(r.ci_high) << ',';
  if (r.bound_value) oss << format_double(*r.bound_value);
  oss << ',' << r.bound_name << ',' << r.seed;
  return oss.str();
}

json row_to_json(const ReportRow& r) {
  json j;
  j["scheme"] = r.scheme;
  j["base"] = r.base;
  j["M"] = r.inner_count;
  j["L"] = r.outer_levels ? json(*r.outer_levels) : json(nullptr);
  j["p"] = r.p ? json(*r.p) : json(nullptr);
  j["alpha"] = r.alpha ? json(*r.alpha) : json(nullptr);
  j["attack_w"] = r.attack_w ? json(*r.attack_w) : json(nullptr);
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["point"] = r.point;
  j["ci_low"] = r.ci_low;
  j["ci_high"] = r.ci_high;
  j["bound_value"] = r.bound_value ? json(*r.bound_value) : json(nullptr);
  j["bound_name"] = r.bound_name;
  j["seed"] = r.seed;
  return j;
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) die("cannot open output path '" + path + "'");
  out << content;
  if (!out) die("failed writing output path '" + path + "'");
}

void emit_rows(const std::vector<ReportRow>& rows, const std::string& out_path,
               const std::string& format) {
  if (format == "csv" || format == "both") {
    std::ostringstream csv;
    csv << kCsvHeader << '\n';
    for (const auto& r : rows) csv << row_to_csv(r) << '\n';
    write_text(format == "both" ? out_path + ".csv" : out_path, csv.str());
  }
  if (format == "json" || format == "both") {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["rows"] = json::array();
    for (const auto& r : rows) doc["rows"].push_back(row_to_json(r));
    write_text(format == "both" ? out_path + ".json" : out_path, doc.dump(2) + "\n");
  }
}

// Shared scheme options for the simulate/sweep/oracle subcommands.
struct SchemeOptions {
  std::string scheme = "trap";
  std::string inner = "five";
  uint32_t inner_levels = 1;
  double alpha = 0.05;
  uint32_t traps = 1;
  uint32_t data_size = 1;
  std::string outer;  // empty = no outer code
  uint32_t outer_levels = 1;

  void attach(CLI::App* cmd, bool with_code_option = false) {
    auto* opt = cmd->add_option("--scheme", scheme, "Scheme kind")->capture_default_str();
    if (with_code_option) {
      opt->check(CLI::IsMember({"trap", "threshold", "clifford", "code"}));
    } else {
      opt->check(CLI::IsMember({"trap", "threshold", "clifford"}));
    }
    cmd->add_option("--inner,--base", inner, "Inner (or bare) code: five | steane")
        ->capture_default_str();
    cmd->add_option("--inner-levels,--levels", inner_levels, "Inner concatenation levels")
        ->capture_default_str();
    cmd->add_option("--alpha", alpha, "Threshold tuning parameter")->capture_default_str();
    cmd->add_option("--traps", traps, "Clifford trap count")->capture_default_str();
    cmd->add_option("--data-size", data_size, "Clifford data qubits")->capture_default_str();
    cmd->add_option("--outer", outer, "Outer code (optional): five | steane");
    cmd->add_option("--outer-levels", outer_levels, "Outer concatenation levels")
        ->capture_default_str();
  }

  qauth_scheme* build() const {
    qauth_scheme* handle = nullptr;
    const char* outer_base = outer.empty() ? nullptr : outer.c_str();
    if (scheme == "trap") {
      check_ok(qauth_scheme_create_trap(inner.c_str(), inner_levels, outer_base, outer_levels,
                                        &handle));
    } else if (scheme == "threshold") {
      check_ok(qauth_scheme_create_threshold(inner.c_str(), inner_levels, alpha, outer_base,
                                             outer_levels, &handle));
    } else if (scheme == "clifford") {
      check_ok(qauth_scheme_create_clifford(traps, data_size, outer_base, outer_levels, &handle));
    } else {
      die("unsupported scheme '" + scheme + "' here");
    }
    return handle;
  }

  void fill_row(ReportRow& row) const {
    row.scheme = scheme;
    if (scheme == "clifford") {
      row.base = "";
      row.inner_count = traps;
    } else {
      row.base = inner;
      row.inner_count = inner_levels;
    }
    if (scheme == "threshold") row.alpha = alpha;
    if (!outer.empty()) row.outer_levels = outer_levels;
  }

  // The analytic companion bound for security rows.
  void attach_security_bound(ReportRow& row) const {
    if (scheme == "trap") {
      uint64_t d_total = 0;
      check_ok(qauth_code_params(inner.c_str(), inner_levels, nullptr, &d_total, nullptr,
                                 nullptr));
      double value = 0.0;
      check_ok(qauth_trap_purity_bound(static_cast<uint32_t>(d_total), &value));
      row.bound_value = value;
      row.bound_name = "trap_purity";
    } else if (scheme == "threshold") {
      double value = 0.0;
      // The bound needs alpha < p_thr; outside that regime the row simply
      // carries no analytic companion.
      if (qauth_threshold_security_bound(inner.c_str(), inner_levels, alpha, &value) ==
          QAUTH_OK) {
        row.bound_value = value;
        row.bound_name = "threshold_security";
      }
    } else if (scheme == "clifford") {
      row.bound_value = std::ldexp(1.0, -static_cast<int>(traps));
      row.bound_name = "clifford_security";
    }
  }
};

struct NoiseOptions {
  std::string kind = "depolarizing";
  double p = 0.01;
  double px = 0.0, py = 0.0, pz = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--noise", kind, "Noise model")
        ->check(CLI::IsMember({"depolarizing", "pauli"}))
        ->capture_default_str();
    cmd->add_option("--p", p, "Depolarizing error probability")->capture_default_str();
    cmd->add_option("--px", px, "Pauli channel X probability")->capture_default_str();
    cmd->add_option("--py", py, "Pauli channel Y probability")->capture_default_str();
    cmd->add_option("--pz", pz, "Pauli channel Z probability")->capture_default_str();
  }

  qauth_channel build() const {
    qauth_channel channel;
    if (kind == "depolarizing") {
      check_ok(qauth_channel_depolarizing(p, &channel));
    } else {
      check_ok(qauth_channel_make(px, py, pz, &channel));
    }
    return channel;
  }

  double strength() const { return kind == "depolarizing" ? p : px + py + pz; }
};

uint32_t default_threads() {
  if (const char* env = std::getenv("QAUTH_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<uint32_t>(v);
  }
  return 0;  // library picks the hardware count
}

json bound_entry(const std::string& name, json inputs, double value, const std::string& ref) {
  json j;
  j["name"] = name;
  j["inputs"] = std::move(inputs);
  j["value"] = value;
  j["vacuous"] = value >= 1.0;
  j["ref"] = ref;
  return j;
}

bool parse_sweep_range(const std::string& text, uint64_t* lo, uint64_t* hi, uint64_t* step) {
  // "a:b" or "a:b:s"
  uint64_t vals[3] = {0, 0, 1};
  size_t pos = 0;
  int field = 0;
  while (field < 3 && pos < text.size()) {
    size_t next = text.find(':', pos);
    if (next == std::string::npos) next = text.size();
    try {
      vals[field] = std::stoull(text.substr(pos, next - pos));
    } catch (...) {
      return false;
    }
    pos = next + 1;
    ++field;
  }
  if (field < 2) return false;
  *lo = vals[0];
  *hi = vals[1];
  *step = vals[2] == 0 ? 1 : vals[2];
  return true;
}

double recompute_bound(const std::string& name, const json& row) {
  const std::string base = row.value("base", "");
  const uint32_t levels = row.value("M", 0u);
  double value = 0.0;
  if (name == "failure_bound") {
    check_ok(qauth_failure_bound(base.c_str(), levels, row.at("p").get<double>(), &value));
  } else if (name == "trap_purity") {
    uint64_t d_total = 0;
    check_ok(qauth_code_params(base.c_str(), levels, nullptr, &d_total, nullptr, nullptr));
    check_ok(qauth_trap_purity_bound(static_cast<uint32_t>(d_total), &value));
  } else if (name == "threshold_security") {
    check_ok(qauth_threshold_security_bound(base.c_str(), levels, row.at("alpha").get<double>(),
                                            &value));
  } else if (name == "threshold_correctness") {
    check_ok(qauth_threshold_correctness_bound(base.c_str(), levels, row.at("p").get<double>(),
                                               row.at("alpha").get<double>(), &value));
  } else if (name == "clifford_security") {
    value = std::ldexp(1.0, -static_cast<int>(row.at("M").get<uint64_t>()));
  } else {
    die("unknown bound name '" + name + "' in report");
  }
  return value;
}

double recompute_named_bound(const std::string& name, const json& inputs) {
  double value = 0.0;
  if (name == "threshold_value") {
    check_ok(qauth_threshold_value(inputs.at("base").get<std::string>().c_str(), &value));
  } else if (name == "failure_bound") {
    check_ok(qauth_failure_bound(inputs.at("base").get<std::string>().c_str(),
                                 inputs.at("levels").get<uint32_t>(),
                                 inputs.at("p").get<double>(), &value));
  } else if (name == "trap_purity") {
    check_ok(qauth_trap_purity_bound(inputs.at("distance").get<uint32_t>(), &value));
  } else if (name == "trap_refined_purity") {
    check_ok(qauth_trap_refined_purity_bound(inputs.at("base").get<std::string>().c_str(),
                                             inputs.at("levels").get<uint32_t>(),
                                             inputs.value("w_min", uint64_t{0}),
                                             inputs.value("w_max", uint64_t{0}),
                                             inputs.value("w_step", uint64_t{1}), &value,
                                             nullptr));
  } else if (name == "threshold_security") {
    check_ok(qauth_threshold_security_bound(inputs.at("base").get<std::string>().c_str(),
                                            inputs.at("levels").get<uint32_t>(),
                                            inputs.at("alpha").get<double>(), &value));
  } else if (name == "threshold_correctness") {
    check_ok(qauth_threshold_correctness_bound(inputs.at("base").get<std::string>().c_str(),
                                               inputs.at("levels").get<uint32_t>(),
                                               inputs.at("p").get<double>(),
                                               inputs.at("alpha").get<double>(), &value));
  } else if (name == "clifford_security") {
    value = std::ldexp(1.0, -static_cast<int>(inputs.at("traps").get<uint64_t>()));
  } else if (name == "delta_auth") {
    const uint64_t code_qubits = inputs.at("code_qubits").get<uint64_t>();
    const double floor =
        code_qubits > 1074 ? 0.0 : std::ldexp(1.0, 1 - static_cast<int>(code_qubits));
    value = std::max(inputs.at("delta").get<double>(), floor);
  } else if (name == "binomial_mean_lower_bound") {
    check_ok(qauth_binomial_mean_lower_bound(inputs.at("n").get<uint64_t>(),
                                             inputs.at("p").get<double>(), &value));
  } else if (name == "chernoff_sampling_bound") {
    check_ok(qauth_chernoff_sampling_bound(inputs.at("size_a").get<uint64_t>(),
                                           inputs.at("size_b").get<uint64_t>(),
                                           inputs.at("k").get<uint64_t>(),
                                           inputs.at("gamma").get<double>(), &value));
  } else {
    die("unknown bound name '" + name + "' in report");
  }
  return value;
}

qauth_estimate run_security(qauth_scheme* scheme, const std::optional<uint64_t>& weight,
                            const std::string& pattern, uint64_t trials, uint64_t seed,
                            uint32_t threads) {
  qauth_estimate est;
  if (!pattern.empty()) {
    check_ok(qauth_estimate_security_pattern(scheme, pattern.c_str(), trials, seed, threads,
                                             &est));
  } else if (weight) {
    check_ok(qauth_estimate_security_weight(scheme, *weight, trials, seed, threads, &est));
  } else {
    die("specify --attack-weight, --attack-pattern or --attack-sweep");
  }
  return est;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli-frame simulator and bound calculator for quantum authentication codes"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key-value config file (INI sections "
                                 "named after subcommands)");

  std::string out_path;
  std::string format = "csv";
  uint32_t threads = default_threads();
  app.add_option("--out", out_path, "Output path (default: stdout)")->configurable(false);
  app.add_option("--format", format, "Report format: csv | json | both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  app.add_option("--threads", threads, "Worker threads (0 = hardware)");

  uint64_t trials = 100000;
  uint64_t seed = 1;

  // ---- bounds -------------------------------------------------------------
  auto* cmd_bounds = app.add_subcommand("bounds", "Evaluate analytic bounds as JSON");
  SchemeOptions bounds_scheme;
  bounds_scheme.attach(cmd_bounds);
  double bounds_p = -1.0;
  cmd_bounds->add_option("--p", bounds_p, "Channel error probability (enables noise bounds)");
  bool bounds_refined = false;
  cmd_bounds->add_flag("--refined", bounds_refined, "Include the refined trap purity bound");
  cmd_bounds->callback([&] {
    const auto& s = bounds_scheme;
    json entries = json::array();
    // Purity-testing parameter floored by the syndrome-guessing term
    // 2^-(N-1) of the keyed [[N,1,d]] code; evaluated as stated.
    const auto push_auth_floor = [&entries, &s](double delta) {
      uint64_t n_total = 0;
      check_ok(qauth_code_params(s.inner.c_str(), s.inner_levels, &n_total, nullptr, nullptr,
                                 nullptr));
      const uint64_t code_qubits = 3 * n_total;
      const double floor = code_qubits > 1074 ? 0.0
                                              : std::ldexp(1.0, 1 - static_cast<int>(code_qubits));
      entries.push_back(bound_entry(
          "delta_auth", {{"delta", delta}, {"code_qubits", code_qubits}},
          std::max(delta, floor),
          "purity-testing parameter floored by syndrome guessing"));
    };
    if (s.scheme == "trap" || s.scheme == "threshold") {
      double p_thr = 0.0;
      check_ok(qauth_threshold_value(s.inner.c_str(), &p_thr));
      entries.push_back(bound_entry("threshold_value", {{"base", s.inner}}, p_thr,
                                    "inverse binomial threshold of the base code"));
      if (bounds_p >= 0.0) {
        double fb = 0.0;
        check_ok(qauth_failure_bound(s.inner.c_str(), s.inner_levels, bounds_p, &fb));
        entries.push_back(bound_entry(
            "failure_bound", {{"base", s.inner}, {"levels", s.inner_levels}, {"p", bounds_p}},
            fb, "concatenated recovery failure recursion"));
      }
    }
    if (s.scheme == "trap") {
      uint64_t d_total = 0;
      check_ok(qauth_code_params(s.inner.c_str(), s.inner_levels, nullptr, &d_total, nullptr,
                                 nullptr));
      double purity = 0.0;
      check_ok(qauth_trap_purity_bound(static_cast<uint32_t>(d_total), &purity));
      entries.push_back(bound_entry("trap_purity",
                                    {{"distance", d_total}},
                                    purity, "trap detection vs distance"));
      push_auth_floor(purity);
      if (bounds_refined) {
        double refined = 0.0;
        uint64_t argmax = 0;
        check_ok(qauth_trap_refined_purity_bound(s.inner.c_str(), s.inner_levels, 0, 0, 1,
                                                 &refined, &argmax));
        json inputs = {{"base", s.inner}, {"levels", s.inner_levels},
                       {"w_min", 0},      {"w_max", 0},
                       {"w_step", 1},     {"argmax_weight", argmax}};
        entries.push_back(bound_entry("trap_refined_purity", inputs, refined,
                                      "max-min of trap detection and correction evasion"));
      }
    } else if (s.scheme == "threshold") {
      double sec = 0.0;
      check_ok(qauth_threshold_security_bound(s.inner.c_str(), s.inner_levels, s.alpha, &sec));
      entries.push_back(bound_entry(
          "threshold_security",
          {{"base", s.inner}, {"levels", s.inner_levels}, {"alpha", s.alpha}}, sec,
          "max of correction evasion and trap evasion"));
      push_auth_floor(sec);
      if (bounds_p >= 0.0) {
        double corr = 0.0;
        check_ok(qauth_threshold_correctness_bound(s.inner.c_str(), s.inner_levels, bounds_p,
                                                   s.alpha, &corr));
        entries.push_back(bound_entry("threshold_correctness",
                                      {{"base", s.inner},
                                       {"levels", s.inner_levels},
                                       {"p", bounds_p},
                                       {"alpha", s.alpha}},
                                      corr, "recovery failure plus trap Hoeffding tail"));
      }
    } else if (s.scheme == "clifford") {
      entries.push_back(bound_entry("clifford_security", {{"traps", s.traps}},
                                    std::ldexp(1.0, -static_cast<int>(s.traps)),
                                    "uniform twirl trap evasion"));
    }
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["bounds"] = entries;
    write_text(out_path, doc.dump(2) + "\n");
  });

  // ---- simulate-correctness -------------------------------------------------
  auto* cmd_corr = app.add_subcommand("simulate-correctness",
                                      "Monte Carlo failure estimate under honest noise");
  SchemeOptions corr_scheme;
  corr_scheme.attach(cmd_corr, /*with_code_option=*/true);
  NoiseOptions corr_noise;
  corr_noise.attach(cmd_corr);
  cmd_corr->add_option("--trials", trials, "Trial count")->capture_default_str();
  cmd_corr->add_option("--seed", seed, "Master seed")->capture_default_str();
  cmd_corr->callback([&] {
    ReportRow row;
    qauth_estimate est;
    if (corr_scheme.scheme == "code") {
      // Bare concatenated code: logical failure frequency vs the recursion bound.
      check_ok(qauth_estimate_code_failure(corr_scheme.inner.c_str(), corr_scheme.inner_levels,
                                           corr_noise.p, trials, seed, threads, &est));
      row.scheme = "code";
      row.base = corr_scheme.inner;
      row.inner_count = corr_scheme.inner_levels;
      double fb = 0.0;
      check_ok(qauth_failure_bound(corr_scheme.inner.c_str(), corr_scheme.inner_levels,
                                   corr_noise.p, &fb));
      row.bound_value = fb;
      row.bound_name = "failure_bound";
    } else {
      qauth_scheme* scheme = corr_scheme.build();
      const qauth_channel channel = corr_noise.build();
      check_ok(qauth_estimate_correctness(scheme, &channel, trials, seed, threads, &est));
      qauth_scheme_destroy(scheme);
      corr_scheme.fill_row(row);
      if (corr_scheme.scheme == "threshold" && corr_scheme.outer.empty()) {
        double bound = 0.0;
        if (qauth_threshold_correctness_bound(corr_scheme.inner.c_str(),
                                              corr_scheme.inner_levels, corr_noise.strength(),
                                              corr_scheme.alpha, &bound) == QAUTH_OK) {
          row.bound_value = bound;
          row.bound_name = "threshold_correctness";
        }
      }
    }
    row.p = corr_noise.strength();
    row.trials = est.trials;
    row.failures = est.failures;
    row.point = est.point;
    row.ci_low = est.ci_low;
    row.ci_high = est.ci_high;
    row.seed = seed;
    emit_rows({row}, out_path, format);
  });

  // ---- simulate-security ------------------------------------------------------
  auto* cmd_sec = app.add_subcommand("simulate-security",
                                     "Monte Carlo undetected-harm estimate under attack");
  SchemeOptions sec_scheme;
  sec_scheme.attach(cmd_sec);
  std::optional<uint64_t> attack_weight;
  std::string attack_pattern;
  std::string attack_sweep;
  cmd_sec->add_option("--attack-weight", attack_weight, "Fixed attack weight");
  cmd_sec->add_option("--attack-pattern", attack_pattern, "Fixed attack Pauli, e.g. XIYZ");
  cmd_sec->add_option("--attack-sweep", attack_sweep, "Weight sweep a:b[:s]");
  cmd_sec->add_option("--trials", trials, "Key trials per point")->capture_default_str();
  cmd_sec->add_option("--seed", seed, "Master seed")->capture_default_str();
  auto run_sweep = [&](const SchemeOptions& opts, uint64_t lo, uint64_t hi, uint64_t step) {
    qauth_scheme* scheme = opts.build();
    const uint64_t capacity = (hi - lo) / step + 1;
    std::vector<uint64_t> weights(capacity);
    std::vector<qauth_estimate> estimates(capacity);
    uint64_t count = 0, best_w = 0;
    double best_point = 0.0;
    check_ok(qauth_security_sweep(scheme, lo, hi, step, trials, seed, threads, weights.data(),
                                  estimates.data(), capacity, &count, &best_w, &best_point));
    qauth_scheme_destroy(scheme);
    std::vector<ReportRow> rows;
    for (uint64_t i = 0; i < count; ++i) {
      ReportRow row;
      opts.fill_row(row);
      opts.attach_security_bound(row);
      row.attack_w = weights[i];
      row.trials = estimates[i].trials;
      row.failures = estimates[i].failures;
      row.point = estimates[i].point;
      row.ci_low = estimates[i].ci_low;
      row.ci_high = estimates[i].ci_high;
      row.seed = estimates[i].seed;
      rows.push_back(row);
    }
    emit_rows(rows, out_path, format);
    std::cerr << "worst weight " << best_w << " with estimate " << best_point << "\n";
  };
  cmd_sec->callback([&] {
    if (!attack_sweep.empty()) {
      uint64_t lo = 0, hi = 0, step = 1;
      if (!parse_sweep_range(attack_sweep, &lo, &hi, &step)) {
        die("bad --attack-sweep '" + attack_sweep + "' (expected a:b or a:b:s)");
      }
      run_sweep(sec_scheme, lo, hi, step);
      return;
    }
    qauth_scheme* scheme = sec_scheme.build();
    const qauth_estimate est =
        run_security(scheme, attack_weight, attack_pattern, trials, seed, threads);
    qauth_scheme_destroy(scheme);
    ReportRow row;
    sec_scheme.fill_row(row);
    sec_scheme.attach_security_bound(row);
    if (attack_weight) {
      row.attack_w = *attack_weight;
    } else {
      uint64_t w = 0;
      check_ok(qauth_pauli_validate(attack_pattern.c_str(), &w));
      row.attack_w = w;
    }
    row.trials = est.trials;
    row.failures = est.failures;
    row.point = est.point;
    row.ci_low = est.ci_low;
    row.ci_high = est.ci_high;
    row.seed = seed;
    emit_rows({row}, out_path, format);
  });

  // ---- sweep -----------------------------------------------------------------
  auto* cmd_sweep = app.add_subcommand("sweep", "Security sweep over attack weights");
  SchemeOptions sweep_scheme;
  sweep_scheme.attach(cmd_sweep);
  std::string sweep_range = "1:15";
  cmd_sweep->add_option("--attack-sweep,--range", sweep_range, "Weight range a:b[:s]")
      ->capture_default_str();
  cmd_sweep->add_option("--trials", trials, "Key trials per point")->capture_default_str();
  cmd_sweep->add_option("--seed", seed, "Master seed")->capture_default_str();
  cmd_sweep->callback([&] {
    uint64_t lo = 0, hi = 0, step = 1;
    if (!parse_sweep_range(sweep_range, &lo, &hi, &step)) {
      die("bad sweep range '" + sweep_range + "' (expected a:b or a:b:s)");
    }
    run_sweep(sweep_scheme, lo, hi, step);
  });

  // ---- oracle ------------------------------------------------------------------
  auto* cmd_oracle = app.add_subcommand(
      "oracle", "Exact accepted-and-harmed probability for a letter multiset");
  SchemeOptions oracle_scheme;
  oracle_scheme.attach(cmd_oracle);
  uint64_t nx = 0, ny = 0, nz = 0;
  uint64_t mc_trials = 0;
  cmd_oracle->add_option("--nx", nx, "Number of X letters")->capture_default_str();
  cmd_oracle->add_option("--ny", ny, "Number of Y letters")->capture_default_str();
  cmd_oracle->add_option("--nz", nz, "Number of Z letters")->capture_default_str();
  cmd_oracle->add_option("--mc-trials", mc_trials,
                         "Also run a Monte Carlo cross-check with this many keys");
  cmd_oracle->add_option("--seed", seed, "Master seed for the cross-check")
      ->capture_default_str();
  cmd_oracle->callback([&] {
    qauth_scheme* scheme = oracle_scheme.build();
    double decoder = 0.0, coset = 0.0;
    check_ok(qauth_exact_purity_oracle(scheme, nx, ny, nz, &decoder, &coset));
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["scheme"] = oracle_scheme.scheme;
    doc["base"] = oracle_scheme.inner;
    doc["M"] = oracle_scheme.inner_levels;
    if (oracle_scheme.scheme == "threshold") doc["alpha"] = oracle_scheme.alpha;
    doc["nx"] = nx;
    doc["ny"] = ny;
    doc["nz"] = nz;
    doc["decoder_harm"] = decoder;
    doc["coset_harm"] = coset;
    if (mc_trials > 0) {
      uint64_t total = 0;
      check_ok(qauth_scheme_total_qubits(scheme, &total));
      std::string pattern(total, 'I');
      size_t pos = 0;
      for (uint64_t i = 0; i < nx; ++i) pattern[pos++] = 'X';
      for (uint64_t i = 0; i < ny; ++i) pattern[pos++] = 'Y';
      for (uint64_t i = 0; i < nz; ++i) pattern[pos++] = 'Z';
      qauth_estimate est;
      check_ok(qauth_estimate_security_pattern(scheme, pattern.c_str(), mc_trials, seed, threads,
                                               &est));
      doc["mc"] = {{"trials", est.trials},   {"failures", est.failures},
                   {"point", est.point},     {"ci_low", est.ci_low},
                   {"ci_high", est.ci_high}, {"seed", est.seed},
                   {"within_ci", decoder >= est.ci_low && decoder <= est.ci_high}};
    }
    qauth_scheme_destroy(scheme);
    write_text(out_path, doc.dump(2) + "\n");
  });

  // ---- compare ------------------------------------------------------------------
  auto* cmd_compare = app.add_subcommand(
      "compare", "Sufficient sizes and growth exponents for the three schemes");
  double cmp_epsilon = 1e-6, cmp_delta = 1e-6, cmp_p = 0.005, cmp_alpha = 0.0;
  std::string cmp_inner = "five", cmp_outer = "five";
  cmd_compare->add_option("--epsilon", cmp_epsilon, "Correctness target")->capture_default_str();
  cmd_compare->add_option("--delta", cmp_delta, "Security target")->capture_default_str();
  cmd_compare->add_option("--p", cmp_p, "Depolarizing channel error")->capture_default_str();
  cmd_compare->add_option("--inner", cmp_inner, "Inner code")->capture_default_str();
  cmd_compare->add_option("--outer", cmp_outer, "Outer code")->capture_default_str();
  cmd_compare->add_option("--alpha", cmp_alpha, "Threshold alpha (0 = auto midpoint)")
      ->capture_default_str();
  cmd_compare->callback([&] {
    struct Cell {
      const char* name;
      const char* inner;
      const char* outer;
    };
    const Cell cells[] = {
        {"trap", cmp_inner.c_str(), cmp_outer.c_str()},
        {"clifford", nullptr, cmp_outer.c_str()},
        {"threshold", cmp_inner.c_str(), nullptr},
    };
    json schemes = json::array();
    std::ostringstream table;
    table << "scheme      levels/traps  outer  total_qubits  exponent\n";
    for (const Cell& cell : cells) {
      qauth_scaling scaling;
      check_ok(qauth_qubit_scaling(cell.name, cell.inner, cell.outer, cmp_epsilon, cmp_delta,
                                   cmp_p, cmp_alpha, &scaling));
      json j;
      j["scheme"] = cell.name;
      j["inner_count"] = scaling.inner_count;
      j["outer_levels"] = scaling.outer_levels;
      j["total_qubits"] = scaling.total_qubits;
      j["security_exponent"] = scaling.security_exponent;
      j["correctness_exponent"] = scaling.correctness_exponent;
      j["combined_exponent"] = scaling.combined_exponent;
      if (std::string(cell.name) == "threshold") j["alpha"] = scaling.alpha;
      schemes.push_back(j);
      char line[160];
      std::snprintf(line, sizeof line, "%-11s %-13llu %-6u %-13llu %.2f\n", cell.name,
                    static_cast<unsigned long long>(scaling.inner_count), scaling.outer_levels,
                    static_cast<unsigned long long>(scaling.total_qubits),
                    scaling.combined_exponent);
      table << line;
    }
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["targets"] = {{"epsilon", cmp_epsilon},
                      {"delta", cmp_delta},
                      {"p", cmp_p},
                      {"inner", cmp_inner},
                      {"outer", cmp_outer}};
    doc["schemes"] = schemes;
    std::cout << table.str();
    if (!out_path.empty()) write_text(out_path, doc.dump(2) + "\n");
  });

  // ---- check -----------------------------------------------------------------
  auto* cmd_check = app.add_subcommand(
      "check", "Re-evaluate the analytic fields of a JSON report and verify them");
  std::string check_path;
  cmd_check->add_option("report", check_path, "JSON report path")->required();
  cmd_check->callback([&] {
    std::ifstream in(check_path);
    if (!in) die("cannot open report '" + check_path + "'");
    json doc;
    try {
      in >> doc;
    } catch (const std::exception& e) {
      die(std::string("bad JSON: ") + e.what());
    }
    if (doc.value("schema_version", 0) != kSchemaVersion) {
      die("unsupported schema_version");
    }
    size_t checked = 0, mismatched = 0;
    const auto verify = [&](double expected, double actual, const std::string& what) {
      ++checked;
      const double tol = 1e-9 * std::max(1.0, std::abs(expected));
      if (std::abs(expected - actual) > tol) {
        ++mismatched;
        std::cerr << "mismatch: " << what << ": stored " << format_double(actual)
                  << ", recomputed " << format_double(expected) << "\n";
      }
    };
    if (doc.contains("rows")) {
      for (const auto& row : doc["rows"]) {
        const uint64_t t = row.at("trials").get<uint64_t>();
        const uint64_t f = row.at("failures").get<uint64_t>();
        verify(t == 0 ? 0.0 : static_cast<double>(f) / static_cast<double>(t),
               row.at("point").get<double>(), "point");
        if (!row.at("bound_name").get<std::string>().empty() &&
            !row.at("bound_value").is_null()) {
          const std::string name = row.at("bound_name").get<std::string>();
          verify(recompute_bound(name, row), row.at("bound_value").get<double>(), name);
        }
      }
    }
    if (doc.contains("bounds")) {
      for (const auto& entry : doc["bounds"]) {
        const std::string name = entry.at("name").get<std::string>();
        verify(recompute_named_bound(name, entry.at("inputs")), entry.at("value").get<double>(),
               name);
      }
    }
    std::cout << "checked " << checked << " analytic fields, " << mismatched << " mismatched\n";
    if (mismatched > 0) std::exit(1);
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
