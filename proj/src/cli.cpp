#include "partlab/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "partlab/io.hpp"

namespace partlab::cli {

namespace {

// Thrown for invalid parameters after parsing succeeded.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned parse_unsigned(std::string_view s) {
  unsigned v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw std::invalid_argument("not a non-negative integer: '" + std::string(s) + "'");
  return v;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.output_path) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.output_path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + *cfg.output_path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("failed writing '" + *cfg.output_path + "'");
}

const std::map<std::string, OutputFormat, std::less<>> kFormats{
    {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}};

// CLI-facing statistic names.
struct StatRequest {
  StatId id;
  StatParams params;
};

StatRequest resolve_stat(std::string_view name, std::optional<unsigned> k, std::optional<unsigned> p,
                         std::optional<unsigned> ell) {
  StatRequest req{};
  if (name == "a" || name == "a_k" || name == "a_kp")
    req = {p ? StatId::a_kp : StatId::a_k, {k, p, {}}};
  else if (name == "b" || name == "b_k")
    req = {StatId::b_k, {k, {}, {}}};
  else if (name == "c" || name == "c_k")
    req = {StatId::c_k, {k, {}, {}}};
  else if (name == "m" || name == "M_ell")
    req = {StatId::M_ell, {{}, {}, ell}};
  else if (name == "mp" || name == "MP_ell")
    req = {StatId::MP_ell, {{}, {}, ell}};
  else if (name == "q" || name == "Q")
    req = {StatId::Q, {}};
  else if (name == "p")
    req = {StatId::p, {}};
  else if (name == "dominant")
    req = {StatId::c, {}};
  else
    throw UsageError("unknown statistic '" + std::string(name) +
                     "' (expected one of a, b, c, m, mp, q, p, dominant)");
  if (req.id == StatId::a_k && k && *k < 1) throw UsageError("a requires k >= 1");
  try {
    validate_params(req.id, req.params);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return req;
}

StatTable compute_table(const StatRequest& req, std::size_t n_max) {
  const auto& prm = req.params;
  switch (req.id) {
    case StatId::a_k: return a_k_series(*prm.k, n_max);
    case StatId::a_kp: return a_kp_series(*prm.k, *prm.p, n_max);
    case StatId::b_k: return b_k_series(*prm.k, n_max);
    case StatId::c_k: return c_k_table(*prm.k, n_max);
    case StatId::M_ell: return M_ell_series(*prm.ell, n_max);
    case StatId::MP_ell: return MP_ell_series(*prm.ell, n_max);
    case StatId::Q: return distinct_table(n_max);
    case StatId::p: return partition_table(n_max);
    case StatId::c: return c_table(n_max);
  }
  throw std::logic_error("unhandled statistic");
}

std::string format_table(const StatTable& t, OutputFormat f) {
  switch (f) {
    case OutputFormat::csv: return table_to_csv(t);
    case OutputFormat::json: return table_to_json(t).dump(2) + "\n";
    case OutputFormat::text: return table_to_text(t);
  }
  return {};
}

std::vector<std::string> split_selector(const std::string& sel) {
  std::vector<std::string> out;
  std::stringstream ss(sel);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_compute(const std::string& stat, std::optional<unsigned> k, std::optional<unsigned> p,
                std::optional<unsigned> ell, const RunConfig& cfg, std::ostream& out) {
  if (p && !k) throw UsageError("--p requires --k");
  const auto req = resolve_stat(stat, k, p, ell);
  const std::string name(stat_name(req.id));
  if (k && !req.params.k) throw UsageError(name + " takes no --k");
  if (ell && !req.params.ell) throw UsageError(name + " takes no --ell");
  emit(cfg, format_table(compute_table(req, cfg.n_max), cfg.format), out);
  return kOk;
}

int cmd_export(const std::string& selector, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != OutputFormat::json) throw UsageError("export writes JSON only");
  ordered_json tables = ordered_json::object();
  for (const auto& name : split_selector(selector)) {
    std::vector<StatRequest> reqs;
    const auto probe = resolve_stat(name, cfg.k_range.lo, std::nullopt, cfg.ell_range.lo).id;
    const bool by_k = probe == StatId::a_k || probe == StatId::b_k || probe == StatId::c_k;
    const bool by_ell = probe == StatId::M_ell || probe == StatId::MP_ell;
    if (by_k) {
      for (unsigned k = cfg.k_range.lo; k <= cfg.k_range.hi; ++k) {
        reqs.push_back(resolve_stat(name, k, std::nullopt, std::nullopt));
        if (probe == StatId::a_k && cfg.all_residues)
          for (unsigned p = 0; p < k; ++p) reqs.push_back(resolve_stat(name, k, p, std::nullopt));
      }
    } else if (by_ell) {
      for (unsigned l = cfg.ell_range.lo; l <= cfg.ell_range.hi; ++l)
        reqs.push_back(resolve_stat(name, std::nullopt, std::nullopt, l));
    } else {
      reqs.push_back(resolve_stat(name, std::nullopt, std::nullopt, std::nullopt));
    }
    for (const auto& r : reqs) {
      const auto t = compute_table(r, cfg.n_max);
      tables[t.key()] = table_to_json(t);
    }
  }
  ordered_json doc;
  doc["n_max"] = cfg.n_max;
  doc["tables"] = std::move(tables);
  emit(cfg, doc.dump(2) + "\n", out);
  return kOk;
}

std::string render_reports(const std::vector<VerificationReport>& reports, const RunConfig& cfg) {
  switch (cfg.format) {
    case OutputFormat::json: return reports_to_json(reports);
    case OutputFormat::csv: return reports_to_csv(reports);
    case OutputFormat::text: return reports_to_text(reports, cfg.timings);
  }
  return {};
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out) {
  auto vc = cfg.verify_config();
  try {
    vc.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::size_t n = vc.n_max;
  const std::size_t enum_n = std::min<std::size_t>(n, vc.enum_cap);
  std::vector<VerificationReport> reports;

  if (suite == "bad-exponent") {
    const auto res = find_bad_exponent_counterexample(n, vc.ell);
    reports = {res.uncorrected, res.corrected};
    std::string text = render_reports(reports, cfg);
    if (cfg.format == OutputFormat::json) {
      auto doc = ordered_json::parse(text);
      doc["passed"] = !res.witness.has_value();
      if (res.witness) doc["witness"] = {{"n", res.witness->first}, {"ell", res.witness->second}};
      text = doc.dump(2) + "\n";
    } else if (res.witness) {
      text += "smallest failing (n, ell) with exponent j: (" + std::to_string(res.witness->first) +
              ", " + std::to_string(res.witness->second) + ")\n";
    } else {
      text += "no counterexample for exponent j up to n=" + std::to_string(n) + "\n";
    }
    emit(cfg, text, out);
    return res.witness ? kIdentityFailure : kOk;
  }

  if (suite == "all") {
    reports = run_all(vc);
  } else if (suite == "euler") {
    reports = {verify_euler(n)};
  } else if (suite == "gf") {
    reports = {verify_gf(vc.k, enum_n, vc.threads)};
  } else if (suite == "comb") {
    reports = {verify_comb(vc.k, n)};
  } else if (suite == "bridge") {
    reports = {verify_bridge(n, vc.subset_cap)};
  } else if (suite == "overpartition") {
    reports = {verify_overpartition_identities(vc.k, enum_n, vc.threads)};
  } else if (suite == "gen17-displayed") {
    reports = {find_gen17_displayed_discrepancies(vc.k, vc.ell, n)};
  } else {
    const auto t = TableSet::build(vc.series_order(), vc.k, vc.ell, vc.threads);
    if (suite == "trunc")
      reports = {verify_trunc(t, vc.k, vc.ell, n)};
    else if (suite == "trunc-cor")
      reports = {verify_trunc_corollaries(t, vc.k, vc.ell, n)};
    else if (suite == "m-routes")
      reports = {verify_m_routes(t, vc.ell, n, vc.enum_cap)};
    else if (suite == "mp-enum")
      reports = {verify_mp_enum(t, vc.ell, enum_n)};
    else if (suite == "gen17")
      reports = {verify_gen17(t, vc.k, vc.ell, n)};
    else
      throw UsageError("unknown suite '" + suite + "'");
  }
  emit(cfg, render_reports(reports, cfg), out);
  for (const auto& r : reports)
    if (!r.passed()) return kIdentityFailure;
  return kOk;
}

}  // namespace

VerifyConfig RunConfig::verify_config() const {
  VerifyConfig vc;
  vc.n_max = n_max;
  vc.k = k_range;
  vc.ell = ell_range;
  vc.enum_cap = enum_cap;
  vc.subset_cap = subset_cap;
  vc.threads = threads;
  return vc;
}

IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_unsigned(text);
  } else {
    r.lo = parse_unsigned(text.substr(0, dots));
    r.hi = parse_unsigned(text.substr(dots + 2));
  }
  if (r.empty()) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact partition statistics and q-series identity checker", "partlab"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format_name;
  std::string k_text, p_text, ell_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n-max", cfg.n_max, "Largest n");
    sub->add_option("--k", k_text, "k value or inclusive range lo..hi");
    sub->add_option("--ell", ell_text, "ell value or inclusive range lo..hi");
    sub->add_option("--format", format_name, "json, csv or text");
    sub->add_option("--out", cfg.output_path, "Write output to PATH instead of stdout");
  };

  std::string stat;
  auto* compute = app.add_subcommand("compute", "Tabulate one statistic for n = 0..n-max");
  compute->add_option("stat", stat, "a, b, c, m, mp, q, p or dominant")->required();
  compute->add_option("--p", p_text, "Residue class for a (0 <= p <= k-1)");
  add_common(compute);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run identity sweeps");
  verify->add_option("suite", suite,
                     "all, euler, gf, comb, trunc, trunc-cor, m-routes, mp-enum, gen17, bridge, "
                     "overpartition, bad-exponent or gen17-displayed")
      ->required();
  verify->add_option("--enum-cap", cfg.enum_cap, "Largest n for enumeration-backed checks");
  verify->add_option("--subset-cap", cfg.subset_cap, "Largest n for subset enumeration");
  verify->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  verify->add_flag("--timings", cfg.timings, "Add wall times to text output");
  add_common(verify);

  std::string selector;
  auto* exporter = app.add_subcommand("export", "Dump several tables into one JSON document");
  exporter->add_option("selector", selector, "Comma-separated statistics, e.g. a,b,c")->required();
  exporter->add_flag("--all-residues", cfg.all_residues, "Also emit a_{k,p} for every residue p");
  add_common(exporter);

  std::vector<const char*> argv{"partlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::optional<unsigned> k, p, ell;
    if (!format_name.empty()) {
      const auto it = kFormats.find(format_name);
      if (it == kFormats.end()) throw UsageError("--format must be json, csv or text");
      cfg.format = it->second;
    } else {
      cfg.format = exporter->parsed() ? OutputFormat::json
                   : compute->parsed() ? OutputFormat::csv
                                       : OutputFormat::text;
    }
    try {
      if (!k_text.empty()) cfg.k_range = parse_range(k_text);
      if (!ell_text.empty()) cfg.ell_range = parse_range(ell_text);
      if (!p_text.empty()) p = parse_unsigned(p_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    if (compute->parsed()) {
      if (!k_text.empty()) {
        if (cfg.k_range.lo != cfg.k_range.hi) throw UsageError("compute takes a single --k value");
        k = cfg.k_range.lo;
      }
      if (!ell_text.empty()) {
        if (cfg.ell_range.lo != cfg.ell_range.hi) throw UsageError("compute takes a single --ell value");
        ell = cfg.ell_range.lo;
      }
      return cmd_compute(stat, k, p, ell, cfg, out);
    }
    if (verify->parsed()) return cmd_verify(suite, cfg, out);
    return cmd_export(selector, cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace partlab::cli
