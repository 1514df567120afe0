#include "partlab/io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace partlab {

namespace {

const BigInt kJsonSafeLimit("9007199254740992");  // 2^53

ordered_json params_to_json(const StatParams& p) {
  ordered_json j = ordered_json::object();
  if (p.k) j["k"] = *p.k;
  if (p.p) j["p"] = *p.p;
  if (p.ell) j["ell"] = *p.ell;
  return j;
}

ordered_json case_to_json(const IdentityCase& c) {
  ordered_json j;
  j["identity"] = identity_name(c.id);
  j["n"] = c.params.n;
  if (c.params.k) j["k"] = *c.params.k;
  if (c.params.p) j["p"] = *c.params.p;
  if (c.params.ell) j["ell"] = *c.params.ell;
  j["lhs"] = bigint_to_json(c.lhs);
  j["rhs"] = bigint_to_json(c.rhs);
  return j;
}

}  // namespace

ordered_json bigint_to_json(const BigInt& v) {
  if (abs(v) <= kJsonSafeLimit) return v.get_si();
  return v.get_str();
}

BigInt bigint_from_json(const ordered_json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
  throw std::invalid_argument("expected an integer or decimal string");
}

std::string table_to_csv(const StatTable& t) {
  std::string out = "n,value\n";
  for (std::size_t n = 0; n < t.values.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += t.values[n].get_str();
    out += '\n';
  }
  return out;
}

StatTable table_from_csv(std::string_view csv, StatId id, StatParams params) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != "n,value") throw std::invalid_argument("missing CSV header");
  StatTable t{id, params, {}};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("malformed CSV row: " + line);
    const auto n = std::stoull(line.substr(0, comma));
    if (n != t.values.size()) throw std::invalid_argument("CSV rows out of order at n=" + std::to_string(n));
    t.values.emplace_back(line.substr(comma + 1));
  }
  if (t.values.empty()) throw std::invalid_argument("CSV has no rows");
  return t;
}

ordered_json table_to_json(const StatTable& t) {
  ordered_json j;
  j["stat"] = stat_name(t.id);
  j["params"] = params_to_json(t.params);
  j["n_max"] = t.n_max();
  ordered_json values = ordered_json::array();
  for (const auto& v : t.values) values.push_back(bigint_to_json(v));
  j["values"] = std::move(values);
  return j;
}

std::string table_to_text(const StatTable& t) {
  std::size_t width = 5;
  for (const auto& v : t.values) width = std::max(width, v.get_str().size());
  std::ostringstream os;
  os << "# " << t.key() << '\n';
  os << std::setw(5) << "n" << "  " << std::setw(static_cast<int>(width)) << "value" << '\n';
  for (std::size_t n = 0; n < t.values.size(); ++n)
    os << std::setw(5) << n << "  " << std::setw(static_cast<int>(width)) << t.values[n].get_str() << '\n';
  return os.str();
}

std::string describe_params(const CaseParams& p) {
  std::ostringstream os;
  os << "n=" << p.n;
  if (p.k) os << " k=" << *p.k;
  if (p.p) os << " p=" << *p.p;
  if (p.ell) os << " ell=" << *p.ell;
  return os.str();
}

ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  ordered_json range;
  range["n_max"] = r.range.n_max;
  if (r.range.k) range["k"] = {r.range.k->lo, r.range.k->hi};
  if (r.range.ell) range["ell"] = {r.range.ell->lo, r.range.ell->hi};
  j["range"] = std::move(range);
  j["total"] = r.total;
  j["failed"] = r.failures.size();
  j["passed"] = r.passed();
  ordered_json failures = ordered_json::array();
  for (const auto& c : r.failures) failures.push_back(case_to_json(c));
  j["failures"] = std::move(failures);
  return j;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  ordered_json doc;
  bool all = true;
  for (const auto& r : reports) all = all && r.passed();
  doc["passed"] = all;
  ordered_json suites = ordered_json::array();
  for (const auto& r : reports) suites.push_back(report_to_json(r));
  doc["suites"] = std::move(suites);
  return doc.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = "suite,range,total,failed,status\n";
  for (const auto& r : reports)
    out += r.suite + ',' + r.range.describe() + ',' + std::to_string(r.total) + ',' +
           std::to_string(r.failures.size()) + ',' + (r.passed() ? "pass" : "FAIL") + '\n';
  return out;
}

std::string reports_to_text(const std::vector<VerificationReport>& reports, bool timings) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "suite" << std::setw(28) << "range" << std::right
     << std::setw(9) << "cases" << std::setw(9) << "failed" << "  status";
  if (timings) os << std::setw(12) << "ms";
  os << '\n';
  for (const auto& r : reports) {
    os << std::left << std::setw(24) << r.suite << std::setw(28) << r.range.describe() << std::right
       << std::setw(9) << r.total << std::setw(9) << r.failures.size() << "  "
       << (r.passed() ? "pass" : "FAIL");
    if (timings)
      os << std::setw(12) << std::fixed << std::setprecision(1)
         << std::chrono::duration<double, std::milli>(r.wall).count();
    os << '\n';
  }
  for (const auto& r : reports) {
    if (const auto* f = r.first_failure())
      os << r.suite << ": first failure " << identity_name(f->id) << ' ' << describe_params(f->params)
         << " lhs=" << f->lhs.get_str() << " rhs=" << f->rhs.get_str() << '\n';
  }
  return os.str();
}

}  // namespace partlab
