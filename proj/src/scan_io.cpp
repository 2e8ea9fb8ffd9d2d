#include "cylvar/scan_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cylvar/errors.hpp"

namespace cylvar {

using nlohmann::json;

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

double parse_number(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  std::istringstream is(s);
  is.imbue(std::locale::classic());
  double x = 0.0;
  is >> x;
  if (is.fail() || !is.eof()) throw DomainError("not a number: '" + s + "'");
  return x;
}

namespace {

std::string opt_field(const std::optional<double>& v) { return v ? format_number(*v) : "null"; }

std::optional<double> parse_opt(const std::string& s) {
  if (s == "null" || s.empty()) return std::nullopt;
  return parse_number(s);
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw DomainError("not a boolean: '" + s + "'");
}

// Rounded to the printed precision so that CSV and JSON carry the same values.
json json_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return parse_number(format_number(x));
}

json json_opt(const std::optional<double>& v) { return v ? json_number(*v) : json(nullptr); }

double json_to_double(const json& j) {
  if (j.is_string()) return parse_number(j.get<std::string>());
  return j.get<double>();
}

std::optional<double> json_to_opt(const json& j) {
  if (j.is_null()) return std::nullopt;
  return json_to_double(j);
}

} // namespace

void write_csv(std::ostream& os, const std::vector<ScanRecord>& records) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << format_number(r.B) << ',' << format_number(r.rho0) << ',' << opt_field(r.E) << ','
       << opt_field(r.alpha) << ',' << opt_field(r.beta) << ',' << opt_field(r.nu) << ','
       << opt_field(r.gamma) << ',' << opt_field(r.E0) << ',' << opt_field(r.Eb) << ','
       << opt_field(r.mean_rho) << ',' << opt_field(r.mean_abs_z) << ',' << opt_field(r.aspect_ratio)
       << ',' << opt_field(r.shannon_r) << ',' << opt_field(r.cusp_Z) << ','
       << (r.converged ? "true" : "false") << ',' << r.evals << ',' << (r.bound_state ? "true" : "false")
       << '\n';
  }
}

std::vector<ScanRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw DomainError("unexpected CSV header");
  std::vector<ScanRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 17) throw DomainError("CSV row has " + std::to_string(f.size()) + " fields");
    ScanRecord r;
    r.B = parse_number(f[0]);
    r.rho0 = parse_number(f[1]);
    r.E = parse_opt(f[2]);
    r.alpha = parse_opt(f[3]);
    r.beta = parse_opt(f[4]);
    r.nu = parse_opt(f[5]);
    r.gamma = parse_opt(f[6]);
    r.E0 = parse_opt(f[7]);
    r.Eb = parse_opt(f[8]);
    r.mean_rho = parse_opt(f[9]);
    r.mean_abs_z = parse_opt(f[10]);
    r.aspect_ratio = parse_opt(f[11]);
    r.shannon_r = parse_opt(f[12]);
    r.cusp_Z = parse_opt(f[13]);
    r.converged = parse_bool(f[14]);
    r.evals = std::stoi(f[15]);
    r.bound_state = parse_bool(f[16]);
    out.push_back(r);
  }
  return out;
}

void write_json(std::ostream& os, const std::vector<ScanRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) {
    json j;
    j["B"] = json_number(r.B);
    j["rho0"] = json_number(r.rho0);
    j["E"] = json_opt(r.E);
    j["alpha"] = json_opt(r.alpha);
    j["beta"] = json_opt(r.beta);
    j["nu"] = json_opt(r.nu);
    j["gamma"] = json_opt(r.gamma);
    j["E0"] = json_opt(r.E0);
    j["Eb"] = json_opt(r.Eb);
    j["mean_rho"] = json_opt(r.mean_rho);
    j["mean_abs_z"] = json_opt(r.mean_abs_z);
    j["aspect_ratio"] = json_opt(r.aspect_ratio);
    j["shannon_r"] = json_opt(r.shannon_r);
    j["cusp_Z"] = json_opt(r.cusp_Z);
    j["converged"] = r.converged;
    j["evals"] = r.evals;
    j["bound_state"] = r.bound_state;
    if (!r.error.empty()) j["error"] = r.error;
    arr.push_back(std::move(j));
  }
  os << arr.dump(2) << '\n';
}

std::vector<ScanRecord> read_json(std::istream& is) {
  const json arr = json::parse(is);
  if (!arr.is_array()) throw DomainError("expected a JSON array of records");
  std::vector<ScanRecord> out;
  for (const auto& j : arr) {
    ScanRecord r;
    r.B = json_to_double(j.at("B"));
    r.rho0 = json_to_double(j.at("rho0"));
    r.E = json_to_opt(j.at("E"));
    r.alpha = json_to_opt(j.at("alpha"));
    r.beta = json_to_opt(j.at("beta"));
    r.nu = json_to_opt(j.at("nu"));
    r.gamma = json_to_opt(j.at("gamma"));
    r.E0 = json_to_opt(j.at("E0"));
    r.Eb = json_to_opt(j.at("Eb"));
    r.mean_rho = json_to_opt(j.at("mean_rho"));
    r.mean_abs_z = json_to_opt(j.at("mean_abs_z"));
    r.aspect_ratio = json_to_opt(j.at("aspect_ratio"));
    r.shannon_r = json_to_opt(j.at("shannon_r"));
    r.cusp_Z = json_to_opt(j.at("cusp_Z"));
    r.converged = j.at("converged").get<bool>();
    r.evals = j.at("evals").get<int>();
    r.bound_state = j.at("bound_state").get<bool>();
    if (j.contains("error")) r.error = j["error"].get<std::string>();
    out.push_back(r);
  }
  return out;
}

} // namespace cylvar
