#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cylvar {

// One row of a scan table. Optional fields are written as null.
struct ScanRecord {
  double B = 0.0;
  double rho0 = 0.0; // inf for the unconfined atom
  std::optional<double> E;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> nu;
  std::optional<double> gamma;
  std::optional<double> E0;
  std::optional<double> Eb;
  std::optional<double> mean_rho;
  std::optional<double> mean_abs_z;
  std::optional<double> aspect_ratio;
  std::optional<double> shannon_r;
  std::optional<double> cusp_Z;
  bool converged = false;
  int evals = 0;
  bool bound_state = false;
  std::string error; // empty on success; JSON only
};

inline constexpr const char* kCsvHeader =
    "B,rho0,E,alpha,beta,nu,gamma,E0,Eb,mean_rho,mean_abs_z,aspect_ratio,shannon_r,cusp_Z,"
    "converged,evals,bound_state";

// Numbers as printf %.9g with '.' decimal point; inf for an infinite radius.
std::string format_number(double x);
double parse_number(const std::string& s);

void write_csv(std::ostream& os, const std::vector<ScanRecord>& records);
std::vector<ScanRecord> read_csv(std::istream& is);

void write_json(std::ostream& os, const std::vector<ScanRecord>& records);
std::vector<ScanRecord> read_json(std::istream& is);

} // namespace cylvar
