#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qrac/linalg.hpp"

namespace qrac::experiment {

/// Half-wave-plate angles (degrees) and phase shift (radians).
struct OpticsSetting {
  double theta1_deg = 0.0;
  double theta2_deg = 0.0;
  double theta3_deg = 0.0;
  double phi_rad = 0.0;
};

/// One measured table row.
struct Record {
  std::string label;
  int x0 = 0;
  int x1 = 0;
  OpticsSetting setting;
  double pz = 0.0, pz_err = 0.0;
  double px = 0.0, px_err = 0.0;
};

// Amplitudes in optical-mode order H,a / V,a / H,b / V,b. Unit norm by
// trigonometric identity.
Ket prepare_optics_state(const OpticsSetting& s);

// Reorder a logical-index ket into optical-mode order. The fixed mode
// assignment is |1> = H,a; |2> = V,a; |3> = H,b; |0> = V,b.
Ket optical_from_logical(const Ket& logical);

// Success probability of the ideal d=4 code for the given encoding and
// question (0 = computational, 1 = Fourier). Always 3/4.
double ideal_success(int x0, int x1, int question);

// CSV schema: label,x0,x1,theta1_deg,theta2_deg,theta3_deg,phi_rad,
//             pz,pz_err,px,px_err
std::vector<Record> parse_table2(std::istream& in);
std::vector<Record> load_table2(const std::string& path);

// The transcription shipped with the repository.
std::vector<Record> embedded_table2();
const std::string& embedded_table2_csv();

std::string serialize_table2(const std::vector<Record>& records);

struct RowReport {
  std::string label;
  double deviation_z = 0.0;  // measured minus ideal
  double deviation_x = 0.0;
  double preparation_fidelity = 0.0;  // optics state vs encoded state
};

struct Analysis {
  double mean = 0.0;              // over all 32 probability entries
  double mean_per_row = 0.0;      // rows averaged first, then combined
  double mean_uncertainty = 0.0;
  double classical_bound = 0.625;
  double ideal = 0.75;
  bool classical_bound_violated = false;
  bool consistent_with_ideal = false;
  std::vector<RowReport> rows;
};

Analysis analyze(const std::vector<Record>& records);

}  // namespace qrac::experiment
