#include "qrac/experiment.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qrac/qrac2.hpp"

namespace qrac::embedded {
const std::string& table2_csv();
}

namespace qrac::experiment {

namespace {

constexpr const char* kHeader =
    "label,x0,x1,theta1_deg,theta2_deg,theta3_deg,phi_rad,pz,pz_err,px,px_err";

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::runtime_error("table2 parse error at line " + std::to_string(line) +
                           ": " + what);
}

double parse_number(const std::string& field, int line) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(field, &consumed);
  } catch (const std::exception&) {
    parse_fail(line, "not a number: '" + field + "'");
  }
  if (consumed != field.size()) parse_fail(line, "trailing garbage: '" + field + "'");
  return value;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

Ket prepare_optics_state(const OpticsSetting& s) {
  const double rad = std::numbers::pi / 180.0;
  const double c1 = std::cos(2.0 * s.theta1_deg * rad);
  const double s1 = std::sin(2.0 * s.theta1_deg * rad);
  const double c2 = std::cos(2.0 * s.theta2_deg * rad);
  const double s2 = std::sin(2.0 * s.theta2_deg * rad);
  const double c3 = std::cos(2.0 * s.theta3_deg * rad);
  const double s3 = std::sin(2.0 * s.theta3_deg * rad);
  const Complex phase = std::polar(1.0, s.phi_rad);

  Ket psi(4);
  psi[0] = c1 * c2;           // H,a
  psi[1] = c1 * s2;           // V,a
  psi[2] = phase * s1 * s3;   // H,b
  psi[3] = -phase * s1 * c3;  // V,b
  return psi;
}

Ket optical_from_logical(const Ket& logical) {
  if (logical.size() != 4) throw std::invalid_argument("expected a 4-level ket");
  Ket optical(4);
  optical[0] = logical[1];  // H,a
  optical[1] = logical[2];  // V,a
  optical[2] = logical[3];  // H,b
  optical[3] = logical[0];  // V,b
  return optical;
}

double ideal_success(int x0, int x1, int question) {
  if (x0 < 0 || x0 > 3 || x1 < 0 || x1 > 3) {
    throw std::invalid_argument("encoded symbol out of range");
  }
  if (question != 0 && question != 1) throw std::invalid_argument("bad question");
  const Ket psi = q2::encode2(4, x0, x1);
  if (question == 0) return outcome_prob(psi, computational_basis(4), x0);
  return outcome_prob(psi, fourier_basis(4), x1);
}

std::vector<Record> parse_table2(std::istream& in) {
  std::vector<Record> records;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kHeader) parse_fail(line_no, "unexpected header");
      header_seen = true;
      continue;
    }
    const std::vector<std::string> f = split_fields(line);
    if (f.size() != 11) parse_fail(line_no, "expected 11 fields");

    Record rec;
    rec.label = f[0];
    rec.x0 = int(parse_number(f[1], line_no));
    rec.x1 = int(parse_number(f[2], line_no));
    if (rec.x0 < 0 || rec.x0 > 3 || rec.x1 < 0 || rec.x1 > 3) {
      parse_fail(line_no, "symbol out of range");
    }
    rec.setting = {parse_number(f[3], line_no), parse_number(f[4], line_no),
                   parse_number(f[5], line_no), parse_number(f[6], line_no)};
    rec.pz = parse_number(f[7], line_no);
    rec.pz_err = parse_number(f[8], line_no);
    rec.px = parse_number(f[9], line_no);
    rec.px_err = parse_number(f[10], line_no);
    if (rec.pz < 0.0 || rec.pz > 1.0 || rec.px < 0.0 || rec.px > 1.0) {
      parse_fail(line_no, "probability outside [0, 1]");
    }
    if (rec.pz_err < 0.0 || rec.px_err < 0.0) parse_fail(line_no, "negative uncertainty");
    records.push_back(std::move(rec));
  }
  if (!header_seen) throw std::runtime_error("table2 parse error: missing header");
  if (records.size() != 16) {
    throw std::runtime_error("table2 parse error: expected 16 rows, got " +
                             std::to_string(records.size()));
  }
  return records;
}

std::vector<Record> load_table2(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_table2(in);
}

const std::string& embedded_table2_csv() { return embedded::table2_csv(); }

std::vector<Record> embedded_table2() {
  std::istringstream in(embedded_table2_csv());
  return parse_table2(in);
}

std::string serialize_table2(const std::vector<Record>& records) {
  std::ostringstream out;
  out << kHeader << '\n';
  out.precision(17);
  for (const Record& r : records) {
    out << r.label << ',' << r.x0 << ',' << r.x1 << ',' << r.setting.theta1_deg
        << ',' << r.setting.theta2_deg << ',' << r.setting.theta3_deg << ','
        << r.setting.phi_rad << ',' << r.pz << ',' << r.pz_err << ',' << r.px
        << ',' << r.px_err << '\n';
  }
  return out.str();
}

Analysis analyze(const std::vector<Record>& records) {
  if (records.size() != 16) throw std::invalid_argument("expected 16 records");

  Analysis a;
  double sum = 0.0;
  double err_sum = 0.0;
  double row_sum = 0.0;
  for (const Record& r : records) {
    sum += r.pz + r.px;
    err_sum += r.pz_err + r.px_err;
    row_sum += 0.5 * (r.pz + r.px);

    RowReport row;
    row.label = r.label;
    row.deviation_z = r.pz - a.ideal;
    row.deviation_x = r.px - a.ideal;
    const Ket prepared = prepare_optics_state(r.setting);
    const Ket target = optical_from_logical(q2::encode2(4, r.x0, r.x1));
    row.preparation_fidelity = std::norm(target.dot(prepared));
    a.rows.push_back(std::move(row));
  }
  a.mean = sum / 32.0;
  a.mean_per_row = row_sum / 16.0;
  a.mean_uncertainty = err_sum / 32.0;
  a.classical_bound_violated = a.mean > a.classical_bound + 3.0 * a.mean_uncertainty;
  a.consistent_with_ideal = a.mean < a.ideal + a.mean_uncertainty;
  return a;
}

}  // namespace qrac::experiment
