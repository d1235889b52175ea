#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgl/match.hpp"
#include "sgl/oracle.hpp"
#include "sgl/sgl.hpp"
#include "sgl/translate.hpp"

namespace sgl::io {

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// %.17g; non-finite values become null.
std::string number(double v);

// Parsers throw InputError with a diagnostic on malformed content.

/// {"bandwidth": B, "coefficients": [{"n","l","m","re","im"}, ...]} in storage order.
std::string spectrum_to_json(const SglSpectrum& spectrum);
SglSpectrum spectrum_from_json(const std::string& text);

/// Header n,np,l,lp,m_abs,nu,value; rows sorted by (n, n', l, l', m_abs).
std::string table_to_csv(const TranslationTable& table);

/// {"rotations": [[alpha, beta, gamma], ...], "translations": [[x, y, z], ...]}.
std::string grid_to_json(const PoseGrid& grid);
PoseGrid grid_from_json(const std::string& text);

std::string results_to_json(const std::vector<MatchResult>& results, const PoseGrid& grid);

/// {"bandwidth": B, "samples": [{"r","theta","phi","re","im"}, ...]} on sample_grid(B).
struct Samples {
  int bandwidth = 0;
  std::vector<std::complex<double>> values;
};
std::string samples_template(int bandwidth);
std::string samples_to_json(const Samples& samples);
/// Rejects sample sets whose coordinates do not reproduce sample_grid(B).
Samples samples_from_json(const std::string& text);

/// {"points": [{"r","theta","phi"}, ...]}.
std::vector<SphericalPoint> points_from_json(const std::string& text);
/// {"values": [{"r","theta","phi","re","im"}, ...]}.
std::string values_to_json(const std::vector<SphericalPoint>& points, const std::vector<std::complex<double>>& values);

/// One JSON object on a single line, without the trailing newline.
std::string report_to_json_line(const oracle::OracleReport& report);

}  // namespace sgl::io
