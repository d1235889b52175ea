#include "sgl/io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sgl::io {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

template <typename T>
T field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(where + ": field '" + key + "' has the wrong type (" + e.what() + ")");
  }
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_array())
    throw InputError(where + ": '" + key + "' must be an array");
  return obj.at(key);
}

std::array<double, 3> triple(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3) throw InputError(where + ": expected an array of three numbers");
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!v[i].is_number()) throw InputError(where + ": expected an array of three numbers");
    out[i] = v[i].get<double>();
  }
  return out;
}

std::string complex_fields(std::complex<double> z) {
  return "\"re\": " + number(z.real()) + ", \"im\": " + number(z.imag());
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("error while writing '" + path + "'");
}

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string spectrum_to_json(const SglSpectrum& spectrum) {
  std::string out = "{\n  \"bandwidth\": " + std::to_string(spectrum.bandwidth()) + ",\n  \"coefficients\": [";
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const SglIndex idx = index_at(i);
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"n\": " + std::to_string(idx.n) + ", \"l\": " + std::to_string(idx.l) +
           ", \"m\": " + std::to_string(idx.m) + ", " + complex_fields(spectrum.coefficients()[i]) + "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

SglSpectrum spectrum_from_json(const std::string& text) {
  const json doc = parse(text, "spectrum");
  const int b = field<int>(doc, "bandwidth", "spectrum");
  if (b < 1) throw InputError("spectrum: bandwidth must be >= 1");
  const json& coeffs = array_field(doc, "coefficients", "spectrum");
  if (coeffs.size() != spectrum_size(b))
    throw InputError("spectrum: expected " + std::to_string(spectrum_size(b)) + " coefficients for bandwidth " +
                     std::to_string(b) + ", got " + std::to_string(coeffs.size()));
  SglSpectrum s(b);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string where = "spectrum coefficient " + std::to_string(i);
    const SglIndex expected = index_at(i);
    const SglIndex got{field<int>(coeffs[i], "n", where), field<int>(coeffs[i], "l", where),
                       field<int>(coeffs[i], "m", where)};
    if (got != expected)
      throw InputError(where + ": expected (n,l,m) = (" + std::to_string(expected.n) + "," +
                       std::to_string(expected.l) + "," + std::to_string(expected.m) + ") in storage order");
    s.coefficients()[i] = {field<double>(coeffs[i], "re", where), field<double>(coeffs[i], "im", where)};
  }
  return s;
}

std::string table_to_csv(const TranslationTable& table) {
  std::string out = "n,np,l,lp,m_abs,nu,value\n";
  const std::string nu = number(table.nu());
  for (const auto& e : table.entries()) {
    out += std::to_string(e.n) + "," + std::to_string(e.n_p) + "," + std::to_string(e.l) + "," +
           std::to_string(e.l_p) + "," + std::to_string(e.m_abs) + "," + nu + "," + number(e.value) + "\n";
  }
  return out;
}

std::string grid_to_json(const PoseGrid& grid) {
  std::string out = "{\n  \"rotations\": [";
  for (std::size_t i = 0; i < grid.rotations.size(); ++i) {
    const auto& r = grid.rotations[i];
    out += (i == 0 ? "\n    [" : ",\n    [") + number(r.alpha) + ", " + number(r.beta) + ", " + number(r.gamma) + "]";
  }
  out += "\n  ],\n  \"translations\": [";
  for (std::size_t i = 0; i < grid.translations.size(); ++i) {
    const auto& t = grid.translations[i];
    out += (i == 0 ? "\n    [" : ",\n    [") + number(t.x()) + ", " + number(t.y()) + ", " + number(t.z()) + "]";
  }
  out += "\n  ]\n}\n";
  return out;
}

PoseGrid grid_from_json(const std::string& text) {
  const json doc = parse(text, "grid");
  PoseGrid grid;
  const json& rot = array_field(doc, "rotations", "grid");
  for (std::size_t i = 0; i < rot.size(); ++i) {
    const auto a = triple(rot[i], "grid rotation " + std::to_string(i));
    grid.rotations.push_back({a[0], a[1], a[2]});
  }
  const json& tr = array_field(doc, "translations", "grid");
  for (std::size_t i = 0; i < tr.size(); ++i) {
    const auto a = triple(tr[i], "grid translation " + std::to_string(i));
    grid.translations.emplace_back(a[0], a[1], a[2]);
  }
  grid.validate();
  return grid;
}

std::string results_to_json(const std::vector<MatchResult>& results, const PoseGrid& grid) {
  std::string out = "{\n  \"results\": [";
  const std::size_t nt = grid.translations.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const auto& rot = grid.rotations.at(r.grid_index / nt);
    const auto& t = grid.translations.at(r.grid_index % nt);
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"rank\": " + std::to_string(r.rank) + ", \"grid_index\": " + std::to_string(r.grid_index) +
           ", \"rotation\": [" + number(rot.alpha) + ", " + number(rot.beta) + ", " + number(rot.gamma) +
           "], \"translation\": [" + number(t.x()) + ", " + number(t.y()) + ", " + number(t.z()) +
           "], \"overlap\": {" + complex_fields(r.overlap) + "}, \"score\": " + number(r.score) + "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

std::string samples_template(int bandwidth) {
  Samples s;
  s.bandwidth = bandwidth;
  s.values.assign(sample_grid(bandwidth).size(), 0.0);
  return samples_to_json(s);
}

std::string samples_to_json(const Samples& samples) {
  const auto grid = sample_grid(samples.bandwidth);
  if (grid.size() != samples.values.size()) throw InputError("samples: value count does not match the grid");
  std::string out = "{\n  \"bandwidth\": " + std::to_string(samples.bandwidth) + ",\n  \"samples\": [";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"r\": " + number(grid[i].r) + ", \"theta\": " + number(grid[i].theta) +
           ", \"phi\": " + number(grid[i].phi) + ", " + complex_fields(samples.values[i]) + "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

Samples samples_from_json(const std::string& text) {
  const json doc = parse(text, "samples");
  Samples s;
  s.bandwidth = field<int>(doc, "bandwidth", "samples");
  if (s.bandwidth < 1) throw InputError("samples: bandwidth must be >= 1");
  const auto grid = sample_grid(s.bandwidth);
  const json& arr = array_field(doc, "samples", "samples");
  if (arr.size() != grid.size())
    throw InputError("samples: expected " + std::to_string(grid.size()) + " samples for bandwidth " +
                     std::to_string(s.bandwidth) + ", got " + std::to_string(arr.size()));
  s.values.resize(grid.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "sample " + std::to_string(i);
    const double r = field<double>(arr[i], "r", where);
    const double theta = field<double>(arr[i], "theta", where);
    const double phi = field<double>(arr[i], "phi", where);
    if (!close(r, grid[i].r) || !close(theta, grid[i].theta) || !close(phi, grid[i].phi))
      throw InputError(where + ": coordinates do not match the quadrature grid (use the transform template)");
    s.values[i] = {field<double>(arr[i], "re", where), field<double>(arr[i], "im", where)};
  }
  return s;
}

std::vector<SphericalPoint> points_from_json(const std::string& text) {
  const json doc = parse(text, "points");
  const json& arr = array_field(doc, "points", "points");
  std::vector<SphericalPoint> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "point " + std::to_string(i);
    SphericalPoint p{field<double>(arr[i], "r", where), field<double>(arr[i], "theta", where),
                     field<double>(arr[i], "phi", where)};
    if (!(p.r >= 0.0) || !std::isfinite(p.r) || !std::isfinite(p.theta) || !std::isfinite(p.phi))
      throw InputError(where + ": need finite coordinates with r >= 0");
    out.push_back(p);
  }
  return out;
}

std::string values_to_json(const std::vector<SphericalPoint>& points, const std::vector<std::complex<double>>& values) {
  std::string out = "{\n  \"values\": [";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"r\": " + number(points[i].r) + ", \"theta\": " + number(points[i].theta) +
           ", \"phi\": " + number(points[i].phi) + ", " + complex_fields(values.at(i)) + "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

std::string report_to_json_line(const oracle::OracleReport& report) {
  // json handles string escaping of the case id.
  return "{\"case_id\": " + json(report.case_id).dump() + ", \"closed_form\": {" +
         complex_fields(report.closed_form) + "}, \"oracle_value\": {" + complex_fields(report.oracle_value) +
         "}, \"abs_err\": " + number(report.abs_err) + ", \"rel_err\": " + number(report.rel_err) +
         ", \"passed\": " + (report.passed ? "true" : "false") + "}";
}

}  // namespace sgl::io
