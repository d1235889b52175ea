#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "sgl/io.hpp"

using namespace sgl;

TEST_CASE("number formatting round trips") {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23}) CHECK(std::stod(io::number(v)) == v);
  CHECK(io::number(std::numeric_limits<double>::infinity()) == "null");
}

TEST_CASE("spectrum round trip and storage order") {
  SglSpectrum s(3);
  for (std::size_t i = 0; i < s.size(); ++i) s.coefficients()[i] = {0.1 * i, -1.0 / (i + 1.0)};
  const SglSpectrum back = io::spectrum_from_json(io::spectrum_to_json(s));
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(back.coefficients()[i] == s.coefficients()[i]);

  CHECK_THROWS_AS(io::spectrum_from_json("{"), InputError);
  CHECK_THROWS_AS(io::spectrum_from_json(R"({"bandwidth": 1})"), InputError);
  CHECK_THROWS_AS(io::spectrum_from_json(R"({"bandwidth": 1, "coefficients": []})"), InputError);
  CHECK_THROWS_AS(io::spectrum_from_json(R"({"bandwidth": 1, "coefficients": [{"n": 1, "l": 0, "m": 0, "re": "x", "im": 0}]})"),
                  InputError);
  CHECK_THROWS_AS(
      io::spectrum_from_json(
          R"({"bandwidth": 2, "coefficients": [{"n":1,"l":0,"m":0,"re":0,"im":0},{"n":2,"l":1,"m":-1,"re":0,"im":0},)"
          R"({"n":2,"l":0,"m":0,"re":0,"im":0},{"n":2,"l":1,"m":0,"re":0,"im":0},{"n":2,"l":1,"m":1,"re":0,"im":0}]})"),
      InputError);
}

TEST_CASE("table csv") {
  const std::string csv = io::table_to_csv(build_table(2, 1.0));
  CHECK(csv.rfind("n,np,l,lp,m_abs,nu,value\n", 0) == 0);
  CHECK(csv.find("\n1,1,0,0,0,1,") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(build_table(2, 1.0).entry_count()));
}

TEST_CASE("grid round trip and validation") {
  PoseGrid g;
  g.rotations = {{0.1, 0.2, 0.3}};
  g.translations = {{1.0, -2.0, 0.5}, {0.0, 0.0, 0.0}};
  const PoseGrid back = io::grid_from_json(io::grid_to_json(g));
  CHECK(back.rotations[0].beta == 0.2);
  CHECK(back.translations[0] == g.translations[0]);
  CHECK_THROWS_AS(io::grid_from_json(R"({"rotations": [], "translations": [[0,0,0]]})"), InputError);
  CHECK_THROWS_AS(io::grid_from_json(R"({"rotations": [[0,0]], "translations": [[0,0,0]]})"), InputError);
  CHECK_THROWS_AS(io::grid_from_json(R"({"rotations": [[0,0,0]], "translations": [[0,"a",0]]})"), InputError);
}

TEST_CASE("samples template and checks") {
  io::Samples s = io::samples_from_json(io::samples_template(2));
  CHECK(s.bandwidth == 2);
  CHECK(s.values.size() == sample_grid(2).size());
  s.values[3] = {1.5, -0.5};
  const io::Samples back = io::samples_from_json(io::samples_to_json(s));
  CHECK(back.values[3] == s.values[3]);

  std::string moved = io::samples_to_json(s);
  moved.replace(moved.find("\"r\": ") + 5, 1, "9");
  CHECK_THROWS_AS(io::samples_from_json(moved), InputError);
}

TEST_CASE("points") {
  const auto p = io::points_from_json(R"({"points": [{"r": 1, "theta": 0.5, "phi": 2}]})");
  REQUIRE(p.size() == 1);
  CHECK(p[0].theta == 0.5);
  CHECK_THROWS_AS(io::points_from_json(R"({"points": [{"r": -1, "theta": 0, "phi": 0}]})"), InputError);
  const std::string v = io::values_to_json(p, {{1.0, 2.0}});
  CHECK(v.find("\"re\": 1") != std::string::npos);
}

TEST_CASE("file errors") {
  const auto dir = std::filesystem::temp_directory_path() / "sgl_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "x.txt").string();
  io::write_file(path, "hello");
  CHECK(io::read_file(path) == "hello");
  CHECK_THROWS_AS(io::read_file((dir / "missing.json").string()), io::IoError);
  CHECK_THROWS_AS(io::write_file((dir / "no" / "such" / "dir.txt").string(), "x"), io::IoError);
  std::filesystem::remove_all(dir);
}
