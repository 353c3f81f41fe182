#include "zsspec/errors.hpp"
#include "zsspec/io.hpp"
#include "zsspec/spectrum.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <unistd.h>

using namespace zs;

namespace {

SpectrumResult small_result() {
  SpectrumResult r;
  r.all_k.resize(3);
  r.all_k << cdouble(0.0, 1.3), cdouble(0.5, 0.0), cdouble(0.0, -1.3);
  r.discrete_k = {r.all_k[0], r.all_k[2]};
  r.residuals = {1e-10, 2e-10};
  r.params.size = 12;
  r.params.scale = 0.15;
  r.params.potential = "satsuma_yajima(A=1.8)";
  return r;
}

} // namespace

TEST_CASE("spectrum json") {
  const auto j = spectrum_to_json(small_result());
  CHECK(j.at("schema") == kSchemaVersion);
  CHECK(j.at("method") == "chebyshev");
  CHECK(j.at("params").at("n") == 12);
  CHECK(j.at("params").at("a") == 0.15);
  CHECK(j.at("params").at("potential") == "satsuma_yajima(A=1.8)");
  CHECK(j.at("all_k").size() == 3);
  CHECK(j.at("all_k")[0][1] == 1.3);
  CHECK(j.at("discrete_k").size() == 2);
  CHECK(j.at("residuals")[1] == 2e-10);
}

TEST_CASE("spectrum csv") {
  std::ostringstream out;
  write_spectrum_csv(small_result(), out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "re,im,discrete,residual");
  std::getline(in, line);
  CHECK(line == "0,1.3,1,1e-10");
  std::getline(in, line);
  CHECK(line == "0.5,0,0,");
}

TEST_CASE("convergence output") {
  ConvergenceRecord rec;
  rec.path = {{0.15, 21}, {0.15, 51}};
  rec.errors = {1e-3, std::numeric_limits<double>::infinity()};
  rec.status = {PointStatus::Found, PointStatus::Failed};
  rec.reference_k = cdouble(0, 1.3);
  std::ostringstream out;
  write_convergence_csv(rec, out);
  CHECK(out.str() == "a,n,error,status\n0.15,21,0.001,found\n0.15,51,inf,failed\n");
  const auto j = convergence_to_json(rec);
  CHECK(j.at("points").size() == 2);
}

TEST_CASE("format_double") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.85e-15) == "1.85e-15");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("atomic writes") {
  const auto dir = std::filesystem::temp_directory_path() / ("zsspec_io_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.json";
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  std::ifstream in(path);
  std::string s;
  std::getline(in, s);
  CHECK(s == "second");
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
  CHECK_THROWS_AS(write_file_atomic(dir / "missing" / "x.json", "z"), IoError);
  std::filesystem::remove_all(dir);
}
