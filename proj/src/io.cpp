#include "zsspec/io.hpp"

#include "zsspec/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <system_error>

namespace zs {

namespace {

nlohmann::json pair(cdouble z) { return nlohmann::json::array({z.real(), z.imag()}); }

const char *status_name(PointStatus s) {
  switch (s) {
  case PointStatus::Found:
    return "found";
  case PointStatus::Absent:
    return "absent";
  case PointStatus::Failed:
    return "failed";
  }
  return "failed";
}

} // namespace

std::string format_double(double v) {
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

nlohmann::json spectrum_to_json(const SpectrumResult &result) {
  const SpectrumParams &p = result.params;
  nlohmann::json params = {
      {"method", p.method},
      {"lambda_sign", p.lambda_sign},
      {"potential", p.potential},
      {"tau_im", p.classifier.tau_im},
      {"delta_match", p.classifier.delta_match},
      {"merge_radius", p.classifier.merge_radius},
      {"confirm", p.classifier.confirm},
  };
  if (p.method == "fcm") {
    params["m"] = p.size;
    params["L"] = p.scale;
  } else {
    params["n"] = p.size;
    params["a"] = p.scale;
  }
  nlohmann::json all = nlohmann::json::array();
  for (Eigen::Index i = 0; i < result.all_k.size(); ++i)
    all.push_back(pair(result.all_k[i]));
  nlohmann::json discrete = nlohmann::json::array();
  for (const cdouble k : result.discrete_k)
    discrete.push_back(pair(k));
  return {
      {"schema", kSchemaVersion}, {"method", p.method},         {"params", params},
      {"all_k", all},             {"discrete_k", discrete},     {"residuals", result.residuals},
  };
}

void write_spectrum_csv(const SpectrumResult &result, std::ostream &out) {
  out << "re,im,discrete,residual\n";
  for (Eigen::Index i = 0; i < result.all_k.size(); ++i) {
    const cdouble k = result.all_k[i];
    std::string flag = "0";
    std::string res;
    for (std::size_t d = 0; d < result.discrete_k.size(); ++d)
      if (result.discrete_k[d] == k) {
        flag = "1";
        res = format_double(result.residuals[d]);
        break;
      }
    out << format_double(k.real()) << ',' << format_double(k.imag()) << ',' << flag << ','
        << res << '\n';
  }
}

void write_eigenfunction_csv(const Eigenfunction &ef, std::ostream &out) {
  out << "x,re_psi1,im_psi1,re_psi2,im_psi2\n";
  for (Eigen::Index j = 0; j < ef.x.size(); ++j)
    out << format_double(ef.x[j]) << ',' << format_double(ef.psi1[j].real()) << ','
        << format_double(ef.psi1[j].imag()) << ',' << format_double(ef.psi2[j].real()) << ','
        << format_double(ef.psi2[j].imag()) << '\n';
}

void write_convergence_csv(const ConvergenceRecord &record, std::ostream &out) {
  out << "a,n,error,status\n";
  for (std::size_t i = 0; i < record.path.size(); ++i)
    out << format_double(record.path[i].first) << ',' << record.path[i].second << ','
        << format_double(record.errors[i]) << ',' << status_name(record.status[i]) << '\n';
}

nlohmann::json convergence_to_json(const ConvergenceRecord &record) {
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t i = 0; i < record.path.size(); ++i) {
    nlohmann::json pt = {{"a", record.path[i].first},
                         {"n", record.path[i].second},
                         {"status", status_name(record.status[i])}};
    if (std::isfinite(record.errors[i]))
      pt["error"] = record.errors[i];
    else
      pt["error"] = nullptr;
    points.push_back(std::move(pt));
  }
  return {{"schema", kSchemaVersion},
          {"reference_k", pair(record.reference_k)},
          {"points", points}};
}

void write_file_atomic(const std::filesystem::path &path, const std::string &contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw IoError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out)
      throw IoError("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

} // namespace zs
