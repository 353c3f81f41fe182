// zsspec: Zakharov-Shabat spectra from the command line.
//
// Exit status: 0 success, 2 usage / invalid input, 3 numerical failure,
// 4 I/O failure.

#include "zsspec/errors.hpp"
#include "zsspec/fcm.hpp"
#include "zsspec/io.hpp"
#include "zsspec/nls.hpp"
#include "zsspec/potentials.hpp"
#include "zsspec/spectrum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using zs::cdouble;

enum ExitCode { kOk = 0, kUsage = 2, kNumeric = 3, kIo = 4 };

struct PotentialOptions {
  std::string name = "satsuma-yajima";
  double amplitude = 1.8;
  double epsilon = 0.1;
  std::string limit_neg = "0";
  std::string limit_pos = "0";
};

struct ClassifierFlags {
  zs::ClassifierOptions options;
  bool no_confirm = false;

  zs::ClassifierOptions resolved() const {
    zs::ClassifierOptions o = options;
    if (no_confirm)
      o.confirm = false;
    return o;
  }
};

struct OutputOptions {
  std::string path;
  std::string format = "json";
  bool no_meta = false;
};

cdouble parse_complex(const std::string &text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  double re = 0.0;
  double im = 0.0;
  if (!(in >> re))
    throw zs::InvalidArgument("cannot parse complex value '" + text + "' (use RE or RE,IM)");
  if (!(in >> im))
    im = 0.0;
  std::string rest;
  if (in >> rest)
    throw zs::InvalidArgument("cannot parse complex value '" + text + "' (use RE or RE,IM)");
  return {re, im};
}

zs::PotentialSpec make_potential(const PotentialOptions &p) {
  if (p.name == "satsuma-yajima")
    return zs::PotentialSpec::satsuma_yajima(p.amplitude);
  if (p.name == "semiclassical")
    return zs::PotentialSpec::semiclassical(p.epsilon);
  if (p.name == "solitonic")
    return zs::PotentialSpec::solitonic();
  if (p.name.rfind("file:", 0) == 0) {
    const std::string path = p.name.substr(5);
    return zs::PotentialSpec::tabulated(zs::read_potential_table(path),
                                        parse_complex(p.limit_neg),
                                        parse_complex(p.limit_pos), "file:" + path);
  }
  throw zs::InvalidArgument("unknown potential '" + p.name +
                            "' (satsuma-yajima, semiclassical, solitonic, file:PATH)");
}

void add_potential_flags(CLI::App *cmd, PotentialOptions &p) {
  cmd->add_option("--potential", p.name,
                  "satsuma-yajima | semiclassical | solitonic | file:PATH")
      ->capture_default_str();
  cmd->add_option("--amplitude", p.amplitude, "Satsuma-Yajima amplitude A")
      ->capture_default_str();
  cmd->add_option("--epsilon", p.epsilon, "semiclassical epsilon")->capture_default_str();
  cmd->add_option("--limit-neg", p.limit_neg, "file potentials: q at -inf as RE[,IM]")
      ->capture_default_str();
  cmd->add_option("--limit-pos", p.limit_pos, "file potentials: q at +inf as RE[,IM]")
      ->capture_default_str();
}

void add_classifier_flags(CLI::App *cmd, ClassifierFlags &c) {
  cmd->add_option("--tau-im", c.options.tau_im, "minimum |Im k| of a discrete eigenvalue")
      ->capture_default_str();
  cmd->add_option("--delta-match", c.options.delta_match,
                  "confirmation match radius at n + ceil(n/4)")
      ->capture_default_str();
  cmd->add_option("--merge-radius", c.options.merge_radius, "duplicate merge radius")
      ->capture_default_str();
  cmd->add_flag("--no-confirm", c.no_confirm, "skip the confirmation solve");
}

void add_output_flags(CLI::App *cmd, OutputOptions &o, const std::vector<std::string> &formats) {
  cmd->add_option("-o,--output", o.path, "output file (default: standard output)");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_flag("--no-meta", o.no_meta, "omit timing metadata (byte-identical reruns)");
}

void require(bool ok, const std::string &message) {
  if (!ok)
    throw zs::InvalidArgument(message);
}

void validate_classifier(const zs::ClassifierOptions &c) {
  require(c.tau_im >= 0.0 && std::isfinite(c.tau_im), "--tau-im must be >= 0");
  require(c.delta_match > 0.0 && std::isfinite(c.delta_match), "--delta-match must be > 0");
  require(c.merge_radius >= 0.0 && std::isfinite(c.merge_radius), "--merge-radius must be >= 0");
}

void validate_grid(int n, double a, int lambda_sign) {
  require(n >= 8, "--n must be >= 8");
  require(a > 0.0 && std::isfinite(a), "--a must be positive");
  require(lambda_sign == 1 || lambda_sign == -1, "--lambda must be 1 or -1");
}

class Timer {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add_meta(nlohmann::json &doc, const OutputOptions &o, double elapsed) {
  if (o.no_meta)
    return;
  doc["meta"] = {{"elapsed_s", elapsed},
                 {"timestamp", static_cast<long long>(std::time(nullptr))},
                 {"version", "0.1.0"}};
}

// Files go through temp + rename; without --output the payload goes to stdout
// and the summary line to stderr.
void emit(const OutputOptions &o, const std::string &payload, const std::string &summary) {
  if (o.path.empty() || o.path == "-") {
    std::cout << payload;
    std::cerr << summary << '\n';
  } else {
    zs::write_file_atomic(o.path, payload);
    std::cout << summary << '\n';
  }
}

std::string summary_line(std::size_t discrete, double max_residual, double elapsed) {
  std::ostringstream s;
  s << "discrete=" << discrete << " max_residual=" << zs::format_double(max_residual)
    << " elapsed=" << zs::format_double(std::round(elapsed * 1000.0) / 1000.0) << "s";
  return s.str();
}

double max_of(const std::vector<double> &v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

std::string render_spectrum(const zs::SpectrumResult &r, const OutputOptions &o, double elapsed) {
  if (o.format == "csv") {
    std::ostringstream s;
    zs::write_spectrum_csv(r, s);
    return s.str();
  }
  nlohmann::json doc = zs::spectrum_to_json(r);
  add_meta(doc, o, elapsed);
  return doc.dump() + "\n";
}

std::vector<std::pair<double, int>> parse_path(const std::string &text) {
  std::vector<std::pair<double, int>> path;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    require(colon != std::string::npos, "--path entries look like A:N, got '" + item + "'");
    double a = 0.0;
    int n = 0;
    try {
      a = std::stod(item.substr(0, colon));
      n = std::stoi(item.substr(colon + 1));
    } catch (const std::exception &) {
      throw zs::InvalidArgument("--path entries look like A:N, got '" + item + "'");
    }
    validate_grid(n, a, 1);
    path.emplace_back(a, n);
  }
  require(!path.empty(), "--path is empty");
  return path;
}

std::vector<int> parse_sizes(const std::string &text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    int v = 0;
    try {
      v = std::stoi(item);
    } catch (const std::exception &) {
      throw zs::InvalidArgument("--sizes must be a comma-separated list of integers");
    }
    require(v >= 8 && v % 2 == 0, "--sizes entries must be even and >= 8");
    sizes.push_back(v);
  }
  require(!sizes.empty(), "--sizes is empty");
  return sizes;
}

cdouble default_reference(const zs::PotentialSpec &spec, const std::optional<std::string> &given) {
  if (given)
    return parse_complex(*given);
  if (spec.kind() == zs::PotentialSpec::Kind::SatsumaYajima)
    return {0.0, spec.parameter() - 0.5};
  if (spec.kind() == zs::PotentialSpec::Kind::Solitonic)
    return {0.5, 0.5};
  throw zs::InvalidArgument("--reference is required for this potential");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Zakharov-Shabat eigenvalues by Chebyshev collocation with a tanh map"};
  app.require_subcommand(1);

  PotentialOptions pot;
  ClassifierFlags cls;
  OutputOptions out;
  int n = 200;
  std::optional<double> a;
  int lambda_sign = 1;

  auto *spectrum = app.add_subcommand("spectrum", "eigenvalues and discrete spectrum");
  add_potential_flags(spectrum, pot);
  spectrum->add_option("--n", n, "Chebyshev nodes")->capture_default_str();
  spectrum->add_option("--a", a, "map steepness (default per potential)");
  spectrum->add_option("--lambda", lambda_sign, "1 focusing, -1 defocusing")
      ->capture_default_str();
  add_classifier_flags(spectrum, cls);
  add_output_flags(spectrum, out, {"json", "csv"});
  std::string operator_csv;
  spectrum->add_option("--dump-operator", operator_csv, "write the assembled matrix as CSV");

  auto *efun = app.add_subcommand("eigenfunction", "eigenfunction at a discrete eigenvalue");
  add_potential_flags(efun, pot);
  efun->add_option("--n", n, "Chebyshev nodes")->capture_default_str();
  efun->add_option("--a", a, "map steepness (default per potential)");
  efun->add_option("--lambda", lambda_sign, "1 focusing, -1 defocusing")->capture_default_str();
  std::string k_text;
  efun->add_option("--k", k_text, "eigenvalue as RE,IM")->required();
  double k_tolerance = 1e-4;
  efun->add_option("--k-tolerance", k_tolerance, "max distance to a computed eigenvalue")
      ->capture_default_str();
  OutputOptions efun_out;
  efun_out.format = "csv";
  add_output_flags(efun, efun_out, {"csv"});

  auto *conv = app.add_subcommand("convergence", "error at a reference eigenvalue along an (a, n) path");
  add_potential_flags(conv, pot);
  int route = 1;
  std::string path_text;
  std::optional<std::string> reference;
  conv->add_option("--route", route, "built-in route 1, 2 or 3")->capture_default_str();
  conv->add_option("--path", path_text, "explicit path A:N,A:N,...");
  conv->add_option("--reference", reference, "tracked eigenvalue RE,IM");
  conv->add_option("--lambda", lambda_sign, "1 focusing, -1 defocusing")->capture_default_str();
  add_classifier_flags(conv, cls);
  OutputOptions conv_out;
  conv_out.format = "csv";
  add_output_flags(conv, conv_out, {"json", "csv"});

  auto *cmp = app.add_subcommand("compare-fcm", "Chebyshev vs Fourier collocation errors");
  add_potential_flags(cmp, pot);
  std::string sizes_text = "64,128,256";
  double half_width = 25.0;
  cmp->add_option("--sizes", sizes_text, "node counts n = m")->capture_default_str();
  cmp->add_option("--L", half_width, "Fourier half-width")->capture_default_str();
  cmp->add_option("--a", a, "map steepness (default per potential)");
  cmp->add_option("--reference", reference, "tracked eigenvalue RE,IM");
  add_classifier_flags(cmp, cls);
  OutputOptions cmp_out;
  cmp_out.format = "csv";
  add_output_flags(cmp, cmp_out, {"json", "csv"});

  auto *evo = app.add_subcommand("evolve", "split-step NLS evolution of a profile");
  add_potential_flags(evo, pot);
  zs::EvolutionSetup setup;
  evo->add_option("--L", setup.half_width, "half-width of the periodic box")->capture_default_str();
  evo->add_option("--m", setup.m, "grid nodes")->capture_default_str();
  evo->add_option("--t-end", setup.t_end, "final time")->capture_default_str();
  evo->add_option("--dt", setup.dt, "time step")->capture_default_str();
  evo->add_option("--stride", setup.frame_stride, "steps between saved frames")
      ->capture_default_str();
  OutputOptions evo_out;
  evo_out.format = "csv";
  add_output_flags(evo, evo_out, {"csv", "bin"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    validate_classifier(cls.options);
    const zs::PotentialSpec spec = make_potential(pot);
    const double steep = a.value_or(spec.default_map_steepness());
    Timer timer;

    if (*spectrum) {
      validate_grid(n, steep, lambda_sign);
      const zs::SpectrumResult r = zs::compute_spectrum(spec, n, steep, lambda_sign, cls.resolved());
      if (!operator_csv.empty()) {
        auto basis = std::make_shared<const zs::ChebyshevBasis>(zs::make_basis(n));
        const zs::DomainMap map(steep);
        const auto op = zs::assemble(basis, map, zs::sample(spec, *basis, map), lambda_sign);
        std::ostringstream s;
        zs::write_operator_csv(op, s);
        zs::write_file_atomic(operator_csv, s.str());
      }
      const double elapsed = timer.seconds();
      emit(out, render_spectrum(r, out, elapsed),
           summary_line(r.discrete_k.size(), max_of(r.residuals), elapsed));
    } else if (*efun) {
      validate_grid(n, steep, lambda_sign);
      const cdouble k = parse_complex(k_text);
      const zs::Eigenfunction ef = zs::eigenfunction(spec, n, steep, lambda_sign, k, k_tolerance);
      std::ostringstream s;
      zs::write_eigenfunction_csv(ef, s);
      emit(efun_out, s.str(), summary_line(1, ef.residual, timer.seconds()));
    } else if (*conv) {
      const auto path = path_text.empty() ? zs::default_route(route) : parse_path(path_text);
      require(lambda_sign == 1 || lambda_sign == -1, "--lambda must be 1 or -1");
      const cdouble ref = default_reference(spec, reference);
      const auto rec = zs::convergence_study(spec, path, ref, lambda_sign, cls.resolved());
      std::string payload;
      if (conv_out.format == "csv") {
        std::ostringstream s;
        zs::write_convergence_csv(rec, s);
        payload = s.str();
      } else {
        nlohmann::json doc = zs::convergence_to_json(rec);
        add_meta(doc, conv_out, timer.seconds());
        payload = doc.dump() + "\n";
      }
      const auto found = std::count(rec.status.begin(), rec.status.end(), zs::PointStatus::Found);
      std::ostringstream line;
      line << "points=" << rec.path.size() << " found=" << found
           << " min_error=" << zs::format_double(*std::min_element(rec.errors.begin(), rec.errors.end()))
           << " elapsed=" << zs::format_double(std::round(timer.seconds() * 1000.0) / 1000.0) << "s";
      emit(conv_out, payload, line.str());
    } else if (*cmp) {
      const auto sizes = parse_sizes(sizes_text);
      require(half_width > 0.0 && std::isfinite(half_width), "--L must be positive");
      require(steep > 0.0 && std::isfinite(steep), "--a must be positive");
      const cdouble ref = default_reference(spec, reference);
      auto nearest = [&](const zs::SpectrumResult &r) {
        double best = INFINITY;
        for (Eigen::Index i = 0; i < r.all_k.size(); ++i)
          best = std::min(best, std::abs(r.all_k[i] - ref));
        return best;
      };
      nlohmann::json rows = nlohmann::json::array();
      std::ostringstream csv;
      csv << "size,chebyshev_error,fcm_error\n";
      int wins = 0;
      for (const int size : sizes) {
        zs::ClassifierOptions c = cls.resolved();
        c.confirm = false;
        const double cheb = nearest(zs::compute_spectrum(spec, size, steep, 1, c));
        const double fcm = nearest(zs::fcm_spectrum(spec, half_width, size, 1, c));
        wins += cheb <= fcm;
        csv << size << ',' << zs::format_double(cheb) << ',' << zs::format_double(fcm) << '\n';
        rows.push_back({{"size", size}, {"chebyshev_error", cheb}, {"fcm_error", fcm}});
      }
      std::string payload = csv.str();
      if (cmp_out.format == "json") {
        nlohmann::json doc = {{"schema", zs::kSchemaVersion},
                              {"method", "compare-fcm"},
                              {"reference_k", {ref.real(), ref.imag()}},
                              {"a", steep},
                              {"L", half_width},
                              {"rows", rows}};
        add_meta(doc, cmp_out, timer.seconds());
        payload = doc.dump() + "\n";
      }
      std::ostringstream line;
      line << "sizes=" << sizes.size() << " chebyshev_better=" << wins << " elapsed="
           << zs::format_double(std::round(timer.seconds() * 1000.0) / 1000.0) << "s";
      emit(cmp_out, payload, line.str());
    } else if (*evo) {
      require(setup.m >= 4 && setup.m % 2 == 0, "--m must be even and >= 4");
      require(setup.half_width > 0 && setup.t_end > 0 && setup.dt > 0,
              "--L, --t-end and --dt must be positive");
      require(setup.frame_stride >= 1, "--stride must be >= 1");
      setup.initial = spec;
      const zs::EvolutionResult r = zs::evolve(setup);
      std::ostringstream s;
      if (evo_out.format == "bin")
        zs::write_frames_binary(r, s);
      else
        zs::write_frames_csv(r, s);
      const double drift =
          std::abs(r.mass_series.back() - r.mass_series.front()) / r.mass_series.front();
      std::ostringstream line;
      line << "frames=" << r.times.size() << " mass_drift=" << zs::format_double(drift)
           << " structures=" << zs::count_structures(r.field.row(r.field.rows() - 1).transpose())
           << " elapsed=" << zs::format_double(std::round(timer.seconds() * 1000.0) / 1000.0)
           << "s";
      emit(evo_out, s.str(), line.str());
    }
  } catch (const zs::InvalidArgument &e) {
    std::cerr << "error (usage): " << e.what() << '\n';
    return kUsage;
  } catch (const zs::IoError &e) {
    std::cerr << "error (io): " << e.what() << '\n';
    return kIo;
  } catch (const zs::NumericError &e) {
    std::cerr << "error (numeric): " << e.what() << '\n';
    return kNumeric;
  } catch (const std::exception &e) {
    std::cerr << "error (numeric): " << e.what() << '\n';
    return kNumeric;
  }
  return kOk;
}
