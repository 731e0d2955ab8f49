#include "hesse/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "hesse/hesse.hpp"
#include "hesse/io.hpp"
#include "hesse/oracle.hpp"
#include "hesse/random.hpp"

namespace hesse::cli {
namespace {

using io::json;

enum class Format { human, json };

struct Common {
  std::string format = "human";
  Format fmt() const { return format == "json" ? Format::json : Format::human; }
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Body of a run report is deterministic; the header carries wall-clock data.
class RunReport {
 public:
  RunReport(std::string command, const std::string& digest_input)
      : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {
    body_["command"] = command_;
    body_["input_digest"] = sha256_hex(digest_input);
  }

  json& body() { return body_; }

  void emit(std::ostream& out, Format fmt, const std::vector<std::string>& human_lines) const {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    if (fmt == Format::json) {
      json doc{{"header",
                {{"command", command_},
                 {"timestamp", utc_timestamp()},
                 {"wall_time_ms", elapsed.count()}}},
               {"body", body_}};
      out << doc.dump(2) << "\n";
      return;
    }
    for (const auto& line : human_lines) out << line << "\n";
    out << "wall time: " << elapsed.count() << " ms\n";
  }

 private:
  std::string command_;
  std::chrono::steady_clock::time_point start_;
  json body_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_scalars(const json& arr) {
  std::string s = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ", ";
    s += arr[i].get<std::string>();
  }
  return s + ")";
}

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string config_path;
};

int cmd_check(const CheckArgs& args, const Common& common, std::ostream& out) {
  const auto config = io::config_from_json(io::read_document(args.config_path));
  const HesseReport report = hesse_verdict(config);
  const json j = io::to_json(report);
  if (common.fmt() == Format::json) {
    out << j.dump(2) << "\n";
  } else {
    static constexpr std::array<const char*, 3> labels{"(ab|cd)", "(ac|bd)", "(ad|bc)"};
    for (std::size_t i = 0; i < 3; ++i) {
      out << labels[i] << "  h" << i + 1 << " = " << report.h[i].to_string()
          << "  conjugate: " << yes_no(report.conjugate[i]) << "\n";
    }
    if (!j["radical_sides"].empty()) {
      out << "sides in the radical:";
      for (const auto& s : j["radical_sides"]) out << " " << s.get<std::string>();
      out << "\n";
    }
    out << "verdict: " << to_string(report.verdict) << "\n";
  }
  return report.verdict == Verdict::violation ? kTripwire : kOk;
}

// ---------------------------------------------------------------- fuzz

struct FuzzArgs {
  std::string field;
  std::size_t dim = 2;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool details = false;
};

struct TrialOutcome {
  std::uint64_t seed = 0;
  std::optional<Verdict> verdict;  // empty when the sampler gave up
  std::string error;
};

int cmd_fuzz(const FuzzArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
  const Field field = Field::parse(args.field);
  if (args.trials < 1) throw ShapeError("--trials must be >= 1");
  if (args.dim < 2) throw ShapeError("--dim must be >= 2");

  std::ostringstream digest;
  digest << "fuzz field=" << field.name() << " dim=" << args.dim << " trials=" << args.trials
         << " seed=" << args.seed;
  RunReport run("fuzz", digest.str());

  std::vector<TrialOutcome> outcomes(args.trials);
  const auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t t = begin; t < args.trials; t += stride) {
      auto& o = outcomes[t];
      o.seed = derive_seed(args.seed, t);
      try {
        o.verdict = hesse_verdict(sample_hesse_config(field, args.dim, o.seed)).verdict;
      } catch (const RetryBudgetExceeded& e) {
        o.error = e.what();
      }
    }
  };
  const unsigned threads =
      std::min<unsigned>(resolve_threads(args.threads), static_cast<unsigned>(args.trials));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t, threads);
    work(0, threads);
  }

  std::size_t confirmed = 0, not_applicable = 0, violations = 0, retry_failures = 0;
  json failures = json::array(), per_trial = json::array();
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    const auto& o = outcomes[t];
    const std::string verdict = o.verdict ? to_string(*o.verdict) : "retry-budget-exceeded";
    if (!o.verdict) {
      ++retry_failures;
    } else if (*o.verdict == Verdict::hesse_confirmed) {
      ++confirmed;
    } else if (*o.verdict == Verdict::violation) {
      ++violations;
    } else {
      ++not_applicable;
    }
    if (!o.verdict || *o.verdict != Verdict::hesse_confirmed) {
      failures.push_back({{"trial", t}, {"seed", o.seed}, {"verdict", verdict}});
    }
    if (args.details) per_trial.push_back({{"trial", t}, {"seed", o.seed}, {"verdict", verdict}});
  }

  auto& body = run.body();
  body["field"] = field.name();
  body["dim"] = args.dim;
  body["trials"] = args.trials;
  body["seed"] = args.seed;
  body["confirmed"] = confirmed;
  body["not_applicable"] = not_applicable;
  body["violations"] = violations;
  body["retry_failures"] = retry_failures;
  body["failures"] = failures;
  if (args.details) body["per_trial"] = per_trial;

  std::vector<std::string> lines{
      "fuzz " + field.name() + " dim " + std::to_string(args.dim) + " seed " +
          std::to_string(args.seed),
      "confirmed: " + std::to_string(confirmed) + "/" + std::to_string(args.trials),
      "violations: " + std::to_string(violations),
      "retry failures: " + std::to_string(retry_failures)};
  for (const auto& f : failures) {
    lines.push_back("  trial " + f["trial"].dump() + " seed " + f["seed"].dump() + ": " +
                    f["verdict"].get<std::string>());
  }
  run.emit(out, common.fmt(), lines);

  if (violations > 0 || not_applicable > 0) return kTripwire;
  if (retry_failures > 0) {
    for (const auto& o : outcomes) {
      if (!o.verdict) {
        err << "RetryBudgetExceeded: " << o.error << "\n";
        break;
      }
    }
    return kInputError;
  }
  return kOk;
}

// ---------------------------------------------------------------- scan

std::uint64_t parse_seed_suffix(const std::string& token, std::size_t prefix_len) {
  const std::string rest = token.substr(prefix_len);
  if (rest.empty()) return 0;
  if (rest.rfind(":seed=", 0) != 0) {
    throw ParseError("form token '" + token + "': expected ':seed=N'");
  }
  try {
    std::size_t used = 0;
    const auto v = std::stoull(rest.substr(6), &used);
    if (used != rest.size() - 6) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("form token '" + token + "': invalid seed");
  }
}

BilinearForm form_from_token(const Field& field, std::size_t size, const std::string& token) {
  if (token == "identity") return BilinearForm::identity(field, size);
  if (token == "zero") return BilinearForm::zero(field, size);
  if (token.rfind("random", 0) == 0) {
    Rng rng(parse_seed_suffix(token, 6));
    return sample_nondegenerate_form(field, size, rng);
  }
  if (token.rfind("degenerate", 0) == 0) {
    Rng rng(parse_seed_suffix(token, 10));
    return sample_degenerate_form(field, size, rng);
  }
  throw ParseError("unknown form '" + token +
                   "' (expected identity, zero, random[:seed=N] or degenerate[:seed=N])");
}

struct ScanArgs {
  std::string field;
  std::size_t dim = 2;
  std::vector<std::string> forms{"identity"};
  unsigned threads = 0;
};

int cmd_scan(const ScanArgs& args, const Common& common, std::ostream& out) {
  const Field field = Field::parse(args.field);
  if (!field.is_finite()) throw UnsupportedFieldError("scan needs --field gf:p");
  std::vector<BilinearForm> forms;
  for (const auto& t : args.forms) forms.push_back(form_from_token(field, args.dim + 1, t));

  std::string digest = "scan field=" + field.name() + " dim=" + std::to_string(args.dim) + " forms=";
  for (const auto& t : args.forms) digest += t + ",";
  RunReport run("scan", digest);

  const auto report =
      oracle::lemma_agreement_scan(field, args.dim, forms, {oracle::kDefaultScanBudget,
                                                            resolve_threads(args.threads)});
  auto& body = run.body();
  const json scan_json = io::to_json(report);
  for (const auto& [k, v] : scan_json.items()) body[k] = v;
  body["form_names"] = args.forms;

  std::vector<std::string> lines{
      "scan P^" + std::to_string(args.dim) + "(" + field.name() + ") with " +
          std::to_string(forms.size()) + " form(s)",
      "tuples scanned: " + std::to_string(report.tuples_scanned),
      "conjugate instances: " + std::to_string(report.conjugate_count),
      "mismatches: " + std::to_string(report.mismatches.size())};
  run.emit(out, common.fmt(), lines);
  return report.mismatches.empty() ? kOk : kTripwire;
}

// ---------------------------------------------------------------- degeneracy

struct DegeneracyArgs {
  std::string form_file;
  std::string exhaustive;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

struct DegeneracyCheck {
  bool by_determinant;
  bool by_quadruples;
  std::size_t quadruples;
};

DegeneracyCheck check_degeneracy(const BilinearForm& form, std::size_t samples,
                                 std::uint64_t seed) {
  DegeneracyTestOptions opts;
  opts.mode = form.field().is_finite() ? DegeneracyMode::exhaustive : DegeneracyMode::sampled;
  opts.samples = samples;
  opts.seed = seed;
  const auto r = dim2_hesse_degeneracy_test(form, opts);
  return {is_degenerate(form), r.degenerate, r.quadruples_checked};
}

int cmd_degeneracy(const DegeneracyArgs& args, const Common& common, std::ostream& out) {
  if (args.form_file.empty() == args.exhaustive.empty()) {
    throw ParseError("degeneracy needs exactly one of --form-file or --exhaustive");
  }
  if (!args.form_file.empty()) {
    const std::string text = read_file(args.form_file);
    const auto doc = io::parse_document(text, args.form_file);
    const Field field = io::field_from_json(doc, "form-file");
    const auto form_it = doc.find("form");
    if (form_it == doc.end()) throw ParseError("form-file: missing member \"form\"");
    const auto form = io::form_from_json(field, *form_it, "form-file.form");
    if (form.size() != 2) {
      throw ShapeError("form-file.form: the degeneracy criterion needs a 2x2 form");
    }
    RunReport run("degeneracy", text);
    const auto c = check_degeneracy(form, args.samples, args.seed);
    auto& body = run.body();
    body["field"] = field.name();
    body["form"] = io::to_json(form);
    body["determinant"] = form_determinant(form).to_string();
    body["degenerate_by_determinant"] = c.by_determinant;
    body["degenerate_by_quadruples"] = c.by_quadruples;
    body["quadruple_mode"] = field.is_finite() ? "exhaustive" : "sampled";
    body["quadruples_checked"] = c.quadruples;
    if (!field.is_finite()) body["seed"] = args.seed;
    body["agree"] = c.by_determinant == c.by_quadruples;
    run.emit(out, common.fmt(),
             {"determinant: " + form_determinant(form).to_string(),
              std::string("degenerate by determinant: ") + yes_no(c.by_determinant),
              std::string("degenerate by quadruple identity: ") + yes_no(c.by_quadruples) +
                  " (" + std::to_string(c.quadruples) + " quadruples)",
              std::string("criteria agree: ") + yes_no(c.by_determinant == c.by_quadruples)});
    return c.by_determinant == c.by_quadruples ? kOk : kTripwire;
  }

  const Field field = Field::parse(args.exhaustive);
  if (!field.is_finite()) throw UnsupportedModeError("--exhaustive needs gf:p");
  RunReport run("degeneracy", "degeneracy exhaustive " + field.name());
  const auto p = static_cast<long long>(field.modulus());
  std::size_t forms = 0, agreements = 0, degenerate = 0;
  json disagreements = json::array();
  for (long long x = 0; x < p; ++x) {
    for (long long y = 0; y < p; ++y) {
      for (long long z = 0; z < p; ++z) {
        const Scalar sx = Scalar::from_int(field, x), sy = Scalar::from_int(field, y),
                     sz = Scalar::from_int(field, z);
        const BilinearForm form(Matrix::from_rows({{sx, sy}, {sy, sz}}));
        const auto c = check_degeneracy(form, args.samples, args.seed);
        ++forms;
        degenerate += c.by_determinant;
        if (c.by_determinant == c.by_quadruples) {
          ++agreements;
        } else {
          disagreements.push_back(io::to_json(form));
        }
      }
    }
  }
  auto& body = run.body();
  body["field"] = field.name();
  body["forms"] = forms;
  body["agreements"] = agreements;
  body["degenerate_forms"] = degenerate;
  body["disagreements"] = disagreements;
  run.emit(out, common.fmt(),
           {"exhaustive 2x2 symmetric forms over " + field.name(),
            "forms: " + std::to_string(forms), "agreements: " + std::to_string(agreements),
            "degenerate forms: " + std::to_string(degenerate)});
  return agreements == forms ? kOk : kTripwire;
}

// ---------------------------------------------------------------- cross-ratio

struct CrossRatioArgs {
  std::string points_file;
  std::string exhaustive;
};

int cmd_cross_ratio(const CrossRatioArgs& args, const Common& common, std::ostream& out) {
  if (args.points_file.empty() == args.exhaustive.empty()) {
    throw ParseError("cross-ratio needs exactly one of --points or --exhaustive");
  }
  if (!args.points_file.empty()) {
    const std::string text = read_file(args.points_file);
    const auto doc = io::parse_document(text, args.points_file);
    const Field field = io::field_from_json(doc, "points-file");
    const auto pts_it = doc.find("points");
    if (pts_it == doc.end() || !pts_it->is_array() || pts_it->size() != 4) {
      throw ParseError("points-file.points: expected exactly 4 points");
    }
    std::vector<ProjectivePoint> pts;
    for (std::size_t i = 0; i < 4; ++i) {
      pts.push_back(io::point_from_json(field, (*pts_it)[i],
                                        "points-file.points[" + std::to_string(i) + "]"));
    }
    RunReport run("cross-ratio", text);
    const auto cr = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
    run.body()["field"] = field.name();
    run.body()["cross_ratio"] = cr.to_string();
    run.emit(out, common.fmt(), {"cross-ratio: " + cr.to_string()});
    return kOk;
  }

  const Field field = Field::parse(args.exhaustive);
  if (!field.is_finite()) throw UnsupportedModeError("--exhaustive needs gf:p");
  RunReport run("cross-ratio", "cross-ratio exhaustive " + field.name());
  const auto line = enumerate_projective_space(field, 1);
  const std::size_t m = line.size();
  std::size_t quadruples = 0, forbidden = 0;
  std::map<std::string, std::size_t> histogram;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t d = 0; d < m; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          const auto cr = cross_ratio(line[a], line[b], line[c], line[d]);
          ++quadruples;
          ++histogram[cr.to_string()];
          forbidden += cr.is_infinite() || cr.value().is_zero() || cr.value().is_one();
        }
      }
    }
  }
  auto& body = run.body();
  body["field"] = field.name();
  body["quadruples"] = quadruples;
  body["forbidden_values"] = forbidden;
  body["value_counts"] = histogram;
  run.emit(out, common.fmt(),
           {"exhaustive cross-ratios on P^1(" + field.name() + ")",
            "quadruples: " + std::to_string(quadruples),
            "values in {0, 1, Infinity}: " + std::to_string(forbidden)});
  return forbidden == 0 ? kOk : kTripwire;
}

// ---------------------------------------------------------------- demo

struct DemoArgs {
  std::vector<std::string> triangle;
  std::string radius_sq = "1";
  bool allow_degenerate = false;
};

int cmd_demo(const DemoArgs& args, const Common& common, std::ostream& out) {
  const Field q = Field::rationals();
  if (args.triangle.size() != 6) {
    throw ParseError("--triangle expects six scalars x1,y1,x2,y2,x3,y3");
  }
  std::array<AffinePoint, 3> tri{
      AffinePoint{Scalar::parse(q, args.triangle[0]), Scalar::parse(q, args.triangle[1])},
      AffinePoint{Scalar::parse(q, args.triangle[2]), Scalar::parse(q, args.triangle[3])},
      AffinePoint{Scalar::parse(q, args.triangle[4]), Scalar::parse(q, args.triangle[5])}};
  const Scalar r2 = Scalar::parse(q, args.radius_sq);

  std::string digest = "demo triangle=";
  for (const auto& s : args.triangle) digest += s + ",";
  digest += " radius_sq=" + r2.to_string();
  RunReport run("demo", digest);

  const auto demo = altitude_demo(tri, r2, {args.allow_degenerate});
  const json h = json::array({demo.orthocenter.x.to_string(), demo.orthocenter.y.to_string()});
  auto& body = run.body();
  body["orthocenter"] = h;
  body["radius_sq"] = r2.to_string();
  body["config"] = io::to_json(demo.config);
  body["report"] = io::to_json(demo.report);
  body["altitudes_concurrent"] = demo.concurrent;
  body["ah_perpendicular_bc"] = demo.ah_perpendicular_bc;
  body["third_pair_matches_perpendicularity"] = demo.third_pair_matches_perpendicularity;

  std::vector<std::string> lines{"orthocenter H = " + join_scalars(h),
                                 "circle radius^2 = " + r2.to_string()};
  static constexpr std::array<const char*, 3> labels{"(AB|CH)", "(AC|BH)", "(AH|BC)"};
  for (std::size_t i = 0; i < 3; ++i) {
    lines.push_back(std::string(labels[i]) + " conjugate: " + yes_no(demo.report.conjugate[i]));
  }
  lines.push_back(std::string("AH perpendicular to BC: ") + yes_no(demo.ah_perpendicular_bc));
  lines.push_back(std::string("altitudes concurrent at H: ") + yes_no(demo.concurrent));
  lines.push_back("verdict: " + to_string(demo.report.verdict));
  run.emit(out, common.fmt(), lines);

  const bool ok = demo.report.verdict == Verdict::hesse_confirmed && demo.concurrent &&
                  demo.third_pair_matches_perpendicularity;
  return ok ? kOk : kTripwire;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Hesse's theorem on quadrangles and quadrics", "hesse"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate a quadrangle configuration file");
  check_cmd->add_option("config", check.config_path, "Configuration JSON file")->required();

  FuzzArgs fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Sample hypothesis-satisfying configurations");
  fuzz_cmd->add_option("--field", fuzz.field, "rationals | gf:p")->required();
  fuzz_cmd->add_option("--dim", fuzz.dim, "Projective dimension (>= 2)")->capture_default_str();
  fuzz_cmd->add_option("--trials", fuzz.trials)->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz.seed)->capture_default_str();
  fuzz_cmd->add_option("--threads", fuzz.threads, "0 = hardware concurrency");
  fuzz_cmd->add_flag("--details", fuzz.details, "Include the verdict of every trial");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Brute-force check of the conjugacy criterion");
  scan_cmd->add_option("--field", scan.field, "gf:p")->required();
  scan_cmd->add_option("--dim", scan.dim)->capture_default_str();
  scan_cmd->add_option("--forms", scan.forms,
                       "identity, zero, random[:seed=N], degenerate[:seed=N]")
      ->delimiter(',')
      ->capture_default_str();
  scan_cmd->add_option("--threads", scan.threads, "0 = hardware concurrency");

  DegeneracyArgs degeneracy;
  auto* deg_cmd =
      app.add_subcommand("degeneracy", "Compare determinant and quadruple degeneracy criteria");
  deg_cmd->add_option("--form-file", degeneracy.form_file, "JSON with \"field\" and a 2x2 \"form\"");
  deg_cmd->add_option("--exhaustive", degeneracy.exhaustive, "gf:p: every symmetric 2x2 form");
  deg_cmd->add_option("--samples", degeneracy.samples, "Quadruples for sampled mode over Q")
      ->capture_default_str();
  deg_cmd->add_option("--seed", degeneracy.seed)->capture_default_str();

  CrossRatioArgs cr;
  auto* cr_cmd = app.add_subcommand("cross-ratio", "Cross-ratio of four points on a line");
  cr_cmd->add_option("--points", cr.points_file, "JSON with \"field\" and 4 \"points\"");
  cr_cmd->add_option("--exhaustive", cr.exhaustive, "gf:p: every ordered quadruple on P^1");

  DemoArgs demo;
  auto* demo_cmd = app.add_subcommand("demo", "Triangle altitudes as a special case");
  demo_cmd->add_option("--triangle", demo.triangle, "x1,y1,x2,y2,x3,y3")
      ->delimiter(',')
      ->expected(6)
      ->required();
  demo_cmd->add_option("--radius-sq", demo.radius_sq, "Squared circle radius")
      ->capture_default_str();
  demo_cmd->add_flag("--allow-degenerate", demo.allow_degenerate, "Permit radius^2 = 0");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check_cmd) return cmd_check(check, common, out);
    if (*fuzz_cmd) return cmd_fuzz(fuzz, common, out, err);
    if (*scan_cmd) return cmd_scan(scan, common, out);
    if (*deg_cmd) return cmd_degeneracy(degeneracy, common, out);
    if (*cr_cmd) return cmd_cross_ratio(cr, common, out);
    if (*demo_cmd) return cmd_demo(demo, common, out);
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const io::json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace hesse::cli
