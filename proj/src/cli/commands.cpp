#include "toric/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "toric/error.hpp"
#include "toric/fan_io.hpp"
#include "toric/report.hpp"

namespace toric::cli {

namespace {

using report::Json;

// Raised when an emitted witness fails its exact re-check.
struct InvariantBreach : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CommandResult error_result(int code, std::string_view name, const std::string& message, std::string err = {}) {
  Json doc;
  doc["error"] = std::string(name);
  doc["message"] = message;
  return {code, report::emit(doc), std::move(err) + message + "\n"};
}

// Maps library failures onto exit statuses around a command body.
template <typename Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const InvariantBreach& e) {
    return error_result(3, "InternalInvariantBreach", e.what());
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::ParseError ? 2 : e.code() == ErrorCode::Internal ? 3 : 1;
    return error_result(code, to_string(e.code()), e.what());
  }
}

std::string warnings_text(const std::vector<std::string>& warnings) {
  std::string s;
  for (const auto& w : warnings) s += "warning: " + w + "\n";
  return s;
}

// Loads a fan and insists on every validation invariant.
Fan load_valid(const std::filesystem::path& path, std::string& err) {
  std::vector<std::string> warnings;
  Fan fan = load_fan(path, &warnings);
  err += warnings_text(warnings);
  require_valid(fan);
  return fan;
}

void recheck_witness(const Fan& fan, const DaggerReport& rep) {
  if (rep.holds) return;
  if (!rep.witness || !verify_relation(fan, *rep.witness) || rep.witness->indices.size() > fan.dim())
    throw InvariantBreach("dagger witness failed exact re-verification");
}

InvariantDivisor parse_divisor(const std::string& text, std::size_t expected) {
  auto from_json = [](const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("divisor") || !doc["divisor"].is_array())
      throw Error(ErrorCode::ParseError, "divisor document must be {\"divisor\": [...]}");
    InvariantDivisor d;
    for (const auto& x : doc["divisor"]) {
      if (x.is_string()) d.coefficients.push_back(parse_rat(x.get<std::string>()));
      else if (x.is_number_integer()) d.coefficients.emplace_back(std::to_string(x.get<long long>()));
      else throw Error(ErrorCode::ParseError, "divisor entries must be rational strings");
    }
    return d;
  };
  InvariantDivisor d;
  const auto first = text.find_first_not_of(' ');
  if (first != std::string::npos && text[first] == '{') {
    try {
      d = from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::ParseError, std::string("divisor JSON: ") + e.what());
    }
  } else if (std::filesystem::is_regular_file(text)) {
    std::ifstream in(text);
    try {
      d = from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::ParseError, std::string("divisor file: ") + e.what());
    }
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) d.coefficients.push_back(parse_rat(item));
  }
  if (d.coefficients.size() != expected)
    throw Error(ErrorCode::DimensionMismatch, "divisor has " + std::to_string(d.coefficients.size()) +
                                                  " coefficients, fan has " + std::to_string(expected) + " rays");
  return d;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Integer parse_integer(const std::string& s) {
  const Rat r = parse_rat(s);
  if (!is_integral(r)) throw Error(ErrorCode::InvalidArgument, "expected an integer, got '" + s + "'");
  return r.get_num();
}

}  // namespace

CommandResult cmd_validate(const std::filesystem::path& path) {
  return guarded([&]() -> CommandResult {
    std::vector<std::string> warnings;
    Fan fan = load_fan(path, &warnings);
    const auto rep = validate_fan(fan);
    Json doc;
    doc["valid"] = rep.valid;
    if (rep.valid) {
      doc["rays"] = fan.num_rays();
      doc["max_cones"] = fan.max_cones().size();
      doc["pairs_certified"] = rep.pairs_certified;
    } else {
      doc["error"] = std::string(to_string(*rep.error));
      if (!rep.cones.empty()) doc["cones"] = rep.cones;
      if (rep.ray) doc["ray"] = *rep.ray;
      doc["message"] = rep.message;
    }
    return {rep.valid ? 0 : 1, report::emit(doc),
            warnings_text(warnings) + (rep.valid ? std::string() : rep.message + "\n")};
  });
}

CommandResult cmd_classify(const std::filesystem::path& path, const ClassifyOptions& options) {
  return guarded([&]() -> CommandResult {
    using Clock = std::chrono::steady_clock;
    std::string err;
    const auto t0 = Clock::now();
    const Fan fan = load_valid(path, err);
    const auto t1 = Clock::now();

    Json doc;
    doc["fan"] = path.stem().string();
    doc["valid"] = true;
    const auto smooth = check_smoothness(fan);
    const bool complete = is_complete(fan);
    Json flags;
    flags["simplicial"] = true;
    flags["smooth"] = smooth.smooth;
    flags["complete"] = complete;
    flags["projective"] = complete ? Json(check_projectivity(fan).projective) : Json(nullptr);
    doc["flags"] = std::move(flags);
    doc["multiplicities"] = report::int_array(smooth.multiplicities);
    const auto t2 = Clock::now();
    if (complete) {
      const auto cg = class_group(fan);
      Json g;
      g["free_rank"] = cg.free_rank;
      g["torsion"] = report::int_array(cg.torsion);
      doc["class_group"] = std::move(g);
      const auto dagger = check_dagger(fan);
      recheck_witness(fan, dagger);
      doc["dagger"] = report::dagger(dagger);
      doc["seshadri"] = report::seshadri(dagger);
      doc["projective_space"] = is_projective_space_fan(fan);
      if (options.walls) {
        for (const auto& [wall, curve] : all_wall_curves(fan))
          if (!satisfies_class_relation(fan, curve)) throw InvariantBreach("wall class violates the class relation");
        doc["walls"] = report::wall_table(fan);
      }
    }
    const auto t3 = Clock::now();
    if (options.timings) {
      auto ms = [](auto a, auto b) { return std::chrono::duration<double, std::milli>(b - a).count(); };
      Json t;
      t["load_validate_ms"] = ms(t0, t1);
      t["classify_ms"] = ms(t1, t2);
      t["positivity_ms"] = ms(t2, t3);
      doc["timings"] = std::move(t);
    }
    return {0, report::emit(doc), err};
  });
}

CommandResult cmd_dagger(const std::filesystem::path& path) {
  return guarded([&]() -> CommandResult {
    std::string err;
    const Fan fan = load_valid(path, err);
    const auto rep = check_dagger(fan);
    recheck_witness(fan, rep);
    return {0, report::emit(report::dagger(rep)), err};
  });
}

CommandResult cmd_seshadri(const std::filesystem::path& path) {
  return guarded([&]() -> CommandResult {
    std::string err;
    const Fan fan = load_valid(path, err);
    const auto rep = check_dagger(fan);
    recheck_witness(fan, rep);
    return {0, report::emit(report::seshadri(rep)), err};
  });
}

CommandResult cmd_pcols(const std::filesystem::path& path) {
  return guarded([&]() -> CommandResult {
    std::string err;
    const Fan fan = load_valid(path, err);
    Json doc;
    doc["primitive_collections"] = primitive_collections(fan);
    const auto zero = find_zero_sum_primitive_collection(fan);
    doc["zero_sum"] = zero ? Json(*zero) : Json(nullptr);
    return {0, report::emit(doc), err};
  });
}

CommandResult cmd_nef(const std::filesystem::path& path, const std::string& divisor) {
  return guarded([&]() -> CommandResult {
    std::string err;
    const Fan fan = load_valid(path, err);
    const auto d = parse_divisor(divisor, fan.num_rays());
    const auto rep = is_nef(fan, d);
    Json doc;
    doc["nef"] = rep.nef;
    if (!rep.nef) {
      if (intersect(d, wall_curve_class(fan, *rep.witness)) != rep.value || rep.value >= 0)
        throw InvariantBreach("nef witness failed exact re-verification");
      doc["witness_wall"] = rep.witness->rays;
      doc["value"] = to_string(rep.value);
    }
    return {0, report::emit(doc), err};
  });
}

CommandResult cmd_walls(const std::filesystem::path& path) {
  return guarded([&]() -> CommandResult {
    std::string err;
    const Fan fan = load_valid(path, err);
    if (!is_complete(fan)) throw Error(ErrorCode::IncompleteFan, "wall curves are tabulated on complete fans");
    for (const auto& [wall, curve] : all_wall_curves(fan))
      if (!satisfies_class_relation(fan, curve)) throw InvariantBreach("wall class violates the class relation");
    Json doc;
    doc["walls"] = report::wall_table(fan);
    return {0, report::emit(doc), err};
  });
}

CommandResult cmd_gen(const std::string& family, const std::vector<std::string>& params,
                      const std::optional<std::filesystem::path>& out) {
  return guarded([&]() -> CommandResult {
    auto need = [&](std::size_t k) {
      if (params.size() != k)
        throw Error(ErrorCode::InvalidArgument,
                    "family '" + family + "' takes " + std::to_string(k) + " parameter(s)");
    };
    // Bad numbers are bad parameters (exit 1), unlike unreadable fan files.
    auto parse_param = [](const std::string& s) {
      try {
        return parse_integer(s);
      } catch (const Error& e) {
        throw Error(ErrorCode::InvalidArgument, e.what());
      }
    };
    std::string err;
    std::optional<Fan> fan;
    if (family == "pn") {
      need(1);
      const Integer n = parse_param(params[0]);
      if (n < 1 || n > 64) throw Error(ErrorCode::InvalidArgument, "pn needs 1 <= n <= 64");
      fan = projective_space(n.get_ui());
    } else if (family == "wps") {
      need(1);
      std::vector<Integer> q;
      for (const auto& s : split_commas(params[0])) q.push_back(parse_param(s));
      fan = weighted_projective_space(q);
    } else if (family == "hirzebruch") {
      need(1);
      const Integer r = parse_param(params[0]);
      if (!r.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "r out of range");
      fan = hirzebruch(r.get_si());
    } else if (family == "product") {
      need(2);
      fan = product(load_valid(params[0], err), load_valid(params[1], err));
    } else if (family == "star") {
      need(2);
      IntVec v;
      for (const auto& s : split_commas(params[1])) v.push_back(parse_param(s));
      fan = star_subdivision(load_valid(params[0], err), v);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "' (pn, wps, hirzebruch, product, star)");
    }
    if (!validate_fan(*fan).valid) throw Error(ErrorCode::Internal, "generated fan failed validation");
    if (out) {
      save_fan(*fan, *out);
      return {0, "", err + "wrote " + out->string() + "\n"};
    }
    return {0, report::emit(fan_to_json(*fan)), err};
  });
}

CommandResult cmd_corpus(const std::filesystem::path& dir, const CorpusOptions& options) {
  return guarded([&]() -> CommandResult {
    std::vector<std::filesystem::path> files;
    if (std::filesystem::is_directory(dir))
      for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    if (files.empty()) return error_result(1, "EmptyCorpus", "no fans found in " + dir.string());

    std::string err;
    Json errors = Json::array();
    std::vector<NamedFan> fans;
    for (const auto& f : files) {
      try {
        std::string warn;
        fans.push_back({f.filename().string(), load_valid(f, warn)});
        err += warn;
      } catch (const Error& e) {
        Json j;
        j["file"] = f.filename().string();
        j["error"] = std::string(to_string(e.code()));
        j["message"] = e.what();
        errors.push_back(std::move(j));
        err += f.filename().string() + ": " + e.what() + "\n";
      }
    }

    Json doc;
    bool ok = errors.empty();
    if (options.mode == CorpusMode::Theorem1) {
      doc["mode"] = "theorem1";
      Json results = Json::array();
      std::size_t applicable = 0, passed = 0;
      for (const auto& nf : fans) {
        const auto rep = verify_theorem1(nf.fan);
        if (rep.status != Theorem1Report::Status::NotApplicable) ++applicable;
        if (rep.status == Theorem1Report::Status::Pass) ++passed;
        if (rep.status == Theorem1Report::Status::Fail) ok = false;
        results.push_back(report::theorem1(nf.name, rep));
      }
      doc["fans"] = std::move(results);
      Json summary;
      summary["files"] = files.size();
      summary["applicable"] = applicable;
      summary["passed"] = passed;
      summary["failed"] = applicable - passed;
      summary["errors"] = errors.size();
      doc["summary"] = std::move(summary);
    } else {
      ScanOptions so;
      so.budget = options.budget;
      so.seed = options.seed;
      const auto rep = question4_scan(fans, so);
      doc = report::scan(rep, options.budget, options.seed);
      if (!rep.findings.empty()) err += "FINDING: smooth complete non-projective-space fan satisfying (dagger)\n";
    }
    doc["errors"] = std::move(errors);
    return {ok ? 0 : 1, report::emit(doc), err};
  });
}

CommandResult run(int argc, const char* const* argv) {
  CLI::App app{"Exact toric positivity analysis: fans, condition (dagger), Seshadri signs"};
  app.require_subcommand(1);

  std::string path;
  auto add_path_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("fan", path, "Fan JSON file")->required();
    return sub;
  };
  auto* validate = add_path_cmd("validate", "Check every fan invariant");
  ClassifyOptions classify_opts;
  auto* classify = add_path_cmd("classify", "Full analysis report");
  classify->add_flag("--walls", classify_opts.walls, "Include the wall intersection table");
  classify->add_flag("--timings", classify_opts.timings, "Include wall-clock timings (not deterministic)");
  auto* dagger = add_path_cmd("dagger", "Decide condition (dagger)");
  auto* seshadri = add_path_cmd("seshadri", "Sign of the tangent Seshadri constant at the identity");
  auto* pcols = add_path_cmd("pcols", "Primitive collections");
  auto* walls_cmd = add_path_cmd("walls", "Wall curve classes");
  std::string divisor;
  auto* nef = add_path_cmd("nef", "Nefness of an invariant divisor");
  nef->add_option("--divisor", divisor, "Comma-separated rationals, or {\"divisor\": [...]}")->required();

  std::string family;
  std::vector<std::string> params;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate a fan: pn <n> | wps <q,...> | hirzebruch <r> | product <a> <b> | star <fan> <v,...>");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("-o,--out", out_path, "Output file (stdout if omitted)");

  std::string dir;
  CorpusOptions corpus_opts;
  bool theorem1 = false, question4 = false;
  auto* corpus = app.add_subcommand("corpus", "Run the corpus harness");
  corpus->add_option("dir", dir, "Directory of fan JSON files")->required();
  auto* t1 = corpus->add_flag("--theorem1", theorem1, "Check the projective-space characterization");
  auto* q4 = corpus->add_flag("--question4", question4, "Search for smooth complete fans satisfying (dagger)");
  t1->excludes(q4);
  corpus->add_option("--budget", corpus_opts.budget, "Mutation candidates for --question4");
  corpus->add_option("--seed", corpus_opts.seed, "Seed for --question4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, out.str(), err.str()};
  }

  if (validate->parsed()) return cmd_validate(path);
  if (classify->parsed()) return cmd_classify(path, classify_opts);
  if (dagger->parsed()) return cmd_dagger(path);
  if (seshadri->parsed()) return cmd_seshadri(path);
  if (pcols->parsed()) return cmd_pcols(path);
  if (walls_cmd->parsed()) return cmd_walls(path);
  if (nef->parsed()) return cmd_nef(path, divisor);
  if (gen->parsed()) return cmd_gen(family, params, out_path.empty() ? std::nullopt : std::optional<std::filesystem::path>(out_path));
  if (corpus->parsed()) {
    if (theorem1 == question4) return error_result(2, "UsageError", "corpus needs exactly one of --theorem1, --question4");
    corpus_opts.mode = theorem1 ? CorpusMode::Theorem1 : CorpusMode::Question4;
    return cmd_corpus(dir, corpus_opts);
  }
  return error_result(2, "UsageError", "no command given");
}

}  // namespace toric::cli
