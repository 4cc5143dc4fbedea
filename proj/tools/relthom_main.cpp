// Batch front-end for the singularity counting library: catalog lookups,
// profile-driven predictions, verification suites, and corpus dumps.
//
// Exit codes: 0 success / all checks pass, 1 verification or consistency
// failure, 2 malformed input (bad flags, unknown rows, schema violations).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "relthom/catalog.hpp"
#include "relthom/numlab/presets.hpp"
#include "relthom/predict.hpp"
#include "relthom/profile.hpp"
#include "relthom/verify.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_stream_or_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw relthom::input_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_stream_or_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw relthom::input_error("cannot write " + path);
  out << text;
}

int run_lookup(const std::string& type, int m, int n,
               const std::string& category, bool as_json) {
  relthom::SingTypeId id{relthom::parse_sing_name(type),
                         relthom::parse_category(category)};
  relthom::GradedPoly tp = relthom::lookup_tp(id, m, n);
  if (!as_json) {
    std::cout << tp.render() << "\n";
    return 0;
  }
  ordered_json j;
  j["type"] = relthom::render_sing_name(id.name);
  j["category"] = relthom::render_category(id.category);
  j["m"] = m;
  j["n"] = n;
  j["codimension"] = relthom::codimension(id, m, n);
  j["ring"] = tp.ring().name();
  j["class"] = tp.render();
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_predict(const std::string& profile_path) {
  ordered_json j = ordered_json::parse(read_stream_or_file(profile_path));
  relthom::PredictionRequest request = relthom::PredictionRequest::from_json(j);
  relthom::Prediction prediction = relthom::predict_count(request);
  std::cout << prediction.to_json().dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed,
               const std::string& presets_path, bool as_json) {
  relthom::numlab::PresetCorpus corpus;
  if (presets_path.empty()) {
    corpus = relthom::numlab::built_in_presets();
  } else {
    corpus = relthom::numlab::corpus_from_json(
        ordered_json::parse(read_stream_or_file(presets_path)));
  }

  std::vector<relthom::SuiteReport> reports;
  if (suite.empty()) {
    reports = relthom::run_all_suites(seed, corpus);
  } else {
    reports.push_back(relthom::run_suite(suite, seed, corpus));
  }

  if (as_json) {
    ordered_json out = ordered_json::array();
    for (const auto& r : reports) out.push_back(r.to_json());
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      for (const auto& c : r.cases) {
        std::cout << (c.passed ? "[ ok ] " : "[FAIL] ") << r.suite << "/"
                  << c.name << ": " << c.detail << "\n";
      }
    }
  }

  std::size_t cases = 0, passed = 0;
  bool all = true;
  for (const auto& r : reports) {
    cases += r.cases.size();
    for (const auto& c : r.cases) passed += c.passed ? 1 : 0;
    all = all && r.passed();
  }
  if (!as_json) {
    std::cout << reports.size() << " suite(s), " << passed << "/" << cases
              << " cases passed, seed " << seed << "\n";
  }
  return all ? 0 : 1;
}

int run_dump_catalog(const std::string& out_path) {
  ordered_json absolute = ordered_json::array();
  for (const relthom::ThomRow& row : relthom::thom_rows()) {
    ordered_json e;
    e["key"] = row.key;
    e["type"] = relthom::render_sing_name(row.id.name);
    e["category"] = relthom::render_category(row.id.category);
    e["dims"] = row.dims_text;
    e["pattern"] = row.pattern;
    e["ring"] = row.default_ring.name();
    ordered_json sample;
    sample["m"] = row.sample_m;
    sample["n"] = row.sample_n;
    sample["codimension"] =
        relthom::codimension(row.id, row.sample_m, row.sample_n);
    sample["class"] =
        row.build(row.sample_m, row.sample_n, row.default_ring, std::nullopt)
            .render();
    e["sample"] = sample;
    absolute.push_back(e);
  }

  ordered_json corrections = ordered_json::array();
  for (const relthom::CorrectionRow& row : relthom::correction_rows()) {
    ordered_json e;
    e["case"] = row.case_tag;
    e["type"] = relthom::render_sing_name(row.id.name);
    e["category"] = relthom::render_category(row.id.category);
    e["dims"] = row.dims_text;
    e["boundary"] = relthom::render_boundary_predicate(row.boundary);
    e["ring"] = row.ring.name();
    e["formula"] = row.formula_text;
    corrections.push_back(e);
  }

  ordered_json j;
  j["absolute"] = absolute;
  j["corrections"] = corrections;
  write_stream_or_file(out_path, j.dump(2) + "\n");
  return 0;
}

int run_dump_presets(const std::string& out_path) {
  ordered_json j =
      relthom::numlab::corpus_to_json(relthom::numlab::built_in_presets());
  write_stream_or_file(out_path, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative singularity counting: catalog, predictions, checks"};
  app.require_subcommand(1);
  int rc = 0;

  auto* lookup = app.add_subcommand(
      "lookup", "Render the universal class of a singularity type");
  std::string lk_type, lk_category;
  int lk_m = 0, lk_n = 0;
  bool lk_json = false;
  lookup->add_option("--type", lk_type, "A1, A2, Sigma2 or Sigma_FR")
      ->required();
  lookup->add_option("--m", lk_m, "source dimension")->required();
  lookup->add_option("--n", lk_n, "target dimension")->required();
  lookup
      ->add_option("--category", lk_category,
                   "unoriented, oriented, complex or function")
      ->required();
  lookup->add_flag("--json", lk_json, "emit a JSON record with codimension");
  lookup->callback(
      [&] { rc = run_lookup(lk_type, lk_m, lk_n, lk_category, lk_json); });

  auto* predict = app.add_subcommand(
      "predict", "Evaluate a prediction request from a profile file");
  std::string pd_profile = "-";
  predict->add_option("profile", pd_profile,
                      "request JSON path, or - for standard input");
  predict->callback([&] { rc = run_predict(pd_profile); });

  auto* verify =
      app.add_subcommand("verify", "Run verification suites and report");
  std::string vf_suite, vf_presets;
  std::uint64_t vf_seed = 42;
  bool vf_json = false;
  verify->add_option("--suite", vf_suite,
                     "one suite name; all suites when omitted");
  verify->add_option("--seed", vf_seed, "seed for randomized cases");
  verify->add_option("--presets", vf_presets,
                     "preset corpus JSON; built-in corpus when omitted");
  verify->add_flag("--json", vf_json, "emit suite reports as JSON");
  verify->callback(
      [&] { rc = run_verify(vf_suite, vf_seed, vf_presets, vf_json); });

  auto* dump_catalog = app.add_subcommand(
      "dump-catalog", "Emit the full class catalog as JSON");
  std::string dc_out = "-";
  dump_catalog->add_option("--out", dc_out, "output path, - for stdout");
  dump_catalog->callback([&] { rc = run_dump_catalog(dc_out); });

  auto* dump_presets = app.add_subcommand(
      "dump-presets", "Emit the built-in preset corpus as JSON");
  std::string dp_out = "-";
  dump_presets->add_option("--out", dp_out, "output path, - for stdout");
  dump_presets->callback([&] { rc = run_dump_presets(dp_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const relthom::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const relthom::consistency_error& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
