// antisub: verify the example catalog or a scenario file.
//
// Exit codes: 0 clean, 1 refuted or errored checks, 2 bad arguments,
// 3 unreadable or invalid scenario file.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "antisub/scenario_io.hpp"

namespace {

using namespace antisub;

enum Exit { kClean = 0, kRefuted = 1, kBadArgs = 2, kBadFile = 3 };

struct Output {
  std::string format = "text";
  bool timing = false;
};

int emit(const std::vector<VerificationReport>& reports, const Output& out, bool as_array, bool report_only) {
  if (out.format == "json") {
    io::Json doc;
    if (as_array) {
      doc = io::Json::array();
      for (const auto& r : reports) doc.push_back(io::to_json(r, out.timing));
    } else {
      doc = io::to_json(reports.front(), out.timing);
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::size_t dirty = 0;
    for (const auto& r : reports) {
      std::cout << io::to_text(r, out.timing);
      dirty += !r.clean();
    }
    if (as_array) std::cout << reports.size() << " scenarios, " << dirty << " with refuted or errored checks\n";
  }
  if (report_only) return kClean;
  for (const auto& r : reports)
    if (!r.clean()) return kRefuted;
  return kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify anti-invariant submersion examples with exact arithmetic"};
  app.require_subcommand(1);

  Output out;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* list_cmd = app.add_subcommand("list", "List catalog ids");
  add_format(list_cmd);

  EmbeddedOptions opt;
  std::string id, file;
  bool all = false, report_only = false;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a catalog entry, the whole catalog or a scenario file");
  verify_cmd->add_option("id", id, "Catalog id");
  auto* all_flag = verify_cmd->add_flag("--all", all, "Verify every catalog entry");
  auto* file_opt = verify_cmd->add_option("--file", file, "Scenario JSON file");
  add_format(verify_cmd);
  verify_cmd->add_option("--seed", opt.seed, "Seed for embedded sampling");
  verify_cmd->add_option("--samples", opt.samples, "Samples per embedded scenario")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol", opt.tol, "Tolerance for embedded checks")->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--report-only", report_only, "Always exit 0 after reporting");
  verify_cmd->add_flag("--timing", out.timing, "Include per-scenario timing");
  all_flag->excludes(file_opt);

  auto* export_cmd = app.add_subcommand("export", "Print a catalog entry as a scenario file");
  std::string export_id;
  export_cmd->add_option("id", export_id, "Catalog id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kClean : kBadArgs;
  }

  try {
    if (*list_cmd) {
      const auto ids = catalog::list();
      if (out.format == "json") {
        io::Json doc = io::Json::array();
        for (const auto& i : ids) doc.push_back({{"id", i}, {"title", catalog::get(i).title}});
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const auto& i : ids) std::cout << i << "  " << catalog::get(i).title << "\n";
      }
      return kClean;
    }

    if (*export_cmd) {
      std::cout << io::to_json(catalog::get(export_id).scenario).dump(2) << "\n";
      return kClean;
    }

    const int modes = int(all) + int(!file.empty()) + int(!id.empty());
    if (modes != 1) {
      std::cerr << "verify: give exactly one of <id>, --all, --file\n";
      return kBadArgs;
    }
    if (all) return emit(catalog::verify_all(opt), out, true, report_only);
    if (!file.empty()) {
      catalog::Scenario sc = [&] {
        try {
          return io::load_scenario(file);
        } catch (const Error& e) {
          std::cerr << file << ": " << e.kind() << ": " << e.what() << "\n";
          throw kBadFile;
        }
      }();
      return emit({catalog::verify(sc, opt)}, out, false, report_only);
    }
    return emit({catalog::verify(id, opt)}, out, false, report_only);
  } catch (Exit code) {
    return code;
  } catch (const UnknownId& e) {
    std::cerr << e.what() << "\n";
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  }
}
