#include "CLI11.hpp"
#include "planecurve/curvefile.hpp"
#include "planecurve/report.hpp"

#include <fstream>
#include <iostream>

using namespace planecurve;

namespace {

struct AnalysisConfig {
  std::string inputPath;
  std::vector<std::string> criteria;
  std::uint64_t seed = 1;
  bool dumpResolution = false;
  std::string format = "text";
  std::string fixPartition;
};

const std::vector<std::string> kKnown{"3d-ea", "3d-es", "4d-ea", "4d-es", "surface-ea", "surface-es", "mixed"};

std::vector<std::string> split_criteria(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (auto& r : raw) {
    std::stringstream ss(r);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = detail::trim(item);
      if (item.empty()) continue;
      if (item == "all") {
        for (auto& k : kKnown) out.push_back(k);
        continue;
      }
      if (std::find(kKnown.begin(), kKnown.end(), item) == kKnown.end())
        throw std::invalid_argument("unknown criterion '" + item + "'");
      if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
    }
  }
  return out;
}

SchemeKind kind_of(const std::string& c) { return c.ends_with("-es") ? SchemeKind::es : SchemeKind::ea; }

void emit_error(const AnalysisConfig& cfg, const std::string& msg) {
  if (cfg.format == "json") {
    json j{{"input", cfg.inputPath}, {"error", msg}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "error: " << msg << "\n";
  }
  std::cerr << "planecurve: " << msg << "\n";
}

int run(const AnalysisConfig& cfg) {
  CurveFile cf;
  try {
    cf = read_curve_file(cfg.inputPath);
  } catch (const ParseError& e) {
    emit_error(cfg, cfg.inputPath + ": " + e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(cfg, cfg.inputPath + ": " + e.what());
    return 2;
  }
  try {
    std::vector<std::string> crit = split_criteria(cfg.criteria);
    if (crit.empty()) {
      if (cf.curve) crit = {"3d-ea", "3d-es", "4d-ea", "4d-es"};
      if (cf.surface) {
        crit.push_back("surface-ea");
        crit.push_back("surface-es");
      }
      if (cf.curve && (cf.auxiliary || cf.auxiliaryPolar) && (cf.partition || !cfg.fixPartition.empty())) crit.push_back("mixed");
    }
    if (crit.empty()) throw std::invalid_argument("no criterion requested");

    std::optional<ProjectiveCurve> C;
    if (cf.curve) C = analyze_curve(*cf.curve, cf.points);
    std::optional<PolarCurve> polar;
    auto get_polar = [&]() -> const PolarCurve& {
      if (!polar) polar = generic_polar(*C, cfg.seed);
      return *polar;
    };

    std::vector<CriterionReport> reports;
    for (auto& c : crit) {
      SchemeKind k = kind_of(c);
      if (c.starts_with("surface")) {
        if (C) {
          std::vector<int> degs;
          for (auto& comp : C->components) degs.push_back(comp.degree);
          SurfaceData S = cf.surface ? *cf.surface : SurfaceData::plane(degs);
          reports.push_back(criterion_surface(*C, S, k));
        } else {
          if (!cf.surface) throw std::invalid_argument("surface criterion needs a 'surface:' block");
          reports.push_back(criterion_surface(cf.localPoints, *cf.surface, k));
        }
        continue;
      }
      if (!C) throw std::invalid_argument("criterion " + c + " needs a 'curve:' header");
      if (c.starts_with("3d")) {
        reports.push_back(criterion_3d(*C, k));
      } else if (c.starts_with("4d")) {
        reports.push_back(criterion_4d(*C, k, get_polar()));
      } else {
        Partition P;
        if (!cfg.fixPartition.empty()) {
          std::ifstream in(cfg.fixPartition);
          if (!in) throw std::invalid_argument("cannot read partition file " + cfg.fixPartition);
          std::stringstream ss;
          ss << in.rdbuf();
          P = parse_partition(ss.str());
        } else if (cf.partition) {
          P = *cf.partition;
        } else {
          throw std::invalid_argument("mixed criterion needs a partition ('partition:' block or --fix)");
        }
        Poly aux;
        std::vector<std::string> notes;
        if (cf.auxiliaryPolar) {
          aux = get_polar().G;
          notes.push_back("auxiliary curve: " + polar_description(get_polar()));
        } else if (cf.auxiliary) {
          aux = *cf.auxiliary;
        } else {
          throw std::invalid_argument("mixed criterion needs an 'auxiliary:' header");
        }
        CriterionReport r = criterion_mixed(*C, resolve_partition(P, *C), aux);
        for (auto& n : notes) r.diagnostics.push_back(n);
        reports.push_back(std::move(r));
      }
    }

    bool any = false;
    for (auto& r : reports) any = any || r.certified();
    if (cfg.format == "json") {
      json rep = json::array();
      for (auto& r : reports) rep.push_back(to_json(r));
      json out{{"input", cfg.inputPath}, {"seed", cfg.seed}, {"reports", rep}};
      if (C) out["curve"] = to_json(*C, cfg.dumpResolution);
      else {
        json pts = json::array();
        for (auto& sp : cf.localPoints) pts.push_back(to_json(sp, cfg.dumpResolution));
        out["points"] = pts;
      }
      std::cout << out.dump(2) << "\n";
    } else {
      if (C) std::cout << render_text(*C);
      else
        for (auto& sp : cf.localPoints) std::cout << render_text(sp);
      if (cfg.dumpResolution) {
        const auto& pts = C ? C->singularPoints : cf.localPoints;
        for (auto& sp : pts) std::cout << "resolution at " << sp.label << ":\n" << sp.resolution.dump(2) << "\n";
      }
      for (auto& r : reports) std::cout << "\n" << render_text(r);
    }
    return any ? 0 : 1;
  } catch (const ConditionError& e) {
    emit_error(cfg, std::string("mixed criterion hypotheses violated: ") + e.what());
  } catch (const std::exception& e) {
    emit_error(cfg, e.what());
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smoothness and dimension criteria for equisingular families of plane curves"};
  app.require_subcommand(1);
  AnalysisConfig cfg;
  std::vector<std::string> crit;
  auto* analyze = app.add_subcommand("analyze", "analyze a curve file");
  analyze->add_option("file", cfg.inputPath, "curve file")->required();
  analyze->add_option("--criteria", crit, "comma separated: 3d-ea,3d-es,4d-ea,4d-es,surface-ea,surface-es,mixed,all")
      ->delimiter(',');
  analyze->add_option("--seed", cfg.seed, "seed for the generic polar")->default_val(1);
  analyze->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");
  analyze->add_flag("--dump-resolution", cfg.dumpResolution, "include resolution trees");
  analyze->add_option("--fix", cfg.fixPartition, "partition file for the mixed criterion");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.criteria = crit;
  return run(cfg);
}
