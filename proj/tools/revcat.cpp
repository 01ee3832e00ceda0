#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "revcat/denotation.hpp"
#include "revcat/eval.hpp"
#include "revcat/laws.hpp"
#include "revcat/models.hpp"
#include "revcat/nondecomp.hpp"
#include "revcat/parser.hpp"
#include "revcat/typing.hpp"

using namespace revcat;

namespace {

// exit codes: 0 ok/pass/verdict, 1 parse or type errors, 2 stuck,
// 3 law-suite failure, 64 usage
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kStuck = 2;
constexpr int kLawFailure = 3;
constexpr int kUsage = 64;

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct LoadedProgram {
  lang::CheckedProgram checked;
  bool ok = false;
};

LoadedProgram loadProgram(const std::string& path) {
  LoadedProgram out;
  lang::Program parsed;
  try {
    parsed = lang::parseProgram(readFile(path));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return out;
  }
  out.checked = lang::checkProgram(parsed);
  if (!out.checked.ok()) {
    for (const auto& e : out.checked.errors) std::cerr << e.render() << "\n";
    return out;
  }
  out.ok = true;
  return out;
}

uint64_t envSeedOr(uint64_t fallback) {
  if (const char* s = std::getenv("REVCAT_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

int cmdTypecheck(const std::string& path) {
  lang::Program parsed;
  try {
    parsed = lang::parseProgram(readFile(path));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  lang::CheckedProgram checked = lang::checkProgram(parsed);
  for (const auto& def : parsed.defs) {
    bool defOk = true;
    for (const auto& e : checked.errors)
      if (e.where == def.name) defOk = false;
    std::cout << def.name << ": " << (defOk ? "ok" : "error") << "\n";
  }
  if (parsed.main) {
    bool mainOk = true;
    for (const auto& e : checked.errors)
      if (e.where == "main") mainOk = false;
    std::cout << "main: " << (mainOk ? "ok" : "error") << "\n";
  }
  for (const auto& e : checked.errors) std::cerr << e.render() << "\n";
  return checked.ok() ? kOk : kInputError;
}

int cmdRun(const std::string& path) {
  LoadedProgram loaded = loadProgram(path);
  if (!loaded.ok) return kInputError;
  if (!loaded.checked.program.main) {
    std::cerr << "no main term\n";
    return kInputError;
  }
  lang::EvalResult r = lang::evalTerm(*loaded.checked.program.main);
  if (r.stuck) {
    std::cout << "stuck\n";
    return kStuck;
  }
  std::cout << lang::printValue(r.value) << "\n";
  return kOk;
}

int cmdInvert(const std::string& path, const std::string& isoName) {
  LoadedProgram loaded = loadProgram(path);
  if (!loaded.ok) return kInputError;
  const lang::IsoDef* def = loaded.checked.program.findDef(isoName);
  if (!def) {
    std::cerr << "no iso named " << isoName << "\n";
    return kInputError;
  }
  lang::IsoDef inverted = lang::invertDef(*def);
  std::cout << "iso " << inverted.name << " : " << lang::printType(inverted.type.lhs) << " <-> "
            << lang::printType(inverted.type.rhs) << " {\n";
  for (const auto& c : inverted.iso.clauses)
    std::cout << "  | " << lang::printValue(c.lhs) << " <-> " << lang::printValue(c.rhs) << "\n";
  std::cout << "}\n";
  return kOk;
}

int cmdDenote(const std::string& path, const std::string& model, const std::string& isoName) {
  LoadedProgram loaded = loadProgram(path);
  if (!loaded.ok) return kInputError;
  const lang::IsoDef* def = loaded.checked.program.findDef(isoName);
  if (!def) {
    std::cerr << "no iso named " << isoName << "\n";
    return kInputError;
  }
  cat::CategoryPtr C = cat::modelByName(model);
  sem::DenotationEnv env = sem::DenotationEnv::canonical(C, loaded.checked.program);
  cat::Mor d = sem::denoteIso(env, def->iso, def->type.lhs, def->type.rhs);
  std::cout << C->morToJson(d).dump(2) << "\n";
  return kOk;
}

int cmdCheckLaws(const std::string& model, uint64_t seed, int cases, bool json) {
  cat::CategoryPtr C = cat::modelByName(model);
  cat::SampleOptions options;
  options.seed = seed;
  options.cases = cases;
  cat::LawReport report = cat::checkAllLaws(*C, options);
  if (json)
    std::cout << report.toJson().dump(2) << "\n";
  else
    std::cout << report.toText();
  return report.pass() ? kOk : kLawFailure;
}

int cmdClassify(const std::string& model, const std::string& objectText,
                const std::string& codText, const std::string& morphismJson, bool json) {
  cat::CategoryPtr C = cat::modelByName(model);
  auto obj = cat::Obj::parse(objectText);
  if (!obj) {
    std::cerr << "bad object: " << objectText << "\n";
    return kInputError;
  }
  cat::Obj cod = *obj;
  if (!codText.empty()) {
    auto parsed = cat::Obj::parse(codText);
    if (!parsed) {
      std::cerr << "bad object: " << codText << "\n";
      return kInputError;
    }
    cod = *parsed;
  }
  std::vector<cat::Mor> morphisms;
  if (!morphismJson.empty()) {
    morphisms.push_back(C->morFromJson(nlohmann::ordered_json::parse(morphismJson)));
  } else {
    morphisms = C->enumerateHom(*obj, cod);
  }
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& m : morphisms) {
    cat::DecompClass cls = cat::classify(*C, m);
    if (json) {
      nlohmann::ordered_json jm;
      jm["morphism"] = C->morToString(m);
      jm["snd"] = cls.snd;
      jm["lnd"] = cls.lnd;
      jm["wnd"] = cls.wnd;
      out.push_back(jm);
    } else {
      std::cout << C->morToString(m) << "  snd=" << cls.snd << " lnd=" << cls.lnd
                << " wnd=" << cls.wnd << "\n";
    }
  }
  if (json) std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmdCheckConsistency(const std::string& model, const std::string& flavorName, bool bridge,
                        bool json) {
  cat::CategoryPtr C = cat::modelByName(model);
  auto flavor = cat::flavorByName(flavorName);
  if (!flavor) {
    std::cerr << "unknown flavor: " << flavorName << "\n";
    return kUsage;
  }
  cat::ConsistencyReport report = cat::checkConsistency(*C, *flavor);
  cat::PatternMatchingReport pm = cat::checkPatternMatchingProperty(*C, *flavor);
  if (json) {
    nlohmann::ordered_json j;
    j["consistency"] = report.toJson(*C);
    j["pattern_matching"] = pm.toJson(*C);
    if (bridge) j["bridge"] = cat::verifyTheoremBridge(*C).toJson();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report.toText(*C);
    std::cout << pm.toText(*C);
    if (bridge) std::cout << cat::verifyTheoremBridge(*C).toText();
  }
  return kOk;  // verdicts are outputs, not failures
}

int cmdCheckSoundness(const std::string& model, uint64_t seed, int programs, bool json) {
  cat::CategoryPtr C = cat::modelByName(model);
  cat::LawReport report = sem::checkSoundness(C, seed, programs, lang::GenBounds{});
  if (json)
    std::cout << report.toJson().dump(2) << "\n";
  else
    std::cout << report.toText();
  return report.pass() ? kOk : kLawFailure;
}

int cmdCheckAdequacy(const std::string& model, int maxSize, int maxValues, bool json) {
  cat::CategoryPtr C = cat::modelByName(model);
  sem::AdequacyReport report = sem::checkAdequacy(C, maxSize, maxValues);
  if (json) {
    nlohmann::ordered_json j;
    j["instance"] = C->name();
    j["precondition_met"] = report.preconditionMet;
    j["report_only"] = report.reportOnly;
    j["types"] = report.types;
    j["terms"] = report.terms;
    j["pairs"] = report.pairs;
    j["stuck_stuck_pairs"] = report.stuckStuckPairs;
    j["strict_extended_deviations"] = report.strictExtendedDeviations;
    j["violations"] = report.violations;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report.toText();
  }
  return report.pass() ? kOk : kLawFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"revcat: a reversible pattern-matching language and its categorical models"};
  app.require_subcommand(1);

  std::string path, isoName, model = "finpinj", object, cod, morphism, flavor = "weak";
  uint64_t seed = envSeedOr(0);
  int cases = 1000, programs = 500, maxSize = 7, maxValues = 4;
  bool json = false, bridge = false;

  CLI::App* typecheck = app.add_subcommand("typecheck", "typecheck a program");
  typecheck->add_option("file", path)->required();

  CLI::App* run = app.add_subcommand("run", "evaluate the main term");
  run->add_option("file", path)->required();

  CLI::App* invert = app.add_subcommand("invert", "print the syntactic inverse of an iso");
  invert->add_option("file", path)->required();
  invert->add_option("--iso", isoName)->required();

  CLI::App* denote = app.add_subcommand("denote", "denote an iso in a model, as morphism JSON");
  denote->add_option("file", path)->required();
  denote->add_option("--model", model)->check(CLI::IsMember({"finpinj", "pids-oplus", "subpid"}));
  denote->add_option("--iso", isoName)->required();

  CLI::App* laws = app.add_subcommand("check-laws", "run the axiom suites on a model");
  laws->add_option("--model", model)->required()->check(CLI::IsMember(cat::modelNames()));
  laws->add_option("--seed", seed);
  laws->add_option("--cases", cases);
  laws->add_flag("--json", json);

  CLI::App* classify = app.add_subcommand("classify", "classify morphisms (snd/lnd/wnd)");
  classify->add_option("--model", model)->required()->check(CLI::IsMember(cat::modelNames()));
  classify->add_option("--object", object)->required();
  classify->add_option("--cod", cod);
  classify->add_option("--morphism", morphism);
  classify->add_flag("--json", json);

  CLI::App* consistency = app.add_subcommand("check-consistency", "decide consistency and the "
                                                                  "pattern-matching property");
  consistency->add_option("--model", model)->required()->check(CLI::IsMember(cat::modelNames()));
  consistency->add_option("--flavor", flavor)->check(CLI::IsMember({"weak", "linear", "strong"}));
  consistency->add_flag("--bridge", bridge);
  consistency->add_flag("--json", json);

  CLI::App* soundness = app.add_subcommand("check-soundness", "soundness along generated runs");
  soundness->add_option("--model", model)->check(CLI::IsMember({"finpinj", "pids-oplus", "subpid"}));
  soundness->add_option("--seed", seed);
  soundness->add_option("--programs", programs);
  soundness->add_flag("--json", json);

  CLI::App* adequacy = app.add_subcommand("check-adequacy", "adequacy over small closed terms");
  adequacy->add_option("--model", model)->check(CLI::IsMember({"finpinj", "pids-oplus", "subpid"}));
  adequacy->add_option("--max-size", maxSize);
  adequacy->add_option("--max-values", maxValues);
  adequacy->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (typecheck->parsed()) return cmdTypecheck(path);
    if (run->parsed()) return cmdRun(path);
    if (invert->parsed()) return cmdInvert(path, isoName);
    if (denote->parsed()) return cmdDenote(path, model, isoName);
    if (laws->parsed()) return cmdCheckLaws(model, seed, cases, json);
    if (classify->parsed()) return cmdClassify(model, object, cod, morphism, json);
    if (consistency->parsed()) return cmdCheckConsistency(model, flavor, bridge, json);
    if (soundness->parsed()) return cmdCheckSoundness(model, seed, programs, json);
    if (adequacy->parsed()) {
      if (adequacy->count("--model") == 0) model = "subpid";
      return cmdCheckAdequacy(model, maxSize, maxValues, json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsage;
}
