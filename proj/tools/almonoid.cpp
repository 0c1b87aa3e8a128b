//  Copyright 2026 The almonoid Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "almonoid/builtins.hpp"
#include "almonoid/catalog.hpp"
#include "almonoid/checker.hpp"
#include "almonoid/congruence.hpp"
#include "almonoid/constructions.hpp"
#include "almonoid/errors.hpp"
#include "almonoid/io.hpp"
#include "almonoid/parser.hpp"
#include "almonoid/profiles.hpp"
#include "almonoid/search.hpp"
#include "almonoid/structure.hpp"

namespace {

using namespace almonoid;

constexpr int kExitPass = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

int default_jobs() {
  if (const char* env = std::getenv("ALMONOID_JOBS")) {
    const int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

// Builtin URI (with a default bound for the windowed families), or a file
// path.
Model resolve_model(const std::string& ref, int bound) {
  std::string uri = ref;
  if (ref == "int" || ref == "plainint") uri = "int:" + std::to_string(bound);
  if (ref == "intu" || ref == "intwithtop")
    uri = "intu:" + std::to_string(bound);
  if (ref == "intuv" || ref == "intwithtopbottom")
    uri = "intuv:" + std::to_string(bound);
  return load_model(uri);
}

struct Output {
  bool json = false;
  nlohmann::json payload = nlohmann::json::array();

  void emit(const nlohmann::json& j, const std::string& text) {
    if (json)
      payload.push_back(j);
    else
      std::cout << text;
  }
  void flush() {
    if (json) std::cout << payload.dump(2) << "\n";
  }
};

int cmd_check(const std::vector<std::string>& models,
              const std::string& profile, int bound, int jobs, bool fast,
              bool json) {
  const auto p = profile_from_name(profile);
  if (!p) {
    std::cerr << "unknown profile: " << profile << "\n";
    return kExitUsage;
  }
  ProfileOptions opts;
  opts.check.jobs = jobs;
  opts.fast_mode = fast;

  Output out;
  out.json = json;
  bool any_fail = false;
  for (const auto& ref : models) {
    const Model m = resolve_model(ref, bound);
    const ProfileReport rep = check_profile(m, *p, opts);
    if (rep.overall() == Verdict::Fails) any_fail = true;
    out.emit(to_json(rep), render_text(rep));
  }
  out.flush();
  return any_fail ? kExitFinding : kExitPass;
}

int cmd_claims(const std::vector<std::string>& models,
               const std::string& claims_path, int bound, int jobs,
               bool json) {
  CheckOptions opts;
  opts.jobs = jobs;

  std::vector<Claim> user_claims;
  if (!claims_path.empty()) {
    std::ifstream in(claims_path);
    if (!in) {
      std::cerr << "cannot open " << claims_path << "\n";
      return kExitUsage;
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    user_claims = parse_claims(text);
  }

  Output out;
  out.json = json;
  bool any_fail = false;
  for (const auto& ref : models) {
    const Model m = resolve_model(ref, bound);
    std::vector<ClaimReport> reports = run_catalog(m, opts);
    for (const Claim& c : user_claims)
      reports.push_back(check_claim(m, c, opts));
    for (const auto& r : reports) {
      if (r.verdict == Verdict::Fails) any_fail = true;
      out.emit(to_json(r), m.name() + " " + render_text(r) + "\n");
    }
  }
  out.flush();
  return any_fail ? kExitFinding : kExitPass;
}

int cmd_search(int size, const std::string& satisfy,
               const std::string& violate, std::optional<uint64_t> limit,
               bool canonical, int jobs) {
  const auto p = profile_from_name(satisfy);
  if (!p) {
    std::cerr << "unknown profile: " << satisfy << "\n";
    return kExitUsage;
  }
  SearchSpec spec;
  spec.size = size;
  spec.satisfy = *p;
  if (!violate.empty()) spec.violate = violate;
  spec.limit = limit;
  spec.canonical = canonical;
  spec.jobs = jobs;

  uint64_t count = 0;
  enumerate_models(spec, [&](const FiniteAlgebra& fa) {
    if (count > 0) std::cout << "---\n";
    std::cout << write_algebra(fa);
    ++count;
    return true;
  });
  std::cerr << count << " model(s)\n";
  return kExitPass;
}

int cmd_analyze(const std::string& ref, int bound, bool inv, bool idem,
                bool compl_, bool isom, bool cone, bool json) {
  const Model m = resolve_model(ref, bound);
  Output out;
  out.json = json;
  bool any_fail = false;

  const bool all = !inv && !idem && !compl_ && !isom && !cone;
  auto show = [&](const StructureReport& rep) {
    if (rep.overall() == Verdict::Fails) any_fail = true;
    out.emit(to_json(rep), render_text(rep));
  };

  const FiniteAlgebra* fa = m.finite();
  if (inv || all) {
    if (fa != nullptr) show(invertibles(*fa));
    show(invertible_formulas_check(m));
  }
  if (idem || all) show(idempotents(m));
  if (all) show(find_unity(m));
  if (compl_ || all) {
    if (fa == nullptr) {
      std::cerr << "complemented: finite models only\n";
      if (compl_) return kExitUsage;
    } else {
      try {
        show(complemented(*fa));
      } catch (const NoUnityError&) {
        out.emit(nlohmann::json{{"analysis", "complemented"},
                                {"note", "no unity"}},
                 "complemented: no unity detected\n");
      }
    }
  }
  if (isom || all) {
    if (fa == nullptr) {
      std::cerr << "isometries: finite models only\n";
      if (isom) return kExitUsage;
    } else {
      show(translation_isometry_scan(*fa));
      show(star_translation_scan(*fa));
    }
  }
  if (cone || all) {
    if (fa == nullptr) {
      std::cerr << "cone: finite models only\n";
      if (cone) return kExitUsage;
    } else {
      const PositiveConeResult r = positive_cone(*fa);
      show(r.report);
      if (r.drl) out.emit(to_json(*r.drl), render_text(*r.drl));
    }
  }
  out.flush();
  return any_fail ? kExitFinding : kExitPass;
}

int cmd_congruences(const std::string& ref, int bound, int con_bound,
                    bool lattice, bool permutable, bool distributive,
                    bool pixley, bool json) {
  const Model m = resolve_model(ref, bound);
  const bool all = !lattice && !permutable && !distributive && !pixley;
  Output out;
  out.json = json;
  bool any_fail = false;

  const FiniteAlgebra* fa = m.finite();
  if ((lattice || permutable || distributive || all) && fa == nullptr) {
    std::cerr << "congruence lattice: finite models only\n";
    if (!pixley) return kExitUsage;
  }
  if (fa != nullptr && (lattice || all)) {
    const auto cons = all_congruences(*fa, con_bound);
    nlohmann::json arr = nlohmann::json::array();
    std::string text;
    for (const auto& c : cons) {
      arr.push_back(c.to_text());
      text += c.to_text() + "\n";
    }
    out.emit(nlohmann::json{{"congruences", arr}}, text);
  }
  if (fa != nullptr && (permutable || all)) {
    const ConReport r = check_con_permutable(*fa, con_bound);
    if (!r.holds) any_fail = true;
    std::string text = std::string("permutable: ") + (r.holds ? "yes" : "no");
    if (r.perm_witness)
      text += " witness (theta=" + std::to_string(r.perm_witness->theta) +
              ", phi=" + std::to_string(r.perm_witness->phi) + ", a=" +
              std::to_string(r.perm_witness->a) + ", c=" +
              std::to_string(r.perm_witness->c) + ")";
    out.emit(nlohmann::json{{"permutable", r.holds}}, text + "\n");
  }
  if (fa != nullptr && (distributive || all)) {
    const ConReport r = check_con_distributive(*fa, con_bound);
    if (!r.holds) any_fail = true;
    std::string text =
        std::string("distributive: ") + (r.holds ? "yes" : "no");
    out.emit(nlohmann::json{{"distributive", r.holds}}, text + "\n");
  }
  if (pixley || all) {
    for (const auto& r : pixley_check(m)) {
      if (r.verdict == Verdict::Fails) any_fail = true;
      out.emit(to_json(r), render_text(r) + "\n");
    }
  }
  out.flush();
  return any_fail ? kExitFinding : kExitPass;
}

int cmd_construct(const std::string& op, const std::vector<std::string>& args,
                  const std::string& out_path, int bound) {
  FiniteAlgebra result;
  if (op == "product") {
    if (args.size() != 2) {
      std::cerr << "product needs two models\n";
      return kExitUsage;
    }
    const Model a = resolve_model(args[0], bound);
    const Model b = resolve_model(args[1], bound);
    if (!a.finite() || !b.finite()) {
      std::cerr << "product: finite models only\n";
      return kExitUsage;
    }
    result = product(*a.finite(), *b.finite());
  } else if (op == "sub") {
    if (args.size() != 2) {
      std::cerr << "sub needs a model and a comma-separated seed\n";
      return kExitUsage;
    }
    const Model a = resolve_model(args[0], bound);
    if (!a.finite()) {
      std::cerr << "sub: finite models only\n";
      return kExitUsage;
    }
    std::vector<int> seed;
    std::string tok;
    std::istringstream ss(args[1]);
    while (std::getline(ss, tok, ',')) seed.push_back(std::stoi(tok));
    result = subalgebra(*a.finite(), seed).algebra;
  } else if (op == "quotient") {
    if (args.size() != 2) {
      std::cerr << "quotient needs a model and a partition file\n";
      return kExitUsage;
    }
    const Model a = resolve_model(args[0], bound);
    if (!a.finite()) {
      std::cerr << "quotient: finite models only\n";
      return kExitUsage;
    }
    const Congruence theta = read_partition_file(args[1], a.finite()->n);
    result = congruence_quotient(*a.finite(), theta).algebra;
  } else if (op == "drl2al") {
    if (args.size() != 1) {
      std::cerr << "drl2al needs one model\n";
      return kExitUsage;
    }
    const Model a = resolve_model(args[0], bound);
    if (!a.finite()) {
      const ProfileReport rep = check_drl(a);
      std::cout << render_text(rep);
      std::cerr << "drl2al: model is not a DRl-semigroup\n";
      return kExitFinding;
    }
    result = drl_to_al(*a.finite());
  } else {
    std::cerr << "unknown construction: " << op << "\n";
    return kExitUsage;
  }

  if (out_path.empty()) {
    std::cout << write_algebra(result);
  } else {
    std::ofstream out(out_path);
    out << write_algebra(result);
  }
  return kExitPass;
}

int cmd_independence(int bound, int max_size, bool json) {
  const IndependenceReport rep = independence_report(bound, max_size);
  if (json)
    std::cout << to_json(rep).dump(2) << "\n";
  else
    std::cout << render_text(rep);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "almonoid: a workbench for autometrized lattice-ordered monoids"};
  app.require_subcommand(1);

  int bound = 20;
  int jobs = default_jobs();
  app.add_option("--bound", bound, "window bound for builtin int models");
  app.add_option("--jobs", jobs, "worker threads (env ALMONOID_JOBS)");

  auto* check = app.add_subcommand("check", "check a model against a profile");
  std::vector<std::string> check_models;
  std::string check_profile_name = "al-monoid";
  bool check_fast = false, check_json = false, check_builtin = false;
  check->add_option("models", check_models, "model files or builtin URIs")
      ->required();
  check->add_option("--profile", check_profile_name, "profile name");
  check->add_flag("--builtin", check_builtin, "treat names as builtin URIs");
  check->add_flag("--fast", check_fast, "stop at the first failing axiom");
  check->add_flag("--json", check_json, "JSON output");

  auto* claims = app.add_subcommand("claims", "run the claim catalog");
  std::vector<std::string> claims_models;
  std::string claims_builtin, claims_file;
  bool claims_json = false;
  claims->add_option("models", claims_models, "model files or builtin URIs");
  claims->add_option("--builtin", claims_builtin, "builtin model URI");
  claims->add_option("--claims", claims_file, "user claims file");
  claims->add_flag("--json", claims_json, "JSON output");

  auto* search = app.add_subcommand("search", "enumerate small models");
  int search_size = 2;
  std::string search_satisfy = "al-monoid", search_violate;
  uint64_t search_limit = 0;
  bool search_canonical = false;
  search->add_option("--size", search_size, "carrier size")->required();
  search->add_option("--satisfy", search_satisfy, "profile to satisfy");
  search->add_option("--violate", search_violate, "claim id or axiom label");
  search->add_option("--limit", search_limit, "max models to emit");
  search->add_flag("--canonical", search_canonical,
                   "deduplicate up to isomorphism");

  auto* analyze = app.add_subcommand("analyze", "structural analyses");
  std::string analyze_model;
  bool an_inv = false, an_idem = false, an_compl = false, an_isom = false,
       an_cone = false, an_json = false;
  analyze->add_option("model", analyze_model, "model file or builtin URI")
      ->required();
  analyze->add_flag("--invertibles", an_inv, "invertible elements");
  analyze->add_flag("--idempotents", an_idem, "idempotent elements");
  analyze->add_flag("--complemented", an_compl, "complemented elements");
  analyze->add_flag("--isometries", an_isom, "isometry scans");
  analyze->add_flag("--cone", an_cone, "positive cone");
  analyze->add_flag("--json", an_json, "JSON output");

  auto* congr = app.add_subcommand("congruences", "congruence lattice");
  std::string congr_model;
  int congr_bound = 8;
  bool c_lat = false, c_perm = false, c_dist = false, c_pix = false,
       c_json = false;
  congr->add_option("model", congr_model, "model file or builtin URI")
      ->required();
  congr->add_option("--max-carrier", congr_bound,
                    "carrier bound for the partition scan");
  congr->add_flag("--lattice", c_lat, "list all congruences");
  congr->add_flag("--permutable", c_perm, "check permutability");
  congr->add_flag("--distributive", c_dist, "check distributivity");
  congr->add_flag("--pixley", c_pix, "check the Pixley-term identities");
  congr->add_flag("--json", c_json, "JSON output");

  auto* construct =
      app.add_subcommand("construct", "product | sub | quotient | drl2al");
  std::string construct_op, construct_out;
  std::vector<std::string> construct_args;
  construct->add_option("op", construct_op, "construction")->required();
  construct->add_option("args", construct_args, "construction arguments");
  construct->add_option("--out", construct_out, "output file");

  auto* indep =
      app.add_subcommand("independence", "axiom-independence demonstrations");
  int indep_max_size = 5;
  bool indep_json = false;
  indep->add_option("--max-size", indep_max_size,
                    "finite search bound for the axiom-4 direction");
  indep->add_flag("--json", indep_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return cmd_check(check_models, check_profile_name, bound, jobs,
                       check_fast, check_json);
    if (claims->parsed()) {
      std::vector<std::string> models = claims_models;
      if (!claims_builtin.empty()) models.push_back(claims_builtin);
      if (models.empty()) {
        std::cerr << "claims: no model given\n";
        return kExitUsage;
      }
      return cmd_claims(models, claims_file, bound, jobs, claims_json);
    }
    if (search->parsed())
      return cmd_search(search_size, search_satisfy, search_violate,
                        search_limit ? std::optional<uint64_t>(search_limit)
                                     : std::nullopt,
                        search_canonical, jobs);
    if (analyze->parsed())
      return cmd_analyze(analyze_model, bound, an_inv, an_idem, an_compl,
                         an_isom, an_cone, an_json);
    if (congr->parsed())
      return cmd_congruences(congr_model, bound, congr_bound, c_lat, c_perm,
                             c_dist, c_pix, c_json);
    if (construct->parsed())
      return cmd_construct(construct_op, construct_args, construct_out, bound);
    if (indep->parsed())
      return cmd_independence(bound, indep_max_size, indep_json);
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MalformedTableError& e) {
    std::cerr << "malformed table: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
