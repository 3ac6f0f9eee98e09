// SPDX-License-Identifier: Apache-2.0
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "biregkit/blowup.hpp"
#include "biregkit/corpus.hpp"
#include "biregkit/io.hpp"
#include "biregkit/parser.hpp"
#include "biregkit/verify.hpp"
#include "biregkit/veronese.hpp"

using namespace bireg;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kMath = 3, kConsensus = 4 };

struct Globals {
  std::string field;
  bool ci = false;
  bool allow_inhomogeneous = false;
  bool no_timing = false;
};

struct Common {
  std::string input;
  std::optional<std::uint64_t> seed;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IdealDocument read_input(const Common& c, const Globals& g) {
  IdealDocument doc = load_document(c.input);
  if (!g.field.empty()) {
    try {
      doc.field = Field::parse(g.field);
    } catch (const MathError& e) {
      throw UsageError(e.what());
    }
  }
  return doc;
}

std::uint64_t seed_of(const Common& c, const Globals& g, const char* command) {
  if (c.seed) return *c.seed;
  if (g.ci) throw UsageError(std::string(command) + " is randomized: pass --seed in CI mode");
  return 1;
}

Json certificate_json(const AlmostRegularCertificate& cert) {
  Json j;
  j["forms"] = to_json(cert.forms);
  j["s_values"] = cert.s_values;
  j["bounds"] = cert.bounds;
  j["randomized"] = cert.randomized;
  j["change_seed"] = cert.change_seed;
  j["attempts"] = cert.attempts;
  return j;
}

Json dseq_json(const DSequenceReport& r) {
  Json j;
  j["sequence"] = to_json(r.sequence);
  j["minimal_generation"] = r.minimal_generation;
  j["colon_condition"] = r.colon_condition;
  j["is_d_sequence"] = r.is_d_sequence;
  return j;
}

Json fit_json(const std::optional<LinearFit>& f) {
  if (!f) return nullptr;
  return {{"slope", f->slope}, {"intercept", f->intercept}, {"onset", f->onset}};
}

BlowupKind kind_of(const std::string& s) { return s == "sym" ? BlowupKind::kSymmetric : BlowupKind::kRees; }

Json monomial_ideal_json(const MonomialIdeal& j) { return j.strings(); }

void emit(Json report, const Globals& g, double seconds) {
  if (!g.no_timing) report["timing"] = {{"seconds", seconds}};
  std::cout << report.dump(2) << "\n";
}

void error_out(const char* kind, const std::string& message, Json extra = Json::object()) {
  Json e{{"kind", kind}, {"message", message}};
  for (auto& [k, v] : extra.items()) e[k] = v;
  std::cerr << Json{{"error", e}}.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bigraded regularity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Coefficient field override: Q or Fp:<p>");
  app.add_flag("--ci", g.ci, "Require explicit seeds for randomized commands");
  app.add_flag("--allow-inhomogeneous", g.allow_inhomogeneous, "Accept generators that are not bihomogeneous");
  app.add_flag("--no-timing", g.no_timing, "Omit the timing key from reports");
  if (const char* env = std::getenv("BIREGKIT_CI"); env && std::string(env) == "1") g.ci = true;

  Common c;
  auto add_common = [&](CLI::App* sub, bool seeded) {
    sub->add_option("--input", c.input, "Ideal document (JSON)")->required()->check(CLI::ExistingFile);
    if (seeded) sub->add_option("--seed", c.seed, "Random seed");
  };

  auto* bigin_cmd = app.add_subcommand("bigin", "Bigeneric initial ideal by trial consensus");
  int trials = 3;
  add_common(bigin_cmd, true);
  bigin_cmd->add_option("--trials", trials, "Number of random coordinate changes")->check(CLI::PositiveNumber);

  auto* betti_cmd = app.add_subcommand("betti", "Bigraded Betti table of S/J");
  std::string method = "koszul";
  std::vector<int> box;
  std::uint64_t pivot_seed = 0;
  add_common(betti_cmd, false);
  betti_cmd->add_option("--method", method)->check(CLI::IsMember({"koszul", "taylor"}));
  betti_cmd->add_option("--box", box, "Bidegree box A B")->expected(2);
  betti_cmd->add_option("--pivot-seed", pivot_seed, "Taylor cancellation order (0: fixed)");

  auto* reg_cmd = app.add_subcommand("reg", "x- and y-regularity of S/J");
  std::string via = "svalues";
  add_common(reg_cmd, true);
  reg_cmd->add_option("--via", via)->check(CLI::IsMember({"svalues", "betti", "taylor"}));

  auto* dseq_cmd = app.add_subcommand("dseq", "d-sequence test");
  std::string direction = "x";
  std::vector<std::string> forms;
  add_common(dseq_cmd, true);
  dseq_cmd->add_option("--direction", direction)->check(CLI::IsMember({"x", "y"}));
  dseq_cmd->add_option("--forms", forms, "Explicit sequence instead of generic linear forms");

  std::string kind = "rees";
  auto* rees_cmd = app.add_subcommand("rees", "Rees or symmetric algebra presentation of I in S_x");
  add_common(rees_cmd, false);
  rees_cmd->add_option("--kind", kind)->check(CLI::IsMember({"rees", "sym"}));

  auto* powers_cmd = app.add_subcommand("powers", "reg(I^j) table with linear fit");
  int jmax = 5;
  add_common(powers_cmd, true);
  powers_cmd->add_option("--jmax", jmax)->check(CLI::PositiveNumber);
  powers_cmd->add_option("--kind", kind)->check(CLI::IsMember({"rees", "sym"}));
  powers_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);

  auto* th_cmd = app.add_subcommand("thresholds", "Linearity thresholds for reg(I^j)");
  bool assume_linear_type = false;
  add_common(th_cmd, true);
  th_cmd->add_option("--kind", kind)->check(CLI::IsMember({"rees", "sym"}));
  th_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  th_cmd->add_flag("--assume-linear-type", assume_linear_type, "Treat I as of linear type");

  auto* ver_cmd = app.add_subcommand("veronese", "Regularity bounds for the (s,t)-Veronese");
  int vs = 1;
  int vt = 1;
  add_common(ver_cmd, false);
  ver_cmd->add_option("--s", vs)->required()->check(CLI::NonNegativeNumber);
  ver_cmd->add_option("--t", vt)->required()->check(CLI::NonNegativeNumber);

  auto* corpus_cmd = app.add_subcommand("corpus", "Generate test ideals");
  CorpusSpec spec;
  std::string flavor = "bistable";
  std::string out_dir;
  corpus_cmd->add_option("--flavor", flavor)
      ->check(CLI::IsMember({"bistable", "strongly-bistable", "binomial", "generic", "equigenerated-x"}));
  corpus_cmd->add_option("--seed", c.seed);
  corpus_cmd->add_option("--count", spec.count)->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--n", spec.n)->check(CLI::Range(0, 4));
  corpus_cmd->add_option("--m", spec.m)->check(CLI::Range(0, 4));
  corpus_cmd->add_option("--max-x", spec.max_bidegree.x)->check(CLI::NonNegativeNumber);
  corpus_cmd->add_option("--max-y", spec.max_bidegree.y)->check(CLI::NonNegativeNumber);
  corpus_cmd->add_option("--min-gens", spec.min_gens)->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--max-gens", spec.max_gens)->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--degree", spec.degree)->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--out", out_dir, "Directory for one JSON file per ideal");

  auto* verify_cmd = app.add_subcommand("verify", "Acceptance battery");
  std::string suite;
  int criterion = 0;
  bool verify_json = false;
  verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember({"paper"}));
  verify_cmd->add_option("--criterion", criterion, "Run a single criterion")->check(CLI::Range(1, 10));
  verify_cmd->add_flag("--json", verify_json, "JSON output instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_out("usage", e.what());
    return kParse;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    Json report;
    report["command"] = name;

    if (name == "verify") {
      std::vector<CriterionResult> results;
      if (criterion) {
        results.push_back(run_criterion(criterion));
      } else {
        results = run_suite();
      }
      bool all = true;
      for (const auto& r : results) all = all && r.pass;
      if (verify_json) {
        Json rows = Json::array();
        for (const auto& r : results) {
          rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        }
        std::cout << Json{{"command", "verify"}, {"suite", suite}, {"criteria", rows}, {"pass", all}}.dump(2) << "\n";
      } else {
        for (const auto& r : results) {
          std::printf("%-4s %2d  %-66s %8.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                      r.detail.c_str());
        }
        std::printf("%s\n", all ? "all criteria passed" : "some criteria FAILED");
      }
      return all ? kOk : kFailed;
    }

    if (name == "corpus") {
      spec.flavor = parse_flavor(flavor);
      spec.seed = seed_of(c, g, "corpus");
      if (!g.field.empty()) spec.field = Field::parse(g.field);
      auto entries = generate(spec);
      report["seed"] = spec.seed;
      report["settings"] = {{"flavor", flavor},
                        {"n", spec.n},
                        {"m", spec.m},
                        {"max_bidegree", to_json(spec.max_bidegree)},
                        {"gens", {spec.min_gens, spec.max_gens}},
                        {"count", spec.count},
                        {"degree", spec.degree},
                        {"field", spec.field.to_string()}};
      Json items = Json::array();
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      for (const auto& e : entries) {
        Json doc = to_json(document_from_ideal(e.ideal, {{"name", e.name}, {"flavor", flavor}, {"seed", spec.seed}}));
        if (out_dir.empty()) {
          items.push_back(doc);
        } else {
          auto path = std::filesystem::path(out_dir) / (e.name + ".json");
          std::ofstream(path) << doc.dump(2) << "\n";
          items.push_back(path.string());
        }
      }
      report["results"] = {{out_dir.empty() ? "ideals" : "files", items}};
      emit(report, g, elapsed());
      return kOk;
    }

    IdealDocument doc = read_input(c, g);
    report["input"] = to_json(doc);
    Json res;

    if (name == "bigin") {
      const auto seed = seed_of(c, g, "bigin");
      report["seed"] = seed;
      auto b = bigin(to_ideal(doc, g.allow_inhomogeneous), trials, seed);
      res["generators"] = monomial_ideal_json(b.ideal);
      res["agreed"] = b.agreed;
      Json ts = Json::array();
      for (const auto& t : b.trials) ts.push_back({{"seed", t.seed}, {"generators", monomial_ideal_json(t.ideal)}});
      res["trials"] = ts;
    } else if (name == "betti") {
      std::optional<Bidegree> bx;
      if (!box.empty()) bx = Bidegree{box[0], box[1]};
      Ideal j = to_ideal(doc, g.allow_inhomogeneous);
      BettiTable t;
      if (method == "taylor") {
        if (!j.is_monomial()) throw MathError("the Taylor method needs a monomial ideal");
        t = taylor_betti(j.initial_ideal(), pivot_seed);
        if (bx) {
          BettiTable cut;
          cut.box = bx;
          for (const auto& [k, v] : t.entries) {
            if (k.second.x <= bx->x && k.second.y <= bx->y) {
              cut.entries[k] = v;
            } else {
              cut.complete = false;
            }
          }
          t = cut;
        }
      } else {
        t = koszul_betti(j, bx);
      }
      res["method"] = method;
      res["table"] = to_json(t);
      res["reg_x"] = to_json(reg_from_betti(t, Direction::kX));
      res["reg_y"] = to_json(reg_from_betti(t, Direction::kY));
    } else if (name == "reg") {
      Ideal j = to_ideal(doc, g.allow_inhomogeneous);
      RegularityReport rep;
      if (via == "svalues") {
        const auto seed = seed_of(c, g, "reg --via svalues");
        report["seed"] = seed;
        rep = reg_via_s_values(j, seed);
      } else if (via == "taylor") {
        if (!j.is_monomial()) throw MathError("the Taylor method needs a monomial ideal");
        rep = reg_via_taylor(j.initial_ideal());
      } else {
        rep = reg_via_betti(j);
      }
      res["via"] = via;
      res["reg_x"] = to_json(rep.reg_x);
      res["reg_y"] = to_json(rep.reg_y);
      if (rep.cert_x) res["certificate_x"] = certificate_json(*rep.cert_x);
      if (rep.cert_y) res["certificate_y"] = certificate_json(*rep.cert_y);
      if (rep.betti) {
        res["betti"] = to_json(*rep.betti);
        res["ideal_reg_x"] = to_json(ideal_reg_from_betti(*rep.betti, Direction::kX));
        res["ideal_reg_y"] = to_json(ideal_reg_from_betti(*rep.betti, Direction::kY));
      }
    } else if (name == "dseq") {
      Ideal j = to_ideal(doc, g.allow_inhomogeneous);
      res["direction"] = direction;
      if (!forms.empty()) {
        std::vector<Polynomial> fs;
        for (std::size_t k = 0; k < forms.size(); ++k) fs.push_back(parse_polynomial(forms[k], j.ring()));
        res["report"] = dseq_json(is_d_sequence(fs, j));
      } else {
        const auto seed = seed_of(c, g, "dseq");
        report["seed"] = seed;
        auto gd = generic_forms_d_sequence(j, direction == "x" ? Direction::kX : Direction::kY, seed);
        res["report"] = dseq_json(gd.report);
        res["coordinates"] = certificate_json(gd.coordinates);
      }
    } else if (name == "rees") {
      auto p = presentation(to_x_polynomials(doc), kind_of(kind));
      res["kind"] = kind;
      res["d"] = p.d;
      res["presentation"] = to_json(document_from_ideal(p.j, {{"kind", kind}, {"d", p.d}}));
    } else if (name == "powers") {
      const auto seed = seed_of(c, g, "powers");
      report["seed"] = seed;
      auto fs = to_x_polynomials(doc);
      auto table = power_reg_table(fs, jmax, kind_of(kind), seed);
      Json rows = Json::array();
      for (auto [jj, reg] : table.rows) rows.push_back({{"j", jj}, {"reg", reg}});
      res["kind"] = kind;
      res["d"] = table.d;
      res["rows"] = rows;
      res["fitted"] = fit_json(table.fitted);
      res["c"] = table.fitted ? Json(table.fitted->intercept) : Json(nullptr);
      auto th = linearity_threshold_bigin(presentation(fs, kind_of(kind)), trials, seed);
      res["threshold"] = {{"j0_bigin", th.j0}, {"c_bound", th.c_bound}, {"agreed", th.agreed}};
    } else if (name == "thresholds") {
      const auto seed = seed_of(c, g, "thresholds");
      report["seed"] = seed;
      auto fs = to_x_polynomials(doc);
      auto th = thresholds(fs, kind_of(kind), trials, seed);
      res["kind"] = kind;
      res["j0_bigin"] = th.bigin.j0;
      res["bigin_agreed"] = th.bigin.agreed;
      res["c_bracket"] = {0, th.bigin.c_bound};
      res["reg_x"] = to_json(th.reg_x);
      res["reg_y"] = to_json(th.reg_y);
      res["j0_fourth"] = th.j0_fourth;
      Json w;
      w["w"] = th.w.w ? Json(*th.w.w) : Json(nullptr);
      w["b_max"] = th.w.b_max;
      w["complete"] = th.w.complete;
      w["form"] = th.w.form ? Json(th.w.form->to_string()) : Json(nullptr);
      Json wit = Json::array();
      for (const auto& [i, d] : th.w.witnesses) wit.push_back({{"i", i}, {"degree", to_json(d)}});
      w["witnesses"] = wit;
      res["w"] = w;
      Json burch;
      burch["is_codim2_cm"] = th.burch.is_codim2_cm;
      burch["linear_case"] = th.burch.linear_case;
      burch["linear_type_assumed"] = assume_linear_type;
      Json mat = Json::array();
      for (const auto& row : th.burch.matrix) mat.push_back(to_json(row));
      burch["matrix"] = mat;
      burch["threshold"] = nullptr;
      if (th.burch.is_codim2_cm && assume_linear_type) {
        burch["threshold"] = th.burch.threshold;
        // Empirical check of reg(I^{j+1}) = reg(I^j) + d from the threshold on.
        auto table = power_reg_table(fs, th.burch.threshold + 3, BlowupKind::kRees, seed);
        bool holds = true;
        for (std::size_t k = static_cast<std::size_t>(th.burch.threshold - 1); k + 1 < table.rows.size(); ++k) {
          holds = holds && table.rows[k + 1].second == table.rows[k].second + table.d;
        }
        burch["empirical_rows"] = table.rows.size();
        burch["empirical_holds"] = holds;
      }
      res["burch"] = burch;
    } else if (name == "veronese") {
      auto t = koszul_betti(to_ideal(doc, g.allow_inhomogeneous));
      auto b = veronese_bound(t, vs, vt);
      auto [sx, sy] = veronese_zero_thresholds(t);
      auto witness = [](const std::optional<BettiWitness>& w) -> Json {
        if (!w) return nullptr;
        return {{"i", w->i}, {"degree", to_json(w->degree)}};
      };
      res["s"] = vs;
      res["t"] = vt;
      res["bound_x"] = b.bound_x ? Json(*b.bound_x) : Json(nullptr);
      res["bound_y"] = b.bound_y ? Json(*b.bound_y) : Json(nullptr);
      res["witness_x"] = witness(b.witness_x);
      res["witness_y"] = witness(b.witness_y);
      res["s_star"] = sx ? Json(*sx) : Json(nullptr);
      res["t_star"] = sy ? Json(*sy) : Json(nullptr);
      res["betti"] = to_json(t);
    }
    report["results"] = res;
    emit(report, g, elapsed());
    return kOk;
  } catch (const UsageError& e) {
    error_out("usage", e.what());
    return kParse;
  } catch (const ParseError& e) {
    error_out("parse", e.what(), {{"line", e.line()}, {"column", e.column()}});
    return kParse;
  } catch (const ConsensusError& e) {
    error_out("consensus", e.what(), {{"trials", e.trials()}});
    return kConsensus;
  } catch (const MathError& e) {
    error_out("math", e.what());
    return kMath;
  } catch (const std::exception& e) {
    error_out("math", e.what());
    return kMath;
  }
}
