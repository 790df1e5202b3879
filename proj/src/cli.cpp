#include "hopfclass/cli.hpp"

#include "hopfclass/green_ring.hpp"
#include "hopfclass/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace hopfclass {

namespace {

using Json = nlohmann::ordered_json;

/// Thrown for bad input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lazily built algebra, modules and tables for one configuration.
class Session {
 public:
  explicit Session(const RunConfig& cfg) : cfg_(cfg) {
    if (cfg.n < 3) throw UsageError("n must be at least 3");
    spec_.n = cfg.n;
    try {
      spec_.family = parse_family(cfg.family);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (spec_.family != Family::TensorTaft && spec_.family != Family::Hpq)
      throw UsageError("family must be tensor-taft or hpq");
    if (spec_.family == Family::Hpq) {
      try {
        spec_.p = CycloField::get(cfg.n).parse(cfg.p);
      } catch (const std::exception& e) {
        throw UsageError("cannot parse p '" + cfg.p + "': " + e.what());
      }
    }
  }

  const RunConfig& cfg() const { return cfg_; }
  const AlgebraSpec& spec() const { return spec_; }

  const AlgebraContext& ctx() {
    if (!ctx_) ctx_ = std::make_unique<AlgebraContext>(spec_, cfg_.seed);
    return *ctx_;
  }

  ClassFamily family() const {
    try {
      return class_family(spec_);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(e.what()) + " (use p = 0 or p = 1)");
    }
  }

  void require(std::initializer_list<ClassFamily> allowed, const std::string& what) const {
    const ClassFamily f = family();
    for (auto a : allowed)
      if (a == f) return;
    std::string names;
    for (auto a : allowed) names += (names.empty() ? "" : " or ") + class_family_name(a);
    throw UsageError(what + " needs family " + names + ", got " + spec_label(spec_));
  }

  const ModuleSystem& modules() {
    (void)family();
    if (!sys_) sys_ = std::make_unique<ModuleSystem>(ModuleSystem::build(ctx(), cfg_.seed, cfg_.jobs));
    return *sys_;
  }

  const FusionTable& closed_table(CaseCoverage* coverage = nullptr) {
    if (!closed_) {
      CaseCoverage cov;
      closed_ = std::make_unique<FusionTable>(closed_form_table(family(), cfg_.n, &cov));
      coverage_ = cov;
    }
    if (coverage) *coverage = coverage_;
    return *closed_;
  }

  const FusionTable& computed() {
    if (!computed_) computed_ = std::make_unique<FusionTable>(computed_table(modules(), cfg_.jobs));
    return *computed_;
  }

  /// The table ring identities are evaluated in.
  const FusionTable& ring_table() { return cfg_.computed ? computed() : closed_table(); }

  BasisLabel label(const std::string& text) {
    try {
      return parse_label(text, family() == ClassFamily::H1, cfg_.n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

 private:
  RunConfig cfg_;
  AlgebraSpec spec_;
  std::unique_ptr<AlgebraContext> ctx_;
  std::unique_ptr<ModuleSystem> sys_;
  std::unique_ptr<FusionTable> closed_;
  std::unique_ptr<FusionTable> computed_;
  CaseCoverage coverage_;
};

/// What a command produced: reports plus an optional payload.
struct Outcome {
  std::vector<Report> reports;
  Json payload;                  // merged into the JSON document under "result"
  std::string text;              // text rendering of the payload
  std::optional<std::string> csv;
};

// ---------------------------------------------------------------------------
// Checks that compare parts of the closed-form table with the modules

Report crosscheck_entries(Session& s, const std::string& title,
                          const std::function<bool(const BasisLabel&, const BasisLabel&)>& wanted) {
  const FusionTable& closed = s.closed_table();
  const ModuleSystem& sys = s.modules();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto& basis = closed.basis();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (wanted(basis[a], basis[b])) pairs.emplace_back(a, b);
  std::vector<RingElt> got(pairs.size());
  parallel_for(pairs.size(), s.cfg().jobs, [&](std::size_t k) {
    const Module m = tensor_module(sys.module_of(basis[pairs[k].first]), sys.module_of(basis[pairs[k].second]));
    got[k] = to_ring(sys.decompose(m));
  });
  Report rep;
  rep.title = title;
  std::size_t bad = 0;
  std::string first;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const RingElt& want = closed.product(pairs[k].first, pairs[k].second);
    if (want == got[k]) continue;
    if (bad++ == 0)
      first = basis[pairs[k].first].to_string() + " (x) " + basis[pairs[k].second].to_string() + ": closed form " +
              ring_text(want) + ", computed " + ring_text(got[k]);
  }
  rep.data["entries"] = pairs.size();
  rep.data["mismatches"] = bad;
  rep.add("closed form equals computed decomposition", bad == 0 && !pairs.empty(), first);
  return rep;
}

Report coverage_report(const CaseCoverage& cov, int n) {
  Report rep;
  rep.title = "tensor product rule coverage at n=" + std::to_string(n);
  Json hits = Json::object();
  for (int c = 1; c <= 11; ++c) hits[std::to_string(c)] = cov.hits[static_cast<std::size_t>(c)];
  rep.data["hits"] = hits;
  const auto missing = cov.missing();
  rep.data["missing"] = missing;
  if (n >= 4) {
    rep.add("all 11 rules exercised", missing.empty(), Json(missing).dump());
  } else {
    // At n = 3 the index ranges of two rules are empty once l = 1 is routed
    // to the twisting rules.
    const bool only_unreachable = std::all_of(missing.begin(), missing.end(), [](int c) { return c == 5 || c == 8; });
    rep.add("every rule reachable at n=3 exercised (5 and 8 need n >= 4)", only_unreachable, Json(missing).dump());
  }
  return rep;
}

Report pim_report(Session& s) {
  const ModuleSystem& sys = s.modules();
  const int n = s.cfg().n;
  Report rep;
  rep.title = "projective covers of " + s.ctx().label();
  bool dims = true, tops = true;
  for (std::size_t k = 0; k < sys.size(); ++k) {
    dims = dims && sys.pim(k).dim() == static_cast<std::size_t>(n * n);
    const RadicalLayers layers = sys.radical_filtration(sys.pim(k));
    for (std::size_t t = 0; t < sys.size(); ++t) tops = tops && layers.multiplicities[0][t] == (t == k ? 1 : 0);
  }
  const Module p = projective_P(sys.algebra(), 0, 0);
  rep.add("n^2 covers", sys.size() == static_cast<std::size_t>(n * n));
  rep.add("every cover has dim n^2 (basis a^k d^l e_ij)", dims);
  rep.add("P_{0,0} spanned by a^k d^l e_00 is n^2-dimensional", p.dim() == static_cast<std::size_t>(n * n));
  rep.add("each cover has a simple top", tops);
  rep.data["loewy_layers_P00"] = sys.radical_filtration(sys.pim(0)).dims;
  const Report blocks = center_and_blocks(s.ctx());
  rep.add("indecomposable algebra (one block)", blocks.data.value("block_count", 0) == 1,
          "block count " + blocks.data.value("block_count", Json(0)).dump());
  return rep;
}

// ---------------------------------------------------------------------------
// verify targets

using TargetFn = std::function<std::vector<Report>(Session&)>;

struct Target {
  std::string name;
  TargetFn run;
};

bool any_simple(const BasisLabel& a, const BasisLabel& b) { return !a.is_projective() || !b.is_projective(); }
bool both_projective(const BasisLabel& a, const BasisLabel& b) { return a.is_projective() && b.is_projective(); }

std::vector<Report> presentation_target(Session& s, ClassFamily f, const std::string& name) {
  s.require({f}, name);
  return {verify_presentation(s.ring_table(), class_ring_presentation(f, s.cfg().n))};
}

std::vector<Report> identity_target(Session& s, const std::string& name) {
  s.require({ClassFamily::H1}, name);
  return {identity_suite_h1(s.ring_table(), name)};
}

const std::vector<Target>& targets() {
  using CF = ClassFamily;
  static const std::vector<Target> list = {
      {"thm3.8", [](Session& s) { return presentation_target(s, CF::TensorTaft, "thm3.8"); }},
      {"thm4.9", [](Session& s) { return presentation_target(s, CF::H0, "thm4.9"); }},
      {"thm5.9", [](Session& s) { return presentation_target(s, CF::H1, "thm5.9"); }},
      {"prop3.6",
       [](Session& s) {
         s.require({CF::TensorTaft}, "prop3.6");
         return std::vector<Report>{crosscheck_entries(s, "products with a simple factor", any_simple)};
       }},
      {"prop3.7",
       [](Session& s) {
         s.require({CF::TensorTaft}, "prop3.7");
         return std::vector<Report>{crosscheck_entries(s, "products of projective covers", both_projective)};
       }},
      {"prop3.9",
       [](Session& s) {
         s.require({CF::TensorTaft}, "prop3.9");
         return std::vector<Report>{class_algebra_radical(s.ring_table())};
       }},
      {"prop4.1",
       [](Session& s) {
         s.require({CF::H0}, "prop4.1");
         return std::vector<Report>{integrals_and_symmetry(s.ctx())};
       }},
      {"prop4.6",
       [](Session& s) {
         s.require({CF::H0}, "prop4.6");
         return std::vector<Report>{blocks_isomorphic_h0(s.ctx())};
       }},
      {"prop4.7",
       [](Session& s) {
         s.require({CF::H0}, "prop4.7");
         return std::vector<Report>{crosscheck_entries(s, "products with a simple factor", any_simple)};
       }},
      {"prop4.8",
       [](Session& s) {
         s.require({CF::H0}, "prop4.8");
         return std::vector<Report>{crosscheck_entries(s, "products of projective covers", both_projective)};
       }},
      {"prop4.10",
       [](Session& s) {
         s.require({CF::H0}, "prop4.10");
         return std::vector<Report>{class_algebra_radical(s.ring_table())};
       }},
      {"cor3.4",
       [](Session& s) {
         s.require({CF::TensorTaft}, "cor3.4");
         return std::vector<Report>{radical_report(s.ctx())};
       }},
      {"cor3.5",
       [](Session& s) {
         s.require({CF::TensorTaft}, "cor3.5");
         return std::vector<Report>{pim_report(s)};
       }},
      {"cor4.4",
       [](Session& s) {
         s.require({CF::H0}, "cor4.4");
         return std::vector<Report>{radical_report(s.ctx())};
       }},
      {"lemma5.1",
       [](Session& s) {
         s.require({CF::H1}, "lemma5.1");
         CaseCoverage cov;
         const FusionTable& closed = s.closed_table(&cov);
         return std::vector<Report>{crosscheck(closed, s.computed()), coverage_report(cov, s.cfg().n),
                                    ring_axioms(closed, 18, 2000, s.cfg().seed)};
       }},
      {"lemma5.3", [](Session& s) { return identity_target(s, "lemma5.3"); }},
      {"cor5.4", [](Session& s) { return identity_target(s, "cor5.4"); }},
      {"prop5.5", [](Session& s) { return identity_target(s, "prop5.5"); }},
      {"lemma5.6", [](Session& s) { return identity_target(s, "lemma5.6"); }},
      {"prop5.7", [](Session& s) { return identity_target(s, "prop5.7"); }},
      {"cor5.8", [](Session& s) { return identity_target(s, "cor5.8"); }},
      {"quiver4",
       [](Session& s) {
         s.require({CF::H0}, "quiver4");
         return std::vector<Report>{quiver_check_h0(s.ctx())};
       }},
      {"blocks", [](Session& s) { return std::vector<Report>{center_and_blocks(s.ctx())}; }},
      {"tensor-iso",
       [](Session& s) {
         if (s.spec().family != Family::TensorTaft) throw UsageError("tensor-iso needs family tensor-taft");
         return std::vector<Report>{tensor_iso_check(s.cfg().n, s.cfg().seed)};
       }},
  };
  return list;
}

// ---------------------------------------------------------------------------
// Commands

void need_args(const RunConfig& cfg, std::size_t count, const std::string& usage) {
  if (cfg.args.size() != count) throw UsageError("usage: " + usage);
}

std::string default_mode(const RunConfig& cfg, const std::string& fallback) {
  return cfg.mode.empty() ? fallback : cfg.mode;
}

Outcome cmd_algebra(Session& s) {
  need_args(s.cfg(), 1, "algebra verify");
  if (s.cfg().args[0] != "verify") throw UsageError("unknown algebra action '" + s.cfg().args[0] + "'");
  const AlgebraContext& ctx = s.ctx();
  Outcome out;
  out.reports.push_back(verify_hopf_axioms(ctx.algebra(), 500, s.cfg().seed, s.cfg().jobs));
  out.reports.push_back(check_group_idempotents(ctx));
  out.reports.push_back(radical_report(ctx));
  out.reports.push_back(integrals_and_symmetry(ctx));
  out.reports.push_back(center_and_blocks(ctx));
  if (ctx.is_h0()) out.reports.push_back(blocks_isomorphic_h0(ctx));
  return out;
}

Outcome cmd_modules(Session& s) {
  need_args(s.cfg(), 1, "modules list");
  if (s.cfg().args[0] != "list") throw UsageError("unknown modules action '" + s.cfg().args[0] + "'");
  const ModuleSystem& sys = s.modules();
  Outcome out;
  Json simples = Json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < sys.size(); ++k) {
    const bool proj = sys.projective_simple(k);
    simples.push_back({{"label", sys.simple_label(k).to_string()},
                       {"dim", sys.simple(k).dim()},
                       {"projective", proj},
                       {"cover", sys.pim_label(k).to_string()},
                       {"cover_dim", sys.pim(k).dim()},
                       {"cartan_row", sys.cartan()[k]}});
    text << sys.simple_label(k).to_string() << "  dim " << sys.simple(k).dim() << "  cover "
         << sys.pim_label(k).to_string() << " dim " << sys.pim(k).dim() << (proj ? "  (projective)" : "") << "\n";
  }
  out.payload["simples"] = simples;
  out.payload["notes"] = sys.notes();
  for (const auto& note : sys.notes()) text << "note: " << note << "\n";
  out.text = text.str();
  return out;
}

Outcome cmd_fuse(Session& s) {
  need_args(s.cfg(), 2, "fuse A B");
  const BasisLabel a = s.label(s.cfg().args[0]), b = s.label(s.cfg().args[1]);
  const std::string mode = default_mode(s.cfg(), "both");
  if (mode != "closed" && mode != "computed" && mode != "both") throw UsageError("fuse mode must be closed, computed or both");
  Outcome out;
  out.payload["a"] = a.to_string();
  out.payload["b"] = b.to_string();
  std::optional<RingElt> closed, computed;
  if (mode != "computed") {
    try {
      closed = closed_form_fusion(s.family(), s.cfg().n, a, b);
    } catch (const std::logic_error& e) {
      throw UsageError(e.what());
    }
    out.payload["closed_form"] = ring_json(*closed);
  }
  if (mode != "closed") {
    const ModuleSystem& sys = s.modules();
    computed = to_ring(sys.decompose(tensor_module(sys.module_of(a), sys.module_of(b))));
    out.payload["computed"] = ring_json(*computed);
  }
  if (closed && computed) {
    Report rep;
    rep.title = a.to_string() + " (x) " + b.to_string();
    rep.add("closed form equals computed", *closed == *computed,
            "closed form " + ring_text(*closed) + ", computed " + ring_text(*computed));
    out.reports.push_back(rep);
    out.text = "closed form: " + ring_text(*closed) + "\ncomputed:    " + ring_text(*computed) + "\n";
  } else {
    out.text = ring_text(closed ? *closed : *computed) + "\n";
  }
  return out;
}

std::string table_text(const FusionTable& t) {
  std::string s;
  const auto& basis = t.basis();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b)
      s += basis[a].to_string() + " * " + basis[b].to_string() + " = " + ring_text(t.product(a, b)) + "\n";
  return s;
}

Outcome cmd_table(Session& s) {
  need_args(s.cfg(), 0, "table");
  const std::string mode = default_mode(s.cfg(), "crosscheck");
  Outcome out;
  const FusionTable* t = nullptr;
  if (mode == "closed") {
    CaseCoverage cov;
    t = &s.closed_table(&cov);
    if (s.family() == ClassFamily::H1) out.reports.push_back(coverage_report(cov, s.cfg().n));
  } else if (mode == "computed") {
    t = &s.computed();
  } else if (mode == "crosscheck") {
    CaseCoverage cov;
    t = &s.closed_table(&cov);
    out.reports.push_back(crosscheck(*t, s.computed()));
    if (s.family() == ClassFamily::H1) out.reports.push_back(coverage_report(cov, s.cfg().n));
  } else {
    throw UsageError("table mode must be closed, computed or crosscheck");
  }
  out.reports.push_back(ring_axioms(*t, 18, 2000, s.cfg().seed));
  out.payload["table"] = t->to_json();
  out.text = table_text(*t);
  out.csv = t->to_csv();
  return out;
}

Outcome cmd_verify(Session& s) {
  need_args(s.cfg(), 1, "verify <target>");
  const std::string& name = s.cfg().args[0];
  for (const auto& t : targets())
    if (t.name == name) {
      Outcome out;
      out.reports = t.run(s);
      out.payload["target"] = name;
      return out;
    }
  std::string all;
  for (const auto& t : targets()) all += (all.empty() ? "" : ", ") + t.name;
  throw UsageError("unknown target '" + name + "' (known: " + all + ")");
}

Outcome cmd_export(Session& s) {
  need_args(s.cfg(), 1, "export structure|modules|table");
  const std::string& what = s.cfg().args[0];
  Outcome out;
  if (what == "structure") {
    out.payload["structure"] = structure_constants_json(s.ctx());
  } else if (what == "modules") {
    const ModuleSystem& sys = s.modules();
    Json simples = Json::array(), covers = Json::array();
    for (std::size_t k = 0; k < sys.size(); ++k) {
      simples.push_back(module_json(sys.simple(k)));
      covers.push_back(module_json(sys.pim(k)));
    }
    out.payload["simples"] = simples;
    out.payload["covers"] = covers;
    out.payload["cartan"] = sys.cartan();
  } else if (what == "table") {
    const FusionTable& t = s.cfg().computed ? s.computed() : s.closed_table();
    out.payload["table"] = t.to_json();
    out.csv = t.to_csv();
  } else {
    throw UsageError("unknown export '" + what + "'");
  }
  out.text = out.payload.dump(2) + "\n";
  return out;
}

Json config_json(const RunConfig& cfg) {
  Json c;
  c["family"] = cfg.family;
  c["n"] = cfg.n;
  if (cfg.family == "hpq") c["p"] = cfg.p;
  c["seed"] = cfg.seed;
  if (!cfg.mode.empty()) c["mode"] = cfg.mode;
  if (cfg.computed) c["table"] = "computed";
  return c;
}

std::string command_line(const RunConfig& cfg) {
  std::string s = cfg.command;
  for (const auto& a : cfg.args) s += " " + a;
  return s;
}

}  // namespace

const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& t : targets()) out.push_back(t.name);
    return out;
  }();
  return names;
}

std::string resolve_output_path(const std::string& output) {
  if (output.empty() || output == "-") return {};
  std::filesystem::path p(output);
  if (p.is_relative())
    if (const char* dir = std::getenv("HOPFCLASS_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  return p.string();
}

RunResult run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command_line(cfg);
  doc["config"] = config_json(cfg);
  RunResult result;
  Outcome out;
  std::string error;
  try {
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv")
      throw UsageError("format must be text, json or csv");
    Session s(cfg);
    if (cfg.command == "algebra")
      out = cmd_algebra(s);
    else if (cfg.command == "modules")
      out = cmd_modules(s);
    else if (cfg.command == "fuse")
      out = cmd_fuse(s);
    else if (cfg.command == "table")
      out = cmd_table(s);
    else if (cfg.command == "verify")
      out = cmd_verify(s);
    else if (cfg.command == "export")
      out = cmd_export(s);
    else
      throw UsageError("unknown command '" + cfg.command + "'");
    if (cfg.format == "csv" && !out.csv) throw UsageError("csv output is only available for tables");
  } catch (const UsageError& e) {
    error = e.what();
    result.exit_code = 2;
  } catch (const std::exception& e) {
    // Internal consistency failures (e.g. a module system that does not
    // close up) are check failures, not usage errors.
    error = e.what();
    result.exit_code = 1;
  }

  bool passed = error.empty();
  for (const auto& r : out.reports) passed = passed && r.passed();
  if (result.exit_code == 0 && !passed) result.exit_code = 1;

  doc["status"] = !error.empty() ? "error" : passed ? "pass" : "fail";
  if (!error.empty()) doc["error"] = error;
  Json reports = Json::array();
  for (const auto& r : out.reports) reports.push_back(to_json(r));
  doc["reports"] = reports;
  if (error.empty() && !out.payload.is_null()) doc["result"] = out.payload;
  if (cfg.timing)
    doc["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (cfg.format == "json") {
    result.output = doc.dump(2) + "\n";
  } else if (cfg.format == "csv" && error.empty()) {
    result.output = *out.csv;
  } else {
    std::string text = error.empty() ? out.text : std::string();
    for (const auto& r : out.reports) text += to_text(r);
    if (!error.empty()) text += "error: " + error + "\n";
    if (cfg.timing) text += "time: " + doc["timing_seconds"].dump() + " s\n";
    result.output = text;
  }
  return result;
}

}  // namespace hopfclass
