// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is 0 iff every criterion passes.

#include "hopfclass/green_ring.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>

using namespace hopfclass;

namespace {

// Pinned envelope for criterion 9, in seconds.  The targets are stated for an
// 8-core machine; we measure with whatever --jobs the harness was given.
constexpr double kSuiteLimitN3 = 120.0;
constexpr double kSuiteLimitN4 = 900.0;
constexpr double kHopfLimitN3 = 30.0;
constexpr double kHopfLimitN4 = 300.0;
// Sampled axiom checks at n >= 4 (full when dim <= samples).
constexpr std::size_t kHopfSamples = 500;
// Seeded basis changes per decomposition fixture.
constexpr int kInvarianceTrials = 20;

unsigned g_jobs = 1;

struct Fixture {
  Family family;
  int p;  // only for Hpq
};
const Fixture kTT{Family::TensorTaft, 0}, kH0{Family::Hpq, 0}, kH1{Family::Hpq, 1};
const Fixture kAll[] = {kTT, kH0, kH1};

const AlgebraContext& ctx_for(const Fixture& f, int n) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<AlgebraContext>> cache;
  auto& slot = cache[{static_cast<int>(f.family), n, f.p}];
  if (!slot) {
    AlgebraSpec spec{f.family, n, {}};
    if (f.family == Family::Hpq) spec.p = CycloField::get(n).integer(f.p);
    slot = std::make_unique<AlgebraContext>(spec);
  }
  return *slot;
}

const ModuleSystem& system_for(const Fixture& f, int n) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<ModuleSystem>> cache;
  auto& slot = cache[{static_cast<int>(f.family), n, f.p}];
  if (!slot) slot = std::make_unique<ModuleSystem>(ModuleSystem::build(ctx_for(f, n), 0, g_jobs));
  return *slot;
}

const FusionTable& computed_for(const Fixture& f, int n) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<FusionTable>> cache;
  auto& slot = cache[{static_cast<int>(f.family), n, f.p}];
  if (!slot) slot = std::make_unique<FusionTable>(computed_table(system_for(f, n), g_jobs));
  return *slot;
}

ClassFamily class_of(const Fixture& f) { return class_family(ctx_for(f, 3).spec()); }

/// Collects the checks of one criterion and the time spent per n.
class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void add(const std::string& where, const Report& r) {
    ok_ = ok_ && r.passed();
    for (const auto& c : r.checks)
      if (!c.passed) lines_.push_back("FAIL " + where + " / " + r.title + " / " + c.name + ": " + c.detail);
    lines_.push_back((r.passed() ? "ok   " : "bad  ") + where + ": " + r.title + " (" +
                     std::to_string(r.checks.size()) + " checks)");
  }
  void add(const std::string& where, bool ok, const std::string& detail = {}) {
    ok_ = ok_ && ok;
    lines_.push_back((ok ? "ok   " : "FAIL ") + where + (detail.empty() ? "" : ": " + detail));
  }

  /// Runs `body`, charging its wall time to size n.
  void timed(int n, const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const std::exception& e) {
      add("n=" + std::to_string(n), false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    seconds_[n] += s;
    total_seconds()[n] += s;
  }

  bool finish() const {
    std::cout << "criterion " << number_ << " (" << title_ << "): " << (ok_ ? "PASS" : "FAIL");
    for (const auto& [n, s] : seconds_) std::cout << "  n=" << n << " " << std::fixed << std::setprecision(1) << s << "s";
    std::cout << "\n";
    for (const auto& l : lines_) std::cout << "    " << l << "\n";
    std::cout.flush();
    return ok_;
  }

  double seconds(int n) const {
    auto it = seconds_.find(n);
    return it == seconds_.end() ? 0.0 : it->second;
  }

  static std::map<int, double>& total_seconds() {
    static std::map<int, double> t;
    return t;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> lines_;
  std::map<int, double> seconds_;
};

std::string at(const Fixture& f, int n) { return ctx_for(f, n).label(); }

/// Sparse unimodular change of basis P = L U with entries in {-1, 0, 1}.
std::pair<Mat, Mat> random_unimodular(const CycloField& k, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 4), sign(0, 1);
  Mat l = Mat::identity(k, dim), u = Mat::identity(k, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      if (r == c || coin(rng) != 0) continue;
      (r > c ? l : u)(r, c) = k.integer(sign(rng) ? 1 : -1);
    }
  Mat p = l * u;
  return {p, *inverse(p)};
}

bool criterion1() {
  Criterion c(1, "Hopf axioms");
  for (int n : {3, 4, 5})
    c.timed(n, [&] {
      for (const auto& f : kAll) {
        const Algebra& h = ctx_for(f, n).algebra();
        // At n = 3 the sample budget exceeds dim = 81, so every basis element is checked.
        const Report r = verify_hopf_axioms(h, kHopfSamples, 0, g_jobs);
        c.add(at(f, n), r);
        if (n == 3) c.add(at(f, n) + " exhaustive", h.dim() == 81 && h.dim() <= kHopfSamples);
      }
    });
  c.add("n=3 under " + std::to_string(static_cast<int>(kHopfLimitN3)) + " s", c.seconds(3) < kHopfLimitN3);
  c.add("n=4 under " + std::to_string(static_cast<int>(kHopfLimitN4)) + " s", c.seconds(4) < kHopfLimitN4);
  return c.finish();
}

bool criterion2() {
  Criterion c(2, "structure facts");
  for (int n : {3, 4})
    c.timed(n, [&] {
      for (const auto& f : kAll) {
        const AlgebraContext& ctx = ctx_for(f, n);
        const Report rad = radical_report(ctx);
        c.add(at(f, n), rad);
        if (f.p != 1)
          c.add(at(f, n) + " Loewy length 2n-1", rad.data["loewy_length"] == 2 * n - 1,
                rad.data["loewy_length"].dump());
        const Report blocks = center_and_blocks(ctx);
        c.add(at(f, n), blocks);
        const int expected = f.family == Family::TensorTaft ? 1 : f.p == 0 ? n : n * (n + 1) / 2;
        c.add(at(f, n) + " block count " + std::to_string(expected), blocks.data["block_count"] == expected,
              blocks.data["block_count"].dump());
        if (f.p == 1) continue;
        const Report sym = integrals_and_symmetry(ctx);
        c.add(at(f, n), sym);
        c.add(at(f, n) + (f.family == Family::Hpq ? " unimodular" : " not unimodular"),
              sym.data["unimodular"] == (f.family == Family::Hpq));
      }
    });
  return c.finish();
}

bool criterion3() {
  Criterion c(3, "fusion oracle equivalence");
  const std::map<ClassFamily, std::size_t> sizes3 = {
      {ClassFamily::TensorTaft, 18}, {ClassFamily::H0, 18}, {ClassFamily::H1, 15}};
  c.timed(3, [&] {
    for (const auto& f : kAll) {
      const FusionTable& computed = computed_for(f, 3);
      c.add(at(f, 3) + " grid " + std::to_string(sizes3.at(class_of(f))) + "x" + std::to_string(sizes3.at(class_of(f))),
            computed.basis().size() == sizes3.at(class_of(f)));
      c.add(at(f, 3), crosscheck(closed_form_table(class_of(f), 3), computed));
    }
  });
  c.timed(4, [&] {
    for (const auto& f : {kTT, kH0, kH1}) c.add(at(f, 4), crosscheck(closed_form_table(class_of(f), 4), computed_for(f, 4)));
    CaseCoverage cov;
    (void)closed_form_table(ClassFamily::H1, 4, &cov);
    std::string hits;
    for (int k = 1; k <= 11; ++k) hits += (k > 1 ? " " : "") + std::to_string(cov.hits[static_cast<std::size_t>(k)]);
    c.add("n=4 every one of the 11 product rules exercised", cov.missing().empty(), "hits " + hits);
  });
  return c.finish();
}

bool criterion4() {
  Criterion c(4, "presentations");
  for (int n : {3, 4, 5})
    c.timed(n, [&] {
      for (auto f : {ClassFamily::TensorTaft, ClassFamily::H0, ClassFamily::H1}) {
        if (n == 5 && f != ClassFamily::H1) continue;
        const PresentationSpec spec = class_ring_presentation(f, n);
        const std::size_t want = f == ClassFamily::H1 ? n * (2 * n - 1) : 2 * n * n;
        c.add(class_family_name(f) + " n=" + std::to_string(n) + " normal forms " + std::to_string(want),
              spec.normal_forms.size() == want);
        c.add(class_family_name(f) + " n=" + std::to_string(n), verify_presentation(closed_form_table(f, n), spec));
      }
    });
  return c.finish();
}

bool criterion5() {
  Criterion c(5, "radicals of the class algebras");
  for (int n : {3, 4})
    c.timed(n, [&] {
      const Report tt = class_algebra_radical(closed_form_table(ClassFamily::TensorTaft, n));
      c.add("tensor-taft n=" + std::to_string(n), tt);
      c.add("tensor-taft n=" + std::to_string(n) + " quotient dim n^2+1", tt.data["quotient_dim"] == n * n + 1);
      const Report h0 = class_algebra_radical(closed_form_table(ClassFamily::H0, n));
      c.add("hpq(p=0) n=" + std::to_string(n), h0);
      c.add("hpq(p=0) n=" + std::to_string(n) + " quotient dim n(n+1)", h0.data["quotient_dim"] == n * (n + 1));
    });
  return c.finish();
}

bool criterion6() {
  Criterion c(6, "identity suite");
  for (int n : {3, 4, 5})
    c.timed(n, [&] {
      const Report r = identity_suite_h1(closed_form_table(ClassFamily::H1, n));
      c.add("n=" + std::to_string(n), r);
      for (const std::string family : {"lemma5.3", "cor5.4(1)", "cor5.4(7)", "prop5.5", "lemma5.6(1)", "lemma5.6(2)",
                                       "prop5.7", "cor5.8"}) {
        bool seen = false;
        for (const auto& ch : r.checks) seen = seen || ch.name.rfind(family, 0) == 0;
        c.add("n=" + std::to_string(n) + " covers " + family, seen);
      }
    });
  return c.finish();
}

bool criterion7() {
  Criterion c(7, "quiver of H_n(0,q)");
  for (int n : {3, 4})
    c.timed(n, [&] {
      const Report r = quiver_check_h0(ctx_for(kH0, n));
      c.add("n=" + std::to_string(n), r);
      c.add("n=" + std::to_string(n) + " 2n arrows", r.data["arrows"] == 2 * n, r.data["arrows"].dump());
      std::string scalars;
      for (const auto& s : r.data["commutation_scalars"]) scalars += " j=" + s["j"].dump() + ":q^" + s["q_power"].dump();
      c.add("n=" + std::to_string(n) + " measured commutation scalars", !r.data["commutation_scalars"].empty(), scalars);
    });
  return c.finish();
}

bool criterion8() {
  Criterion c(8, "robustness");
  c.timed(3, [&] {
    // Kept to dim <= 18: a dense conjugate of an 81-dimensional module takes
    // close to a minute to decompose, times 20 trials.
    struct Case {
      Fixture f;
      std::string a, op, b;  // op "(x)" tensor, "+" direct sum
    };
    const std::vector<Case> fixtures = {
        {kTT, "P(1,0)", "(x)", "S(2,1)"}, {kTT, "P(0,0)", "+", "S(1,1)"},  {kH0, "S(1,2)", "(x)", "P(2,0)"},
        {kH0, "P(0,0)", "+", "P(1,1)"},   {kH1, "V(2,0)", "(x)", "P(1,0)"}, {kH1, "V(3,0)", "(x)", "P(2,0)"},
        {kH1, "V(2,0)", "(x)", "V(2,0)"}, {kH1, "V(3,1)", "+", "P(1,2)"}};
    std::uint64_t seed = 0;
    for (const auto& [f, a, op, b] : fixtures) {
      const ModuleSystem& sys = system_for(f, 3);
      const bool h1 = sys.context().is_h1();
      const Module& ma = sys.module_of(parse_label(a, h1, 3));
      const Module& mb = sys.module_of(parse_label(b, h1, 3));
      const Module m = op == "+" ? direct_sum(ma, mb) : tensor_module(ma, mb);
      const DecompVector ref = sys.decompose(m);
      int agree = 0;
      for (int t = 0; t < kInvarianceTrials; ++t) {
        std::mt19937_64 rng(seed++);
        auto [p, pinv] = random_unimodular(sys.algebra().field(), m.dim(), rng);
        agree += sys.decompose(conjugate(m, p, pinv)) == ref;
      }
      c.add(at(f, 3) + " " + a + " " + op + " " + b + " invariant under basis change",
            agree == kInvarianceTrials, std::to_string(agree) + "/" + std::to_string(kInvarianceTrials) + " = " +
                                            decomp_text(ref));
    }
  });
  for (int n : {3, 4})
    c.timed(n, [&] {
      for (const auto& f : kAll) {
        const ModuleSystem& sys = system_for(f, n);
        std::size_t split = 0;
        for (std::size_t k = 0; k < sys.size(); ++k) split += hom_dim(sys.simple(k), sys.simple(k)) == 1;
        c.add(at(f, n) + " End(S) = K for every simple", split == sys.size(),
              std::to_string(split) + "/" + std::to_string(sys.size()));
        // Every grid entry: the multiplicities account for the whole tensor product.
        const FusionTable& t = computed_for(f, n);
        std::size_t bad = 0, entries = 0;
        for (std::size_t a = 0; a < t.basis().size(); ++a)
          for (std::size_t b = 0; b < t.basis().size(); ++b, ++entries) {
            std::size_t total = 0;
            for (const auto& [label, mult] : t.product(a, b)) total += sys.dim_of(label) * static_cast<std::size_t>(mult);
            bad += total != sys.dim_of(t.basis()[a]) * sys.dim_of(t.basis()[b]);
          }
        c.add(at(f, n) + " dimension bookkeeping on every grid entry", bad == 0,
              std::to_string(entries - bad) + "/" + std::to_string(entries));
      }
    });
  return c.finish();
}

bool criterion9(const std::filesystem::path& source_dir) {
  Criterion c(9, "performance envelope");
  const auto& t = Criterion::total_seconds();
  auto get = [&](int n) { return t.count(n) ? t.at(n) : 0.0; };
  std::ostringstream d3, d4;
  d3 << std::fixed << std::setprecision(1) << get(3) << " s of " << kSuiteLimitN3;
  d4 << std::fixed << std::setprecision(1) << get(4) << " s of " << kSuiteLimitN4;
  c.add("n=3 suite (jobs=" + std::to_string(g_jobs) + ")", get(3) < kSuiteLimitN3, d3.str());
  c.add("n=4 suite (jobs=" + std::to_string(g_jobs) + ")", get(4) < kSuiteLimitN4, d4.str());
  const auto bench = source_dir / "bench" / "bench_elimination.cpp";
  c.add("benchmark harness present", std::filesystem::exists(bench), bench.string());
  return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path source_dir = HOPFCLASS_SOURCE_DIR;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--jobs" && i + 1 < argc) g_jobs = static_cast<unsigned>(std::stoul(argv[++i]));
  }
  bool ok = true;
  ok &= criterion1();
  ok &= criterion2();
  ok &= criterion3();
  ok &= criterion4();
  ok &= criterion5();
  ok &= criterion6();
  ok &= criterion7();
  ok &= criterion8();
  ok &= criterion9(source_dir);
  std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return ok ? 0 : 1;
}
