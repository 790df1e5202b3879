#include "hopfclass/green_ring.hpp"

#include <doctest.h>

using namespace hopfclass;

namespace {

const AlgebraContext& ctx_for(Family f, int n, int p) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<AlgebraContext>> cache;
  auto& slot = cache[{static_cast<int>(f), n, p}];
  if (!slot) {
    AlgebraSpec spec{f, n, {}};
    if (f == Family::Hpq) spec.p = CycloField::get(n).integer(p);
    slot = std::make_unique<AlgebraContext>(spec);
  }
  return *slot;
}

const ModuleSystem& system_for(Family f, int n, int p) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<ModuleSystem>> cache;
  auto& slot = cache[{static_cast<int>(f), n, p}];
  if (!slot) slot = std::make_unique<ModuleSystem>(ModuleSystem::build(ctx_for(f, n, p)));
  return *slot;
}

std::string fuse_text(ClassFamily f, int n, const std::string& a, const std::string& b) {
  const bool h1 = f == ClassFamily::H1;
  return ring_text(closed_form_fusion(f, n, parse_label(a, h1, n), parse_label(b, h1, n)));
}

const BasisLabel v(int l, int r) { return {LabelKind::V, l, r}; }
const BasisLabel pr(int l, int r) { return {LabelKind::Pr, l, r}; }

}  // namespace

TEST_CASE("closed-form products of H_3(1,q)") {
  const auto f = ClassFamily::H1;
  CHECK(fuse_text(f, 3, "V(1,1)", "V(2,0)") == "V(2,1)");
  CHECK(fuse_text(f, 3, "V(2,0)", "V(2,0)") == "V(3,0) + V(1,1)");
  CHECK(fuse_text(f, 3, "V(2,0)", "P(1,0)") == "2·V(3,1) + P(2,0)");
  CHECK(fuse_text(f, 3, "P(1,0)", "V(2,0)") == "2·V(3,1) + P(2,0)");
  CHECK(fuse_text(f, 3, "V(3,0)", "P(1,0)") == "2·V(3,0) + 2·P(2,2)");
  CHECK(fuse_text(f, 3, "V(2,0)", "V(3,0)") == "P(2,1)");
}

TEST_CASE("closed-form products of the basic algebras") {
  CHECK(fuse_text(ClassFamily::TensorTaft, 3, "S(1,2)", "S(2,2)") == "S(0,1)");
  CHECK(fuse_text(ClassFamily::TensorTaft, 3, "P(2,2)", "S(1,2)") == "P(0,1)");
  const RingElt pp = closed_form_fusion(ClassFamily::TensorTaft, 3, {LabelKind::P, 1, 0}, {LabelKind::P, 2, 2});
  CHECK(pp.size() == 9);
  CHECK(fuse_text(ClassFamily::H0, 3, "P(0,0)", "P(0,0)") == "3·P(0,0) + 3·P(1,1) + 3·P(2,2)");
  CHECK(fuse_text(ClassFamily::H0, 3, "P(1,0)", "P(0,2)") == "3·P(0,1) + 3·P(1,2) + 3·P(2,0)");
}

TEST_CASE("every tensor product rule is used at n=4 and none is missing") {
  CaseCoverage cov;
  (void)closed_form_table(ClassFamily::H1, 4, &cov);
  CHECK(cov.missing().empty());
  CaseCoverage cov3;
  (void)closed_form_table(ClassFamily::H1, 3, &cov3);
  // l = 1 is handled by the twisting rules, so these index ranges are empty.
  CHECK(cov3.missing() == std::vector<int>{5, 8});
  CHECK_THROWS_AS((void)closed_form_fusion(ClassFamily::H1, 3, {LabelKind::S, 0, 0}, v(1, 0)), std::logic_error);
  CHECK_THROWS_AS((void)closed_form_fusion(ClassFamily::H1, 3, v(4, 0), pr(1, 0)), std::logic_error);
}

TEST_CASE("ring text and arithmetic") {
  RingElt x;
  add_to(x, v(2, 0), 2);
  add_to(x, pr(1, 1), -1);
  CHECK(ring_text(x) == "2·V(2,0) - P(1,1)");
  add_to(x, v(2, 0), -2);
  CHECK(x.size() == 1);
  CHECK(ring_text(RingElt{}) == "0");
  CHECK(ring_json(x).dump() == R"js([{"label":"P(1,1)","mult":-1}])js");
}

TEST_CASE("closed-form tables are commutative associative rings") {
  for (auto f : {ClassFamily::TensorTaft, ClassFamily::H0, ClassFamily::H1}) {
    for (int n : {3, 4}) {
      const Report r = ring_axioms(closed_form_table(f, n));
      INFO(to_text(r));
      CHECK(r.passed());
    }
  }
}

TEST_CASE("closed form equals the matrix computation at n=3") {
  struct Case {
    Family family;
    int p;
    std::size_t size;
  };
  for (const Case& c : {Case{Family::TensorTaft, 0, 18}, Case{Family::Hpq, 0, 18}, Case{Family::Hpq, 1, 15}}) {
    const auto& sys = system_for(c.family, 3, c.p);
    const FusionTable computed = computed_table(sys);
    CHECK(computed.basis().size() == c.size);
    const Report r = crosscheck(closed_form_table(class_family(sys.context().spec()), 3), computed);
    INFO(to_text(r));
    CHECK(r.passed());
    CHECK(ring_axioms(computed).passed());
  }
  const auto& h0 = system_for(Family::Hpq, 3, 0);
  const FusionTable t = computed_table(h0);
  CHECK(ring_text(t.product({LabelKind::P, 0, 0}, {LabelKind::P, 0, 0})) == "3·P(0,0) + 3·P(1,1) + 3·P(2,2)");
}

TEST_CASE("crosscheck reports the first discrepancy") {
  const FusionTable good = closed_form_table(ClassFamily::H1, 3);
  FusionTable bad = good;
  bad.set(good.index(v(2, 0)), good.index(v(2, 0)), FusionTable::cls(v(3, 0)));
  const Report r = crosscheck(good, bad);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure().rfind("all entries agree", 0) == 0);
  CHECK(to_text(r).find("V(2,0) (x) V(2,0): closed form V(3,0) + V(1,1), computed V(3,0)") != std::string::npos);
}

TEST_CASE("presentations of the class rings") {
  for (int n : {3, 4}) {
    for (auto f : {ClassFamily::TensorTaft, ClassFamily::H0, ClassFamily::H1}) {
      const FusionTable t = closed_form_table(f, n);
      const PresentationSpec spec = class_ring_presentation(f, n);
      CHECK(spec.normal_forms.size() == (f == ClassFamily::H1 ? n * (2 * n - 1) : 2 * n * n));
      const Report r = verify_presentation(t, spec);
      INFO(to_text(r));
      CHECK(r.passed());
    }
  }
  const PresentationSpec h1 = class_ring_presentation(ClassFamily::H1, 3);
  // (y^3 - 3xy - 2)(y^2 - x)
  const Poly x = Poly::var(2, 0), y = Poly::var(2, 1);
  const Poly expected = (Poly::var(2, 1, 3) - 3 * (x * y) - Poly::constant(2, 2)) * (Poly::var(2, 1, 2) - x);
  CHECK(h1.relations.at(1).terms == expected.terms);
  const PresentationSpec h0 = class_ring_presentation(ClassFamily::H0, 3);
  CHECK(h0.relations.at(2).to_string({"x", "y", "z"}) == "-3*x^2*z - 3*x*z + z^2 - 3*z");
  // A non-basis monomial set is detected.
  PresentationSpec broken = h1;
  broken.normal_forms.back() = {0, 0};
  CHECK_FALSE(verify_presentation(closed_form_table(ClassFamily::H1, 3), broken).passed());
}

TEST_CASE("integer determinant") {
  CHECK(integer_determinant({{2, 1}, {1, 1}}) == 1);
  CHECK(integer_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(integer_determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(integer_determinant({{1, 2, 3}, {0, 1, 4}, {5, 6, 0}}) == 1);
}

TEST_CASE("identities in r_p(H_n(1,q))") {
  for (int n : {3, 4, 5}) {
    const Report r = identity_suite_h1(closed_form_table(ClassFamily::H1, n));
    INFO(to_text(r));
    CHECK(r.passed());
  }
  const FusionTable t3 = closed_form_table(ClassFamily::H1, 3);
  const RingElt x = FusionTable::cls(v(1, 1)), y = FusionTable::cls(v(2, 0));
  CHECK(t3.mul(y, FusionTable::cls(v(3, 0))) == FusionTable::cls(pr(2, 1)));
  CHECK(t3.mul(x, FusionTable::cls(pr(2, 0))) == FusionTable::cls(pr(2, 1)));
  CHECK(add(t3.pow(y, 2), x, -1) == FusionTable::cls(v(3, 0)));
  const Report only = identity_suite_h1(t3, "cor5.4");
  for (const auto& c : only.checks) CHECK(c.name.rfind("cor5.4", 0) == 0);
  CHECK_FALSE(identity_suite_h1(t3, "no-such-family").passed());
}

TEST_CASE("V(2,0) cubed at n=4, computed from modules") {
  const auto& sys = system_for(Family::Hpq, 4, 1);
  const Module& y = sys.module_of(v(2, 0));
  const Module cube = tensor_module(tensor_module(y, y), y);
  CHECK(decomp_text(sys.decompose(cube)) == "V(4,0) + 2·V(2,1)");
  const FusionTable t4 = closed_form_table(ClassFamily::H1, 4);
  CHECK(ring_text(t4.pow(FusionTable::cls(v(2, 0)), 3)) == "V(4,0) + 2·V(2,1)");
}

TEST_CASE("radicals of the projective class algebras") {
  for (int n : {3, 4}) {
    const Report tt = class_algebra_radical(closed_form_table(ClassFamily::TensorTaft, n));
    INFO(to_text(tt));
    CHECK(tt.passed());
    CHECK(tt.data["quotient_dim"] == n * n + 1);
    const Report h0 = class_algebra_radical(closed_form_table(ClassFamily::H0, n));
    INFO(to_text(h0));
    CHECK(h0.passed());
    CHECK(h0.data["quotient_dim"] == n * (n + 1));
  }
  CHECK_THROWS_AS((void)class_algebra_radical(closed_form_table(ClassFamily::H1, 3)), std::invalid_argument);
}

TEST_CASE("Gabriel quiver of H_3(0,q)") {
  const Report r = quiver_check_h0(ctx_for(Family::Hpq, 3, 0));
  INFO(to_text(r));
  CHECK(r.passed());
  CHECK(r.data["vertices"] == 3);
  CHECK(r.data["arrows"] == 6);
  for (const auto& s : r.data["commutation_scalars"]) CHECK(s["q_power"] == 1);
}
