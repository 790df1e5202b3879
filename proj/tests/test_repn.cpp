#include "hopfclass/repn.hpp"

#include <doctest.h>

#include <random>

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

BasisLabel lab(const std::string& s, const ModuleSystem& sys) {
  return parse_label(s, sys.context().is_h1(), sys.context().n());
}

DecompVector fuse(const ModuleSystem& sys, const std::string& x, const std::string& y) {
  return sys.decompose(tensor_module(sys.module_of(lab(x, sys)), sys.module_of(lab(y, sys))));
}

/// Sparse unimodular change of basis P = L U with entries in {-1, 0, 1}.
std::pair<Mat, Mat> random_unimodular(const CycloField& k, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 5), sign(0, 1);
  Mat l = Mat::identity(k, dim), u = Mat::identity(k, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      if (r == c || coin(rng) != 0) continue;
      (r > c ? l : u)(r, c) = k.integer(sign(rng) ? 1 : -1);
    }
  Mat p = l * u;
  return {p, *inverse(p)};
}

}  // namespace

TEST_CASE("labels parse and render") {
  CHECK(parse_label("V(2,0)", true, 3).to_string() == "V(2,0)");
  CHECK(parse_label("P(3,1)", true, 3) == BasisLabel{LabelKind::V, 3, 1});
  CHECK(parse_label("P(2,4)", true, 3) == BasisLabel{LabelKind::Pr, 2, 1});
  CHECK(parse_label("Pr(1,0)", true, 3).to_string() == "P(1,0)");
  CHECK(parse_label(" S( 1 , -1 )", false, 3) == BasisLabel{LabelKind::S, 1, 2});
  CHECK_THROWS_AS((void)parse_label("V(0,0)", true, 3), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_label("V(1,0)", false, 3), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_label("Q(1,0)", false, 3), std::invalid_argument);
  // Display order puts larger V first.
  CHECK(BasisLabel{LabelKind::V, 3, 0} < BasisLabel{LabelKind::V, 1, 1});
  CHECK(BasisLabel{LabelKind::V, 3, 1} < BasisLabel{LabelKind::Pr, 2, 0});
}

TEST_CASE("simple modules of the tensor-product algebra") {
  const auto& ctx = ctx_for(Family::TensorTaft, 3, 0);
  const Algebra& h = ctx.algebra();
  const Module s00 = simple_S(h, 0, 0);
  for (int g = 0; g < h.num_generators(); ++g) CHECK(s00.action(g)(0, 0) == h.counit(h.generator(g)));
  const Module s12 = simple_S(h, 1, 2);
  CHECK(s12.action(h.generator_index("b"))(0, 0) == h.field().q());
  CHECK(s12.action(h.generator_index("c"))(0, 0) == h.field().q_pow(2));
  CHECK(hom_dim(s12, s12) == 1);
  CHECK(hom_dim(s00, simple_S(h, 1, 0)) == 0);
  // S(1,0) (x) S(0,1): b and c act by q.
  const Module t = tensor_module(simple_S(h, 1, 0), simple_S(h, 0, 1));
  CHECK(t.action(h.generator_index("b"))(0, 0) == h.field().q());
  CHECK(t.action(h.generator_index("c"))(0, 0) == h.field().q());
  // The trivial module is a unit for the tensor product.
  const Module p = projective_P(h, 1, 1);
  const Module up = tensor_module(s00, p);
  for (int g = 0; g < h.num_generators(); ++g) CHECK(up.action(g) == p.action(g));
}

TEST_CASE("projective covers of the tensor-product algebra") {
  const auto& sys = system_for(Family::TensorTaft, 3, 0);
  const Algebra& h = sys.algebra();
  const Module& p = sys.pim(0);
  CHECK(p.dim() == 9);
  const RadicalLayers layers = sys.radical_filtration(p);
  CHECK(layers.dims == std::vector<std::size_t>{1, 2, 3, 2, 1});
  for (long c : layers.composition) CHECK(c == 1);
  // End(P(S)) = e H e has dimension [P(S) : S], the weight-(0,0) count.
  CHECK(hom_dim(p, p) == 1);
  CHECK(p.character()[0] == 1);
  CHECK(hom_dim(p, sys.pim(1)) == 1);
  CHECK(hom_dim(p, simple_S(h, 0, 0)) == 1);
  for (const auto& row : sys.cartan())
    for (long c : row) CHECK(c == 1);
  // Weight spaces of the regular module have dim 9 and a permutes them.
  const Module reg = weight_normalize(regular_representation(h));
  for (auto d : reg.character()) CHECK(d == 9);
}

TEST_CASE("tensor-product algebra: P(0,0) (x) P(0,0) is the sum of all P(r,t)") {
  const auto& sys = system_for(Family::TensorTaft, 3, 0);
  const DecompVector d = fuse(sys, "P(0,0)", "P(0,0)");
  CHECK(d.simple_mults.empty());
  REQUIRE(d.proj_mults.size() == 9);
  for (const auto& [l, m] : d.proj_mults) CHECK(m == 1);
  CHECK(decomp_dim(d, sys) == 81);
  CHECK(fuse(sys, "S(1,2)", "P(2,2)") == fuse(sys, "P(2,2)", "S(1,2)"));
  CHECK(decomp_text(fuse(sys, "S(1,2)", "P(2,2)")) == "P(0,1)");
}

TEST_CASE("H_3(0,q): PIM diagram scalars and fusion") {
  const auto& ctx = ctx_for(Family::Hpq, 3, 0);
  const Algebra& h = ctx.algebra();
  const Module p = projective_P(h, 0, 0);
  const Mat& d = p.action(h.generator_index("d"));
  // basis index k*n + l holds a^k d^l e; d maps it to q^k a^k d^{l+1} e.
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l + 1 < 3; ++l)
      CHECK(d(static_cast<std::size_t>(k * 3 + l + 1), static_cast<std::size_t>(k * 3 + l)) == h.field().q_pow(k));
  const auto& sys = system_for(Family::Hpq, 3, 0);
  const RadicalLayers layers = sys.radical_filtration(sys.pim(0));
  for (std::size_t s = 0; s < sys.size(); ++s)
    CHECK(layers.composition[s] == (sys.simple_label(s).i == sys.simple_label(s).j ? 3 : 0));
  const DecompVector pp = fuse(sys, "P(0,0)", "P(0,0)");
  CHECK(decomp_text(pp) == "3·P(0,0) + 3·P(1,1) + 3·P(2,2)");
}

TEST_CASE("search-based simples agree with the closed constructions") {
  const auto& ctx = ctx_for(Family::TensorTaft, 3, 0);
  const ModuleSystem found = ModuleSystem::discover(ctx, 7);
  const auto& closed = system_for(Family::TensorTaft, 3, 0);
  REQUIRE(found.size() == 9);
  for (std::size_t s = 0; s < 9; ++s) {
    CHECK(found.simple(s).dim() == 1);
    std::size_t matches = 0;
    for (std::size_t t = 0; t < 9; ++t)
      if (hom_dim(found.simple(s), closed.simple(t)) == 1) {
        ++matches;
        CHECK(found.pim(s).dim() == 9);
        CHECK(hom_dim(found.pim(s), closed.simple(t)) == 1);
      }
    CHECK(matches == 1);
  }
}

TEST_CASE("H_3(1,q): simples, covers and labels") {
  const auto& sys = system_for(Family::Hpq, 3, 1);
  REQUIRE(sys.size() == 9);
  std::vector<std::size_t> dims;
  for (std::size_t s = 0; s < 9; ++s) {
    dims.push_back(sys.simple(s).dim());
    CHECK(hom_dim(sys.simple(s), sys.simple(s)) == 1);
    CHECK(sys.simple(s).dim() == static_cast<std::size_t>(sys.simple_label(s).i));
    if (sys.simple_label(s).i < 3) {
      CHECK(sys.pim(s).dim() == 6);
      CHECK_FALSE(sys.projective_simple(s));
    } else {
      CHECK(sys.projective_simple(s));
    }
  }
  CHECK(dims == std::vector<std::size_t>{1, 1, 1, 2, 2, 2, 3, 3, 3});
  const Algebra& h = sys.algebra();
  CHECK(hom_dim(sys.simple(0), simple_S(h, 0, 0)) == 1);
  CHECK(decomp_text(fuse(sys, "V(2,0)", "V(2,0)")) == "V(3,0) + V(1,1)");
  CHECK(decomp_text(fuse(sys, "V(2,0)", "V(3,0)")) == "P(2,1)");
  CHECK(decomp_text(fuse(sys, "V(1,1)", "V(2,0)")) == "V(2,1)");
  CHECK(decomp_text(fuse(sys, "V(2,0)", "P(1,0)")) == "2·V(3,1) + P(2,0)");
  CHECK(decomp_text(fuse(sys, "V(3,0)", "P(1,0)")) == "2·V(3,0) + 2·P(2,2)");
  CHECK(sys.basis().size() == 15);
}

TEST_CASE("decompose is invariant under a change of basis") {
  const auto& sys = system_for(Family::Hpq, 3, 1);
  const auto& k = sys.algebra().field();
  std::mt19937_64 rng(11);
  const Module m = tensor_module(sys.module_of(lab("V(2,0)", sys)), sys.module_of(lab("P(1,0)", sys)));
  const DecompVector ref = sys.decompose(m);
  for (int trial = 0; trial < 5; ++trial) {
    auto [p, pinv] = random_unimodular(k, m.dim(), rng);
    CHECK(sys.decompose(conjugate(m, p, pinv)) == ref);
  }
  CHECK(sys.decompose(Module::zero(sys.algebra())).simple_mults.empty());
}
