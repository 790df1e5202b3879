#include "hopfclass/structure.hpp"

#include <doctest.h>

using namespace hopfclass;

namespace {

void require_pass(const Report& r) {
  INFO(to_text(r));
  CHECK(r.passed());
}

}  // namespace

TEST_CASE("Hopf axioms at n=3") {
  const auto& k = CycloField::get(3);
  for (const AlgebraSpec& spec :
       {AlgebraSpec{Family::TensorTaft, 3, std::nullopt}, AlgebraSpec{Family::Hpq, 3, k.zero()},
        AlgebraSpec{Family::Hpq, 3, k.one()}}) {
    auto h = build_algebra(spec);
    const Report r = verify_hopf_axioms(*h);
    require_pass(r);
    CHECK(r.data["elements_checked"] == 81);
  }
}

TEST_CASE("counit is a character") {
  const auto& k = CycloField::get(3);
  auto h = build_algebra({Family::Hpq, 3, k.one()});
  for (std::size_t u = 0; u < h->dim(); u += 7)
    for (std::size_t v = 0; v < h->dim(); v += 5)
      CHECK(h->counit(h->mul_basis(u, v)) == h->counit(u) * h->counit(v));
}

TEST_CASE("tensor product isomorphism") { require_pass(tensor_iso_check(3)); }

TEST_CASE("skew pairing") {
  const auto& k = CycloField::get(3);
  CHECK(skew_pairing_tau(k, k.one(), 0, 1, 2, 0).is_zero());
  CHECK(skew_pairing_tau(k, k.one(), 0, 0, 0, 0).is_one());
  CHECK(skew_pairing_tau(k, k.one(), 1, 2, 2, 1) == k.q() * (k.one() + k.q()));
  CHECK(skew_pairing_tau(k, k.zero(), 1, 0, 0, 2) == k.q_pow(2));
}

TEST_CASE("regular representation") {
  AlgebraContext ctx({Family::TensorTaft, 3, std::nullopt});
  const Module reg = regular_representation(ctx.algebra());
  CHECK(reg.dim() == 81);
  const Mat& a = reg.action(0);
  Mat p = Mat::identity(ctx.field(), 81);
  for (int e = 1; e <= 3; ++e) {
    p = a * p;
    CHECK(p.is_zero() == (e == 3));
  }
  const Mat& b = reg.action(1);
  CHECK((b * b * b) == Mat::identity(ctx.field(), 81));
  const auto w = weight_decomposition(reg);
  CHECK(w.size() == 9);
  for (const auto& [id, s] : w) CHECK(s.dim() == 9);
}

TEST_CASE("structure of the three algebras at n=3") {
  const auto& k = CycloField::get(3);
  AlgebraContext t({Family::TensorTaft, 3, std::nullopt});
  AlgebraContext h0({Family::Hpq, 3, k.zero()});
  AlgebraContext h1({Family::Hpq, 3, k.one()});
  for (const AlgebraContext* c : {&t, &h0}) {
    require_pass(check_group_idempotents(*c));
    const Report r = radical_report(*c);
    require_pass(r);
    CHECK(r.data["dim_radical"] == 72);
    CHECK(r.data["loewy_length"] == 5);
  }
  const Report r1 = radical_report(h1);
  require_pass(r1);
  require_pass(integrals_and_symmetry(t));
  require_pass(integrals_and_symmetry(h0));
  const Report c0 = center_and_blocks(t);
  require_pass(c0);
  CHECK(c0.data["block_count"] == 1);
  require_pass(center_and_blocks(h0));
  require_pass(center_and_blocks(h1));
  require_pass(blocks_isomorphic_h0(h0));
}

TEST_CASE("semisimple fixture has Loewy length 1") {
  // Group algebra of b, c alone: Taft-style presentation without nilpotents.
  Presentation p;
  p.name = "K[Z3xZ3]";
  p.n = 3;
  p.field = &CycloField::get(3);
  p.gens = {{"b", GenKind::GroupLike}, {"c", GenKind::GroupLike}};
  p.swaps = {{1, 0, p.field->one(), {}}};
  p.coproduct = {{{p.field->one(), {0}, {0}}}, {{p.field->one(), {1}, {1}}}};
  p.counit = {p.field->one(), p.field->one()};
  p.antipode = {{{p.field->one(), {0, 0}}}, {{p.field->one(), {1, 1}}}};
  Algebra h(p);
  const RadicalInfo rad = jacobson_radical(h);
  CHECK(rad.ideal.dim() == 0);
  CHECK(rad.loewy_length() == 1);
}
