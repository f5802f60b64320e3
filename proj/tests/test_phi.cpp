#include <doctest.h>

#include "holo/corpus.hpp"
#include "holo/errors.hpp"
#include "holo/phi.hpp"
#include "support.hpp"

using namespace holo;
using support::vec;

namespace {

Subspace span_of(std::size_t n, std::initializer_list<Vector> vs) { return Subspace::span(n, std::vector<Vector>(vs)); }

Representation rotation_plane() {
  return Representation(QuadraticSpace(Matrix::identity(2)),
                        {{GeneratorKind::group, Matrix{{Rational(3) / 5, Rational(-4) / 5}, {Rational(4) / 5, Rational(3) / 5}}}});
}

void check_witness(const Representation& rep, const Matrix& p) {
  CHECK(p * p == p);
  for (const auto& g : rep.generators()) CHECK(p * g.matrix == g.matrix * p);
  const std::size_t r = rank(p);
  CHECK(r > 0);
  CHECK(r < rep.dim());
}

void check_pair(const Representation& rep, const IsotropicPair& pair) {
  const QuadraticSpace& qs = rep.space();
  CHECK(restrict_form(qs, pair.u1).is_zero());
  CHECK(restrict_form(qs, pair.u2).is_zero());
  CHECK(is_invariant(rep, pair.u1));
  CHECK(is_invariant(rep, pair.u2));
  CHECK(independent({pair.u1, pair.u2}));
  CHECK(pair.u1.dim() + pair.u2.dim() == rep.dim());
}

}  // namespace

TEST_SUITE("phi") {

TEST_CASE("module_indecomposable examples") {
  const auto plane = module_indecomposable(rotation_plane(), 1);
  CHECK(plane.verdict == ModuleVerdict::indecomposable_certified);
  CHECK(!plane.witness);

  const auto wu = corpus::wu_factor();
  const auto split = module_indecomposable(wu.rep, 1);
  REQUIRE(split.verdict == ModuleVerdict::decomposable);
  REQUIRE(split.witness);
  check_witness(wu.rep, *split.witness);

  const Representation id(QuadraticSpace(Matrix::identity(3)), {{GeneratorKind::group, Matrix::identity(3)}});
  const auto trivial = module_indecomposable(id, 1);
  CHECK(trivial.verdict == ModuleVerdict::decomposable);
  REQUIRE(trivial.witness);
  check_witness(id, *trivial.witness);

  const Representation line(QuadraticSpace(Matrix::identity(1)), {});
  CHECK(module_indecomposable(line).verdict == ModuleVerdict::indecomposable_certified);
}

TEST_CASE("the listed isotropic planes split the single block") {
  const auto wu = corpus::wu_factor();
  const Subspace a = span_of(4, {vec({1, 0, 0, 1}), vec({0, 1, 1, 0})});
  const Subspace b = span_of(4, {vec({1, 0, 0, -1}), vec({0, 1, -1, 0})});
  check_pair(wu.rep, IsotropicPair{a, b});
  const Matrix p = projector(a, b);
  check_witness(wu.rep, p);
  // The search is free to return a different pair; it must be valid too.
  const auto found = isotropic_pair_split(wu.rep, p, 0);
  REQUIRE(found);
  check_pair(wu.rep, *found);
  CHECK(((found->u1 == a && found->u2 == b) || (found->u1 == b && found->u2 == a)));
}

TEST_CASE("isotropic_pair_split examples") {
  const auto wu = corpus::wu_factor();
  const auto m = module_indecomposable(wu.rep, 3);
  REQUIRE(m.witness);
  const auto pair = isotropic_pair_split(wu.rep, *m.witness, 3);
  REQUIRE(pair);
  check_pair(wu.rep, *pair);

  const Representation id(QuadraticSpace(Matrix::identity(2)), {{GeneratorKind::group, Matrix::identity(2)}});
  const auto mi = module_indecomposable(id, 1);
  REQUIRE(mi.witness);
  CHECK(!isotropic_pair_split(id, *mi.witness, 1));

  CHECK_THROWS_AS(isotropic_pair_split(wu.rep, Matrix::identity(4)), PreconditionError);
  CHECK_THROWS_AS(isotropic_pair_split(wu.rep, projector(span_of(4, {vec({1, 0, 0, 0})}), span_of(4, {vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}))),
                  PreconditionError);
}

TEST_CASE("isotropic pair on W1 in its own coordinates") {
  const auto product = corpus::wu_product();
  const Matrix w1_rows = product.find("W1/W2")->parts[0].basis();
  const Representation on_w1 = restrict_to_basis(product.rep, w1_rows);
  const auto m = module_indecomposable(on_w1, 2);
  REQUIRE(m.verdict == ModuleVerdict::decomposable);
  const auto pair = isotropic_pair_split(on_w1, *m.witness, 2);
  REQUIRE(pair);
  check_pair(on_w1, *pair);
  // Transported back, the pair lives in W1 and stays isotropic there.
  for (const Subspace* u : {&pair->u1, &pair->u2}) {
    std::vector<Vector> ambient;
    for (const auto& v : u->basis_vectors()) ambient.push_back(w1_rows.transpose() * v);
    const Subspace lifted = Subspace::span(8, ambient);
    CHECK(product.find("W1/W2")->parts[0].contains(lifted));
    CHECK(is_totally_isotropic(product.rep.space(), lifted));
    CHECK(is_invariant(product.rep, lifted));
  }
}

TEST_CASE("printed one-parameter plane family is not invariant") {
  const auto wu = corpus::wu_factor();
  for (const Rational& t : std::vector<Rational>{0, 1, 2, -1, Rational(1) / 2}) {
    const Subspace v2 = span_of(4, {vec({1, t, -1, t}), vec({t, 1, t, -1})});
    CHECK(!is_invariant(wu.rep, v2));
  }
}

TEST_CASE("neutral_signature_screen examples") {
  const auto wu = decompose(corpus::wu_factor().rep, 0);
  CHECK(neutral_signature_screen(wu) == std::vector<bool>{true});
  const auto lorentz = *corpus::find_instance("lorentz-null");
  const auto lr = decompose(lorentz.rep, 0);
  REQUIRE(lr.summands.size() == 1);
  CHECK(lr.summands[0].signature == Signature{2, 1, 0});
  CHECK(neutral_signature_screen(lr) == std::vector<bool>{false});
  const auto rz = decompose(corpus::find_instance("rotation-z")->rep, 0);
  CHECK(neutral_signature_screen(rz) == std::vector<bool>{false});
}

TEST_CASE("phi_check examples") {
  const auto rz = *corpus::find_instance("rotation-z");
  const auto a = phi_check(rz.rep, decompose(rz.rep, 0));
  CHECK(a.status == PhiStatus::satisfied_certified);
  CHECK(a.witnesses.empty());

  const auto product = corpus::wu_product();
  const auto report = decompose(product.rep, 0);
  const auto b = phi_check(product.rep, report);
  CHECK(b.status == PhiStatus::violated);
  CHECK(b.decomposable_count() == 2);
  REQUIRE(b.witnesses.size() == 2);
  for (const auto& w : b.witnesses) {
    CHECK(w.verdict == ModuleVerdict::decomposable);
    REQUIRE(w.projector);
    check_witness(product.rep, *w.projector);
    CHECK(w.summand.contains(image(*w.projector)));
    REQUIRE(w.isotropic_pair);
    CHECK(w.summand.contains(w.isotropic_pair->u1));
    CHECK(is_totally_isotropic(product.rep.space(), w.isotropic_pair->u1));
  }

  const Representation definite(QuadraticSpace(Matrix::identity(4)),
                                {{GeneratorKind::group, Matrix::direct_sum(Matrix{{0, -1}, {1, 0}}, Matrix::identity(2))}});
  const auto c = phi_check(definite, decompose(definite, 0));
  CHECK(c.status == PhiStatus::satisfied_certified);

  CHECK_THROWS_AS(phi_check(rz.rep, report), PreconditionError);
}

TEST_CASE("phi_check matches the corpus expectations") {
  for (const auto& inst : corpus::all_instances()) {
    const auto verdict = phi_check(inst.rep, decompose(inst.rep, 0));
    if (inst.expected.phi) CHECK_MESSAGE(verdict.status == *inst.expected.phi, inst.name);
    if (verdict.status == PhiStatus::violated) {
      bool has_witness = false;
      for (const auto& w : verdict.witnesses) has_witness = has_witness || (w.projector && w.summand.dim() > 0);
      CHECK(has_witness);
    }
  }
}

TEST_CASE("isotropic pairs imply a neutral summand") {
  for (const auto& inst : corpus::all_instances()) {
    const auto report = decompose(inst.rep, 0);
    const auto screen = neutral_signature_screen(report);
    const auto verdict = phi_check(inst.rep, report);
    for (const auto& w : verdict.witnesses) {
      if (!w.isotropic_pair) continue;
      const Summand& s = report.summands[w.summand_index];
      CHECK(screen[w.summand_index]);
      CHECK(s.signature.n_plus == w.isotropic_pair->u1.dim());
      CHECK(s.signature.n_minus == w.isotropic_pair->u2.dim());
      CHECK(restrict_form(inst.rep.space(), w.isotropic_pair->u1).is_zero());
      CHECK(restrict_form(inst.rep.space(), w.isotropic_pair->u2).is_zero());
    }
  }
}

TEST_CASE("witnesses on random representations") {
  support::Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const Representation rep = support::random_representation(rng, rng.range(2, 5));
    const auto m = module_indecomposable(rep, trial);
    if (m.verdict == ModuleVerdict::decomposable) {
      REQUIRE(m.witness);
      check_witness(rep, *m.witness);
      const auto pair = isotropic_pair_split(rep, *m.witness, trial);
      if (pair) check_pair(rep, *pair);
    } else {
      CHECK(!m.witness);
    }
  }
}

TEST_CASE("oracle evidence never flips a satisfied verdict") {
  for (const auto& inst : corpus::all_instances()) {
    const auto report = decompose(inst.rep, 0);
    const auto plain = phi_check(inst.rep, report);
    const auto with_oracle = phi_check(inst.rep, report, PhiOptions{0, {5, 7, 11}});
    if (plain.satisfied()) CHECK(with_oracle.satisfied());
    if (plain.status == PhiStatus::satisfied_certified) CHECK(with_oracle.status == PhiStatus::satisfied_certified);
    CHECK(with_oracle.decomposable_count() == plain.decomposable_count());
  }
}

}
