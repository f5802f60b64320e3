#include <doctest.h>

#include "holo/corpus.hpp"
#include "holo/errors.hpp"
#include "support.hpp"

using namespace holo;
using support::vec;

namespace {

Representation identity_rep(std::size_t n) {
  return Representation(QuadraticSpace(Matrix::identity(n)), {{GeneratorKind::group, Matrix::identity(n)}});
}

Representation quarter_turn() {
  return Representation(QuadraticSpace(Matrix::identity(2)), {{GeneratorKind::group, Matrix{{0, -1}, {1, 0}}}});
}

Subspace span_of(std::size_t n, std::initializer_list<Vector> vs) { return Subspace::span(n, std::vector<Vector>(vs)); }

}  // namespace

TEST_SUITE("representation") {

TEST_CASE("generator validation") {
  const QuadraticSpace qs(Matrix::diagonal({1, 1, -1, -1}));
  CHECK_NOTHROW(Representation(qs, {{GeneratorKind::infinitesimal, corpus::wu_nilpotent()}}));
  CHECK_THROWS_AS(Representation(qs, {{GeneratorKind::infinitesimal, Matrix::identity(4)}}), InvariantViolation);
  CHECK_THROWS_AS(Representation(qs, {{GeneratorKind::group, Matrix::diagonal({2, 1, 1, 1})}}), InvariantViolation);
  CHECK_THROWS_AS(Representation(qs, {{GeneratorKind::group, Matrix::identity(3)}}), DimensionError);
  const Matrix n = corpus::wu_nilpotent();
  CHECK((n.transpose() * qs.gram() + qs.gram() * n).is_zero());
}

TEST_CASE("fixed space examples") {
  CHECK(fixed_space(identity_rep(3)).is_full());
  const auto wu = corpus::wu_factor();
  CHECK(fixed_space(wu.rep) == span_of(4, {vec({1, 0, 1, 0}), vec({0, 1, 0, 1})}));
  const auto product = corpus::wu_product();
  CHECK(support::same_span(fixed_space(product.rep).basis_vectors(),
                           {vec({1, 0, 1, 0, 0, 0, 0, 0}), vec({0, 1, 0, 1, 0, 0, 0, 0}),
                            vec({0, 0, 0, 0, 1, 0, 1, 0}), vec({0, 0, 0, 0, 0, 1, 0, 1})}));
}

TEST_CASE("moved span examples") {
  CHECK(moved_span(identity_rep(3)).is_zero());
  const auto wu = corpus::wu_factor();
  CHECK(moved_span(wu.rep) == span_of(4, {vec({1, 0, 1, 0}), vec({0, 1, 0, 1})}));
  CHECK(moved_span(quarter_turn()).is_full());
}

TEST_CASE("invariance examples") {
  const auto wu = corpus::wu_factor();
  CHECK(is_invariant(wu.rep, fixed_space(wu.rep)));
  CHECK(!is_invariant(wu.rep, span_of(4, {vec({1, 0, 0, 0})})));
  const auto product = corpus::wu_product();
  const Subspace& w1 = product.find("W1/W2")->parts[0];
  CHECK(is_invariant(product.rep, w1));
  // Direct check of N e1 and N e2 against the printed W1 vectors.
  const Matrix g = product.rep.generators()[0].matrix;
  const std::vector<Vector> w1_vectors{vec({1, 0, 0, 0, -1, 0, -1, 0}), vec({0, 1, 0, 0, 0, 0, 0, 0}),
                                       vec({0, 0, 1, 0, 1, 0, 1, 0}), vec({0, 0, 0, 1, 0, 0, 0, 0})};
  for (const auto& v : w1_vectors) {
    CHECK(support::in_span(w1_vectors, support::apply(g, v)));
    CHECK(support::in_span(w1_vectors, support::apply(product.rep.generators()[1].matrix, v)));
  }
  CHECK_THROWS_AS(is_invariant(wu.rep, Subspace(3)), DimensionError);
}

TEST_CASE("restriction examples") {
  const auto wu = corpus::wu_factor();
  const Representation full = restrict(wu.rep, Subspace::full(4));
  CHECK(full.space() == wu.rep.space());
  CHECK(full.generators()[0].matrix == corpus::wu_nilpotent());

  const auto product = corpus::wu_product();
  const Matrix w1_rows{{1, 0, 0, 0, -1, 0, -1, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 0, 0}};
  const Representation on_w1 = restrict_to_basis(product.rep, w1_rows);
  CHECK(on_w1.space().gram() == Matrix::diagonal({1, 1, -1, -1}));
  CHECK(on_w1.generators()[0].matrix == corpus::wu_nilpotent());
  CHECK(on_w1.generators()[1].matrix.is_zero());

  CHECK_THROWS_AS(restrict(wu.rep, fixed_space(wu.rep)), PreconditionError);
  CHECK_THROWS_AS(restrict(wu.rep, span_of(4, {vec({1, 0, 0, 0})})), PreconditionError);
}

TEST_CASE("commutant examples") {
  CHECK(commutant(identity_rep(2)).size() == 4);
  CHECK(commutant(quarter_turn()).size() == 2);
  for (const auto& x : commutant(quarter_turn())) CHECK(x * Matrix{{0, -1}, {1, 0}} == Matrix{{0, -1}, {1, 0}} * x);

  const auto wu = corpus::wu_factor();
  const auto c = commutant(wu.rep);
  std::vector<Vector> flat;
  for (const auto& x : c) flat.push_back(flatten(x));
  CHECK(support::in_span(flat, flatten(Matrix::identity(4))));
  CHECK(support::in_span(flat, flatten(corpus::wu_nilpotent())));
  CHECK(c.size() == support::commutant_dim(wu.rep, false));
}

TEST_CASE("self-adjoint commutant examples") {
  CHECK(selfadjoint_commutant(identity_rep(2)).size() == 3);
  const auto wu = corpus::wu_factor();
  const auto sa = selfadjoint_commutant(wu.rep);
  std::vector<Vector> flat;
  for (const auto& x : sa) flat.push_back(flatten(x));
  const Matrix& g = wu.rep.space().gram();
  const Matrix n = corpus::wu_nilpotent();
  CHECK(!(g * n - n.transpose() * g).is_zero());
  CHECK(!support::in_span(flat, flatten(n)));
  CHECK(support::in_span(flat, flatten(Matrix::identity(4))));
  CHECK(sa.size() == support::commutant_dim(wu.rep, true));
  for (const auto& inst : corpus::all_instances()) {
    std::vector<Vector> f;
    for (const auto& x : selfadjoint_commutant(inst.rep)) f.push_back(flatten(x));
    CHECK(support::in_span(f, flatten(Matrix::identity(inst.rep.dim()))));
    CHECK(f.size() == support::commutant_dim(inst.rep, true));
    CHECK(commutant(inst.rep).size() == support::commutant_dim(inst.rep, false));
  }
}

TEST_CASE("factor generators") {
  const auto product = corpus::wu_product();
  const Matrix n = corpus::wu_nilpotent();
  const Matrix z(4, 4);
  const auto ef = factor_generators(product.rep, product.find("E/F")->parts);
  REQUIRE(ef.factors.size() == 2);
  REQUIRE(ef.factors[0].generators.size() == 1);
  REQUIRE(ef.factors[1].generators.size() == 1);
  CHECK(ef.factors[0].generators[0].matrix == Matrix::direct_sum(n, z));
  CHECK(ef.factors[1].generators[0].matrix == Matrix::direct_sum(z, n));

  const auto w = factor_generators(product.rep, product.find("W1/W2")->parts);
  REQUIRE(w.factors.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (const auto& gen : w.factors[i].generators) {
      const Subspace& other = product.find("W1/W2")->parts[1 - i];
      for (const auto& v : other.basis_vectors()) CHECK(is_zero(gen.matrix * v));
    }
  }

  const auto wu = corpus::wu_factor();
  const auto single = factor_generators(wu.rep, {Subspace::full(4)});
  REQUIRE(single.factors.size() == 1);
  CHECK(single.factors[0].generators == wu.rep.generators());
  CHECK_THROWS_AS(factor_generators(wu.rep, {fixed_space(wu.rep)}), PreconditionError);
}

TEST_CASE("factor generators recombine to the original action") {
  for (const auto& inst : corpus::all_instances()) {
    for (const auto& d : inst.decompositions) {
      std::vector<Subspace> summands;
      for (const auto& p : d.parts)
        if (!acts_trivially(inst.rep, p)) summands.push_back(p);
      const auto fd = factor_generators(inst.rep, summands);
      for (std::size_t g = 0; g < inst.rep.generators().size(); ++g) {
        const Generator& orig = inst.rep.generators()[g];
        for (const auto& f : fd.factors) {
          for (const auto& fg : f.generators) {
            for (const auto& other : summands) {
              if (other == f.summand) continue;
              for (const auto& v : other.basis_vectors()) CHECK(is_zero(fg.action() * v));
            }
          }
        }
        Matrix combined = orig.kind == GeneratorKind::group ? Matrix::identity(inst.rep.dim()) : Matrix(inst.rep.dim(), inst.rep.dim());
        for (const auto& f : fd.factors) {
          for (const auto& fg : f.generators) {
            if (fg.kind != orig.kind) continue;
            bool matches = true;
            for (const auto& v : f.summand.basis_vectors()) matches = matches && fg.matrix * v == orig.matrix * v;
            if (!matches) continue;
            combined = orig.kind == GeneratorKind::group ? combined * fg.matrix : combined + fg.matrix;
            break;
          }
        }
        CHECK(combined == orig.matrix);
      }
    }
  }
}

TEST_CASE("duality and invariance on random representations") {
  support::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Representation rep = support::random_representation(rng, rng.range(2, 5));
    const Subspace fixed = fixed_space(rep);
    const Subspace moved = moved_span(rep);
    CHECK(fixed == orth_complement(rep.space(), moved));
    CHECK(is_invariant(rep, fixed));
    CHECK(is_invariant(rep, moved));
    std::vector<Vector> c, sa;
    for (const auto& x : commutant(rep)) c.push_back(flatten(x));
    for (const auto& x : selfadjoint_commutant(rep)) sa.push_back(flatten(x));
    CHECK(support::in_span(c, flatten(Matrix::identity(rep.dim()))));
    CHECK(support::naive_rank(c) == support::naive_rank([&] {
            auto both = c;
            both.insert(both.end(), sa.begin(), sa.end());
            return both;
          }()));
  }
}

TEST_CASE("moved span is stable under generator words") {
  support::Rng rng(32);
  for (const auto& inst : corpus::all_instances()) {
    const Representation& rep = inst.rep;
    const std::size_t n = rep.dim();
    std::vector<Matrix> group;
    for (const auto& g : rep.generators()) {
      if (g.kind == GeneratorKind::group) {
        group.push_back(g.matrix);
        group.push_back(inverse(g.matrix));
      } else if (g.matrix.pow(n).is_zero()) {
        group.push_back(nilpotent_exp(g.matrix, 1));
        group.push_back(nilpotent_exp(g.matrix, Rational(-1, 2)));
      }
    }
    if (group.empty()) continue;
    const Subspace moved = moved_span(rep);
    for (int k = 0; k < 20; ++k) {
      Matrix w = Matrix::identity(n);
      const long len = rng.range(1, 4);
      for (long i = 0; i < len; ++i) w = w * group[rng.range(0, static_cast<long>(group.size()) - 1)];
      CHECK(moved.contains(image(w - Matrix::identity(n))));
    }
  }
}

TEST_CASE("exponentials of nilpotent generators preserve the form") {
  support::Rng rng(33);
  for (const auto& inst : corpus::all_instances()) {
    const Matrix& g = inst.rep.space().gram();
    for (const auto& gen : inst.rep.generators()) {
      if (gen.kind != GeneratorKind::infinitesimal || !gen.matrix.pow(gen.matrix.rows()).is_zero()) continue;
      for (int k = 0; k < 5; ++k) {
        const Matrix e = nilpotent_exp(gen.matrix, rng.small_rational());
        CHECK(e.transpose() * g * e == g);
      }
    }
  }
}

}
