#include "holo/corpus.hpp"

namespace holo::corpus {

namespace {

Subspace span_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  return Subspace::span(Matrix(rows));
}

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

Subspace coordinate_span(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<Vector> vs;
  for (std::size_t i = from; i < to; ++i) vs.push_back(unit(n, i));
  return Subspace::span(n, vs);
}

Generator infinitesimal(Matrix m) { return {GeneratorKind::infinitesimal, std::move(m)}; }
Generator group(Matrix m) { return {GeneratorKind::group, std::move(m)}; }

Matrix split_gram() { return Matrix::diagonal({1, 1, -1, -1}); }

}  // namespace

const NamedDecomposition* Instance::find(const std::string& decomposition) const {
  for (const auto& d : decompositions)
    if (d.name == decomposition) return &d;
  return nullptr;
}

Matrix wu_nilpotent() {
  return Matrix{{0, -1, 0, 1}, {1, 0, -1, 0}, {0, -1, 0, 1}, {1, 0, -1, 0}};
}

Instance wu_factor() {
  Representation rep(QuadraticSpace(split_gram()), {infinitesimal(wu_nilpotent())}, "wu-factor");
  return {"wu-factor",
          rep,
          {{"whole", {Subspace::full(4)}}},
          {0, 1, PhiStatus::violated, Uniqueness::unique_one_bad_factor}};
}

Instance wu_product() {
  const Matrix n = wu_nilpotent();
  const Matrix z(4, 4);
  const Matrix gram = Matrix::direct_sum(split_gram(), -split_gram());
  Representation rep(QuadraticSpace(gram),
                     {infinitesimal(Matrix::direct_sum(n, z)), infinitesimal(Matrix::direct_sum(z, n))},
                     "wu-product");
  // e1..e4 then f1..f4.
  const Subspace w1 = span_rows({{1, 0, 0, 0, -1, 0, -1, 0},
                                 {0, 1, 0, 0, 0, 0, 0, 0},
                                 {0, 0, 1, 0, 1, 0, 1, 0},
                                 {0, 0, 0, 1, 0, 0, 0, 0}});
  const Subspace w2 = span_rows({{-1, 0, -1, 0, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 1, 0, 0},
                                 {1, 0, 1, 0, 0, 0, 1, 0},
                                 {0, 0, 0, 0, 0, 0, 0, 1}});
  return {"wu-product",
          rep,
          {{"E/F", {coordinate_span(8, 0, 4), coordinate_span(8, 4, 8)}}, {"W1/W2", {w1, w2}}},
          {0, 2, PhiStatus::violated, Uniqueness::nonunique_witnessed}};
}

Instance identity_instance() {
  Representation rep(QuadraticSpace(Matrix::identity(2)), {}, "identity");
  return {"identity",
          rep,
          {{"whole", {Subspace::full(2)}}},
          {0, 0, PhiStatus::satisfied_certified, Uniqueness::unique_up_to_order}};
}

std::vector<Instance> phi_suite() {
  std::vector<Instance> out;
  const Matrix rotation{{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}};

  {
    Representation rep(QuadraticSpace(Matrix::identity(3)),
                       {group(Matrix::direct_sum(rotation, Matrix::identity(1)))}, "rotation-z");
    out.push_back({"rotation-z",
                   rep,
                   {{"axis/plane", {coordinate_span(3, 2, 3), coordinate_span(3, 0, 2)}}},
                   {1, 0, PhiStatus::satisfied_certified, Uniqueness::unique_up_to_order}});
  }
  {
    const Matrix gram = Matrix::direct_sum(split_gram(), Matrix::identity(2));
    Representation rep(QuadraticSpace(gram),
                       {infinitesimal(Matrix::direct_sum(wu_nilpotent(), Matrix(2, 2))),
                        group(Matrix::direct_sum(Matrix::identity(4), rotation))},
                       "wu-plus-plane");
    out.push_back({"wu-plus-plane",
                   rep,
                   {{"blocks", {coordinate_span(6, 0, 4), coordinate_span(6, 4, 6)}}},
                   {1, 1, PhiStatus::violated, Uniqueness::unique_one_bad_factor}});
  }
  {
    const Matrix gram = Matrix::direct_sum(split_gram(), Matrix::identity(1));
    Representation rep(QuadraticSpace(gram), {infinitesimal(Matrix::direct_sum(wu_nilpotent(), Matrix(1, 1)))},
                       "wu-plus-line");
    const Subspace shifted = span_rows({{1, 0, 1, 0, 1}});
    out.push_back({"wu-plus-line",
                   rep,
                   {{"m0-u", {coordinate_span(5, 4, 5), coordinate_span(5, 0, 4)}},
                    {"m0-shifted", {shifted, orth_complement(rep.space(), shifted)}}},
                   {0, 1, PhiStatus::violated, Uniqueness::unique_one_bad_factor}});
  }
  {
    Representation rep(QuadraticSpace(Matrix{{0, 1}, {1, 0}}), {group(Matrix::identity(2))}, "hyperbolic-trivial");
    out.push_back({"hyperbolic-trivial",
                   rep,
                   {{"whole", {Subspace::full(2)}}},
                   {0, 0, PhiStatus::satisfied_certified, Uniqueness::unique_up_to_order}});
  }
  {
    Representation rep(QuadraticSpace(Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}),
                       {infinitesimal(Matrix{{0, 1, 0}, {0, 0, -1}, {0, 0, 0}})}, "lorentz-null");
    out.push_back({"lorentz-null",
                   rep,
                   {{"whole", {Subspace::full(3)}}},
                   {0, 1, PhiStatus::satisfied_certified, Uniqueness::unique_up_to_order}});
  }
  return out;
}

std::vector<Instance> all_instances() {
  std::vector<Instance> out{wu_factor(), wu_product()};
  for (auto& i : phi_suite()) out.push_back(std::move(i));
  out.push_back(identity_instance());
  return out;
}

std::optional<Instance> find_instance(const std::string& name) {
  for (auto& i : all_instances())
    if (i.name == name) return i;
  return std::nullopt;
}

}  // namespace holo::corpus
