#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "holo/corpus.hpp"
#include "holo/io.hpp"
#include "support.hpp"

using namespace holo;
using namespace holo::io;
using support::vec;

namespace {

std::string golden_path(const std::string& name, const std::string& what) {
  std::string file = name;
  for (auto& c : file)
    if (c == '/') c = '_';
  return std::string(HOLO_GOLDEN_DIR) + "/" + file + "." + what + ".json";
}

// Set HOLO_REGEN_GOLDEN=1 to rewrite the files instead of comparing.
void check_golden(const std::string& name, const std::string& what, const std::string& text) {
  const std::string path = golden_path(name, what);
  if (std::getenv("HOLO_REGEN_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << text;
    return;
  }
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK_MESSAGE(buf.str() == text, "golden mismatch for " << path);
}

std::string verdict_document(const corpus::Instance& inst) {
  const auto report = decompose(inst.rep, 0);
  const auto phi = phi_check(inst.rep, report);
  const auto u = uniqueness_verdict(inst.rep, report, phi);
  Json doc;
  doc["p1"] = report.p1;
  doc["p2"] = report.p2;
  doc["phi"] = to_json(phi);
  doc["uniqueness"] = to_json(u);
  for (const auto& d : inst.decompositions) doc["valid"][d.name] = verify_decomposition(inst.rep, d.parts, 0).all_passed();
  return dump(envelope(inst.name, "verdicts", doc));
}

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("single block data") {
  const auto wu = corpus::wu_factor();
  const Matrix& n = wu.rep.generators()[0].matrix;
  CHECK(wu.rep.space().gram() == Matrix::diagonal({1, 1, -1, -1}));
  CHECK(wu.rep.generators()[0].kind == GeneratorKind::infinitesimal);
  CHECK(support::apply(n, support::unit(4, 0)) == vec({0, 1, 0, 1}));
  CHECK(support::apply(n, support::unit(4, 1)) == vec({-1, 0, -1, 0}));
  CHECK(support::apply(n, support::unit(4, 2)) == vec({0, -1, 0, -1}));
  CHECK(support::apply(n, support::unit(4, 3)) == vec({1, 0, 1, 0}));
  const Subspace v1 = Subspace::span(4, {vec({1, 0, 1, 0}), vec({0, 1, 0, 1})});
  CHECK(is_invariant(wu.rep, v1));
  CHECK(is_totally_isotropic(wu.rep.space(), v1));
}

TEST_CASE("product block data") {
  const auto product = corpus::wu_product();
  CHECK(product.rep.dim() == 8);
  REQUIRE(product.rep.generators().size() == 2);
  const auto& wp = product.find("W1/W2")->parts;
  const Matrix& g = product.rep.space().gram();
  const std::vector<Vector> w1{vec({1, 0, 0, 0, -1, 0, -1, 0}), vec({0, 1, 0, 0, 0, 0, 0, 0}), vec({0, 0, 1, 0, 1, 0, 1, 0}),
                               vec({0, 0, 0, 1, 0, 0, 0, 0})};
  const std::vector<Vector> w2{vec({-1, 0, -1, 0, 1, 0, 0, 0}), vec({0, 0, 0, 0, 0, 1, 0, 0}), vec({1, 0, 1, 0, 0, 0, 1, 0}),
                               vec({0, 0, 0, 0, 0, 0, 0, 1})};
  CHECK(wp[0] == Subspace::span(8, w1));
  CHECK(wp[1] == Subspace::span(8, w2));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(support::pairing(g, w1[i], w2[j]) == 0);
      CHECK(support::pairing(g, w1[i], w1[j]) == (i != j ? 0 : (i < 2 ? 1 : -1)));
    }
}

TEST_CASE("known decompositions verify") {
  for (const auto& inst : corpus::all_instances()) {
    for (const auto& d : inst.decompositions) {
      const auto report = verify_decomposition(inst.rep, d.parts, 0);
      CHECK_MESSAGE(report.all_passed(), inst.name << "/" << d.name);
    }
  }
}

TEST_CASE("expectations hold") {
  for (const auto& inst : corpus::all_instances()) {
    const auto report = decompose(inst.rep, 0);
    if (inst.expected.p1) CHECK_MESSAGE(report.p1 == *inst.expected.p1, inst.name);
    if (inst.expected.p2) CHECK_MESSAGE(report.p2 == *inst.expected.p2, inst.name);
  }
}

TEST_CASE("instances are found by name") {
  for (const auto& inst : corpus::all_instances()) {
    const auto found = corpus::find_instance(inst.name);
    REQUIRE(found);
    CHECK(found->rep == inst.rep);
  }
  CHECK(!corpus::find_instance("no-such-instance"));
  CHECK(corpus::wu_factor().find("whole"));
  CHECK(!corpus::wu_factor().find("nothing"));
}

TEST_CASE("golden decompositions") {
  for (const auto& inst : corpus::all_instances()) {
    check_golden(inst.name, "decompose", dump(envelope(inst.name, "decompose", to_json(decompose(inst.rep, 0)))));
    check_golden(inst.name, "verdicts", verdict_document(inst));
  }
}

}
