#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "holo/cli.hpp"
#include "holo/corpus.hpp"
#include "holo/errors.hpp"
#include "holo/io.hpp"

using namespace holo;
using namespace holo::io;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "holodecomp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "holo_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

std::string exported(const std::string& name) {
  const Run r = run({"export", name});
  REQUIRE(r.code == exit_ok);
  return write_temp(name + ".json", r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze output") {
  const Run wu = run({"analyze", exported("wu-factor")});
  CHECK(wu.code == exit_ok);
  CHECK(wu.out.find("fixed space: dim 2, totally isotropic: yes") != std::string::npos);
  CHECK(wu.out.find("duality (fixed space = moved span perp): holds") != std::string::npos);

  const Run id = run({"analyze", exported("identity"), "--json"});
  CHECK(id.code == exit_ok);
  const Json doc = Json::parse(id.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["command"] == "analyze");
  CHECK(doc["result"]["fixed_space"]["dimension"] == 2);
  CHECK(doc["result"]["moved_span"]["dimension"] == 0);
  CHECK(doc["result"]["duality_holds"] == true);
}

TEST_CASE("parse errors carry the field path") {
  Json doc = export_instance(corpus::wu_factor());
  doc["generators"][0]["matrix"][1][2] = "1/0";
  const Run r = run({"analyze", write_temp("bad-rational.json", doc.dump())});
  CHECK(r.code == exit_parse);
  CHECK(r.err.find("generators[0].matrix[1][2]") != std::string::npos);

  const Run broken = run({"analyze", write_temp("broken.json", "{ not json")});
  CHECK(broken.code == exit_parse);

  Json missing = export_instance(corpus::wu_factor());
  missing.erase("gram");
  const Run m = run({"decompose", write_temp("missing.json", missing.dump())});
  CHECK(m.code == exit_parse);
  CHECK(m.err.find("gram") != std::string::npos);

  CHECK(run({"analyze", "/nonexistent/instance.json"}).code == exit_parse);
  CHECK(run({"frobnicate"}).code == exit_parse);
  CHECK(run({"decompose", exported("identity"), "--json", "--text"}).code == exit_parse);
}

TEST_CASE("invariant violations") {
  Json doc = export_instance(corpus::wu_factor());
  doc["generators"][0]["matrix"][0][0] = "1";
  const Run r = run({"decompose", write_temp("not-skew.json", doc.dump())});
  CHECK(r.code == exit_invariant);

  Json singular = export_instance(corpus::identity_instance());
  singular["gram"][1][1] = "0";
  CHECK(run({"analyze", write_temp("singular.json", singular.dump())}).code == exit_invariant);
}

TEST_CASE("bad references") {
  const std::string path = exported("wu-product");
  CHECK(run({"compare", path, "E/F", "nope"}).code == exit_bad_reference);
  CHECK(run({"demo", "nope"}).code == exit_bad_reference);
  CHECK(run({"export", "nope"}).code == exit_bad_reference);
}

TEST_CASE("decompose output") {
  const Run product = run({"decompose", exported("wu-product"), "--json"});
  REQUIRE(product.code == exit_ok);
  const Json doc = Json::parse(product.out);
  CHECK(doc["result"]["p1"] == 0);
  CHECK(doc["result"]["p2"] == 2);
  for (const auto& s : doc["result"]["summands"]) CHECK(s["kind"] == "fixed_isotropic");

  const Run rz = run({"decompose", exported("rotation-z"), "--json"});
  const Json r = Json::parse(rz.out);
  CHECK(r["result"]["p1"] == 1);
  CHECK(r["result"]["summands"].size() == 1);
  CHECK(r["result"]["trivial_part"]["dimension"] == 1);

  const Run id = run({"decompose", exported("identity"), "--json"});
  const Json i = Json::parse(id.out);
  CHECK(i["result"]["summands"].empty());
  CHECK(i["result"]["trivial_part"]["kind"] == "trivial_flat");
  CHECK(i["result"]["trivial_part"]["dimension"] == 2);

  const Run text = run({"decompose", exported("wu-product")});
  CHECK(text.code == exit_ok);
  CHECK(text.out.find("fixed_isotropic") != std::string::npos);
}

TEST_CASE("decompose output matches the golden file") {
  const Run r = run({"decompose", exported("wu-product"), "--json", "--seed", "0"});
  std::ifstream in(std::string(HOLO_GOLDEN_DIR) + "/wu-product.decompose.json", std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(r.out == buf.str());
}

TEST_CASE("phi, compare and demo") {
  const Run phi = run({"phi", exported("rotation-z"), "--json"});
  CHECK(Json::parse(phi.out)["result"]["status"] == "satisfied_certified");

  const std::string product = exported("wu-product");
  const Run same = run({"compare", product, "E/F", "E/F", "--json"});
  CHECK(Json::parse(same.out)["result"]["verdict"] == "identical");
  const Run cmp = run({"compare", product, "E/F", "W1/W2", "--json"});
  const Json c = Json::parse(cmp.out);
  CHECK(c["result"]["verdict"] == "equivalent_up_to_isometry");
  CHECK(c["result"].contains("isometry"));

  const Run demo = run({"demo", "wu-product"});
  CHECK(demo.code == exit_ok);
  CHECK(demo.out.find("E/F") != std::string::npos);
  CHECK(demo.out.find("W1/W2") != std::string::npos);
  CHECK(demo.out.find("violated") != std::string::npos);
  CHECK(demo.out.find("nonunique_witnessed") != std::string::npos);

  const Run oracle = run({"phi", exported("wu-factor"), "--json", "--oracle-primes", "5,7"});
  CHECK(oracle.code == exit_ok);
  CHECK(run({"phi", exported("wu-factor"), "--oracle-primes", "5,x"}).code == exit_parse);
}

TEST_CASE("runs are byte-identical for a fixed seed") {
  for (const auto& inst : corpus::all_instances()) {
    const std::string path = exported(inst.name);
    for (const char* fmt : {"--json", "--text"}) {
      const Run a = run({"decompose", path, "--seed", "11", fmt});
      const Run b = run({"decompose", path, "--seed", "11", fmt});
      CHECK(a.code == exit_ok);
      CHECK(a.out == b.out);
    }
  }
}

TEST_CASE("export and parse round trip") {
  for (const auto& inst : corpus::all_instances()) {
    const Json first = export_instance(inst);
    const corpus::Instance parsed = parse_instance(first);
    CHECK(parsed.rep == inst.rep);
    CHECK(parsed.decompositions.size() == inst.decompositions.size());
    for (const auto& d : inst.decompositions) {
      REQUIRE(parsed.find(d.name));
      CHECK(parsed.find(d.name)->parts == d.parts);
    }
    const Json second = export_instance(parsed);
    CHECK(dump(first) == dump(second));
    CHECK(load_instance(write_temp("rt.json", dump(first))).rep == inst.rep);
  }
}

TEST_CASE("re-serialized reports are stable") {
  const Run r = run({"decompose", exported("wu-plus-line"), "--json"});
  CHECK(dump(Json::parse(r.out)) == r.out);
}

}
