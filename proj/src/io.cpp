#include "holo/io.hpp"

#include <fstream>
#include <sstream>

#include "holo/errors.hpp"

namespace holo::io {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw ParseError(path.empty() ? key : path + "." + key, "missing field");
  return obj.at(key);
}

Rational parse_scalar(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (!v.is_string()) throw ParseError(path, "expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

Matrix parse_matrix(const Json& v, const std::string& path, std::size_t cols) {
  if (!v.is_array()) throw ParseError(path, "expected an array of rows");
  Matrix m(v.size(), cols);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Json& row = v[i];
    if (!row.is_array()) throw ParseError(at(path, i), "expected an array");
    if (row.size() != cols) {
      throw ParseError(at(path, i), "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_scalar(row[j], at(at(path, i), j));
  }
  return m;
}

Matrix parse_square(const Json& v, const std::string& path, std::size_t n) {
  if (!v.is_array() || v.size() != n) throw ParseError(path, "expected " + std::to_string(n) + " rows");
  return parse_matrix(v, path, n);
}

}  // namespace

corpus::Instance parse_instance(const Json& doc) {
  if (!doc.is_object()) throw ParseError("", "instance must be a JSON object");
  const Json& name = field(doc, "name", "");
  if (!name.is_string()) throw ParseError("name", "expected a string");
  const Json& dim = field(doc, "dimension", "");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) {
    throw ParseError("dimension", "expected a positive integer");
  }
  const std::size_t n = dim.get<std::size_t>();
  const Matrix gram = parse_square(field(doc, "gram", ""), "gram", n);

  std::vector<Generator> generators;
  const Json& gens = field(doc, "generators", "");
  if (!gens.is_array()) throw ParseError("generators", "expected an array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = at("generators", i);
    if (!gens[i].is_object()) throw ParseError(path, "expected an object");
    const Json& kind = field(gens[i], "kind", path);
    GeneratorKind k;
    if (kind == "group") {
      k = GeneratorKind::group;
    } else if (kind == "infinitesimal") {
      k = GeneratorKind::infinitesimal;
    } else {
      throw ParseError(path + ".kind", "expected \"group\" or \"infinitesimal\"");
    }
    generators.push_back({k, parse_square(field(gens[i], "matrix", path), path + ".matrix", n)});
  }

  const std::string label = name.get<std::string>();
  corpus::Instance out{label, Representation(QuadraticSpace(gram), std::move(generators), label), {}, {}};
  if (doc.contains("decompositions")) {
    const Json& decs = doc.at("decompositions");
    if (!decs.is_object()) throw ParseError("decompositions", "expected an object of named part lists");
    for (const auto& [key, parts] : decs.items()) {
      const std::string path = "decompositions." + key;
      if (!parts.is_array()) throw ParseError(path, "expected an array of basis matrices");
      corpus::NamedDecomposition d{key, {}};
      for (std::size_t i = 0; i < parts.size(); ++i) {
        d.parts.push_back(Subspace::span(parse_matrix(parts[i], at(path, i), n)));
      }
      out.decompositions.push_back(std::move(d));
    }
  }
  return out;
}

corpus::Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path, e.what());
  }
  return parse_instance(doc);
}

Json export_instance(const corpus::Instance& instance) {
  const Representation& rep = instance.rep;
  Json gens = Json::array();
  for (const auto& g : rep.generators()) gens.push_back({{"kind", to_string(g.kind)}, {"matrix", to_json(g.matrix)}});
  Json doc{{"name", instance.name},
           {"dimension", rep.dim()},
           {"gram", to_json(rep.space().gram())},
           {"generators", gens}};
  if (!instance.decompositions.empty()) {
    Json decs = Json::object();
    for (const auto& d : instance.decompositions) {
      Json parts = Json::array();
      for (const auto& p : d.parts) parts.push_back(to_json(p));
      decs[d.name] = parts;
    }
    doc["decompositions"] = decs;
  }
  return doc;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Subspace& s) { return to_json(s.basis()); }

Json to_json(const Signature& s) {
  return {{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"n_zero", s.n_zero}};
}

namespace {

Json summand_json(const Summand& s) {
  return {{"kind", to_string(s.kind)},
          {"dimension", s.subspace.dim()},
          {"basis", to_json(s.subspace)},
          {"signature", to_json(s.signature)},
          {"fixed_dim", s.fixed_dim},
          {"moved_span", to_json(s.moved_span_local)},
          {"indecomposability",
           {{"certified", s.indecomposability.certified},
            {"retries", s.indecomposability.retries},
            {"method", s.indecomposability.method}}}};
}

}  // namespace

Json to_json(const DecompositionReport& report) {
  Json summands = Json::array();
  for (const auto& s : report.summands) summands.push_back(summand_json(s));
  Json certs = Json::array();
  for (const auto& c : report.certificates) {
    certs.push_back({{"parent", to_json(c.parent)}, {"projector", to_json(c.projector)}, {"source", c.source}});
  }
  return {{"seed", report.seed},
          {"trivial_part", summand_json(report.trivial_part)},
          {"summands", summands},
          {"p1", report.p1},
          {"p2", report.p2},
          {"certificates", certs}};
}

Json to_json(const ValidityReport& report) {
  Json clauses = Json::array();
  for (const auto& c : report.clauses) {
    clauses.push_back({{"name", c.name}, {"passed", c.passed}, {"applicable", c.applicable}, {"detail", c.detail}});
  }
  Json verdicts = Json::array();
  for (auto v : report.part_verdicts) verdicts.push_back(to_string(v));
  return {{"all_passed", report.all_passed()},
          {"clauses", clauses},
          {"part_verdicts", verdicts},
          {"orthogonality_forced_applicable", report.orthogonality_forced_applicable}};
}

Json to_json(const PhiVerdict& verdict) {
  Json witnesses = Json::array();
  for (const auto& w : verdict.witnesses) {
    Json j{{"summand_index", w.summand_index},
           {"neutral", w.neutral},
           {"verdict", to_string(w.verdict)},
           {"method", w.method}};
    if (w.projector) j["projector"] = to_json(*w.projector);
    if (w.isotropic_pair) j["isotropic_pair"] = {to_json(w.isotropic_pair->u1), to_json(w.isotropic_pair->u2)};
    witnesses.push_back(j);
  }
  return {{"status", to_string(verdict.status)}, {"witnesses", witnesses}, {"oracle_used", verdict.oracle_used}};
}

Json to_json(const ComparisonReport& report) {
  auto bools = [](const std::vector<bool>& v) {
    Json a = Json::array();
    for (bool b : v) a.push_back(b);
    return a;
  };
  Json j{{"matching", {{"ok", report.matching.ok}, {"partner", report.matching.partner}}},
         {"counts_equal", {{"p1", report.p1_equal}, {"p2", report.p2_equal}}},
         {"trivial_identical", report.trivial_identical},
         {"dims_equal", bools(report.dims_equal)},
         {"moved_spans_equal", bools(report.moved_spans_equal)},
         {"subspace_identical", bools(report.subspace_identical)},
         {"factors_equal", bools(report.factors_equal)},
         {"factor_comparison_bounded", report.factor_comparison_bounded},
         {"verdict", to_string(report.verdict)},
         {"diagnostics", report.diagnostics}};
  if (!report.matching.ok) j["matching"]["failure"] = report.matching.failure;
  if (report.isometry) {
    j["isometry"] = {{"matrix", to_json(report.isometry->matrix)},
                     {"block_structure", report.isometry->block_structure},
                     {"equivariant", report.isometry->equivariant}};
  }
  return j;
}

Json to_json(const UniquenessResult& result) {
  Json j{{"verdict", to_string(result.verdict)}, {"probabilistic", result.probabilistic}, {"detail", result.detail}};
  if (result.witness) {
    Json parts = Json::array();
    for (const auto& p : *result.witness) parts.push_back(to_json(p));
    j["witness"] = parts;
  }
  return j;
}

Json to_json(const oracle::CrosscheckReport& report) {
  Json primes = Json::array();
  for (const auto& p : report.primes) {
    Json j{{"prime", p.prime}, {"valid", p.valid}, {"note", p.note}};
    auto enumeration = [](const oracle::IdempotentEnumeration& e) {
      return Json{{"commutant_dim", e.commutant_dim}, {"idempotents", e.idempotents}, {"nontrivial", e.nontrivial}};
    };
    if (p.module) j["module"] = enumeration(*p.module);
    if (p.orthogonal) j["self_adjoint"] = enumeration(*p.orthogonal);
    primes.push_back(j);
  }
  return {{"primes", primes},
          {"soundness_violations", report.soundness_violations},
          {"review_flags", report.review_flags},
          {"notes", report.notes},
          {"agreement", report.agreement()}};
}

Json envelope(const std::string& instance, const std::string& command, Json payload) {
  return {{"schema", 1}, {"instance", instance}, {"command", command}, {"result", std::move(payload)}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace holo::io
