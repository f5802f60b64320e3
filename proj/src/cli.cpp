#include "holo/cli.hpp"

#include <CLI11.hpp>

#include "holo/errors.hpp"
#include "holo/io.hpp"

namespace holo {

namespace {

class BadReference : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::uint64_t seed = 0;
  bool json = false;
  bool text = false;
  std::vector<std::uint64_t> oracle_primes;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--seed", opt.seed, "seed for every random choice")->default_val(0);
  auto* json = cmd->add_flag("--json", opt.json, "machine-readable output");
  cmd->add_flag("--text", opt.text, "human-readable output (default)")->excludes(json);
  cmd->add_option("--oracle-primes", opt.oracle_primes, "primes for the finite-field search")->delimiter(',');
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string sig_text(const Signature& s) {
  return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_minus) + ")";
}

void print_basis(std::ostream& out, const Subspace& s, const std::string& indent) {
  for (const auto& v : s.basis_vectors()) out << indent << to_string(v) << "\n";
}

void print_summand(std::ostream& out, const std::string& title, const Summand& s) {
  out << title << ": " << to_string(s.kind) << ", dim " << s.subspace.dim() << ", signature " << sig_text(s.signature)
      << ", fixed dim " << s.fixed_dim;
  if (s.kind != SummandKind::trivial_flat) {
    out << ", " << (s.indecomposability.certified ? "indecomposable (certified: " : "indecomposable (probabilistic: ")
        << s.indecomposability.method << ")";
  }
  out << "\n";
  print_basis(out, s.subspace, "  ");
}

void print_report(std::ostream& out, const DecompositionReport& r) {
  out << "seed: " << r.seed << "\n";
  print_summand(out, "trivial part", r.trivial_part);
  for (std::size_t i = 0; i < r.summands.size(); ++i) print_summand(out, "summand " + std::to_string(i + 1), r.summands[i]);
  out << "p1 = " << r.p1 << ", p2 = " << r.p2 << "\n";
  out << "splitting certificates: " << r.certificates.size() << "\n";
}

void print_validity(std::ostream& out, const ValidityReport& v) {
  for (const auto& c : v.clauses) {
    out << "  " << c.name << ": " << (!c.applicable ? "n/a" : (c.passed ? "pass" : "FAIL"));
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
}

void print_phi(std::ostream& out, const PhiVerdict& phi) {
  out << "condition: " << to_string(phi.status) << "\n";
  for (const auto& w : phi.witnesses) {
    out << "  summand " << w.summand_index + 1 << ": " << to_string(w.verdict) << " (" << w.method << ")"
        << ", neutral signature: " << yes_no(w.neutral) << "\n";
    if (w.isotropic_pair) {
      out << "    totally isotropic invariant pair:\n";
      print_basis(out, w.isotropic_pair->u1, "      ");
      out << "      --\n";
      print_basis(out, w.isotropic_pair->u2, "      ");
    }
  }
}

void print_comparison(std::ostream& out, const ComparisonReport& c) {
  out << "verdict: " << to_string(c.verdict) << "\n";
  out << "counts equal: p1 " << yes_no(c.p1_equal) << ", p2 " << yes_no(c.p2_equal) << "\n";
  if (!c.matching.ok) out << "matching failed: " << c.matching.failure << "\n";
  for (std::size_t i = 0; i < c.matching.partner.size(); ++i) {
    out << "  " << i + 1 << " <-> " << c.matching.partner[i] + 1 << ": dims " << yes_no(c.dims_equal[i])
        << ", moved spans " << yes_no(c.moved_spans_equal[i]) << ", identical " << yes_no(c.subspace_identical[i])
        << ", factors " << yes_no(c.factors_equal[i]) << "\n";
  }
  if (c.factor_comparison_bounded) out << "factor comparison is bounded (words of length <= 3)\n";
  if (c.isometry) {
    out << "isometry (" << (c.isometry->equivariant ? "equivariant" : "not equivariant") << "):\n"
        << c.isometry->matrix.to_string() << "\n";
  }
  for (const auto& d : c.diagnostics) out << "note: " << d << "\n";
}

void print_uniqueness(std::ostream& out, const UniquenessResult& u) {
  out << "uniqueness: " << to_string(u.verdict) << (u.probabilistic ? " (probabilistic)" : "") << " - " << u.detail
      << "\n";
  if (u.witness) {
    out << "  second decomposition:\n";
    for (std::size_t i = 0; i < u.witness->size(); ++i) {
      out << "  part " << i + 1 << ":\n";
      print_basis(out, (*u.witness)[i], "    ");
    }
  }
}

corpus::Instance load(const std::string& path) { return io::load_instance(path); }

const corpus::NamedDecomposition& named(const corpus::Instance& inst, const std::string& name) {
  const auto* d = inst.find(name);
  if (!d) throw BadReference("unknown decomposition \"" + name + "\" in " + inst.name);
  return *d;
}

PhiOptions phi_options(const Options& opt) { return {opt.seed, opt.oracle_primes}; }

int cmd_analyze(const std::string& path, const Options& opt, std::ostream& out) {
  const corpus::Instance inst = load(path);
  const Representation& rep = inst.rep;
  const QuadraticSpace& qs = rep.space();
  const Subspace fixed = fixed_space(rep);
  const Subspace moved = moved_span(rep);
  const bool duality = fixed == orth_complement(qs, moved);
  if (opt.json) {
    out << io::dump(io::envelope(
        inst.name, "analyze",
        {{"dimension", rep.dim()},
         {"signature", io::to_json(signature(qs))},
         {"fixed_space",
          {{"dimension", fixed.dim()},
           {"basis", io::to_json(fixed)},
           {"totally_isotropic", is_totally_isotropic(qs, fixed)},
           {"nondegenerate", is_nondegenerate(qs, fixed)}}},
         {"moved_span", {{"dimension", moved.dim()}, {"basis", io::to_json(moved)}}},
         {"duality_holds", duality}}));
    return exit_ok;
  }
  out << "instance: " << inst.name << "\n";
  out << "dimension: " << rep.dim() << "\n";
  out << "signature: " << sig_text(signature(qs)) << "\n";
  out << "fixed space: dim " << fixed.dim() << (fixed.is_full() ? " (all)" : "")
      << ", totally isotropic: " << yes_no(is_totally_isotropic(qs, fixed))
      << ", nondegenerate: " << yes_no(is_nondegenerate(qs, fixed)) << "\n";
  print_basis(out, fixed, "  ");
  out << "moved span: dim " << moved.dim() << "\n";
  print_basis(out, moved, "  ");
  out << "duality (fixed space = moved span perp): " << (duality ? "holds" : "FAILS") << "\n";
  return exit_ok;
}

int cmd_decompose(const std::string& path, const Options& opt, std::ostream& out) {
  const corpus::Instance inst = load(path);
  const DecompositionReport report = decompose(inst.rep, opt.seed);
  if (opt.json) {
    out << io::dump(io::envelope(inst.name, "decompose", io::to_json(report)));
  } else {
    out << "instance: " << inst.name << "\n";
    print_report(out, report);
  }
  return exit_ok;
}

int cmd_phi(const std::string& path, const Options& opt, std::ostream& out) {
  const corpus::Instance inst = load(path);
  const DecompositionReport report = decompose(inst.rep, opt.seed);
  const PhiVerdict phi = phi_check(inst.rep, report, phi_options(opt));
  const std::vector<bool> screen = neutral_signature_screen(report);
  if (opt.json) {
    io::Json payload = io::to_json(phi);
    payload["neutral_signature_screen"] = screen;
    out << io::dump(io::envelope(inst.name, "phi", payload));
  } else {
    out << "instance: " << inst.name << "\n";
    print_phi(out, phi);
  }
  return exit_ok;
}

int cmd_compare(const std::string& path, const std::string& a, const std::string& b, const Options& opt,
                std::ostream& out) {
  const corpus::Instance inst = load(path);
  const auto& da = named(inst, a);
  const auto& db = named(inst, b);
  const DecompositionReport ra = report_from_parts(inst.rep, da.parts, opt.seed);
  const DecompositionReport rb = report_from_parts(inst.rep, db.parts, opt.seed);
  const ComparisonReport cmp = compare(inst.rep, ra, rb);
  if (opt.json) {
    io::Json payload = io::to_json(cmp);
    payload["a"] = a;
    payload["b"] = b;
    out << io::dump(io::envelope(inst.name, "compare", payload));
  } else {
    out << "instance: " << inst.name << "\n" << "comparing " << a << " with " << b << "\n";
    print_comparison(out, cmp);
  }
  return exit_ok;
}

int cmd_demo(const std::string& name, const Options& opt, std::ostream& out) {
  const auto found = corpus::find_instance(name);
  if (!found) throw BadReference("unknown demo \"" + name + "\"");
  const corpus::Instance& inst = *found;
  const DecompositionReport report = decompose(inst.rep, opt.seed);
  const PhiVerdict phi = phi_check(inst.rep, report, phi_options(opt));
  const UniquenessResult uniq = uniqueness_verdict(inst.rep, report, phi);
  std::vector<std::pair<std::string, ValidityReport>> checks;
  for (const auto& d : inst.decompositions) checks.emplace_back(d.name, verify_decomposition(inst.rep, d.parts, opt.seed));
  std::optional<ComparisonReport> cmp;
  if (inst.decompositions.size() >= 2) {
    cmp = compare(inst.rep, report_from_parts(inst.rep, inst.decompositions[0].parts, opt.seed),
                  report_from_parts(inst.rep, inst.decompositions[1].parts, opt.seed));
  }
  if (opt.json) {
    io::Json known = io::Json::object();
    for (const auto& [n, v] : checks) known[n] = io::to_json(v);
    io::Json payload{{"decomposition", io::to_json(report)},
                     {"known_decompositions", known},
                     {"phi", io::to_json(phi)},
                     {"uniqueness", io::to_json(uniq)}};
    if (cmp) payload["comparison"] = io::to_json(*cmp);
    out << io::dump(io::envelope(inst.name, "demo", payload));
    return exit_ok;
  }
  out << "== " << inst.name << " ==\n";
  out << "-- computed decomposition\n";
  print_report(out, report);
  for (std::size_t k = 0; k < checks.size(); ++k) {
    out << "-- known decomposition " << checks[k].first << ": "
        << (checks[k].second.all_passed() ? "valid" : "INVALID") << "\n";
    for (std::size_t i = 0; i < inst.decompositions[k].parts.size(); ++i) {
      out << "  part " << i + 1 << ":\n";
      print_basis(out, inst.decompositions[k].parts[i], "    ");
    }
    print_validity(out, checks[k].second);
  }
  if (cmp) {
    out << "-- " << inst.decompositions[0].name << " vs " << inst.decompositions[1].name << "\n";
    print_comparison(out, *cmp);
  }
  out << "-- condition on summands with fixed vectors\n";
  print_phi(out, phi);
  out << "-- uniqueness\n";
  print_uniqueness(out, uniq);
  return exit_ok;
}

int cmd_export(const std::string& name, std::ostream& out) {
  const auto found = corpus::find_instance(name);
  if (!found) throw BadReference("unknown corpus instance \"" + name + "\"");
  out << io::dump(io::export_instance(*found));
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal decomposition of form-preserving representations"};
  app.require_subcommand(1);
  Options opt;
  std::string path, a, b, name;

  auto* analyze = app.add_subcommand("analyze", "signature, fixed space, moved span, duality check");
  analyze->add_option("path", path, "instance file")->required();
  add_common(analyze, opt);

  auto* dec = app.add_subcommand("decompose", "orthogonal decomposition into indecomposable summands");
  dec->add_option("path", path, "instance file")->required();
  add_common(dec, opt);

  auto* phi = app.add_subcommand("phi", "check the condition on summands with fixed vectors");
  phi->add_option("path", path, "instance file")->required();
  add_common(phi, opt);

  auto* cmp = app.add_subcommand("compare", "compare two named decompositions of an instance");
  cmp->add_option("path", path, "instance file")->required();
  cmp->add_option("a", a, "first decomposition")->required();
  cmp->add_option("b", b, "second decomposition")->required();
  add_common(cmp, opt);

  auto* demo = app.add_subcommand("demo", "run a built-in instance end to end");
  demo->add_option("name", name, "corpus instance")->required();
  add_common(demo, opt);

  auto* exp = app.add_subcommand("export", "print a built-in instance as an instance file");
  exp->add_option("name", name, "corpus instance")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(path, opt, out);
    if (dec->parsed()) return cmd_decompose(path, opt, out);
    if (phi->parsed()) return cmd_phi(path, opt, out);
    if (cmp->parsed()) return cmd_compare(path, a, b, opt, out);
    if (demo->parsed()) return cmd_demo(name, opt, out);
    if (exp->parsed()) return cmd_export(name, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const BadReference& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_reference;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return exit_internal;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    return exit_invariant;
  }
  return exit_parse;
}

}  // namespace holo
