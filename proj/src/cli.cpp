#include "ringlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "ringlab/bezout.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/core.hpp"
#include "ringlab/modules.hpp"
#include "ringlab/report.hpp"
#include "ringlab/spectrum.hpp"
#include "ringlab/suites.hpp"

namespace ringlab {

namespace {

struct Inputs {
  std::string ring;
  std::string file;
  std::string a, b;
  std::size_t n = 0;
  std::string suite;
  std::vector<std::string> rings;
  bool corpus = false;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream os;
  if (path == "-") {
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream f(path);
  if (!f) throw SyntaxError("cannot read " + path);
  os << f.rdbuf();
  return os.str();
}

Document matrix_json(const Ring& R, const Matrix& A) {
  Document rows = Document::array();
  for (const auto& row : A) {
    Document r = Document::array();
    for (const auto& x : row) r.push_back(R.format(x));
    rows.push_back(r);
  }
  return rows;
}

Document elements_json(const Ring& R, const std::vector<Element>& xs) {
  Document a = Document::array();
  for (const auto& x : xs) a.push_back(R.format(x));
  return a;
}

Document run_spectrum(const Ring& R) {
  Document d = new_document("spectrum", R.spec());
  MaxSpectrum s = max_spectrum(R);
  d["topology"] = topology_name(s.topology);
  d["descriptor"] = s.descriptor;
  Document points = Document::array();
  for (const auto& p : s.points) {
    Document e;
    e["label"] = p.label;
    e["primitive_idempotent"] = R.format(*p.primitive_idempotent);
    LocalizationKernel k = localization_kernel(R, p);
    e["kernel_idempotent_generators"] = elements_json(R, k.idempotent_generators.value_or(std::vector<Element>{}));
    points.push_back(e);
  }
  d["points"] = points;
  return d;
}

Document run_snf(const Ring& R, const std::string& text) {
  Matrix A = parse_matrix(R, text);
  SNFCertificate c = smith_normal_form(R, A);
  Document d = new_document("snf", R.spec());
  d["input"] = matrix_json(R, A);
  d["diagonal"] = elements_json(R, c.diagonal);
  d["P"] = matrix_json(R, c.P);
  d["D"] = matrix_json(R, c.D);
  d["Q"] = matrix_json(R, c.Q);
  CertificateCheck check = verify_snf_certificate(R, A, c);
  d["verified"] = check.ok;
  if (!check.ok) d["violated"] = check.clause;
  return d;
}

Document module_header(const std::string& command, const FiniteModule& M) {
  const Ring& R = M.ring();
  Document d = new_document(command, R.spec());
  d["generators"] = M.generator_count();
  d["relations"] = matrix_json(R, M.presentation().relations);
  d["size"] = M.size();
  d["length"] = module_length(M);
  return d;
}

Document run_decompose(const FiniteModule& M, std::uint64_t seed) {
  Document d = module_header("module-decompose", M);
  DecompositionResult r = decompose(M, seed);
  d["exhaustive"] = r.exhaustive;
  Document summands = Document::array();
  for (std::size_t i = 0; i < r.summands.size(); ++i) {
    Document e;
    e["size"] = r.summands[i].size();
    e["length"] = r.lengths[i];
    e["support"] = r.supports[i];
    e["idempotent"] = format_endo(M, r.idempotents[i]);
    summands.push_back(e);
  }
  d["summands"] = summands;
  return d;
}

Document run_indec(const std::string& command, const FiniteModule& M, std::uint64_t seed) {
  Document d = module_header(command, M);
  IndecomposableVerdict v = is_indecomposable(M, seed);
  d["verdict"] = indecomposability_name(v.value);
  d["examined"] = v.examined;
  d["coverage"] = v.coverage;
  if (v.idempotent) d["idempotent"] = format_endo(M, *v.idempotent);
  return d;
}

int outcome_exit(Outcome o) {
  if (o == Outcome::Fail) return kExitFail;
  if (o == Outcome::Inconclusive) return kExitCap;
  return kExitOk;
}

int run_verify(const Inputs& in, std::uint64_t seed, Document& d) {
  std::vector<std::string> ids = in.suite == "ALL" ? suite_ids() : std::vector<std::string>{in.suite};
  std::vector<Ring> rings;
  for (const auto& s : in.rings) rings.push_back(parse_ring_spec(s));
  Document suites = Document::array();
  std::vector<SuiteResult> results;
  for (const auto& id : ids) {
    results.push_back(verify_suite(id, rings.empty() ? suite_targets(id) : rings, seed));
    suites.push_back(suite_document(results.back()));
  }
  Outcome overall = Outcome::Pass;
  for (const auto& r : results) {
    if (r.overall() == Outcome::Fail) overall = Outcome::Fail;
    if (r.overall() == Outcome::Inconclusive && overall == Outcome::Pass) overall = Outcome::Inconclusive;
  }
  d["overall"] = outcome_name(overall);
  d["suites"] = suites;
  return outcome_exit(overall);
}

std::optional<std::uint64_t> env_cap() {
  const char* v = std::getenv("RINGLAB_CAP");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end || cap == 0) throw SyntaxError(std::string("RINGLAB_CAP must be a positive integer, got ") + v);
  return cap;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& input) {
  CLI::App app{"Commutative ring toolkit: clean rings, elementary divisors and module decompositions", "ringlab"};
  app.require_subcommand(1);
  bool json = false;
  std::optional<std::uint64_t> cap;
  std::uint64_t seed = 0;
  app.add_flag("--json", json, "Structured output");
  app.add_option("--cap", cap, "Enumeration cap (overrides RINGLAB_CAP)")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Random seed")->capture_default_str();

  Inputs in;
  auto ring_only = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help)->fallthrough();
    c->add_option("ring", in.ring, "Ring spec")->required();
    return c;
  };
  ring_only("classify", "Evaluate every ring property");
  ring_only("spectrum", "Maximal spectrum and localization kernels");
  ring_only("clean", "Clean decomposition of an element")->add_option("element", in.a)->required();
  ring_only("snf", "Smith normal form of a matrix file")->add_option("file", in.file)->required();
  for (const char* v : {"gcd", "edr-witness"}) {
    auto* c = ring_only(v, std::string(v) == "gcd" ? "Bezout certificate" : "Elementary divisor witness");
    c->add_option("a", in.a)->required();
    c->add_option("b", in.b)->required();
  }
  ring_only("module-decompose", "Decompose a presented module")->add_option("file", in.file)->required();
  ring_only("module-indec", "Indecomposability of a presented module")->add_option("file", in.file)->required();
  auto* l33 = ring_only("lemma33", "R^N modulo a e_i - b e_(i+1)");
  l33->add_option("a", in.a)->required();
  l33->add_option("b", in.b)->required();
  l33->add_option("N", in.n)->required();
  auto* verify = app.add_subcommand("verify", "Run a verification suite (or ALL)")->fallthrough();
  verify->add_option("suite", in.suite)->required();
  verify->add_option("rings", in.rings, "Ring specs (default: the suite's corpus rings)");
  verify->add_flag("--corpus", in.corpus, "Run on the built-in corpus");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  if (verb == "verify" && in.corpus && !in.rings.empty()) {
    err << "error: --corpus and explicit rings are exclusive\n";
    return kExitUsage;
  }
  std::string ring_label = verb == "verify" ? (in.rings.empty() ? "corpus" : CLI::detail::join(in.rings, " ")) : in.ring;

  int code = kExitOk;
  Document d;
  try {
    std::optional<std::uint64_t> limit = cap ? cap : env_cap();
    std::optional<ScopedEnumerationCap> scoped;
    if (limit) scoped.emplace(*limit);

    if (verb == "verify") {
      d = new_document(verb, ring_label);
      code = run_verify(in, seed, d);
    } else {
      Ring R = parse_ring_spec(in.ring);
      ring_label = R.spec();
      if (verb == "classify") {
        d = classification_document(classify(R));
        if (R.is_finite() && R.order() > enumeration_cap()) code = kExitCap;
      } else if (verb == "spectrum") {
        d = run_spectrum(R);
      } else if (verb == "clean") {
        Element a = R.parse_element(in.a);
        CleanDecomposition c = clean_decompose(R, a);
        d = new_document(verb, R.spec());
        d["element"] = R.format(a);
        d["unit"] = R.format(c.unit);
        d["idempotent"] = R.format(c.idempotent);
      } else if (verb == "snf") {
        d = run_snf(R, read_input(in.file, input));
        if (!d["verified"].get<bool>()) code = kExitFail;
      } else if (verb == "gcd") {
        Element a = R.parse_element(in.a), b = R.parse_element(in.b);
        BezoutCertificate c = gcd_bezout(R, a, b);
        d = new_document(verb, R.spec());
        d["a"] = R.format(a);
        d["b"] = R.format(b);
        d["d"] = R.format(c.d);
        d["s"] = R.format(c.s);
        d["t"] = R.format(c.t);
      } else if (verb == "edr-witness") {
        Element a = R.parse_element(in.a), b = R.parse_element(in.b);
        EDRWitness w = edr_witness(R, a, b);
        d = new_document(verb, R.spec());
        d["a"] = R.format(a);
        d["b"] = R.format(b);
        d["d"] = R.format(w.d);
        d["a_prime"] = R.format(w.a_prime);
        d["b_prime"] = R.format(w.b_prime);
        d["c"] = R.format(w.c);
      } else if (verb == "module-decompose" || verb == "module-indec") {
        FiniteModule M = present_module(R, parse_presentation(R, read_input(in.file, input)));
        d = verb == "module-decompose" ? run_decompose(M, seed) : run_indec(verb, M, seed);
      } else if (verb == "lemma33") {
        Element a = R.parse_element(in.a), b = R.parse_element(in.b);
        FiniteModule M = lemma33_module(R, a, b, in.n);
        d = run_indec(verb, M, seed);
        d["cyclic"] = is_cyclic(M).value;
      }
    }
  } catch (const DomainNegative& e) {
    d = error_document(verb, ring_label, e);
    code = kExitFail;
  } catch (const CapExceeded& e) {
    d = error_document(verb, ring_label, e);
    code = kExitCap;
  } catch (const Error& e) {
    d = error_document(verb, ring_label, e);
    code = kExitUsage;
  }
  out << emit_report(d, json);
  return code;
}

}  // namespace ringlab
