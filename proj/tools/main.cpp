// arrtool: exact invariants of weighted hyperplane arrangements over Q.
// Reads arrangement JSON from --input or stdin, writes a canonical report
// envelope {command, input_digest, results} to stdout. Exit codes: 0 success,
// 1 computation error or failed verification, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "flagform/arrangement.hpp"
#include "flagform/contravariant.hpp"
#include "flagform/corpus.hpp"
#include "flagform/errors.hpp"
#include "flagform/flag_space.hpp"
#include "flagform/json_io.hpp"
#include "flagform/lattice.hpp"
#include "flagform/os_algebra.hpp"
#include "flagform/verify.hpp"

namespace {

using nlohmann::json;
using namespace flagform;

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[28];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

void print_error(const std::string& code, const std::string& message) {
  json err;
  err["error"]["code"] = code;
  err["error"]["message"] = message;
  std::cerr << err.dump(2) << "\n";
}

struct Input {
  std::string raw;
  AnyArrangement arrangement;
};

// nullopt means the input stage failed and exit code 2 was already earned
std::optional<Input> read_input(const std::string& path) {
  Input in;
  if (path.empty()) {
    in.raw.assign(std::istreambuf_iterator<char>(std::cin),
                  std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
      print_error(error_code_name(ErrorCode::ParseError),
                  "cannot read input file: " + path);
      return std::nullopt;
    }
    in.raw.assign(std::istreambuf_iterator<char>(f),
                  std::istreambuf_iterator<char>());
  }
  json j;
  try {
    j = json::parse(in.raw);
  } catch (const json::parse_error& e) {
    print_error(error_code_name(ErrorCode::ParseError), e.what());
    return std::nullopt;
  }
  try {
    in.arrangement = arrangement_from_json(j);
  } catch (const Error& e) {
    print_error(error_code_name(e.code()), e.what());
    return std::nullopt;
  }
  return in;
}

// Central view of any input: affine arrangements are coned, and the report
// carries the flag so hyperplane positions (0 = added) can be interpreted.
struct CentralView {
  CentralArrangement arr;
  bool coned = false;
};

CentralView central_view(const AnyArrangement& any) {
  CentralView v;
  if (const auto* c = std::get_if<CentralArrangement>(&any)) {
    v.arr = *c;
  } else {
    v.arr = cone(std::get<AffineArrangement>(any));
    v.coned = true;
  }
  return v;
}

const CentralArrangement& require_central(const AnyArrangement& any,
                                          const char* op) {
  if (const auto* c = std::get_if<CentralArrangement>(&any)) return *c;
  fail(ErrorCode::PreconditionViolated,
       std::string(op) + " needs a central arrangement");
}

json monomials_json(const OSAlgebra& alg, int p) {
  json a = json::array();
  for (const Monomial& m : alg.nbc_basis(p)) a.push_back(m);
  return a;
}

json singular_json(const SingularSpace& s) {
  json out;
  out["degree"] = s.degree;
  out["basis"] = matrix_to_json(s.basis.as_rows());
  out["restricted_gram"] = matrix_to_json(s.restricted_gram);
  out["rank"] = s.rank;
  out["rank_deficient"] = s.rank_deficient;
  if (s.kind == SingKind::Projective)
    out["preimages"] = matrix_to_json(s.preimages);
  return out;
}

json cmd_validate(const Input& in) {
  json results;
  results["kind"] =
      std::holds_alternative<CentralArrangement>(in.arrangement) ? "central"
                                                                 : "affine";
  results["arrangement"] = to_json(in.arrangement);
  std::visit(
      [&](const auto& a) {
        results["rank"] = arrangement_rank(a);
        results["weight_sum"] = rational_to_json(weight_sum(a.weights));
      },
      in.arrangement);
  return results;
}

json cmd_lattice(const Input& in) {
  CentralView v = central_view(in.arrangement);
  Lattice lat = Lattice::build(v.arr);
  json flats = json::array();
  for (int codim = 0; codim <= lat.rank(); ++codim)
    for (int id : lat.level(codim)) {
      json f;
      f["id"] = id;
      f["codim"] = codim;
      f["hyperplanes"] = lat.flat(id).hyperplanes;
      f["moebius"] = lat.moebius()[id];
      f["covers"] = lat.covers_of(id);
      flats.push_back(f);
    }
  json results;
  results["coned"] = v.coned;
  results["rank"] = lat.rank();
  results["flats"] = flats;
  return results;
}

json cmd_os_dim(const Input& in) {
  CentralView v = central_view(in.arrangement);
  OSAlgebra alg = OSAlgebra::central(v.arr);
  ProjectiveCoords pc = projective_coords(v.arr, alg);
  json dims = json::array();
  for (int p = 0; p <= alg.top_degree(); ++p) {
    json d;
    d["degree"] = p;
    d["algebra"] = alg.dim(p);
    d["projective"] = pc.abar_dim(p);
    dims.push_back(d);
  }
  json results;
  results["coned"] = v.coned;
  results["dims"] = dims;
  results["top_degree"] = alg.top_degree();
  return results;
}

json cmd_flags(const Input& in) {
  CentralView v = central_view(in.arrangement);
  Lattice lat = Lattice::build(v.arr);
  OSAlgebra alg = OSAlgebra::central(v.arr);
  FlagSpace fs(lat, alg);
  json degrees = json::array();
  for (int p = 0; p <= alg.top_degree(); ++p) {
    json d;
    d["degree"] = p;
    d["nbc_basis"] = monomials_json(alg, p);
    json flags = json::array();
    for (const FlagChain& f : lat.flags_of_length(p)) {
      json e;
      e["flat_ids"] = f.flat_ids;
      e["dual"] = vec_to_json(fs.to_dual(f).coords);
      flags.push_back(e);
    }
    d["flags"] = flags;
    degrees.push_back(d);
  }
  json results;
  results["coned"] = v.coned;
  results["degrees"] = degrees;
  return results;
}

json cmd_gram(const Input& in, int degree) {
  json results;
  OSAlgebra alg =
      std::holds_alternative<CentralArrangement>(in.arrangement)
          ? OSAlgebra::central(std::get<CentralArrangement>(in.arrangement))
          : OSAlgebra::affine(std::get<AffineArrangement>(in.arrangement));
  ContravariantGram g = gram(alg, degree);
  results["kind"] = alg.is_central() ? "central" : "affine";
  results["degree"] = g.degree;
  results["matrix"] = matrix_to_json(g.matrix);
  results["nbc_basis"] = monomials_json(alg, degree);
  return results;
}

json cmd_singular(const Input& in, const std::string& space) {
  json results;
  results["space"] = space;
  if (space == "affine") {
    const auto* a = std::get_if<AffineArrangement>(&in.arrangement);
    if (!a)
      fail(ErrorCode::PreconditionViolated,
           "the affine singular space needs an affine arrangement");
    OSAlgebra alg = OSAlgebra::affine(*a);
    results["coned"] = false;
    results["singular"] = singular_json(singular_affine(alg));
    results["nbc_basis"] = monomials_json(alg, alg.top_degree());
    return results;
  }
  CentralView v = central_view(in.arrangement);
  results["coned"] = v.coned;
  OSAlgebra alg = OSAlgebra::central(v.arr);
  if (space == "central") {
    results["singular"] = singular_json(singular_central(alg));
    results["nbc_basis"] = monomials_json(alg, alg.top_degree());
    return results;
  }
  ProjectiveCoords pc = projective_coords(v.arr, alg);
  SingularSpace s = singular_projective(alg, pc);
  results["singular"] = singular_json(s);
  results["pivot"] = pc.pivot;
  results["quotient_basis"] = pc.monomials[s.degree];
  return results;
}

json cmd_decone(const Input& in, int pivot) {
  const CentralArrangement& c = require_central(in.arrangement, "decone");
  DeconeResult d = decone(c, pivot);
  json results;
  results["pivot"] = d.pivot;
  results["arrangement"] = to_json(d.arrangement);
  results["original_index"] = d.original_index;
  results["new_from_old"] = matrix_to_json(d.change.new_from_old);
  results["old_from_new"] = matrix_to_json(d.change.old_from_new);
  return results;
}

json cmd_decone_isometry(const Input& in, int pivot) {
  const CentralArrangement& c =
      require_central(in.arrangement, "decone-isometry");
  DeconeIsometry iso = decone_isometry(c, pivot);
  json blocks = json::array();
  for (const Matrix& b : iso.blocks) blocks.push_back(matrix_to_json(b));
  json results;
  results["pivot"] = iso.pivot;
  results["blocks"] = blocks;
  results["projective"] = singular_json(iso.projective);
  results["affine"] = singular_json(iso.affine);
  results["mapped_gram"] = matrix_to_json(iso.mapped_gram);
  results["singular_match"] = iso.singular_match;
  results["gram_match"] = iso.gram_match;
  return results;
}

json cmd_transition(const Input& in, int from, int to) {
  const CentralArrangement& c = require_central(in.arrangement, "transition");
  ChartContext ctx(c);
  Transition t = transition(ctx, from, to);
  std::vector<Matrix> star = algebra_transition(ctx, from, to);
  json flag_blocks = json::array();
  for (const Matrix& b : t.blocks) flag_blocks.push_back(matrix_to_json(b));
  json algebra_blocks = json::array();
  for (const Matrix& b : star) algebra_blocks.push_back(matrix_to_json(b));
  json results;
  results["from"] = t.from;
  results["to"] = t.to;
  results["flag_blocks"] = flag_blocks;
  results["algebra_blocks"] = algebra_blocks;
  results["from_index_map"] = ctx.charts[from].original_index;
  results["to_index_map"] = ctx.charts[to].original_index;
  return results;
}

json report_json(const VerifyReport& report) {
  json checks = json::array();
  for (const CheckOutcome& out : report.outcomes) {
    json c;
    c["theorem"] = out.check;
    c["arrangement"] = out.arrangement;
    c["applicable"] = out.applicable;
    c["passed"] = out.passed;
    c["detail"] = out.detail;
    checks.push_back(c);
  }
  json results;
  results["all_passed"] = report.all_passed;
  results["checks"] = checks;
  return results;
}

std::string corpus_digest_bytes() {
  json entries = json::array();
  for (const CorpusEntry& e : builtin_corpus()) {
    json j;
    j["name"] = e.name;
    j["arrangement"] = to_json(e.arrangement);
    entries.push_back(j);
  }
  return entries.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of weighted hyperplane arrangements"};
  app.require_subcommand(1);

  std::string path;
  std::string space = "affine";
  std::string format = "json";
  int degree = 0, pivot = 0, from = 0, to = 0;
  bool verify_all = false, verify_list = false, zero_sum = false;
  std::vector<std::string> theorems;
  std::uint64_t seed = 0;
  std::uint64_t rand_ell = 1, rand_n = 1;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input)
      sub->add_option("--input", path, "input file (stdin when omitted)");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json"}));
    return sub;
  };

  add_common(app.add_subcommand("validate",
                                "parse, normalize and echo an arrangement"),
             true);
  add_common(app.add_subcommand("lattice",
                                "intersection lattice with Moebius values"),
             true);
  add_common(app.add_subcommand(
                 "os-dim", "algebra and projective dimensions per degree"),
             true);
  add_common(
      app.add_subcommand("flags", "flags per degree with dual coordinates"),
      true);
  auto* gram_cmd = add_common(
      app.add_subcommand("gram", "weighted form matrix in one degree"), true);
  gram_cmd->add_option("--degree", degree, "form degree")->required();
  auto* sing_cmd = add_common(
      app.add_subcommand("singular", "singular subspace with restricted form"),
      true);
  sing_cmd->add_option("--space", space, "which singular space")
      ->required()
      ->check(CLI::IsMember({"affine", "central", "projective"}));
  auto* dec_cmd = add_common(
      app.add_subcommand("decone", "restrict to a projective-quotient chart"),
      true);
  dec_cmd->add_option("--pivot", pivot, "hyperplane sent to infinity");
  auto* iso_cmd = add_common(
      app.add_subcommand("decone-isometry",
                         "projective vs chart singular space comparison"),
      true);
  iso_cmd->add_option("--pivot", pivot, "hyperplane sent to infinity");
  auto* tr_cmd = add_common(
      app.add_subcommand("transition", "chart transition matrices per degree"),
      true);
  tr_cmd->add_option("--from", from, "source chart")->required();
  tr_cmd->add_option("--to", to, "target chart")->required();
  auto* ver_cmd = add_common(
      app.add_subcommand("verify", "run theorem checks on the corpus"), true);
  ver_cmd->add_flag("--all", verify_all, "run every check");
  ver_cmd->add_option("--theorem", theorems, "run one named check (repeatable)");
  ver_cmd->add_flag("--list", verify_list, "list check names");
  auto* rand_cmd = add_common(
      app.add_subcommand("random", "emit a seeded random central arrangement"),
      false);
  rand_cmd->add_option("--seed", seed, "generator seed");
  rand_cmd->add_option("--ell", rand_ell, "projective dimension (1..4)")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{4}));
  rand_cmd->add_option("--n", rand_n, "index of the last hyperplane (1..10)")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10}));
  rand_cmd->add_flag("--zero-sum", zero_sum, "force the weights to sum to 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    print_error("UsageError", e.what());
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  if (name == "random") {
    CentralArrangement a = random_arrangement(
        seed, static_cast<size_t>(rand_ell), static_cast<size_t>(rand_n),
        zero_sum);
    std::cout << to_json(a).dump(2) << "\n";
    return 0;
  }

  if (name == "verify") {
    int picked = (verify_all ? 1 : 0) + (verify_list ? 1 : 0) +
                 (theorems.empty() ? 0 : 1);
    if (picked != 1) {
      print_error("UsageError",
                  "verify needs exactly one of --all, --theorem, --list");
      return 2;
    }
    for (const std::string& t : theorems) {
      const auto& known = check_names();
      if (std::find(known.begin(), known.end(), t) == known.end()) {
        print_error("UsageError", "unknown theorem: " + t);
        return 2;
      }
    }
    json envelope;
    envelope["command"] = name;
    if (verify_list) {
      envelope["input_digest"] = fnv1a64("");
      envelope["results"]["theorems"] = check_names();
      std::cout << envelope.dump(2) << "\n";
      return 0;
    }
    // an explicit --input swaps the shipped corpus for a single arrangement
    std::vector<CorpusEntry> entries;
    if (!path.empty()) {
      auto in = read_input(path);
      if (!in) return 2;
      entries.push_back({"input", in->arrangement});
      envelope["input_digest"] = fnv1a64(in->raw);
    } else {
      entries = builtin_corpus();
      envelope["input_digest"] = fnv1a64(corpus_digest_bytes());
    }
    try {
      VerifyReport report = run_checks(entries, theorems);
      envelope["results"] = report_json(report);
      std::cout << envelope.dump(2) << "\n";
      return report.all_passed ? 0 : 1;
    } catch (const Error& e) {
      print_error(error_code_name(e.code()), e.what());
      return 1;
    }
  }

  auto in = read_input(path);
  if (!in) return 2;
  json envelope;
  envelope["command"] = name;
  envelope["input_digest"] = fnv1a64(in->raw);
  try {
    if (name == "validate") envelope["results"] = cmd_validate(*in);
    else if (name == "lattice") envelope["results"] = cmd_lattice(*in);
    else if (name == "os-dim") envelope["results"] = cmd_os_dim(*in);
    else if (name == "flags") envelope["results"] = cmd_flags(*in);
    else if (name == "gram") envelope["results"] = cmd_gram(*in, degree);
    else if (name == "singular") envelope["results"] = cmd_singular(*in, space);
    else if (name == "decone") envelope["results"] = cmd_decone(*in, pivot);
    else if (name == "decone-isometry")
      envelope["results"] = cmd_decone_isometry(*in, pivot);
    else if (name == "transition")
      envelope["results"] = cmd_transition(*in, from, to);
  } catch (const Error& e) {
    print_error(error_code_name(e.code()), e.what());
    return 1;
  }
  std::cout << envelope.dump(2) << "\n";
  return 0;
}
