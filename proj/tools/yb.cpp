// yb: command-line front end.
//
// Exit status: 0 success, 1 a mathematical check failed, 2 bad input.

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "yb/catalog.hpp"
#include "yb/cohomology.hpp"
#include "yb/deformations.hpp"
#include "yb/io.hpp"

using namespace yb;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

struct Config {
  std::string format = "human";
  std::uint64_t seed = 20240601;
  std::size_t size_limit = 8;
  std::size_t inner_group_cap = 1'000'000;
  std::size_t trunc = 3;
};

void emit(const Config& cfg, const json& report) {
  if (cfg.format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : report.items()) {
    std::cout << key << ": ";
    if (value.is_string())
      std::cout << value.get<std::string>();
    else
      std::cout << value.dump();
    std::cout << "\n";
  }
}

json base_report(const std::string& command) {
  return json{{"command", command}, {"version", YB_VERSION}};
}

json base_report(const std::string& command, const Rack& r) {
  json j = base_report(command);
  j["rack_size"] = r.size();
  j["rack_hash"] = rack_hash(r);
  return j;
}

json witness_json(const YbeVerdict& v) {
  if (!v.witness) return nullptr;
  return json::array({(*v.witness)[0], (*v.witness)[1], (*v.witness)[2]});
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<unsigned long> den(1, 7);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Config& cfg, const std::string& spec, bool quandle_required) {
  Rack r;
  try {
    r = resolve_rack(spec);
  } catch (const RackAxiomError& e) {
    json j = base_report("validate");
    j["valid"] = false;
    j["axiom"] = std::string(axiom_name(e.axiom()));
    j["witness"] = e.witness();
    j["message"] = e.what();
    emit(cfg, j);
    return kMathFailure;
  }
  json j = base_report("validate", r);
  j["valid"] = true;
  j["quandle"] = r.is_quandle();
  j["inner_group_order"] = inner_group(r, cfg.inner_group_cap).order();
  j["behavioral_classes"] = behavioral_classes(r);
  if (quandle_required && !r.is_quandle()) {
    j["valid"] = false;
    for (Elem x = 0; x < r.size(); ++x)
      if (r.op(x, x) != x) {
        j["axiom"] = "Q1";
        j["witness"] = json::array({x});
        break;
      }
    emit(cfg, j);
    return kMathFailure;
  }
  emit(cfg, j);
  return kOk;
}

int cmd_check(const Config& cfg, const std::string& spec, const std::string& input) {
  Rack r = resolve_rack(spec);
  std::optional<YBOperator> c;
  if (input.empty()) {
    c = build_cq(r);
  } else {
    c = YBOperator(r.size(), poly_matrix_from_json(read_json_file(input)));
  }
  YbeVerdict v = check_ybe(*c);
  json j = base_report("check", r);
  j["operator"] = input.empty() ? "c_Q" : input;
  j["ybe_holds"] = v.holds;
  j["witness"] = witness_json(v);
  emit(cfg, j);
  return v.holds ? kOk : kMathFailure;
}

BraidWord parse_word(const std::string& text, std::size_t strands) {
  BraidWord w;
  std::istringstream in(text);
  std::string tok;
  int max_index = 1;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int l = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      w.letters.push_back(l);
      max_index = std::max(max_index, l < 0 ? -l : l);
    } catch (const std::exception&) {
      throw InputError("bad braid letter '" + tok + "'");
    }
  }
  w.strands = strands ? strands : static_cast<std::size_t>(max_index) + 1;
  try {
    w.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return w;
}

int cmd_braid(const Config& cfg, const std::string& spec, const std::string& word, std::size_t strands) {
  Rack r = resolve_rack(spec);
  BraidWord w = parse_word(word, strands);
  PolyMatrix m = braid_rep(build_cq(r), w);
  json j = base_report("braid", r);
  j["strands"] = w.strands;
  j["word"] = w.letters;
  j["trace"] = to_string(m.trace().constant_term());
  j["matrix"] = matrix_to_json(m.constant_term());
  emit(cfg, j);
  return kOk;
}

json report_json(const CohomologyReport& rep) {
  const std::string d = std::to_string(rep.degree);
  return json{{"dimZ" + d, rep.dim_z},          {"dimB" + d, rep.dim_b},
              {"dimE" + d, rep.dim_e},          {"dimH" + d, rep.dim_h},
              {"dim_sum", rep.dim_sum},         {"dim_intersection", rep.dim_intersection},
              {"verified", rep.verified}};
}

int cmd_cohomology(Config cfg, const std::string& spec, std::size_t degree, const std::string& report) {
  if (!report.empty()) cfg.format = report;
  Rack r = resolve_rack(spec);
  CoboundaryLimits limits;
  limits.max_rack_size = cfg.size_limit;
  CohomologyReport rep = classify(r, degree, limits);
  json j = base_report("cohomology", r);
  j["degree"] = degree;
  j.update(report_json(rep));
  emit(cfg, j);
  return rep.verified ? kOk : kMathFailure;
}

int cmd_entropic_basis(const Config& cfg, const std::string& spec, std::size_t degree) {
  Rack r = resolve_rack(spec);
  if (r.size() > cfg.size_limit) throw SizeLimitExceeded("rack exceeds the size limit");
  EntropicBasis b = entropic_basis(r, degree, cfg.inner_group_cap);
  json orbits = json::array();
  for (const auto& orbit : b.orbits) {
    json pairs = json::array();
    for (std::size_t p : orbit) {
      auto [x, y] = decode_pair(p, r.size(), degree);
      pairs.push_back(json::array({x, y}));
    }
    orbits.push_back(std::move(pairs));
  }
  json j = base_report("entropic-basis", r);
  j["degree"] = degree;
  j["count"] = b.size();
  j["orbits"] = std::move(orbits);
  emit(cfg, j);
  return kOk;
}

int cmd_deform(const Config& cfg, const std::string& spec, const std::string& lambda, bool check) {
  Rack r = resolve_rack(spec);
  json lj;
  try {
    lj = json::parse(lambda);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed --lambda: ") + e.what());
  }
  if (!lj.is_array()) throw InputError("--lambda must be a JSON array");
  EntropicBasis basis = entropic_basis(r, 2, cfg.inner_group_cap);
  if (lj.size() != basis.size())
    throw InputError("rack has " + std::to_string(basis.size()) + " entropic orbits, got " +
                     std::to_string(lj.size()) + " parameters");
  std::size_t order = 1;
  for (const auto& e : lj)
    if (e.is_array()) order = std::max(order, cfg.trunc);
  std::vector<TruncPoly> params;
  for (const auto& e : lj) params.push_back(poly_from_json(e, order));
  DeformationFamily fam(r, basis, std::move(params));
  PolyMatrix c = assemble_matrix(fam);
  json j = base_report("deform", r);
  j["trunc"] = order;
  j["matrix"] = poly_matrix_to_json(c);
  j["invertible"] = c.inverse().has_value();
  int status = kOk;
  if (check) {
    YbeVerdict v = ybe_deformed(fam);
    j["ybe_holds"] = v.holds;
    j["witness"] = witness_json(v);
    if (!v.holds) status = kMathFailure;
  }
  emit(cfg, j);
  return status;
}

int cmd_normalize(const Config& cfg, const std::string& spec, const std::string& input) {
  Rack r = resolve_rack(spec);
  PolyMatrix m = poly_matrix_from_json(read_json_file(input), cfg.trunc);
  YBOperator c(r.size(), std::move(m));
  json j = base_report("normalize", r);
  try {
    Normalization res = normalize_to_entropic(r, c);
    j["trunc"] = c.order();
    j["alpha"] = poly_matrix_to_json(res.alpha.matrix);
    j["output"] = poly_matrix_to_json(res.output.matrix());
    j["entropic"] = is_entropic_deformation(r, res.output.matrix());
  } catch (const YbeViolation& e) {
    j["error"] = e.what();
    emit(cfg, j);
    return kMathFailure;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  emit(cfg, j);
  return kOk;
}

// ---------------------------------------------------------------- reproduce

int cmd_reproduce(const Config& cfg, const std::string& id) {
  json j = base_report("reproduce");
  j["example"] = id;
  bool ok = false;
  if (id == "d3-matrix") {
    Rack r = s3_transposition_quandle();
    SparseMat got = build_cq(r).matrix().constant_term();
    ok = got == printed_d3_cq();
    if (!ok) {
      j["expected"] = matrix_to_json(printed_d3_cq());
      j["got"] = matrix_to_json(got);
    }
  } else if (id == "d3-rigid") {
    CohomologyReport rep = classify_h2(s3_transposition_quandle());
    j.update(report_json(rep));
    ok = rep.dim_e == 1 && rep.dim_h == 1 && rep.verified;
  } else if (id == "d4-16") {
    CohomologyReport rep = classify_h2(d4_reflection_quandle());
    j.update(report_json(rep));
    ok = rep.dim_e == 16 && rep.dim_h == 16 && rep.verified;
  } else if (id == "d4-trace") {
    std::mt19937_64 rng(cfg.seed);
    json trials = json::array();
    ok = true;
    for (int t = 0; t < 6; ++t) {
      std::vector<Rational> lam(16, Rational(0));
      if (t > 0)
        for (auto& q : lam) q = random_rational(rng);
      TraceComparison cmp = trace_square_formula(DeformationFamily::rational(d4_reflection_quandle(), lam));
      trials.push_back(json{{"computed", to_string(cmp.computed.constant_term())},
                            {"formula", to_string(cmp.formula.constant_term())},
                            {"equal", cmp.equal}});
      ok = ok && cmp.equal;
    }
    j["trials"] = std::move(trials);
  } else if (id == "jones") {
    ok = build_jones(Rational(1)) == build_tau(2);
    for (const char* q : {"1", "2", "1/3"}) {
      bool holds = check_ybe(build_jones(parse_rational(q))).holds;
      j[std::string("ybe_q=") + q] = holds;
      ok = ok && holds;
    }
  } else {
    throw InputError("unknown example '" + id + "' (d3-matrix, d3-rigid, d4-16, d4-trace, jones)");
  }
  j["match"] = ok;
  emit(cfg, j);
  return ok ? kOk : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yang-Baxter operators, cohomology and deformations of finite racks"};
  app.set_version_flag("--version", std::string(YB_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized commands");
  app.add_option("--size-limit", cfg.size_limit, "Largest rack accepted for cohomology")
      ->check(CLI::PositiveNumber);
  app.add_option("--inner-group-cap", cfg.inner_group_cap, "Largest inner group enumerated")
      ->check(CLI::PositiveNumber);
  app.add_option("--trunc", cfg.trunc, "Truncation order N of Q[h]/(h^N)")->check(CLI::PositiveNumber);

  std::string rack_spec, input, word, lambda, report, example;
  std::size_t degree = 2, strands = 0;
  bool quandle = false, check = false;
  const char* rack_help = "Rack: trivial:n, dihedral:n, conj:Sk:<cycles>,... or a JSON file";

  auto* validate = app.add_subcommand("validate", "Check the rack axioms");
  validate->add_option("rack", rack_spec, rack_help)->required();
  validate->add_flag("--quandle", quandle, "Also require idempotency");

  auto* check_cmd = app.add_subcommand("check", "Check the Yang-Baxter equation");
  check_cmd->add_option("--rack", rack_spec, rack_help)->required();
  check_cmd->add_option("--input", input, "Operator matrix JSON (default: c_Q)");

  auto* braid = app.add_subcommand("braid", "Braid group representation of c_Q");
  braid->add_option("--rack", rack_spec, rack_help)->required();
  braid->add_option("--word", word, "Signed generator indices, e.g. \"1 2 -1\"")->required();
  braid->add_option("--strands", strands, "Number of strands (default: from the word)");

  auto* cohom = app.add_subcommand("cohomology", "Dimensions of Z, B, E and H");
  cohom->add_option("--rack", rack_spec, rack_help)->required();
  cohom->add_option("--degree", degree, "Cochain degree")->check(CLI::Range(1, 3));
  cohom->add_option("--report", report, "Report format")->check(CLI::IsMember({"human", "json"}));

  auto* ebasis = app.add_subcommand("entropic-basis", "Orbits spanning the entropic cochains");
  ebasis->add_option("--rack", rack_spec, rack_help)->required();
  ebasis->add_option("--degree", degree, "Cochain degree")->check(CLI::Range(1, 3));

  auto* deform = app.add_subcommand("deform", "Assemble c_Q (I + f(lambda))");
  deform->add_option("--rack", rack_spec, rack_help)->required();
  deform->add_option("--lambda", lambda, "JSON array, one \"p/q\" or coefficient array per orbit")
      ->required();
  deform->add_flag("--check", check, "Check the Yang-Baxter equation");

  auto* normalize = app.add_subcommand("normalize", "Conjugate a deformation of c_Q to entropic form");
  normalize->add_option("--rack", rack_spec, rack_help)->required();
  normalize->add_option("--input", input, "Operator matrix JSON")->required();

  auto* reproduce = app.add_subcommand("reproduce", "Recompute a worked example");
  reproduce->add_option("example", example, "d3-matrix, d3-rigid, d4-16, d4-trace or jones")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(cfg, rack_spec, quandle);
    if (*check_cmd) return cmd_check(cfg, rack_spec, input);
    if (*braid) return cmd_braid(cfg, rack_spec, word, strands);
    if (*cohom) return cmd_cohomology(cfg, rack_spec, degree, report);
    if (*ebasis) return cmd_entropic_basis(cfg, rack_spec, degree);
    if (*deform) return cmd_deform(cfg, rack_spec, lambda, check);
    if (*normalize) return cmd_normalize(cfg, rack_spec, input);
    if (*reproduce) return cmd_reproduce(cfg, example);
  } catch (const InputError& e) {
    std::cerr << "yb: " << e.what() << "\n";
    return kInputError;
  } catch (const RackAxiomError& e) {
    std::cerr << "yb: invalid rack: " << e.what() << "\n";
    return kInputError;
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "yb: " << e.what() << "\n";
    return kInputError;
  } catch (const GroupCapExceeded& e) {
    std::cerr << "yb: " << e.what() << "\n";
    return kInputError;
  } catch (const NotInvertible& e) {
    std::cerr << "yb: " << e.what() << "\n";
    return kMathFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "yb: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "yb: " << e.what() << "\n";
    return kMathFailure;
  }
  return kInputError;
}
