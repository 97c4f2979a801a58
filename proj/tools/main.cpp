#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "semider/theorems.hpp"

namespace {

using namespace semider;

struct Options {
  std::string semiring;
  std::string family;
  std::string derivation;
  std::string mode = "exhaustive";
  std::string input;
  std::string output;
  std::string matrix_name;
  std::string theorem_id;
  std::string allow = "t3.b,t3.d";
  int n = 0;
  std::uint64_t samples = 500;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1u << 20;
  long long max_entry = 1000;
};

void emit(const nlohmann::json& j, const std::string& output) {
  const std::string text = j.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw ParseError("cannot open output file '" + output + "'");
  f << text;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read input file '" + path + "'");
  try {
    return nlohmann::json::parse(f);
  } catch (const std::exception& e) {
    throw ParseError("bad JSON in '" + path + "': " + e.what());
  }
}

std::set<std::string> parse_allowlist(const std::string& csv) {
  std::set<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.insert(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.insert(cur);
  return out;
}

VerifyOptions make_verify_options(const Options& o, const SemiringPtr& sr, bool seed_given) {
  VerifyOptions vo;
  vo.mode = o.mode == "sampled" ? VerifyOptions::Mode::Sampled : VerifyOptions::Mode::Exhaustive;
  if (vo.mode == VerifyOptions::Mode::Sampled && !seed_given)
    throw ParseError("sampled mode requires --seed");
  vo.samples = o.samples;
  vo.seed = o.seed;
  vo.max_objects = o.budget;
  vo.bounds.max_int = o.max_entry;
  vo.bounds.max_poly_coeff = std::min<Int>(o.max_entry, vo.bounds.max_poly_coeff);
  if (vo.mode == VerifyOptions::Mode::Exhaustive && !sr->flags().finite)
    vo.universe = enumeration_universe(sr, vo.bounds, o.budget);
  return vo;
}

std::pair<Family, Derivation> resolve_derivation(const Options& o, const SemiringPtr& sr) {
  std::string fspec = o.family.empty() ? default_family_spec(o.derivation) : o.family;
  if (fspec.empty())
    throw ParseError("derivation '" + o.derivation + "' needs an explicit --family");
  Family fam = parse_family(fspec, o.n);
  Derivation d = parse_derivation(o.derivation, fam, sr);
  return {std::move(fam), std::move(d)};
}

nlohmann::json run_config(const Options& o, const std::string& family_resolved) {
  return {{"semiring", o.semiring}, {"family", family_resolved},   {"n", o.n},
          {"derivation", o.derivation}, {"mode", o.mode},          {"samples", o.samples},
          {"seed", o.seed},             {"max-entry", o.max_entry}, {"budget", o.budget}};
}

int run_verify(const Options& o, bool seed_given) {
  const SemiringPtr sr = parse_semiring(o.semiring);
  auto [fam, d] = resolve_derivation(o, sr);
  const VerifyOptions vo = make_verify_options(o, sr, seed_given);
  const VerificationReport rep = verify_derivation(d, sr, vo);
  nlohmann::json j = rep.to_json();
  j["config"] = run_config(o, fam.spec_string());
  emit(j, o.output);
  return rep.passed() ? 0 : 1;
}

int run_classify(const Options& o, bool seed_given) {
  const SemiringPtr sr = parse_semiring(o.semiring);
  auto [fam, d] = resolve_derivation(o, sr);
  const VerifyOptions vo = make_verify_options(o, sr, seed_given);
  const Classification c = classify(d, sr, vo);
  nlohmann::json j = c.to_json();
  j["config"] = run_config(o, fam.spec_string());
  emit(j, o.output);
  return 0;
}

int run_theorem(const Options& o) {
  const SemiringPtr sr = parse_semiring(o.semiring);
  TheoremReport rep = theorem_suite(o.theorem_id, o.n, sr, o.budget);
  const auto allow = parse_allowlist(o.allow);
  apply_allowlist(rep, allow);
  nlohmann::json j = rep.to_json();
  j["config"] = {{"semiring", o.semiring},
                 {"n", o.n},
                 {"id", o.theorem_id},
                 {"budget", o.budget},
                 {"allow-known-refutations", nlohmann::json(allow)}};
  emit(j, o.output);
  return rep.passed() ? 0 : 1;
}

int run_commutant(const Options& o) {
  const SemiringPtr sr = parse_semiring(o.semiring);
  const Family fam = parse_family(o.family, o.n);
  Matrix M = [&] {
    if (o.matrix_name == "shift-cyclic") return shift_cyclic(sr, o.n);
    if (o.matrix_name == "shift-nilpotent") return shift_nilpotent(sr, o.n);
    if (!o.matrix_name.empty())
      throw ParseError("unknown --matrix '" + o.matrix_name +
                       "' (use shift-cyclic or shift-nilpotent)");
    if (o.input.empty()) throw ParseError("commutant needs --matrix or --input");
    return Matrix::from_json(read_json_file(o.input), sr);
  }();
  if (M.n() != o.n) throw DimensionError("input matrix size differs from --n");

  std::optional<std::vector<Value>> universe;
  if (!sr->flags().finite) {
    SampleBounds bounds;
    bounds.max_int = o.max_entry;
    bounds.max_poly_coeff = std::min<Int>(o.max_entry, bounds.max_poly_coeff);
    universe = enumeration_universe(sr, bounds, o.budget);
  }
  const auto result = commutant(M, fam, o.budget, universe ? &*universe : nullptr);
  nlohmann::json list = nlohmann::json::array();
  for (const auto& A : result) list.push_back(A.entries_json());
  nlohmann::json j = {{"commutant", list},
                      {"count", result.size()},
                      {"config",
                       {{"semiring", o.semiring},
                        {"family", o.family},
                        {"n", o.n},
                        {"matrix", o.matrix_name.empty() ? "input" : o.matrix_name},
                        {"max-entry", o.max_entry},
                        {"budget", o.budget}}}};
  emit(j, o.output);
  return 0;
}

int run_pattern(const Options& o) {
  const nlohmann::json in = read_json_file(o.input);
  Matrix M = [&] {
    if (in.is_array()) {
      if (o.semiring.empty())
        throw ParseError("a bare entries array needs --semiring for the carrier");
      const SemiringPtr sr = parse_semiring(o.semiring);
      const int n = static_cast<int>(in.size());
      Matrix m(sr, n);
      for (int i = 0; i < n; ++i) {
        if (!in[static_cast<std::size_t>(i)].is_array() ||
            in[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(n))
          throw ParseError("entries must form a square array");
        for (int j = 0; j < n; ++j)
          m.set(i, j, sr->value_from_json(in[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      }
      return m;
    }
    return Matrix::from_json(in, o.semiring.empty() ? nullptr : parse_semiring(o.semiring));
  }();
  emit(pattern(M).bits_json(), o.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matrix-semiring derivations: verification, classification and structure"};
  app.require_subcommand(1);
  Options o;

  auto* v = app.add_subcommand("verify", "check the derivation laws for a map on a family");
  v->add_option("--semiring", o.semiring, "carrier spec (bool | chain:<m> | maxplus-int | nat | natpoly)")->required();
  v->add_option("--n", o.n, "matrix size")->required();
  v->add_option("--derivation", o.derivation, "derivation spec")->required();
  v->add_option("--family", o.family, "family spec (defaults to the derivation's home family)");
  v->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  v->add_option("--samples", o.samples, "sample count for sampled mode");
  auto* v_seed = v->add_option("--seed", o.seed, "RNG seed (required for sampled mode)");
  v->add_option("--max-entry", o.max_entry, "entry bound for sampling / bounded enumeration");
  v->add_option("--budget", o.budget, "enumeration budget (matrices)");
  v->add_option("--output", o.output, "write the report here instead of stdout");

  auto* c = app.add_subcommand("classify", "decide idempotent / nilpotent behaviour of a map");
  c->add_option("--semiring", o.semiring)->required();
  c->add_option("--n", o.n)->required();
  c->add_option("--derivation", o.derivation)->required();
  c->add_option("--family", o.family);
  c->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  c->add_option("--samples", o.samples);
  auto* c_seed = c->add_option("--seed", o.seed);
  c->add_option("--max-entry", o.max_entry);
  c->add_option("--budget", o.budget);
  c->add_option("--output", o.output);

  auto* t = app.add_subcommand("theorem", "run an item-by-item structure suite");
  t->add_option("--id", o.theorem_id, "suite id (t1 | t2 | t3 | p2 | p3 | p5 | p6)")->required();
  t->add_option("--n", o.n)->required();
  t->add_option("--semiring", o.semiring)->required();
  t->add_option("--budget", o.budget);
  t->add_option("--allow-known-refutations", o.allow,
                "comma-separated items whose refutation is accepted (default t3.b,t3.d)");
  t->add_option("--output", o.output);

  auto* cm = app.add_subcommand("commutant", "list family members commuting with a matrix");
  cm->add_option("--semiring", o.semiring)->required();
  cm->add_option("--n", o.n)->required();
  cm->add_option("--family", o.family, "search family")->required();
  cm->add_option("--matrix", o.matrix_name, "built-in matrix (shift-cyclic | shift-nilpotent)");
  cm->add_option("--input", o.input, "JSON matrix file");
  cm->add_option("--max-entry", o.max_entry);
  cm->add_option("--budget", o.budget);
  cm->add_option("--output", o.output);

  auto* p = app.add_subcommand("pattern", "print the 0/1 support pattern of a matrix");
  p->add_option("--input", o.input, "JSON matrix file (full object or bare entries array)")->required();
  p->add_option("--semiring", o.semiring, "carrier for a bare entries array");
  p->add_option("--output", o.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (v->parsed()) return run_verify(o, v_seed->count() > 0);
    if (c->parsed()) return run_classify(o, c_seed->count() > 0);
    if (t->parsed()) return run_theorem(o);
    if (cm->parsed()) return run_commutant(o);
    if (p->parsed()) return run_pattern(o);
  } catch (const SemiderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
