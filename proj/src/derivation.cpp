#include "semider/derivation.hpp"

#include <algorithm>

namespace semider {

namespace {

nlohmann::json pair_witness(const Matrix& a, const Matrix& b, const Matrix& lhs,
                            const Matrix& rhs) {
  return {{"A", a.entries_json()},
          {"B", b.entries_json()},
          {"lhs", lhs.entries_json()},
          {"rhs", rhs.entries_json()}};
}

PatternMatrix complement_diag_pattern(int n, const std::vector<int>& idx) {
  PatternMatrix p(n);
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(idx.begin(), idx.end(), i)) p.set(i, i, true);
  return p;
}

}  // namespace

Matrix Derivation::apply(const Matrix& A) const {
  if (!family.is_member(A))
    throw MembershipError("matrix " + A.str() + " is outside family '" + family.spec_string() +
                          "' of derivation '" + name + "'");
  return map(A);
}

Derivation make_hereditary(const BaseDerivation& base, int n) {
  auto fn = base.map;
  auto domain = base.domain;
  MatrixMap m = [fn, domain](const Matrix& A) {
    if (A.semiring()->name() != domain->name())
      throw CarrierMismatchError("hereditary derivation lives over '" + domain->name() +
                                 "', input is over '" + A.semiring()->name() + "'");
    Matrix r(A.semiring(), A.n());
    for (int i = 0; i < A.n(); ++i)
      for (int j = 0; j < A.n(); ++j) r.set(i, j, fn(A.at(i, j)));
    return r;
  };
  return {"hereditary:" + base.name, "hereditary", Family::all(n), false, std::move(m)};
}

namespace {

Derivation make_inner_checked(const Family& fam, const Matrix& X, std::string name,
                              const InnerOptions& opts) {
  const SemiringPtr sr = X.semiring();
  if (!sr->flags().additively_idempotent)
    throw CapabilityError("inner derivations need an additively idempotent carrier; '" +
                          sr->name() + "' is not");
  if (X.n() != fam.n()) throw DimensionError("inner element dimension differs from family");

  auto check = [&](const Matrix& A) {
    Matrix l = A * X, r = X * A;
    if (l != r)
      throw CapabilityError("inner element is not central in family '" + fam.spec_string() +
                            "': witness A=" + A.str() + ", AX=" + l.str() + ", XA=" + r.str());
  };
  if (sr->flags().finite) {
    for (const auto& A : fam.enumerate(sr, opts.max_objects)) check(A);
  } else {
    Rng rng(opts.seed);
    for (std::uint64_t i = 0; i < opts.samples; ++i) check(fam.sample(sr, rng, opts.bounds));
  }

  const PatternMatrix xp = pattern(X);
  MatrixMap m = [xp](const Matrix& A) { return A * xp.embed(A.semiring()); };
  // Over the carrier X was given on, multiply by X itself (entries may
  // exceed the 0/1 pattern).
  if (X != xp.embed(sr)) {
    Matrix xc = X;
    m = [xc](const Matrix& A) {
      if (A.semiring()->name() != xc.semiring()->name())
        throw CarrierMismatchError("inner element and input live over different carriers");
      return A * xc;
    };
  }
  return {std::move(name), "inner", fam, true, std::move(m)};
}

}  // namespace

Derivation make_inner(const Family& fam, const Matrix& X, const InnerOptions& opts) {
  return make_inner_checked(fam, X, "inner:" + X.str(), opts);
}

Derivation make_inner(const Family& fam, const PatternMatrix& X, const SemiringPtr& check_over,
                      const InnerOptions& opts) {
  return make_inner_checked(fam, X.embed(check_over), "inner:" + X.str(), opts);
}

Derivation builtin_example1(int n) {
  MatrixMap m = [n](const Matrix& A) {
    Matrix r(A.semiring(), n);
    r.set(0, n - 1, A.at(0, n - 1));
    return r;
  };
  return {"example1", "corner-keep", Family::arrow(n), false, std::move(m)};
}

Derivation builtin_example2(int n, std::vector<int> rows) {
  Family fam = Family::zero_rows(n, std::move(rows));
  const std::vector<int> rs = fam.index_set();
  MatrixMap m = [n, rs](const Matrix& A) {
    Matrix r(A.semiring(), n);
    for (int i = 0; i < n; ++i) {
      if (std::binary_search(rs.begin(), rs.end(), i)) continue;
      for (int j : rs) r.set(i, j, A.at(i, j));
    }
    return r;
  };
  return {"example2", "zeroed-column-keep", std::move(fam), false, std::move(m)};
}

Derivation builtin_example3(int n, std::vector<int> idx, const PatternMatrix& Y) {
  Family fam = Family::zero_cross(n, std::move(idx));
  if (Y.n() != n) throw DimensionError("example3 pattern dimension differs from family");
  if (!is_subpattern(Y, complement_diag_pattern(n, fam.index_set())))
    throw ParseError("example3 pattern must sit inside the free diagonal positions");
  MatrixMap m = [Y](const Matrix& A) { return A * Y.embed(A.semiring()); };
  return {"example3", "inner", std::move(fam), true, std::move(m)};
}

Derivation builtin_strip_diag(const Family& fam) {
  if (fam.id() != FamilyId::Utm && fam.id() != FamilyId::UtToeplitz)
    throw ParseError("strip-diag lives on utm or ut-toeplitz");
  MatrixMap m = [](const Matrix& A) {
    Matrix r = A;
    for (int i = 0; i < A.n(); ++i) r.set(i, i, A.semiring()->zero());
    return r;
  };
  return {"strip-diag", "diagonal-strip", fam, true, std::move(m)};
}

Derivation builtin_delta1(int n) {
  MatrixMap m = [n](const Matrix& A) {
    Matrix r(A.semiring(), n);
    for (int j = 0; j < n; ++j) r.set(0, j, A.at(0, j));
    return r;
  };
  return {"example5.delta1", "row-keep", Family::utm(n), true, std::move(m)};
}

Derivation builtin_delta2(int n) {
  MatrixMap m = [n](const Matrix& A) {
    Matrix r(A.semiring(), n);
    for (int j = 1; j < n; ++j) r.set(0, j, A.at(0, j));
    return r;
  };
  return {"example5.delta2", "row-keep", Family::utm(n), false, std::move(m)};
}

Derivation builtin_example6(int n) {
  Family fam = Family::corner_equal(n);
  MatrixMap m = [n](const Matrix& A) {
    Matrix r(A.semiring(), n);
    r.set(0, n - 1, A.at(0, 0));
    return r;
  };
  return {"example6", "corner-push", std::move(fam), true, std::move(m)};
}

Derivation builtin_example7(int n) {
  Family fam = Family::block_repeat(n);
  MatrixMap m = [n](const Matrix& A) {
    Matrix r(A.semiring(), n);
    r.set(0, n - 2, A.at(0, 0));
    r.set(0, n - 1, A.at(0, 1));
    r.set(1, n - 1, A.at(1, 1));
    return r;
  };
  return {"example7", "block-push", std::move(fam), true, std::move(m)};
}

Derivation builtin_prop4_tail(int n, int k) {
  Family fam = Family::tail(n, k);
  MatrixMap m = [](const Matrix& A) {
    Matrix r = A;
    for (int i = 0; i < A.n(); ++i) r.set(i, i, A.semiring()->zero());
    return r;
  };
  // Leibniz needs a + a = a exactly when the tail powers can collide
  // below n, i.e. when 2(n-k) < n.
  return {"prop4:k=" + std::to_string(k), "scalar-strip", std::move(fam), n < 2 * k, std::move(m)};
}

MatrixMap phi_row_keep_from(int col0) {
  return [col0](const Matrix& A) {
    Matrix r(A.semiring(), A.n());
    for (int j = col0; j < A.n(); ++j) r.set(0, j, A.at(0, j));
    return r;
  };
}

MatrixMap phi_ut_coeff_keep_from(const Family& fam, int from) {
  if (fam.id() != FamilyId::UtToeplitz) throw ParseError("coefficient keep lives on ut-toeplitz");
  return [fam, from](const Matrix& A) {
    auto coeffs = fam.extract_coeffs(A);
    for (int i = 0; i < from && i < static_cast<int>(coeffs.size()); ++i)
      coeffs[static_cast<std::size_t>(i)] = A.semiring()->zero();
    return fam.from_coeffs(A.semiring(), coeffs);
  };
}

namespace {

struct PairCheckSet {
  CheckResult capability{"capability-precondition", "capability"};
  CheckResult into_family{"maps-into-family"};
  CheckResult additivity{"additivity"};
  CheckResult leibniz{"leibniz"};
  CheckResult scalar_law{"scalar-law"};
};

}  // namespace

VerificationReport verify_derivation(const Derivation& d, const SemiringPtr& sr,
                                     const VerifyOptions& opts) {
  VerificationReport rep;
  rep.subject = "derivation:" + d.name + ":" + d.family.spec_string() +
                ":n=" + std::to_string(d.family.n()) + ":" + sr->name();
  const bool sampled = opts.mode == VerifyOptions::Mode::Sampled;
  rep.mode = sampled ? "sampled" : "exhaustive";
  if (sampled) {
    rep.seed = opts.seed;
    rep.samples = opts.samples;
  }

  PairCheckSet cs;
  cs.capability.cases = 1;
  if (d.requires_additively_idempotent && !sr->flags().additively_idempotent) {
    cs.capability.passed = false;
    cs.capability.witnesses.push_back(
        {{"note", "construction '" + d.construction + "' claims the derivation laws over "
                  "additively idempotent carriers only; '" + sr->name() + "' is not one"}});
  }

  auto push = [&](CheckResult& cr, nlohmann::json w) {
    cr.passed = false;
    if (cr.witnesses.size() < opts.max_witnesses) cr.witnesses.push_back(std::move(w));
  };

  auto check_image = [&](const Matrix& A) {
    cs.into_family.cases++;
    Matrix img = d.map(A);
    if (!d.family.is_member(img))
      push(cs.into_family, {{"A", A.entries_json()}, {"image", img.entries_json()}});
  };

  auto check_pair = [&](const Matrix& A, const Matrix& B) {
    cs.additivity.cases++;
    {
      Matrix lhs = d.map(A + B);
      Matrix rhs = d.map(A) + d.map(B);
      if (lhs != rhs) push(cs.additivity, pair_witness(A, B, lhs, rhs));
    }
    cs.leibniz.cases++;
    {
      Matrix lhs = d.map(A * B);
      Matrix rhs = d.map(A) * B + A * d.map(B);
      if (lhs != rhs) push(cs.leibniz, pair_witness(A, B, lhs, rhs));
    }
  };

  const Matrix E = Matrix::identity(sr, d.family.n());
  auto check_scalar = [&](const Value& alpha, const Matrix& A) {
    Matrix alphaE = scalar_mul(alpha, E);
    if (!d.family.is_member(alphaE)) return;  // scalar law only binds when aE is a member
    cs.scalar_law.cases++;
    Matrix lhs = d.map(scalar_mul(alpha, A));
    Matrix rhs = d.map(alphaE) * A + scalar_mul(alpha, d.map(A));
    if (lhs != rhs)
      push(cs.scalar_law, {{"alpha", sr->value_to_json(alpha)},
                           {"A", A.entries_json()},
                           {"lhs", lhs.entries_json()},
                           {"rhs", rhs.entries_json()}});
  };

  if (!sampled) {
    std::vector<Value> universe =
        opts.universe ? *opts.universe : enumerate_elements(sr);
    auto members = d.family.enumerate(sr, universe, opts.max_objects);
    for (const auto& A : members) check_image(A);
    for (const auto& A : members)
      for (const auto& B : members) check_pair(A, B);
    for (const auto& alpha : universe)
      for (const auto& A : members) check_scalar(alpha, A);
  } else {
    Rng rng(opts.seed);
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
      Matrix A = d.family.sample(sr, rng, opts.bounds);
      Matrix B = d.family.sample(sr, rng, opts.bounds);
      check_image(A);
      check_pair(A, B);
      check_scalar(sr->sample(rng, opts.bounds), A);
    }
  }

  rep.checks = {cs.capability, cs.into_family, cs.additivity, cs.leibniz, cs.scalar_law};
  return rep;
}

nlohmann::json Classification::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case Kind::Idempotent:
      j["kind"] = "idempotent";
      break;
    case Kind::Nilpotent:
      j["kind"] = "nilpotent";
      j["index"] = index;
      break;
    case Kind::Neither:
      j["kind"] = "neither";
      break;
    case Kind::Inconclusive:
      j["kind"] = "inconclusive";
      break;
  }
  j["cases"] = cases;
  j["mode"] = mode;
  return j;
}

Classification classify(const Derivation& d, const SemiringPtr& sr, const VerifyOptions& opts,
                        int max_power) {
  if (max_power < 1) max_power = d.family.n() + 1;
  const bool sampled = opts.mode == VerifyOptions::Mode::Sampled;

  std::vector<Matrix> inputs;
  bool full_domain = false;
  if (!sampled) {
    std::vector<Value> universe =
        opts.universe ? *opts.universe : enumerate_elements(sr);
    inputs = d.family.enumerate(sr, universe, opts.max_objects);
    full_domain = !opts.universe;
  } else {
    Rng rng(opts.seed);
    for (std::uint64_t i = 0; i < opts.samples; ++i)
      inputs.push_back(d.family.sample(sr, rng, opts.bounds));
  }

  bool idempotent = true;
  bool nilpotent = true;
  int nil_index = 0;
  for (const auto& A : inputs) {
    Matrix once = d.map(A);
    if (d.map(once) != once) idempotent = false;
    Matrix cur = once;
    int k = 1;
    while (!cur.is_zero() && k < max_power) {
      cur = d.map(cur);
      ++k;
    }
    if (!cur.is_zero()) {
      nilpotent = false;
    } else {
      nil_index = std::max(nil_index, k);
    }
    if (!idempotent && !nilpotent) break;
  }

  Classification c;
  c.cases = inputs.size();
  c.mode = sampled ? "sampled" : "exhaustive";
  if (nilpotent) {
    c.kind = Classification::Kind::Nilpotent;
    c.index = nil_index;
  } else if (idempotent) {
    c.kind = Classification::Kind::Idempotent;
  } else {
    c.kind = full_domain ? Classification::Kind::Neither : Classification::Kind::Inconclusive;
  }
  return c;
}

std::optional<nlohmann::json> find_leibniz_counterexample(const MatrixMap& map, const Family& fam,
                                                          const SemiringPtr& sr,
                                                          const VerifyOptions& opts) {
  auto violation = [&](const Matrix& A, const Matrix& B) -> std::optional<nlohmann::json> {
    Matrix lhs = map(A * B);
    Matrix rhs = map(A) * B + A * map(B);
    if (lhs != rhs) return pair_witness(A, B, lhs, rhs);
    return std::nullopt;
  };

  if (opts.mode == VerifyOptions::Mode::Exhaustive) {
    std::vector<Value> universe =
        opts.universe ? *opts.universe : enumerate_elements(sr);
    auto members = fam.enumerate(sr, universe, opts.max_objects);
    for (const auto& A : members)
      for (const auto& B : members)
        if (auto w = violation(A, B)) return w;
  } else {
    Rng rng(opts.seed);
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
      Matrix A = fam.sample(sr, rng, opts.bounds);
      Matrix B = fam.sample(sr, rng, opts.bounds);
      if (auto w = violation(A, B)) return w;
    }
  }
  return std::nullopt;
}

Derivation parse_derivation(const std::string& spec, const Family& fam, const SemiringPtr& sr) {
  const int n = fam.n();
  auto need_family = [&](FamilyId id, const char* name) {
    if (fam.id() != id)
      throw ParseError("derivation '" + spec + "' lives on family '" + std::string(name) +
                       "', got '" + fam.spec_string() + "'");
  };

  if (spec == "hereditary:polyderiv") {
    if (sr->name() != "natpoly")
      throw CarrierMismatchError("hereditary:polyderiv needs the natpoly carrier");
    Derivation d = make_hereditary(poly_derivative_base(), n);
    d.family = fam;
    return d;
  }
  if (spec == "hereditary:identity") {
    Derivation d = make_hereditary(identity_base_derivation(sr), n);
    d.family = fam;
    return d;
  }
  if (spec.rfind("inner:", 0) == 0) {
    nlohmann::json bits;
    try {
      bits = nlohmann::json::parse(spec.substr(6));
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad inner pattern literal: ") + e.what());
    }
    if (!bits.is_array() || bits.size() != static_cast<std::size_t>(n))
      throw ParseError("inner pattern must be an n x n 0/1 array");
    PatternMatrix p(n);
    for (int i = 0; i < n; ++i) {
      const auto& row = bits[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
        throw ParseError("inner pattern must be an n x n 0/1 array");
      for (int j = 0; j < n; ++j) {
        const auto& b = row[static_cast<std::size_t>(j)];
        if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1))
          throw ParseError("inner pattern bits must be 0 or 1");
        p.set(i, j, b.get<int>() == 1);
      }
    }
    return make_inner(fam, p, sr);
  }
  if (spec == "example1") {
    need_family(FamilyId::Arrow, "arrow");
    return builtin_example1(n);
  }
  if (spec == "example2") {
    need_family(FamilyId::ZeroRows, "zero-rows");
    return builtin_example2(n, fam.index_set());
  }
  if (spec == "example3") {
    need_family(FamilyId::ZeroCross, "zero-cross");
    return builtin_example3(n, fam.index_set(), complement_diag_pattern(n, fam.index_set()));
  }
  if (spec == "example4" || spec == "strip-diag") return builtin_strip_diag(fam);
  if (spec == "example5")
    throw ParseError("example5 defines two maps; pick example5.delta1 or example5.delta2");
  if (spec == "example5.delta1") {
    need_family(FamilyId::Utm, "utm");
    return builtin_delta1(n);
  }
  if (spec == "example5.delta2") {
    need_family(FamilyId::Utm, "utm");
    return builtin_delta2(n);
  }
  if (spec == "example6") {
    need_family(FamilyId::CornerEqual, "corner-equal");
    return builtin_example6(n);
  }
  if (spec == "example7") {
    need_family(FamilyId::BlockRepeat, "block-repeat");
    return builtin_example7(n);
  }
  if (spec.rfind("prop4:k=", 0) == 0) {
    need_family(FamilyId::Tail, "tail");
    int k = 0;
    try {
      const std::string body = spec.substr(8);
      std::size_t used = 0;
      k = std::stoi(body, &used);
      if (used != body.size()) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
      throw ParseError("bad tail length in '" + spec + "'");
    }
    if (k != fam.tail_k())
      throw ParseError("prop4 tail length " + std::to_string(k) + " differs from family '" +
                       fam.spec_string() + "'");
    return builtin_prop4_tail(n, k);
  }
  throw ParseError("unknown derivation spec '" + spec + "'");
}

std::string default_family_spec(const std::string& spec) {
  if (spec.rfind("hereditary:", 0) == 0) return "all";
  if (spec == "example1") return "arrow";
  if (spec == "example2") return "zero-rows:1";
  if (spec == "example3") return "zero-cross:1";
  if (spec == "example4" || spec == "strip-diag" || spec == "example5" ||
      spec == "example5.delta1" || spec == "example5.delta2")
    return "utm";
  if (spec == "example6") return "corner-equal";
  if (spec == "example7") return "block-repeat";
  if (spec.rfind("prop4:k=", 0) == 0) return "tail:" + spec.substr(8);
  return "";
}

}  // namespace semider
