#include "semider/family.hpp"

#include <algorithm>
#include <set>

namespace semider {

namespace {

void require_n(int n, int min, const char* what) {
  if (n < min)
    throw DimensionError(std::string(what) + " needs n >= " + std::to_string(min) + ", got n=" +
                         std::to_string(n));
}

std::vector<int> clean_index_set(std::vector<int> idx, int n, const char* what) {
  if (idx.empty()) throw ParseError(std::string(what) + " needs a non-empty index set");
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int i : idx)
    if (i < 0 || i >= n)
      throw ParseError(std::string(what) + " index " + std::to_string(i + 1) +
                       " out of range for n=" + std::to_string(n));
  if (static_cast<int>(idx.size()) >= n)
    throw ParseError(std::string(what) + " must leave at least one free index");
  return idx;
}

std::string join_one_based(const std::vector<int>& idx) {
  std::string out;
  for (int i : idx) {
    if (!out.empty()) out += ",";
    out += std::to_string(i + 1);
  }
  return out;
}

// Merge tied positions transitively; used by the corner/block families
// whose equalities can chain at small n.
std::vector<Family::Group> merge_groups(std::vector<Family::Group> gs,
                                        const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& ties) {
  auto find_group = [&](std::pair<int, int> pos) -> std::size_t {
    for (std::size_t g = 0; g < gs.size(); ++g)
      for (const auto& p : gs[g])
        if (p == pos) return g;
    throw SemiderError("tie position not covered by any group");
  };
  for (const auto& [a, b] : ties) {
    std::size_t ga = find_group(a), gb = find_group(b);
    if (ga == gb) continue;
    if (gb < ga) std::swap(ga, gb);
    for (const auto& p : gs[gb]) gs[ga].push_back(p);
    gs.erase(gs.begin() + static_cast<std::ptrdiff_t>(gb));
  }
  return gs;
}

std::vector<Family::Group> utm_groups(int n) {
  std::vector<Family::Group> gs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) gs.push_back({{i, j}});
  return gs;
}

}  // namespace

Family::Family(FamilyId id, int n, std::string spec, std::vector<Group> groups)
    : id_(id), n_(n), spec_(std::move(spec)), groups_(std::move(groups)) {
  cover_.assign(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t g = 0; g < groups_.size(); ++g)
    for (const auto& [i, j] : groups_[g]) {
      auto& slot = cover_[static_cast<std::size_t>(i) * n + j];
      if (slot != -1) throw SemiderError("family groups overlap at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
      slot = static_cast<int>(g);
    }
}

Family Family::all(int n) {
  require_n(n, 1, "all");
  std::vector<Group> gs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gs.push_back({{i, j}});
  return Family(FamilyId::All, n, "all", std::move(gs));
}

Family Family::diag(int n) {
  require_n(n, 1, "diag");
  std::vector<Group> gs;
  for (int i = 0; i < n; ++i) gs.push_back({{i, i}});
  return Family(FamilyId::Diag, n, "diag", std::move(gs));
}

Family Family::utm(int n) {
  require_n(n, 1, "utm");
  return Family(FamilyId::Utm, n, "utm", utm_groups(n));
}

Family Family::ut_toeplitz(int n) {
  require_n(n, 1, "ut-toeplitz");
  std::vector<Group> gs;
  for (int k = 0; k < n; ++k) {
    Group g;
    for (int i = 0; i + k < n; ++i) g.push_back({i, i + k});
    gs.push_back(std::move(g));
  }
  return Family(FamilyId::UtToeplitz, n, "ut-toeplitz", std::move(gs));
}

Family Family::toeplitz(int n) {
  require_n(n, 1, "toeplitz");
  std::vector<Group> gs;
  for (int off = -(n - 1); off <= n - 1; ++off) {
    Group g;
    for (int i = 0; i < n; ++i) {
      int j = i + off;
      if (j >= 0 && j < n) g.push_back({i, j});
    }
    gs.push_back(std::move(g));
  }
  return Family(FamilyId::Toeplitz, n, "toeplitz", std::move(gs));
}

Family Family::circulant(int n) {
  require_n(n, 1, "circulant");
  std::vector<Group> gs;
  for (int k = 0; k < n; ++k) {
    Group g;
    for (int i = 0; i < n; ++i) g.push_back({i, (i + k) % n});
    gs.push_back(std::move(g));
  }
  return Family(FamilyId::Circulant, n, "circulant", std::move(gs));
}

Family Family::arrow(int n) {
  require_n(n, 2, "arrow");
  std::vector<Group> gs;
  for (int i = 0; i < n; ++i) gs.push_back({{i, i}});
  gs.push_back({{0, n - 1}});
  return Family(FamilyId::Arrow, n, "arrow", std::move(gs));
}

Family Family::zero_rows(int n, std::vector<int> rows) {
  require_n(n, 2, "zero-rows");
  rows = clean_index_set(std::move(rows), n, "zero-rows");
  std::vector<Group> gs;
  for (int i = 0; i < n; ++i) {
    if (std::binary_search(rows.begin(), rows.end(), i)) continue;
    for (int j = 0; j < n; ++j) gs.push_back({{i, j}});
  }
  Family f(FamilyId::ZeroRows, n, "zero-rows:" + join_one_based(rows), std::move(gs));
  f.indices_ = std::move(rows);
  return f;
}

Family Family::zero_cross(int n, std::vector<int> idx) {
  require_n(n, 2, "zero-cross");
  idx = clean_index_set(std::move(idx), n, "zero-cross");
  std::vector<Group> gs;
  for (int i = 0; i < n; ++i) {
    if (std::binary_search(idx.begin(), idx.end(), i)) continue;
    for (int j = 0; j < n; ++j) {
      if (std::binary_search(idx.begin(), idx.end(), j)) continue;
      gs.push_back({{i, j}});
    }
  }
  Family f(FamilyId::ZeroCross, n, "zero-cross:" + join_one_based(idx), std::move(gs));
  f.indices_ = std::move(idx);
  return f;
}

Family Family::corner_equal(int n) {
  require_n(n, 2, "corner-equal");
  auto gs = merge_groups(utm_groups(n), {{{0, 0}, {n - 1, n - 1}}});
  return Family(FamilyId::CornerEqual, n, "corner-equal", std::move(gs));
}

Family Family::block_repeat(int n) {
  require_n(n, 3, "block-repeat");
  auto gs = merge_groups(utm_groups(n), {{{0, 0}, {n - 2, n - 2}},
                                         {{0, 1}, {n - 2, n - 1}},
                                         {{1, 1}, {n - 1, n - 1}}});
  return Family(FamilyId::BlockRepeat, n, "block-repeat", std::move(gs));
}

Family Family::tail(int n, int k) {
  require_n(n, 2, "tail");
  if (k < 1 || k > n - 1)
    throw ParseError("tail:<k> needs 1 <= k <= n-1, got k=" + std::to_string(k) +
                     " at n=" + std::to_string(n));
  std::vector<Group> gs;
  {
    Group g;
    for (int i = 0; i < n; ++i) g.push_back({i, i});
    gs.push_back(std::move(g));
  }
  for (int p = n - k; p <= n - 1; ++p) {
    Group g;
    for (int i = 0; i + p < n; ++i) g.push_back({i, i + p});
    gs.push_back(std::move(g));
  }
  Family f(FamilyId::Tail, n, "tail:" + std::to_string(k), std::move(gs));
  f.k_ = k;
  return f;
}

bool Family::is_member(const Matrix& A) const {
  if (A.n() != n_) return false;
  const Value z = A.semiring()->zero();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (cover_[static_cast<std::size_t>(i) * n_ + j] == -1 && A.at(i, j) != z) return false;
  for (const auto& g : groups_) {
    const Value& first = A.at(g[0].first, g[0].second);
    for (std::size_t t = 1; t < g.size(); ++t)
      if (A.at(g[t].first, g[t].second) != first) return false;
  }
  return true;
}

Matrix Family::from_coeffs(const SemiringPtr& sr, const std::vector<Value>& coeffs) const {
  if (coeffs.size() != groups_.size())
    throw DimensionError("family '" + spec_ + "' takes " + std::to_string(groups_.size()) +
                         " coefficients, got " + std::to_string(coeffs.size()));
  Matrix m(sr, n_);
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (!sr->contains(coeffs[g]))
      throw CarrierMismatchError("coefficient " + coeffs[g].str() + " is not in carrier '" +
                                 sr->name() + "'");
    for (const auto& [i, j] : groups_[g]) m.set(i, j, coeffs[g]);
  }
  return m;
}

std::vector<Value> Family::extract_coeffs(const Matrix& A) const {
  if (!is_member(A))
    throw MembershipError("matrix " + A.str() + " is not in family '" + spec_ + "'");
  std::vector<Value> out;
  out.reserve(groups_.size());
  for (const auto& g : groups_) out.push_back(A.at(g[0].first, g[0].second));
  return out;
}

std::vector<Matrix> Family::enumerate(const SemiringPtr& sr, const std::vector<Value>& universe,
                                      std::uint64_t max_objects) const {
  if (universe.empty()) throw BudgetError("empty coefficient universe");
  std::uint64_t total = 1;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (total > max_objects / universe.size() && universe.size() > 1)
      throw BudgetError("family '" + spec_ + "' enumeration exceeds budget of " +
                        std::to_string(max_objects) + " matrices");
    total *= universe.size();
    if (total > max_objects)
      throw BudgetError("family '" + spec_ + "' enumeration exceeds budget of " +
                        std::to_string(max_objects) + " matrices");
  }
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> odo(groups_.size(), 0);
  std::vector<Value> coeffs(groups_.size(), universe[0]);
  while (true) {
    out.push_back(from_coeffs(sr, coeffs));
    std::size_t g = 0;
    for (; g < groups_.size(); ++g) {
      if (odo[g] + 1 < universe.size()) {
        ++odo[g];
        coeffs[g] = universe[odo[g]];
        break;
      }
      odo[g] = 0;
      coeffs[g] = universe[0];
    }
    if (g == groups_.size()) break;
  }
  return out;
}

std::vector<Matrix> Family::enumerate(const SemiringPtr& sr, std::uint64_t max_objects) const {
  if (!sr->flags().finite)
    throw CapabilityError("exhaustive family enumeration over infinite carrier '" + sr->name() +
                          "' needs an explicit coefficient universe");
  return enumerate(sr, sr->elements(), max_objects);
}

Matrix Family::sample(const SemiringPtr& sr, Rng& rng, const SampleBounds& bounds) const {
  std::vector<Value> coeffs;
  coeffs.reserve(groups_.size());
  for (std::size_t g = 0; g < groups_.size(); ++g) coeffs.push_back(sr->sample(rng, bounds));
  return from_coeffs(sr, coeffs);
}

Family parse_family(const std::string& spec, int n) {
  auto parse_list = [&](const std::string& body, const char* what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t next = body.find(',', pos);
      if (next == std::string::npos) next = body.size();
      const std::string tok = body.substr(pos, next - pos);
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("junk");
        out.push_back(v - 1);  // spec lists are 1-based
      } catch (const std::exception&) {
        throw ParseError(std::string("bad index '") + tok + "' in " + what);
      }
      pos = next + 1;
    }
    return out;
  };

  if (spec == "all") return Family::all(n);
  if (spec == "diag") return Family::diag(n);
  if (spec == "utm") return Family::utm(n);
  if (spec == "ut-toeplitz") return Family::ut_toeplitz(n);
  if (spec == "toeplitz") return Family::toeplitz(n);
  if (spec == "circulant") return Family::circulant(n);
  if (spec == "arrow") return Family::arrow(n);
  if (spec == "corner-equal") return Family::corner_equal(n);
  if (spec == "block-repeat") return Family::block_repeat(n);
  if (spec.rfind("zero-rows:", 0) == 0)
    return Family::zero_rows(n, parse_list(spec.substr(10), "zero-rows"));
  if (spec.rfind("zero-cross:", 0) == 0)
    return Family::zero_cross(n, parse_list(spec.substr(11), "zero-cross"));
  if (spec.rfind("tail:", 0) == 0) {
    const std::string body = spec.substr(5);
    try {
      std::size_t used = 0;
      int k = std::stoi(body, &used);
      if (used != body.size()) throw std::invalid_argument("junk");
      return Family::tail(n, k);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad tail length in '" + spec + "'");
    }
  }
  throw ParseError("unknown family spec '" + spec + "'");
}

VerificationReport closure_check(const Family& fam, const SemiringPtr& sr,
                                 std::uint64_t max_objects, const std::vector<Value>* universe) {
  VerificationReport rep;
  rep.subject = "family:" + fam.spec_string() + ":n=" + std::to_string(fam.n()) + ":" + sr->name();
  auto members = universe ? fam.enumerate(sr, *universe, max_objects)
                          : fam.enumerate(sr, max_objects);

  CheckResult zero_in{"contains-zero"};
  CheckResult add_closed{"closed-under-add"};
  CheckResult mul_closed{"closed-under-mul"};

  zero_in.cases = 1;
  if (!fam.is_member(Matrix::zero(sr, fam.n()))) {
    zero_in.passed = false;
    zero_in.witnesses.push_back({{"note", "zero matrix rejected"}});
  }

  auto witness = [&](const Matrix& a, const Matrix& b, const Matrix& r) -> nlohmann::json {
    return {{"A", a.entries_json()}, {"B", b.entries_json()}, {"result", r.entries_json()}};
  };

  for (const auto& a : members)
    for (const auto& b : members) {
      add_closed.cases++;
      Matrix s = a + b;
      if (!fam.is_member(s) && add_closed.witnesses.size() < 3) {
        add_closed.passed = false;
        add_closed.witnesses.push_back(witness(a, b, s));
      } else if (!fam.is_member(s)) {
        add_closed.passed = false;
      }
      mul_closed.cases++;
      Matrix p = a * b;
      if (!fam.is_member(p) && mul_closed.witnesses.size() < 3) {
        mul_closed.passed = false;
        mul_closed.witnesses.push_back(witness(a, b, p));
      } else if (!fam.is_member(p)) {
        mul_closed.passed = false;
      }
    }

  rep.checks = {zero_in, add_closed, mul_closed};
  return rep;
}

}  // namespace semider
