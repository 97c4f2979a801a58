#include "semider/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace semider {

bool Presentation::is_ideal(Mask I) const {
  const int m = size();
  if (!in(I, zero)) return false;
  for (int a = 0; a < m; ++a) {
    if (!in(I, a)) continue;
    for (int b = 0; b < m; ++b) {
      if (in(I, b) && !in(I, add[a][b])) return false;
      if (!in(I, mul[a][b]) || !in(I, mul[b][a])) return false;
    }
  }
  return true;
}

bool Presentation::is_subtractive(Mask I) const {
  const int m = size();
  for (int a = 0; a < m; ++a) {
    if (!in(I, a)) continue;
    for (int b = 0; b < m; ++b)
      if (in(I, add[a][b]) && !in(I, b)) return false;
  }
  return true;
}

Presentation::Mask Presentation::ideal_closure(Mask gens, bool subtractive) const {
  const int m = size();
  Mask I = gens | (1ull << zero);
  bool grew = true;
  while (grew) {
    grew = false;
    Mask next = I;
    for (int a = 0; a < m; ++a) {
      if (!in(I, a)) continue;
      for (int b = 0; b < m; ++b) {
        if (in(I, b)) next |= 1ull << add[a][b];
        next |= 1ull << mul[a][b];
        next |= 1ull << mul[b][a];
        if (subtractive && in(I, add[a][b])) next |= 1ull << b;
      }
    }
    if (next != I) {
      I = next;
      grew = true;
    }
  }
  return I;
}

std::vector<Presentation::Mask> Presentation::all_ideals(bool subtractive) const {
  const int m = size();
  std::set<Mask> found;
  if (m <= 16) {
    for (Mask I = 0; I < (1ull << m); ++I)
      if (is_ideal(I) && (!subtractive || is_subtractive(I))) found.insert(I);
  } else {
    // Join closure of the principal ideals; complete because an ideal is
    // the join of the principal ideals of its elements.
    std::vector<Mask> principal;
    principal.push_back(ideal_closure(0, subtractive));
    for (int x = 0; x < m; ++x) principal.push_back(ideal_closure(1ull << x, subtractive));
    std::vector<Mask> work(principal.begin(), principal.end());
    found.insert(work.begin(), work.end());
    while (!work.empty()) {
      Mask I = work.back();
      work.pop_back();
      for (Mask p : principal) {
        Mask J = ideal_closure(I | p, subtractive);
        if (found.insert(J).second) work.push_back(J);
      }
    }
  }
  return {found.begin(), found.end()};
}

bool Presentation::is_maximal_ideal(Mask I, bool subtractive) const {
  if (I == full_mask()) return false;
  if (!is_ideal(I) || (subtractive && !is_subtractive(I))) return false;
  for (int x = 0; x < size(); ++x)
    if (!in(I, x) && ideal_closure(I | (1ull << x), subtractive) != full_mask()) return false;
  return true;
}

std::vector<int> Presentation::units() const {
  std::vector<int> us;
  for (int u = 0; u < size(); ++u)
    for (int v = 0; v < size(); ++v)
      if (mul[u][v] == one && mul[v][u] == one) {
        us.push_back(u);
        break;
      }
  return us;
}

bool Presentation::units_cyclic(const std::vector<int>& us, int* generator) const {
  const std::set<int> want(us.begin(), us.end());
  for (int u : us) {
    std::set<int> powers;
    int p = one;
    for (std::size_t k = 0; k < us.size(); ++k) {
      p = mul[p][u];
      powers.insert(p);
    }
    if (powers == want) {
      if (generator) *generator = u;
      return true;
    }
  }
  return false;
}

std::vector<int> Presentation::center() const {
  std::vector<int> c;
  for (int x = 0; x < size(); ++x) {
    bool central = true;
    for (int y = 0; y < size() && central; ++y) central = mul[x][y] == mul[y][x];
    if (central) c.push_back(x);
  }
  return c;
}

bool Presentation::is_nilpotent_elem(int i, int max_power) const {
  int p = i;
  for (int k = 1; k <= max_power; ++k) {
    if (p == zero) return true;
    p = mul[p][i];
  }
  return p == zero;
}

nlohmann::json Presentation::mask_to_json(Mask I) const {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < size(); ++i)
    if (in(I, i)) a.push_back(names[i]);
  return a;
}

namespace {

std::vector<std::string> basis_names(const Family& fam) {
  std::vector<std::string> bs;
  const std::size_t g = fam.param_count();
  switch (fam.id()) {
    case FamilyId::Diag:
      for (std::size_t i = 0; i < g; ++i)
        bs.push_back("E" + std::to_string(i) + std::to_string(i));
      break;
    case FamilyId::UtToeplitz:
      for (std::size_t i = 0; i < g; ++i)
        bs.push_back(i == 0 ? "E" : i == 1 ? "D" : "D^" + std::to_string(i));
      break;
    case FamilyId::Circulant:
      for (std::size_t i = 0; i < g; ++i)
        bs.push_back(i == 0 ? "E" : i == 1 ? "d" : "d^" + std::to_string(i));
      break;
    default:
      for (std::size_t i = 0; i < g; ++i) bs.push_back("g" + std::to_string(i));
      break;
  }
  return bs;
}

std::string element_name(const SemiringPtr& sr, const std::vector<std::string>& basis,
                         const std::vector<Value>& coeffs) {
  std::string s;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sr->is_zero(coeffs[i])) continue;
    if (!s.empty()) s += "+";
    if (coeffs[i] != sr->one()) s += sr->value_to_json(coeffs[i]).dump() + "*";
    s += basis[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

int PatternSemiring::index_of(const Matrix& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == m) return static_cast<int>(i);
  throw ParseError("matrix " + m.str() + " is not an element of the pattern semiring over '" +
                   family.spec_string() + "'");
}

PatternSemiring family_presentation(const Family& fam, const SemiringPtr& sr) {
  if (!sr->flags().finite)
    throw CapabilityError("presentations need a finite carrier; '" + sr->name() + "' is not");
  const std::vector<Value> universe = enumerate_elements(sr);
  const std::size_t g = fam.param_count();
  std::uint64_t m = 1;
  for (std::size_t i = 0; i < g; ++i) {
    m *= universe.size();
    if (m > 64)
      throw CapabilityError("presentation of '" + fam.spec_string() + "' over '" + sr->name() +
                            "' exceeds the 64-element cap");
  }
  const std::vector<std::string> basis = basis_names(fam);

  PatternSemiring ps{fam, {}, {}};
  std::map<Matrix, int> index;
  std::vector<std::size_t> odo(g, 0);
  std::vector<Value> coeffs(g, universe.empty() ? Value::integer(0) : universe[0]);
  for (std::uint64_t e = 0; e < m; ++e) {
    Matrix mat = fam.from_coeffs(sr, coeffs);
    index.emplace(mat, static_cast<int>(e));
    ps.elements.push_back(std::move(mat));
    ps.pres.names.push_back(element_name(sr, basis, coeffs));
    for (std::size_t i = 0; i < g; ++i) {
      if (odo[i] + 1 < universe.size()) {
        ++odo[i];
        coeffs[i] = universe[odo[i]];
        break;
      }
      odo[i] = 0;
      coeffs[i] = universe[0];
    }
  }

  ps.pres.name = "family:" + fam.spec_string() + ":n=" + std::to_string(fam.n()) + ":" + sr->name();
  const int mi = static_cast<int>(m);
  ps.pres.add.assign(mi, std::vector<int>(mi, 0));
  ps.pres.mul.assign(mi, std::vector<int>(mi, 0));
  auto lookup = [&](const Matrix& r, const char* op, int i, int j) {
    auto it = index.find(r);
    if (it == index.end())
      throw CapabilityError("family '" + fam.spec_string() + "' is not closed under " +
                            std::string(op) + ": " + ps.pres.names[i] + ", " + ps.pres.names[j] +
                            " give " + r.str());
    return it->second;
  };
  for (int i = 0; i < mi; ++i)
    for (int j = 0; j < mi; ++j) {
      ps.pres.add[i][j] = lookup(ps.elements[i] + ps.elements[j], "addition", i, j);
      ps.pres.mul[i][j] = lookup(ps.elements[i] * ps.elements[j], "multiplication", i, j);
    }
  ps.pres.zero = index.at(Matrix::zero(sr, fam.n()));
  ps.pres.one = index.at(Matrix::identity(sr, fam.n()));
  return ps;
}

PatternSemiring pattern_semiring(const Family& fam) {
  if (fam.id() != FamilyId::Diag && fam.id() != FamilyId::UtToeplitz &&
      fam.id() != FamilyId::Circulant)
    throw CapabilityError("pattern semirings are built for diag, ut-toeplitz and circulant; got '" +
                          fam.spec_string() + "'");
  PatternSemiring ps = family_presentation(fam, make_bool());
  ps.pres.name = "pattern:" + fam.spec_string() + ":n=" + std::to_string(fam.n());
  return ps;
}

DerivationSemiring derivation_semiring(const Family& fam) {
  DerivationSemiring ds{pattern_semiring(fam), {}, {}};
  const PatternSemiring& ps = ds.base;
  const int m = ps.pres.size();

  // Realize every delta[X] as its table of images on the elements.
  std::vector<std::vector<int>> maps(m, std::vector<int>(m));
  std::map<std::vector<int>, int> by_map;
  for (int x = 0; x < m; ++x) {
    for (int a = 0; a < m; ++a) maps[x][a] = ps.pres.mul[a][x];
    by_map.emplace(maps[x], x);
  }

  VerificationReport& iso = ds.iso;
  iso.subject = "iso:" + ps.pres.name + "->derivations";
  CheckResult bij{"bijective"};
  bij.cases = m;
  if (static_cast<int>(by_map.size()) != m) {
    bij.passed = false;
    bij.witnesses.push_back({{"note", "distinct elements induce the same map"}});
  }
  CheckResult padd{"preserves-add"};
  CheckResult pmul{"preserves-mul"};

  Presentation& p = ds.pres;
  p.name = "derivations:" + ps.pres.name;
  for (int x = 0; x < m; ++x) p.names.push_back("delta[" + ps.pres.names[x] + "]");
  p.add.assign(m, std::vector<int>(m, 0));
  p.mul.assign(m, std::vector<int>(m, 0));
  p.zero = ps.pres.zero;
  p.one = ps.pres.one;

  std::vector<int> img(m);
  auto push = [](CheckResult& cr, nlohmann::json w) {
    cr.passed = false;
    if (cr.witnesses.size() < 5) cr.witnesses.push_back(std::move(w));
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      padd.cases++;
      for (int a = 0; a < m; ++a) img[a] = ps.pres.add[maps[i][a]][maps[j][a]];
      auto it = by_map.find(img);
      if (it == by_map.end()) {
        push(padd, {{"i", p.names[i]}, {"j", p.names[j]}, {"note", "pointwise sum is not inner"}});
        p.add[i][j] = ps.pres.add[i][j];
      } else {
        p.add[i][j] = it->second;
        if (it->second != ps.pres.add[i][j])
          push(padd, {{"i", p.names[i]},
                      {"j", p.names[j]},
                      {"sum-of-maps", p.names[it->second]},
                      {"map-of-sums", p.names[ps.pres.add[i][j]]}});
      }

      pmul.cases++;
      for (int a = 0; a < m; ++a) img[a] = maps[i][maps[j][a]];
      it = by_map.find(img);
      if (it == by_map.end()) {
        push(pmul, {{"i", p.names[i]}, {"j", p.names[j]}, {"note", "composition is not inner"}});
        p.mul[i][j] = ps.pres.mul[i][j];
      } else {
        p.mul[i][j] = it->second;
        if (it->second != ps.pres.mul[i][j])
          push(pmul, {{"i", p.names[i]},
                      {"j", p.names[j]},
                      {"composition", p.names[it->second]},
                      {"map-of-products", p.names[ps.pres.mul[i][j]]}});
      }
    }

  iso.checks = {bij, padd, pmul};
  return ds;
}

std::vector<Matrix> commutant(const Matrix& M, const Family& search, std::uint64_t max_objects,
                              const std::vector<Value>* universe) {
  const SemiringPtr sr = M.semiring();
  std::vector<Matrix> members = universe ? search.enumerate(sr, *universe, max_objects)
                                         : search.enumerate(sr, max_objects);
  std::vector<Matrix> out;
  for (auto& A : members)
    if (A * M == M * A) out.push_back(std::move(A));
  return out;
}

}  // namespace semider
