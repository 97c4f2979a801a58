#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "semider/error.hpp"
#include "semider/presentation.hpp"

using namespace semider;

namespace {

int index_by_name(const Presentation& p, const std::string& name) {
  for (int i = 0; i < p.size(); ++i)
    if (p.names[i] == name) return i;
  FAIL("no element named ", name);
  return -1;
}

// Second route to the ideal list: close each subset of generators drawn
// from the principal ideals and join-saturate, with no shared code with
// Presentation::all_ideals.
std::vector<Presentation::Mask> ideals_by_join_saturation(const Presentation& p) {
  std::vector<Presentation::Mask> principal;
  for (int i = 0; i < p.size(); ++i) principal.push_back(p.ideal_closure(1ull << i, false));
  std::vector<Presentation::Mask> out = {p.ideal_closure(0, false)};
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = out;
    for (const auto& base : snapshot)
      for (const auto& pr : principal) {
        const Presentation::Mask joined = p.ideal_closure(base | pr, false);
        if (std::find(out.begin(), out.end(), joined) == out.end()) {
          out.push_back(joined);
          grew = true;
        }
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("pattern semiring of the shift polynomials has the expected shape") {
  auto ps = pattern_semiring(Family::ut_toeplitz(3));
  CHECK(ps.pres.size() == 8);
  CHECK(ps.pres.names[ps.pres.zero] == "0");
  CHECK(ps.pres.names[ps.pres.one] == "E");
  const int D = index_by_name(ps.pres, "D");
  const int D2 = index_by_name(ps.pres, "D^2");
  CHECK(ps.pres.mul[D][D] == D2);
  CHECK(ps.pres.mul[D][D2] == ps.pres.zero);

  // Index arithmetic round trips through the element list.
  for (int i = 0; i < ps.pres.size(); ++i) CHECK(ps.index_of(ps.elements[i]) == i);
  CHECK_THROWS_AS(ps.index_of(Matrix::unit(make_bool(), 3, 1, 0)), ParseError);
}

TEST_CASE("squaring one plus the cyclic shift fills in the next power") {
  auto ps = pattern_semiring(Family::circulant(3));
  const int x = index_by_name(ps.pres, "E+d");
  const int want = index_by_name(ps.pres, "E+d+d^2");
  CHECK(ps.pres.mul[x][x] == want);
}

TEST_CASE("open families refuse presentation with a closure witness") {
  CHECK_THROWS_AS(pattern_semiring(Family::toeplitz(3)), CapabilityError);
  CHECK_THROWS_AS(pattern_semiring(Family::zero_rows(3, {0})), CapabilityError);
}

TEST_CASE("inner derivations of the diagonal compose by intersection") {
  auto ds = derivation_semiring(Family::diag(2));
  CHECK(ds.iso.passed());
  CHECK(ds.iso.find("bijective")->passed);
  CHECK(ds.iso.find("preserves-add")->passed);
  CHECK(ds.iso.find("preserves-mul")->passed);

  const int d00 = index_by_name(ds.pres, "delta[E00]");
  const int d11 = index_by_name(ds.pres, "delta[E11]");
  CHECK(ds.pres.mul[d00][d11] == ds.pres.zero);
  CHECK(ds.pres.mul[d00][d00] == d00);

  // Exactly the four down-set ideals.
  CHECK(ds.pres.all_ideals(false).size() == 4);
}

TEST_CASE("the ideal list agrees with an independent join saturation") {
  for (const auto& fam : {Family::diag(3), Family::ut_toeplitz(3), Family::circulant(3)}) {
    auto ps = pattern_semiring(fam);
    INFO("family ", fam.spec_string());
    auto direct = ps.pres.all_ideals(false);
    auto viaJoins = ideals_by_join_saturation(ps.pres);
    CHECK(direct == viaJoins);
    for (const auto& I : direct) CHECK(ps.pres.is_ideal(I));
  }
}

TEST_CASE("units of the nilpotent-shift polynomials are trivial") {
  auto ps = pattern_semiring(Family::ut_toeplitz(3));
  const auto us = ps.pres.units();
  REQUIRE(us.size() == 1);
  CHECK(us[0] == ps.pres.one);
}

TEST_CASE("units of the cyclic-shift polynomials form a cyclic group") {
  auto ds = derivation_semiring(Family::circulant(4));
  const auto us = ds.pres.units();
  CHECK(us.size() == 4);
  int gen = -1;
  CHECK(ds.pres.units_cyclic(us, &gen));
  CHECK(ds.pres.names[gen] == "delta[d]");

  auto ps = pattern_semiring(Family::circulant(5));
  const auto ups = ps.pres.units();
  CHECK(ups.size() == 5);
  CHECK(ps.pres.units_cyclic(ups, &gen));
}

TEST_CASE("non-units of the cyclic-shift polynomials form a maximal but not subtractive ideal") {
  auto ps = pattern_semiring(Family::circulant(3));
  Presentation::Mask I = 0;
  const auto us = ps.pres.units();
  for (int i = 0; i < ps.pres.size(); ++i)
    if (std::find(us.begin(), us.end(), i) == us.end()) I |= 1ull << i;
  CHECK(ps.pres.is_ideal(I));
  CHECK(ps.pres.is_maximal_ideal(I, false));
  // d + d^2 lies in the ideal and absorbs the unit d additively, so
  // subtractivity would pull the unit in.
  CHECK_FALSE(ps.pres.is_subtractive(I));
  const int unit_d = index_by_name(ps.pres, "d");
  const int in_ideal = index_by_name(ps.pres, "d+d^2");
  CHECK(ps.pres.add[in_ideal][unit_d] == in_ideal);
}

TEST_CASE("the center of the full two-by-two Boolean matrices is the scalar pair") {
  auto ps = family_presentation(Family::all(2), make_bool());
  const auto c = ps.pres.center();
  REQUIRE(c.size() == 2);
  CHECK(std::find(c.begin(), c.end(), ps.pres.zero) != c.end());
  CHECK(std::find(c.begin(), c.end(), ps.pres.one) != c.end());
}

TEST_CASE("presentations work over larger finite carriers") {
  auto ps = family_presentation(Family::diag(2), make_chain(2));
  CHECK(ps.pres.size() == 9);
  CHECK(ps.pres.names[ps.pres.zero] == "0");
  // Coefficient 2 is the multiplicative one of the chain, so the plain
  // basis name appears unscaled at full weight.
  const int e = index_by_name(ps.pres, "E00+E11");
  CHECK(e == ps.pres.one);
  const int half = index_by_name(ps.pres, "1*E00");
  CHECK(ps.pres.mul[half][half] == half);  // min(1,1) = 1
  CHECK(ps.pres.add[half][e] == e);        // max against full weight

  // Too many elements to present is refused up front.
  CHECK_THROWS_AS(family_presentation(Family::all(2), make_chain(2)), CapabilityError);
}

TEST_CASE("subsets report their member names") {
  auto ps = pattern_semiring(Family::diag(2));
  const auto j = ps.pres.mask_to_json((1ull << ps.pres.zero) | (1ull << ps.pres.one));
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
}

TEST_CASE("commutants collect exactly the members that commute") {
  auto sr = make_bool();
  const auto within_all = commutant(shift_cyclic(sr, 2), Family::all(2));
  CHECK(within_all.size() == 4);
  for (const auto& m : within_all) {
    const Matrix d = shift_cyclic(sr, 2);
    CHECK(m * d == d * m);
  }

  // The commutant of the nilpotent shift among upper triangulars is the
  // shift-polynomial family, element for element.
  auto got = commutant(shift_nilpotent(sr, 3), Family::utm(3));
  auto expect = Family::ut_toeplitz(3).enumerate(sr);
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
}

TEST_CASE("infinite carriers need an explicit universe for commutant search") {
  auto nat = make_nat();
  const std::vector<Value> u = {Value::integer(0), Value::integer(1)};
  CHECK_THROWS_AS(commutant(shift_nilpotent(nat, 2), Family::all(2)), CapabilityError);
  const auto got = commutant(shift_nilpotent(nat, 2), Family::all(2), 1u << 20, &u);
  CHECK(got.size() == 4);  // aE + bD with a, b in {0, 1}
}

}  // TEST_SUITE
