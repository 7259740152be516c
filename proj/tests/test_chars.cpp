#include <algorithm>
#include <set>

#include "doctest.h"
#include "examples.hpp"
#include "blockext/block_chars.hpp"
#include "blockext/char_table.hpp"
#include "blockext/errors.hpp"

using namespace blockext;
using namespace blockext::testing;

namespace {

std::multiset<int> degrees(const std::vector<ClassFunction>& t) {
  std::multiset<int> d;
  for (const auto& chi : t) d.insert(static_cast<int>(chi.degree().get_num().get_si()));
  return d;
}

GroupPtr group_of(std::vector<Perm> gens) { return FiniteGroup::from_permutations(gens); }

}  // namespace

TEST_CASE("char_table of C_4") {
  auto c4 = group_of({{1, 2, 3, 0}});
  auto t = char_table(c4);
  REQUIRE(t.size() == 4);
  std::vector<CycloNumber> units{CycloNumber(1, Rational(1)), CycloNumber::root_of_unity(4, 1),
                                 CycloNumber(1, Rational(-1)), CycloNumber::root_of_unity(4, 3)};
  for (const auto& chi : t) {
    CHECK(chi.degree() == 1);
    for (const auto& v : chi.values) CHECK(std::count(units.begin(), units.end(), v) == 1);
  }
  CHECK(t[0] == ClassFunction::constant(c4, 1));
  CHECK(table_is_orthogonal(t));
}

TEST_CASE("char_table degrees of Q8, S3, SL(2,3)") {
  auto q8 = char_table(group_of(quaternion_generators()));
  CHECK(degrees(q8) == std::multiset<int>{1, 1, 1, 1, 2});
  auto s3 = char_table(group_of({{1, 0, 2}, {1, 2, 0}}));
  CHECK(degrees(s3) == std::multiset<int>{1, 1, 2});
  auto sl = char_table(group_of(sl23_generators()));
  CHECK(degrees(sl) == std::multiset<int>{1, 1, 1, 2, 2, 2, 3});
  for (const auto* t : {&q8, &s3, &sl}) CHECK(table_is_orthogonal(*t));
  // sorted by degree; trivial character first
  CHECK(std::is_sorted(sl.begin(), sl.end(), character_less));
  CHECK(sl[0] == ClassFunction::constant(sl[0].group, 1));
}

TEST_CASE("char_table properties on assorted groups") {
  std::vector<std::vector<Perm>> gens{
      {},
      {{1, 2, 3, 4, 0}},
      {{1, 2, 3, 0}, {1, 0, 2, 3}},                      // S4
      {{1, 2, 0, 3, 4}, {0, 1, 2, 4, 3}},                // C3 x C2
      {{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}},    // C7 x| C3
      {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}},                // C5 x| C4
  };
  for (const auto& g : gens) {
    auto G = group_of(g);
    auto t = char_table(G);
    CHECK(static_cast<int>(t.size()) == G->num_classes());
    Rational s = 0;
    for (const auto& chi : t) s += chi.degree() * chi.degree();
    CHECK(s == G->order());
    CHECK(table_is_orthogonal(t));
  }
  CHECK(dixon_prime(24, 12) == 13);
  CHECK(dixon_prime(8, 4) == 13);
}

TEST_CASE("orthogonality check rejects a corrupted table") {
  auto t = char_table(group_of(quaternion_generators()));
  t[1] = t[0];
  CHECK_FALSE(table_is_orthogonal(t));
}

TEST_CASE("irr_over_phi") {
  auto c2 = group_of({{1, 0}});
  auto f = irr_over_phi(c2, 1, 1);
  REQUIRE(f.size() == 1);
  CHECK(f[0].at(1) == CycloNumber(1, Rational(-1)));

  auto c4 = group_of({{1, 2, 3, 0}});
  const int z = c4->pow(1, 2);
  auto g = irr_over_phi(c4, z, 1);
  REQUIRE(g.size() == 2);
  std::set<std::string> gen_values;
  for (const auto& chi : g) gen_values.insert(chi.at(1).to_string());
  CHECK(gen_values == std::set<std::string>{CycloNumber::root_of_unity(4, 1).to_string(),
                                            CycloNumber::root_of_unity(4, 3).to_string()});

  auto s3 = group_of({{1, 0, 2}, {1, 2, 0}});
  CHECK(irr_over_phi(s3, 0, 0).size() == 3);
  CHECK_THROWS_AS(irr_over_phi(s3, 1, 0), Error);
  auto q8 = group_of(quaternion_generators());
  int minus_one = 0;
  for (int x = 1; x < 8; ++x)
    if (q8->element_order(x) == 2) minus_one = x;
  CHECK(degrees(irr_over_phi(q8, minus_one, 0)) == std::multiset<int>{1, 1, 1, 1});
  CHECK(degrees(irr_over_phi(q8, minus_one, 1)) == std::multiset<int>{2});
}

TEST_CASE("build_irr_B examples") {
  auto A = validate_block_spec(example_a());
  auto BA = build_irr_B(A);
  REQUIRE(BA.irr.size() == 3);
  CHECK(BA.irr[0].degree == 1);
  CHECK(BA.irr[1].degree == 1);
  CHECK(BA.irr[2].degree == 2);
  CHECK(BA.ibr.size() == 2);

  auto C = validate_block_spec(example_c());
  auto BC = build_irr_B(C);
  std::int64_t sum = 0;
  int linear = 0;
  for (const auto& c : BC.irr) {
    sum += c.degree * c.degree;
    linear += c.degree == 1;
  }
  CHECK(sum == 48);
  CHECK(linear == 3);
  CHECK(BC.irr.size() == 8);

  BlockSpec t = pure_abelian(3, {1});
  t.generators = {{1, 0}};
  t.actions = {{{1}}};
  auto T = validate_block_spec(t);
  auto BT = build_irr_B(T);
  CHECK(BT.irr.size() == 3);
  for (const auto& c : BT.irr) CHECK(c.degree == 1);
}

TEST_CASE("degree-square sum on all example specs") {
  for (const auto& spec : {example_a(), example_b(), example_c(), pure_abelian(3, {2}), pure_abelian(2, {2, 2})}) {
    auto G = validate_block_spec(spec);
    auto B = build_irr_B(G);
    std::int64_t sum = 0;
    for (const auto& c : B.irr) sum += c.degree * c.degree;
    CHECK(sum * G.z_order() == G.G->order());
    // every Brauer character has a lift, and reductions cover Irr(E | phi)
    for (std::size_t psi = 0; psi < B.ibr.size(); ++psi) CHECK_FALSE(lifts_of(static_cast<int>(psi), B).empty());
  }
}

TEST_CASE("induction, restriction, reciprocity on Example A") {
  auto A = validate_block_spec(example_a());
  auto BA = build_irr_B(A);
  const auto& G = A.G;
  CHECK(inner_product(BA.irr[2].induced, BA.irr[2].induced) == 1);

  auto triv = G->subgroup({0});
  auto reg = induce(ClassFunction::constant(triv, 1), G);
  CHECK(reg == ClassFunction::regular(G));

  auto lc = lambda_chi(A, BA.irr[2].lambda, BA.irr[2].chi);
  auto H = lc.group;
  CHECK(H->order() == 6);
  for (const auto& chi : char_table(H))
    for (const auto& eta : char_table(G))
      CHECK(inner_product(induce(chi, G), eta) == inner_product(chi, restrict_to(eta, H)));
  CHECK_THROWS_AS(inner_product(lc, BA.irr[0].induced), Error);
}

TEST_CASE("mackey_restrict_induced") {
  auto A = validate_block_spec(example_a());
  auto BA = build_irr_B(A);
  const auto& G = A.G;
  auto eta = BA.irr[0].induced;
  auto one = mackey_restrict_induced(G, eta, G);
  REQUIRE(one.size() == 1);
  CHECK(one[0].piece == eta);

  auto lc = lambda_chi(A, BA.irr[2].lambda, BA.irr[2].chi);
  auto H = lc.group;
  auto pieces = mackey_restrict_induced(H, lc, G);
  REQUIRE(pieces.size() == 2);
  // one piece is (lambda, phi) itself, the other its conjugate (lambda^2, phi)
  CHECK(pieces[0].piece == lc);
  CHECK(pieces[1].piece.values == lambda_chi(A, A.D.neg(BA.irr[2].lambda), BA.irr[2].chi).values);

  auto triv = G->subgroup({0});
  auto reg_pieces = mackey_restrict_induced(H, ClassFunction::constant(triv, 1), G);
  CHECK(reg_pieces.size() == 2);
  for (const auto& p : reg_pieces) CHECK(p.piece == ClassFunction::regular(H));
}

TEST_CASE("reduce_to_brauer and lifts_of") {
  auto A = validate_block_spec(example_a());
  auto BA = build_irr_B(A);
  CHECK(BA.decomposition == std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(lifts_of(0, BA) == std::vector<int>{0});
  CHECK(lifts_of(1, BA) == std::vector<int>{1});

  auto B = validate_block_spec(example_b());
  auto BB = build_irr_B(B);
  for (int psi = 0; psi < static_cast<int>(BB.ibr.size()); ++psi) {
    auto lifts = lifts_of(psi, BB);
    CHECK(lifts.size() == 3);
    for (int i : lifts) {
      // lambda trivial on D_1, so it lies in the E-fixed part
      CHECK(BB.orbits[BB.irr[i].orbit].orbit.size() == 1);
    }
  }

  auto C = validate_block_spec(example_c());
  auto BC = build_irr_B(C);
  for (int i = 0; i < 3; ++i) {
    std::vector<int> unit(3, 0);
    unit[i] = 1;
    CHECK(BC.decomposition[i] == unit);
  }

  BlockSpec t = pure_abelian(3, {1, 1});
  t.generators = {{1, 0}};
  t.actions = {{{1, 0}, {0, 1}}};
  auto T = validate_block_spec(t);
  auto BT = build_irr_B(T);
  REQUIRE(BT.ibr.size() == 1);
  CHECK(lifts_of(0, BT).size() == 9);
}
