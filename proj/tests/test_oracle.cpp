#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scrollar/deletion.hpp"
#include "scrollar/engine.hpp"
#include "scrollar/model.hpp"
#include "scrollar/oracle.hpp"

using namespace scrollar;

namespace {

const DeletionSpec kExample{15, 5, {4, 6, 8}, {5, 7, 9}};

template <typename F>
void for_each_profile(int g, int max_entry, F&& visit) {
  std::vector<int> orders(static_cast<std::size_t>(g), 0);
  while (true) {
    visit(TorsionProfile(orders));
    std::size_t i = 0;
    while (i < orders.size() && orders[i] == max_entry) orders[i++] = 0;
    if (i == orders.size()) return;
    ++orders[i];
  }
}

}  // namespace

TEST_CASE("enumeration on the worked example") {
  const DivisorModel m = derive_model(kExample);
  const Enumeration all = enumerate_tableaux(m, {7, 3}, 2);
  REQUIRE_FALSE(all.exhausted);
  const Tableau greedy = greedy_fill(m, {7, 3}, 2).tableau;
  CHECK(std::find(all.tableaux.begin(), all.tableaux.end(), greedy) != all.tableaux.end());
  for (const Tableau& t : all.tableaux)
    for (int y = 0; y < 7; ++y)
      for (int x = 0; x < 3; ++x) CHECK(t.at(x, y) >= greedy.at(x, y));
  CHECK(enumerate_tableaux(m, {10, 6}, 2).tableaux.empty());
  CHECK(max_rank(m, 2) == 2);
  CHECK(max_rank(m, 4) == 7);
  CHECK(max_rank(m, 6) == 15);  // nonspecial by degree
}

TEST_CASE("profile mode") {
  const Enumeration e = enumerate_tableaux(TorsionProfile({0, 2, 2, 0}), {3, 2});
  REQUIRE(e.tableaux.size() == 1);
  CHECK(e.tableaux[0] == build_Lambda(4));
  CHECK(enumerate_tableaux(TorsionProfile({0, 0, 0, 0}), {3, 2}).tableaux.empty());
  CHECK(enumerate_tableaux(TorsionProfile({0, 0, 0, 0}), {2, 2}, {}, 1).tableaux.size() == 1);
}

TEST_CASE("budget") {
  const DivisorModel m = derive_model(kExample);
  EnumerationBudget tiny{10, EnumerationBudget::OnExhaustion::ReportPartial};
  const Enumeration partial = enumerate_tableaux(m, {7, 3}, 2, tiny);
  CHECK(partial.exhausted);
  CHECK(partial.nodes <= 11);
  tiny.on_exhaustion = EnumerationBudget::OnExhaustion::Error;
  CHECK_THROWS_AS(enumerate_tableaux(m, {7, 3}, 2, tiny), BudgetExhausted);
  CHECK_THROWS_AS(max_rank(m, 3, tiny), BudgetExhausted);
}

TEST_CASE("torus dimension") {
  CHECK(torus_dimension(build_Lambda(4), 4) == 0);
  CHECK(torus_dimension(derive_model(kExample).lambda_D(), 15) == 0);
  CHECK(torus_dimension(Tableau::from_rows({{1}}), 5) == 4);
}

TEST_CASE("W^r_d") {
  CHECK(wrd_nonempty(TorsionProfile({0, 2, 2, 0}), 2, 1).nonempty);
  CHECK_FALSE(wrd_nonempty(TorsionProfile({0, 0, 0, 0}), 2, 1).nonempty);
  const WrdAnswer rr = wrd_nonempty(TorsionProfile({0, 0, 0, 0}), 7, 3);
  CHECK(rr.nonempty);
  CHECK(rr.by_riemann_roch);
  CHECK_FALSE(wrd_nonempty(TorsionProfile({0, 0, 0, 0}), 3, 2).nonempty);
}

TEST_CASE("gonality by enumeration agrees with the DP for g <= 8") {
  for (int g = 2; g <= 8; ++g)
    for_each_profile(g, 3, [&](const TorsionProfile& p) { REQUIRE(oracle_gonality(p) == gonality(p)); });
}

TEST_CASE("certification of the engine") {
  Certification total;
  for (int g = 2; g <= 8; ++g)
    for (int k = 2; k <= g; ++k)
      for (const auto& spec : all_specs(g, k)) total += certify(derive_model(spec));
  CHECK(total.ok());
  CHECK(total.checks > 0);
  CHECK(total.tableaux_seen > 0);
  CHECK(certify(derive_model(kExample)).ok());
}
