#include <doctest.h>

#include <cstdlib>

#include "interdict/enumerate.hpp"
#include "interdict/oracle.hpp"
#include "interdict/reduction.hpp"
#include "support.hpp"

using namespace interdict;
using namespace interdict::testing;

namespace {

const EdgeSet& edges_in(const OracleResult& r) { return std::get<EdgeSet>(r.certificate); }

void check_reevaluates(const ProblemInstance& inst) {
  const OracleResult res = solve_oracle(inst);
  if (!res.feasible) return;
  const auto value = evaluate_certificate(inst, res.certificate);
  REQUIRE(value.has_value());
  CHECK(*value == res.optimum);
}

}  // namespace

TEST_CASE("oracle_mve") {
  auto zero_c4 = make_weighted(4, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {0, 3, 0}});
  CHECK(oracle_mve(zero_c4, 1).optimum == ExtendedWeight(0));
  CHECK(oracle_mve(bridged_triangles(), 1).optimum.is_infinite());
  const auto mixed = oracle_mve(mixed_square(), 1);
  CHECK(mixed.optimum == ExtendedWeight(2));
  CHECK(edges_in(mixed).edges == std::vector<int>{*mixed_square().find_edge(0, 1)});
}

TEST_CASE("oracle_mmei") {
  CHECK(oracle_mmei(complete(3), 3).optimum == ExtendedWeight(0));
  CHECK(oracle_mmei(make_graph(4, {{0, 1}, {2, 3}}), 1).optimum == ExtendedWeight(1));
  CHECK(oracle_mmei(complete(3), 2).optimum == ExtendedWeight(1));
}

TEST_CASE("oracle_mmei honours interdiction costs") {
  const WeightedGraph g(3, {{0, 1, 1, 2}, {1, 2, 1, 1}});
  CHECK(oracle_mmei(g, 1).optimum == ExtendedWeight(1));
  CHECK(oracle_mmei(g, 3).optimum == ExtendedWeight(0));
  CHECK(edges_in(oracle_mmei(g, 3)).total_cost == 3);
}

TEST_CASE("oracle_fei") {
  const auto path_net = expect_flow(parse_graph("p flow 3 2 s=1 t=3\na 1 2 1 1\na 2 3 1 1\n"));
  CHECK(oracle_fei(path_net, 1).optimum == ExtendedWeight(0));
  const auto two = expect_flow(parse_graph("p flow 4 4 s=1 t=4\na 1 2 1 1\na 2 4 1 1\na 1 3 1 1\na 3 4 1 1\n"));
  CHECK(oracle_fei(two, 1).optimum == ExtendedWeight(1));
  const auto single = make_graph(2, {{0, 1}}).with_bipartition({Side::X, Side::Y});
  CHECK(oracle_fei(red_mmei_to_fei(single, 1, 0).target.network(), 1).optimum == ExtendedWeight(0));
}

TEST_CASE("oracle_mmmei") {
  CHECK(oracle_mmmei(cycle(4), 1).optimum == ExtendedWeight(1));
  CHECK(oracle_mmmei(path(4), 0).optimum == ExtendedWeight(1));
  CHECK(oracle_mmmei(complete(3), 3).optimum == ExtendedWeight(0));
}

TEST_CASE("oracle_pvc") {
  CHECK(oracle_pvc(path(3), 1).optimum == ExtendedWeight(2));
  CHECK(oracle_pvc(complete(4), 2).optimum == ExtendedWeight(5));
  CHECK(oracle_pvc(cycle(4), 1).optimum == ExtendedWeight(2));
  const auto over = oracle_pvc(path(3), 4);
  CHECK_FALSE(over.feasible);
  CHECK(over.optimum.is_infinite());
}

TEST_CASE("oracle_peds") {
  CHECK(oracle_peds(path(4), 1, DominationMode::exclusive).optimum == ExtendedWeight(2));
  CHECK(oracle_peds(make_graph(4, {{0, 1}, {2, 3}}), 1, DominationMode::inclusive).optimum == ExtendedWeight(1));
  const auto gadget = is_to_peds_gadget(make_graph(2, {{0, 1}}));
  CHECK(oracle_peds(gadget, 1, DominationMode::exclusive).optimum == ExtendedWeight(4));
}

TEST_CASE("oracle_kway") {
  CHECK(oracle_kway(cycle(4), 1).optimum == ExtendedWeight(1));
  CHECK(oracle_kway(cycle(4), 2).optimum == ExtendedWeight(2));
  CHECK(oracle_kway(path(4), 2).optimum == ExtendedWeight(3));
  const auto profile = oracle_kway(complete(4), 3).stats.at("profile");
  CHECK(profile == nlohmann::json::array({1, 1, 1, 2}));
}

TEST_CASE("oracle_kss and oracle_kkpvc") {
  const auto k22 = complete_bipartite(2, 2);
  CHECK(oracle_kss(k22, 0, 2).optimum == ExtendedWeight(0));
  CHECK(oracle_kss(k22, 1, 1).optimum == ExtendedWeight(1));
  const auto image = red_clique_to_kss(complete(3), 3).target;
  CHECK(oracle_kss(image.weighted(), 3, 3).optimum == ExtendedWeight(3));
  CHECK(oracle_kkpvc(k22, 1, 0).optimum == ExtendedWeight(2));
  CHECK(oracle_kkpvc(k22, 1, 1).optimum == ExtendedWeight(3));
  CHECK(oracle_kkpvc(complete_bipartite(1, 3), 1, 0).optimum == ExtendedWeight(3));
  const auto over = oracle_kss(k22, 3, 0);
  CHECK_FALSE(over.feasible);
  CHECK_THROWS_AS(oracle_kss(complete(3), 1, 1), ValidationError);
}

TEST_CASE("independent set and clique oracles") {
  CHECK(oracle_independent_set(petersen()).optimum == ExtendedWeight(4));
  CHECK(oracle_clique(petersen()).optimum == ExtendedWeight(2));
  CHECK(oracle_clique(complete(5)).optimum == ExtendedWeight(5));
  CHECK(oracle_independent_set(cycle(5)).optimum == ExtendedWeight(2));
}

TEST_CASE("caps are refused, never truncated") {
  Caps tight;
  tight.max_edges = 3;
  tight.max_vertices = 2;
  CHECK_THROWS_AS(oracle_mve(complete(5), 2, tight), CapExceeded);
  CHECK_THROWS_AS(oracle_pvc(complete(5), 2, tight), CapExceeded);
  CHECK_NOTHROW(oracle_mve(complete(5), 0, tight));
  CHECK(binomial_prefix_sum(60, 30, 1000) > 1000);
  CHECK(binomial_prefix_sum(5, 2, 1000) == 16);
}

TEST_CASE("caps read from the environment") {
  ::setenv("INTERDICT_CAP_EDGES", "9", 1);
  ::setenv("INTERDICT_CAP_VERTICES", "7", 1);
  const Caps caps = Caps::from_env();
  ::unsetenv("INTERDICT_CAP_EDGES");
  ::unsetenv("INTERDICT_CAP_VERTICES");
  CHECK(caps.max_edges == 9);
  CHECK(caps.max_vertices == 7);
  CHECK(Caps::from_env().max_edges == 22);
}

TEST_CASE("every certificate re-evaluates to the optimum") {
  for (const auto& g : general_sweep(5)) {
    const std::int64_t e = g.num_edges();
    for (std::int64_t b = 0; b <= std::min<std::int64_t>(e, 3); ++b) {
      check_reevaluates(make_instance(ProblemKind::MVE, g, {{"b", b}, {"r", 0}}));
      check_reevaluates(make_instance(ProblemKind::MMEI, g, {{"b", b}, {"m", 0}}));
      check_reevaluates(make_instance(ProblemKind::MMMEI, g, {{"b", b}, {"r", 0}}));
      check_reevaluates(make_instance(ProblemKind::KWAY, g, {{"s", b}, {"k", 1}}));
      check_reevaluates(make_instance(ProblemKind::PEDS, g, {{"k", b}, {"x", 0}}, DominationMode::exclusive));
      check_reevaluates(make_instance(ProblemKind::PEDS, g, {{"k", b}, {"x", 0}}));
    }
    for (std::int64_t k = 0; k <= g.num_vertices(); ++k)
      check_reevaluates(make_instance(ProblemKind::PVC, g, {{"k", k}, {"x", 0}}));
    check_reevaluates(make_instance(ProblemKind::IS, g, {{"k", 1}}));
    check_reevaluates(make_instance(ProblemKind::CLIQUE, g, {{"k", 1}}));
  }
  for (const auto& g : bipartite_sweep(3)) {
    for (std::int64_t k1 = 0; k1 <= 3; ++k1)
      for (std::int64_t k2 = 0; k2 <= 3; ++k2) {
        check_reevaluates(make_instance(ProblemKind::KSS, g, {{"k1", k1}, {"k2", k2}, {"x", 0}}));
        check_reevaluates(make_instance(ProblemKind::KKPVC, g, {{"k1", k1}, {"k2", k2}, {"x", 0}}));
      }
    const auto net = red_mmei_to_fei(g, 1, 0).target;
    for (std::int64_t b = 0; b <= 3; ++b) {
      auto inst = net;
      inst.params["b"] = b;
      check_reevaluates(inst);
    }
  }
}

TEST_CASE("optima are monotone in the budget") {
  for (const auto& g : general_sweep(5)) {
    for (std::int64_t b = 1; b <= std::min(g.num_edges(), 3); ++b) {
      CHECK(oracle_mve(g, b).optimum >= oracle_mve(g, b - 1).optimum);
      CHECK(oracle_mmei(g, b).optimum <= oracle_mmei(g, b - 1).optimum);
      CHECK(oracle_mmmei(g, b).optimum <= oracle_mmmei(g, b - 1).optimum);
      CHECK(oracle_kway(g, b).optimum >= oracle_kway(g, b - 1).optimum);
      CHECK(oracle_peds(g, b, DominationMode::exclusive).optimum >=
            oracle_peds(g, b - 1, DominationMode::exclusive).optimum);
    }
    for (std::int64_t k = 1; k <= g.num_vertices(); ++k)
      CHECK(oracle_pvc(g, k).optimum >= oracle_pvc(g, k - 1).optimum);
  }
}

TEST_CASE("a budget reaching the edge connectivity disconnects") {
  for (const auto& g : general_sweep(6)) {
    if (components(g).count != 1 || g.num_vertices() < 2) continue;
    CHECK(oracle_mve(g, edge_connectivity(g).d).optimum.is_infinite());
  }
}

TEST_CASE("zero-budget identities") {
  for (const auto& g : general_sweep(5)) {
    CHECK(oracle_mmei(g, 0).optimum == ExtendedWeight(max_matching(g)));
    CHECK(oracle_mmmei(g, 0).optimum == ExtendedWeight(min_maximal_matching(g)));
  }
  for (const auto& g : bipartite_sweep(3)) {
    const auto net = red_mmei_to_fei(g, 0, 0).target.network();
    CHECK(oracle_fei(net, 0).optimum == ExtendedWeight(max_flow(net).value));
  }
}

TEST_CASE("inclusive and exclusive domination optima differ by k on size-k optima") {
  for (const auto& g : general_sweep(5)) {
    for (std::int64_t k = 1; k <= max_matching(g); ++k) {
      const auto excl = oracle_peds(g, k, DominationMode::exclusive);
      const auto incl = oracle_peds(g, k, DominationMode::inclusive);
      CHECK(incl.optimum <= ExtendedWeight(excl.optimum.value() + k));
      const auto& s = edges_in(excl).edges;
      if (static_cast<std::int64_t>(s.size()) == k && is_matching(g, s))
        CHECK(incl.optimum == ExtendedWeight(excl.optimum.value() + k));
    }
  }
}

TEST_CASE("decisions follow each problem's direction") {
  const auto k3 = complete(3);
  CHECK(solve_oracle(make_instance(ProblemKind::MMEI, k3, {{"b", 3}, {"m", 0}})).decision);
  CHECK_FALSE(solve_oracle(make_instance(ProblemKind::MMEI, k3, {{"b", 2}, {"m", 0}})).decision);
  CHECK(solve_oracle(make_instance(ProblemKind::MVE, mixed_square(), {{"b", 1}, {"r", 2}})).decision);
  CHECK_FALSE(solve_oracle(make_instance(ProblemKind::MVE, mixed_square(), {{"b", 1}, {"r", 3}})).decision);
  CHECK(solve_oracle(make_instance(ProblemKind::PVC, path(3), {{"k", 1}, {"u", 0}})).decision);
  CHECK_FALSE(solve_oracle(make_instance(ProblemKind::PVC, cycle(4), {{"k", 1}, {"u", 1}})).decision);
  CHECK_FALSE(solve_oracle(make_instance(ProblemKind::PVC, path(3), {{"k", 5}, {"x", 0}})).decision);
  CHECK(solve_oracle(make_instance(ProblemKind::KSS, complete_bipartite(2, 2), {{"k1", 1}, {"k2", 1}, {"x", 1}})).decision);
  CHECK(solve_oracle(make_instance(ProblemKind::KWAY, path(4), {{"s", 2}, {"k", 3}})).decision);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(make_instance(ProblemKind::MMEI, complete(3), {{"b", 1}}), ValidationError);
  CHECK_THROWS_AS(make_instance(ProblemKind::MMEI, complete(3), {{"b", -1}, {"m", 0}}), ValidationError);
  CHECK_THROWS_AS(make_instance(ProblemKind::MMEI, complete(3), {{"b", 1}, {"m", 0}, {"z", 1}}), ValidationError);
  CHECK_THROWS_AS(make_instance(ProblemKind::PVC, complete(3), {{"k", 1}, {"x", 1}, {"u", 1}}), ValidationError);
  const auto inst = make_instance(ProblemKind::PEDS, path(4), {{"k", 1}, {"x", 2}}, DominationMode::exclusive);
  const auto round = instance_from_json(instance_to_json(inst));
  CHECK(round.kind == inst.kind);
  CHECK(round.params == inst.params);
  CHECK(round.mode == inst.mode);
  CHECK(round.weighted() == inst.weighted());
}

TEST_CASE("certificates round-trip through JSON") {
  const auto inst = make_instance(ProblemKind::MVE, mixed_square(), {{"b", 1}, {"r", 2}});
  const auto res = solve_oracle(inst);
  const auto doc = certificate_to_json(inst, res.certificate);
  CHECK(doc.at("edges") == nlohmann::json::array({nlohmann::json::array({1, 2})}));
  CHECK(std::get<EdgeSet>(certificate_from_json(inst, doc)) == std::get<EdgeSet>(res.certificate));
  CHECK(weight_to_json(ExtendedWeight::infinity()) == "INFINITY");
}
