#include <doctest.h>

#include "interdict/enumerate.hpp"
#include "interdict/kernel.hpp"
#include "interdict/oracle.hpp"
#include "support.hpp"

using namespace interdict;
using namespace interdict::testing;

namespace {

WeightedGraph star(int leaves) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v <= leaves; ++v) pairs.emplace_back(0, v);
  return make_graph(leaves + 1, pairs);
}

bool mmei_yes(const WeightedGraph& g, std::int64_t b, std::int64_t m) {
  return oracle_mmei(g, b).optimum <= ExtendedWeight(m);
}

bool kernel_decision(const KernelResult& res) {
  switch (res.verdict) {
    case KernelVerdict::yes: return true;
    case KernelVerdict::no: return false;
    case KernelVerdict::reduced: return mmei_yes(res.kernel, res.b, res.m);
  }
  return false;
}

}  // namespace

TEST_CASE("kernel bound values") {
  CHECK(kernel_bound(1, 1) == 16);
  CHECK(kernel_bound(2, 2) == 94);
  CHECK(kernel_bound(1, 2) == 65);
  CHECK(kernel_bound(2, 1) == 25);
  CHECK(kernel_bound(3, 0) == 3);
  CHECK(kernel_l(1, 1) == 5);
  CHECK(kernel_bound_closing(1, 1) == 13);
}

TEST_CASE("kernel bound grows with both parameters") {
  for (std::int64_t b = 0; b <= 5; ++b)
    for (std::int64_t m = 0; m <= 5; ++m) {
      CHECK(kernel_bound(b + 1, m) > kernel_bound(b, m));
      CHECK(kernel_bound(b, m + 1) > kernel_bound(b, m));
      CHECK(kernel_bound_closing(b, m) <= kernel_bound(b, m));
    }
}

TEST_CASE("rule 1 trims pendants") {
  const auto [safe, fired] = rule1(star(5), 2);
  CHECK(fired);
  CHECK(safe.num_edges() == 3);
  CHECK(rule1(star(5), 2, Rule1Mode::literal).first.num_edges() == 2);
  CHECK_FALSE(rule1(star(3), 2).second);
  CHECK_FALSE(rule1(path(4), 1).second);
}

TEST_CASE("rule 2 trims twin classes") {
  const auto [g, fired] = rule2(complete_bipartite(2, 5).without_bipartition(), 1);
  CHECK(fired);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 4);
  CHECK_FALSE(rule2(complete(4), 1).second);
  CHECK_FALSE(rule2(complete(4), 0).second);
}

TEST_CASE("literal rule 1 changes the answer") {
  const auto two_p3 = make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  CHECK_FALSE(mmei_yes(two_p3, 1, 1));
  CHECK(mmei_yes(rule1(two_p3, 1, Rule1Mode::literal).first, 1, 1));
  CHECK_FALSE(kernel_decision(kernelize(two_p3, 1, 1)));

  CHECK_FALSE(mmei_yes(star(3), 2, 0));
  CHECK(mmei_yes(rule1(star(3), 2, Rule1Mode::literal).first, 2, 0));
  CHECK_FALSE(kernel_decision(kernelize(star(3), 2, 0)));
}

TEST_CASE("trivial verdicts") {
  CHECK(kernelize(path(2), 1, 0).verdict == KernelVerdict::yes);
  CHECK(kernelize(make_graph(4, {{0, 1}, {2, 3}}), 0, 2).verdict == KernelVerdict::yes);
  CHECK(kernelize(complete(8), 1, 1).verdict == KernelVerdict::no);
  CHECK(kernelize(cycle(6), 1, 1).verdict == KernelVerdict::reduced);
}

TEST_CASE("trace replays to the recorded kernel") {
  const auto g = make_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 6}, {5, 7}, {6, 8}, {7, 8}, {1, 5}});
  const auto res = kernelize(g, 1, 1);
  CHECK_FALSE(res.steps.empty());
  const auto trace = res.trace();
  CHECK(replay_kernel(trace) == res.kernel);
  CHECK(trace.at("verdict") == std::string(verdict_name(res.verdict)));
  CHECK(trace.at("bound") == 16);

  auto tampered = trace;
  tampered["steps"][0]["removed"] = nlohmann::json::array();
  CHECK_THROWS_AS(replay_kernel(tampered), ValidationError);
}

TEST_CASE("kernelization is deterministic") {
  const auto g = complete_bipartite(3, 5).without_bipartition();
  CHECK(kernelize(g, 1, 2).trace().dump() == kernelize(g, 1, 2).trace().dump());
}

TEST_CASE("kernel preserves the decision and meets the bound on small graphs") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : graphs_up_to_isomorphism(n)) {
      for (std::int64_t b = 1; b <= 2; ++b)
        for (std::int64_t m = 1; m <= 2; ++m) {
          const auto res = kernelize(g, b, m);
          CHECK(res.kernel.num_edges() <= g.num_edges());
          if (res.verdict != KernelVerdict::no) CHECK(res.kernel.num_edges() <= kernel_bound(b, m));
          CHECK(kernel_decision(res) == mmei_yes(g, b, m));
          if (!res.steps.empty()) CHECK(replay_kernel(res.trace()) == res.kernel);
        }
    }
  }
}
