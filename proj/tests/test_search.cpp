#include "broomlab/construct.hpp"
#include "broomlab/detect.hpp"
#include "broomlab/error.hpp"
#include "broomlab/registry.hpp"
#include "broomlab/search.hpp"
#include "oracles.hpp"
#include "search_state.hpp"

#include <doctest.h>

using namespace broomlab;

namespace {

SearchConfig generic(const std::string& spec, int t) {
  SearchConfig c;
  c.host_spec = spec;
  c.host = parse_host_spec(spec);
  c.t = t;
  c.rules = {host_qualifies_for_c4(c.host, t), true, false};
  return c;
}

SearchConfig near_factorization(int n, RuleSet rules = {true, true, false}) {
  SearchConfig c;
  c.host_spec = "clique:" + std::to_string(n);
  c.host = build_clique(n);
  c.t = n - 1;
  c.mode = SearchMode::NearFactorization;
  c.rules = rules;
  return c;
}

ErrorCode error_of(const SearchConfig& c) {
  try {
    search(c);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("search accepted the config");
  return ErrorCode::Io;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("host specs") {
  CHECK(parse_host_spec("clique:5").edge_count() == 10);
  CHECK(parse_host_spec("biclique:2,3").edge_count() == 6);
  CHECK_THROWS_AS(parse_host_spec("clique:x"), Error);
  CHECK_THROWS_AS(parse_host_spec("torus:3"), Error);
  CHECK_THROWS_AS(parse_host_spec("biclique:3"), Error);
  CHECK(default_palette_cap(build_clique(6)) == 6);
  CHECK(default_palette_cap(build_biclique(2, 3)) == 6);
}

TEST_CASE("config validation") {
  auto c = generic("clique:6", 4);
  c.palette_cap = 4;
  CHECK(error_of(c) == ErrorCode::InvalidParameter);
  c = generic("clique:6", 4);
  c.deterministic = false;
  CHECK(error_of(c) == ErrorCode::InvalidParameter);
  c = generic("clique:7", 6);
  c.rules.c4 = true;  // K_{t+1} does not qualify
  CHECK(error_of(c) == ErrorCode::InvalidParameter);
  c = generic("clique:6", 4);
  c.ell = 2;
  CHECK(error_of(c) == ErrorCode::InvalidParameter);
  c = generic("clique:17", 4);
  c.rules = RuleSet::none();
  CHECK(error_of(c) == ErrorCode::SizeGuard);
  auto nf = near_factorization(7);
  nf.host = build_clique(6);
  CHECK(error_of(nf) == ErrorCode::InvalidParameter);
  nf = near_factorization(7);
  nf.palette_cap = 8;
  CHECK(error_of(nf) == ErrorCode::InvalidParameter);
  CHECK_THROWS_AS(near_factorization_search(build_clique(8), 7), Error);
}

TEST_CASE("verdicts match the brute-force oracle") {
  // K_5 through K_6, plus small non-complete hosts.
  for (auto [spec, t] : {std::pair{"clique:4", 3}, {"clique:5", 3}, {"clique:5", 4},
                         {"clique:6", 4}, {"clique:6", 5}, {"biclique:2,3", 3},
                         {"biclique:3,3", 4}}) {
    const auto c = generic(spec, t);
    const auto cert = search(c);
    const int cap = default_palette_cap(c.host);
    const bool exists = oracle::rainbow_free_coloring_exists(c.host, t, cap);
    INFO(spec << " t=" << t);
    CHECK((cert.result == SearchResult::Witness) == exists);
  }
}

TEST_CASE("rules never change verdicts") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const int n = 4 + static_cast<int>(rng() % 3);
    auto g = oracle::random_graph(n, 0.75, rng);
    if (g.edge_count() < 3 || g.edge_count() > 10) continue;
    SearchConfig c;
    c.host_spec = "random";
    c.host = g;
    c.t = 3 + static_cast<int>(rng() % 3);
    c.rules = RuleSet::none();
    const auto plain = search(c);
    c.rules = {host_qualifies_for_c4(g, c.t), true, false};
    const auto pruned = search(c);
    CHECK(plain.result == pruned.result);
    CHECK(plain.witness == pruned.witness);  // both are the least witness
  }
}

TEST_CASE("K_5 and K_6 are exhausted, K_8 yields the F_2^3 coloring") {
  CHECK(search(generic("clique:5", 4)).result == SearchResult::Exhausted);
  CHECK(search(generic("clique:6", 4)).result == SearchResult::Exhausted);
  const auto k8 = search(generic("clique:8", 6));
  REQUIRE(k8.result == SearchResult::Witness);
  CHECK(are_isomorphic(*k8.witness, f2_clique_coloring(3).coloring));
  CHECK(witness_verifies(*k8.witness, 6));
  CHECK(k8.witness->is_canonical());
}

TEST_CASE("K_7 with t = 6 is frozen as a witness") {
  const auto c = search(generic("clique:7", 6));
  CHECK(c.result == SearchResult::Witness);
}

TEST_CASE("explored states introduce colors canonically") {
  auto c = generic("clique:6", 4);
  c.rules = RuleSet::none();
  bool prefix = true;
  std::uint64_t seen = 0;
  c.on_node = [&](std::span<const int> colors) {
    ++seen;
    int top = 0;
    std::vector<char> used(64, 0);
    for (int x : colors) {
      used[x] = 1;
      top = std::max(top, x);
    }
    for (int k = 1; k <= top; ++k) prefix = prefix && used[k];
  };
  const auto cert = search(c);
  CHECK(prefix);
  CHECK(seen == cert.stats.nodes);
}

TEST_CASE("determinism and order independence") {
  for (auto [spec, t] : {std::pair{"clique:6", 4}, {"clique:7", 5}, {"clique:8", 6}}) {
    auto c = generic(spec, t);
    const auto a = search(c);
    const auto b = search(c);
    CHECK(same_outcome(a, b));
    c.order = BranchOrder::MostConstrained;
    CHECK(search(c).result == a.result);
  }
}

TEST_CASE("prune audits find nothing beneath pruned nodes") {
  for (auto [spec, t] : {std::pair{"clique:6", 4}, {"clique:7", 5}, {"clique:6", 5}}) {
    auto c = generic(spec, t);
    c.audit_rate = 1.0;
    const auto cert = search(c);
    CHECK(cert.stats.audits > 0);
    CHECK(cert.stats.audit_failures == 0);
  }
}

TEST_CASE("parallel witness hunting") {
  auto c = generic("clique:8", 6);
  const auto sequential = search(c);
  c.deterministic = false;
  c.certify = false;
  c.workers = 4;
  const auto parallel = search(c);
  CHECK(parallel.result == SearchResult::Witness);
  CHECK(parallel.witness == sequential.witness);
  CHECK_FALSE(parallel.deterministic);

  auto k7 = generic("clique:7", 5);
  k7.deterministic = false;
  k7.certify = false;
  k7.workers = 3;
  CHECK(search(k7).result == SearchResult::NotFound);
}

TEST_CASE("near-factorization agrees with generic mode") {
  for (int n : {5, 7, 9}) {
    const auto nf = search(near_factorization(n));
    auto g = generic("clique:" + std::to_string(n), n - 1);
    g.order = BranchOrder::MostConstrained;
    const auto gen = search(g);
    INFO("n=" << n);
    CHECK(nf.result == gen.result);
    if (nf.witness) CHECK(color_classes(*nf.witness).near_one_factorization);
  }
  CHECK(search(near_factorization(5)).result == SearchResult::Exhausted);
  CHECK(search(near_factorization(9)).result == SearchResult::Witness);
}

TEST_CASE("the F_3^2 coloring is a near-factorization completion") {
  const auto f3 = f3_clique_coloring(2).coloring;
  CHECK(color_classes(f3).near_one_factorization);
  CHECK(witness_verifies(f3, 8));
}

TEST_CASE("K_11 near-factorization is exhausted") {
  const auto cert = near_factorization_search(build_clique(11), 10);
  CHECK(cert.result == SearchResult::Exhausted);
  CHECK(cert.stats.nodes > 0);
  const auto again = search(near_factorization(11));
  CHECK(again.result == SearchResult::Exhausted);
}

TEST_CASE("second classes and bichromatic paths") {
  const auto first = near_factorization_first_class(11);
  CHECK(first.size() == 5);
  CHECK(first.front() == Edge{1, 2});
  const std::vector<Edge> square{{0, 1}, {2, 3}};
  const std::vector<Edge> closing{{1, 2}, {0, 3}};
  CHECK_FALSE(has_bichromatic_p4(square, closing));  // a bichromatic C4
  const std::vector<Edge> a{{0, 1}, {2, 3}};
  const std::vector<Edge> b{{1, 2}, {3, 4}};
  CHECK(has_bichromatic_p4(a, b));
  const std::vector<Edge> c{{1, 2}};
  CHECK_FALSE(has_bichromatic_p4(a, c));
  for (int n : {7, 9, 11}) {
    const auto reps = near_factorization_second_classes(n);
    CHECK_FALSE(reps.empty());
    CHECK(std::is_sorted(reps.begin(), reps.end()));
  }
}

TEST_CASE("c4 prune on partial states") {
  using namespace broomlab::detail;
  const HostIndex h(build_clique(11));
  const auto e = [&](int u, int v) { return h.id(u, v); };
  {
    PartialColoring s(h, 11);
    s.assign(e(0, 1), 1), s.assign(e(1, 2), 2), s.assign(e(2, 3), 1), s.assign(e(0, 3), 3);
    CHECK(generic_c4_violated(h, s, e(0, 3)));
  }
  {
    PartialColoring s(h, 11);
    s.assign(e(0, 1), 1), s.assign(e(1, 2), 2), s.assign(e(2, 3), 1), s.assign(e(0, 3), 2);
    CHECK_FALSE(generic_c4_violated(h, s, e(0, 3)));
  }
  {
    // Rainbow 0-1-2-3 with vertex 0 fully colored and carrying colors 2 and 3.
    PartialColoring s(h, 11);
    s.assign(e(0, 1), 1), s.assign(e(1, 2), 2), s.assign(e(2, 3), 3), s.assign(e(0, 3), 4);
    int next = 5;
    s.assign(e(0, 2), 3 == 3 ? 5 : 0);
    for (int w = 4; w < 11; ++w) {
      const int c = w == 4 ? 2 : w == 5 ? 3 : ++next;
      s.assign(e(0, w), c);
    }
    CHECK(s.colored_degree(0) == 10);
    CHECK_FALSE(generic_c4_violated(h, s, e(0, 10)));
  }
}

TEST_CASE("lemma-certified registry") {
  const auto registry = lemma_certified_prune_registry(11);
  REQUIRE(registry.rules().size() == 1);
  const auto& rule = registry.rules().front();
  CHECK(rule.active);
  CHECK(rule.supports.size() == bichromatic_p4_cases(11).size());
  for (const auto& s : rule.supports) CHECK(s.result == SearchResult::Exhausted);

  SUBCASE("verified again with reruns") {
    PruneRegistry copy;
    copy.add(rule);
    copy.verify(true);
    CHECK(copy.active(kBichromaticP4Rule, 11));
  }
  SUBCASE("stale statistics disable the rule") {
    auto stale = rule;
    stale.supports.front().stats.nodes += 1;
    PruneRegistry r;
    r.add(stale);
    r.verify(true);
    CHECK_FALSE(r.active(kBichromaticP4Rule, 11));
    CHECK(r.rules().front().status == "disabled: stale certificate");
  }
  SUBCASE("stale engine version disables the rule") {
    auto stale = rule;
    stale.supports.front().engine_version = "broomlab-search 0.9";
    PruneRegistry r;
    r.add(stale);
    r.verify(false);
    CHECK_FALSE(r.active(kBichromaticP4Rule, 11));
  }
  SUBCASE("missing supports disable the rule") {
    auto thin = rule;
    thin.supports.clear();
    PruneRegistry r;
    r.add(thin);
    r.verify();
    CHECK_FALSE(r.active(kBichromaticP4Rule, 11));
  }
  SUBCASE("a disabled rule leaves the verdict intact") {
    auto stale = rule;
    stale.supports.front().engine_version = "old";
    PruneRegistry r;
    r.add(stale);
    r.verify(false);
    auto c = near_factorization(11, {true, true, true});
    c.registry = &r;
    const auto cert = search(c);
    CHECK(cert.result == SearchResult::Exhausted);
    CHECK(cert.stats.pruned.count("lemma-certified") == 0);
  }
  SUBCASE("an empty registry leaves generic search unaffected") {
    PruneRegistry empty;
    auto c = generic("clique:6", 4);
    const auto plain = search(c);
    c.registry = &empty;
    CHECK(same_outcome(search(c), plain));
  }
}

TEST_CASE("lemma rule on K_9 is refused by its own supports") {
  const auto registry = lemma_certified_prune_registry(9);
  CHECK_FALSE(registry.active(kBichromaticP4Rule, 9));
  const auto cert = search(near_factorization(9, {true, true, true}));
  CHECK(cert.result == SearchResult::Witness);
}

TEST_CASE("witness properties") {
  for (auto [spec, t] : {std::pair{"clique:8", 6}, {"clique:7", 6}, {"biclique:3,3", 4},
                         {"biclique:4,4", 4}}) {
    const auto c = generic(spec, t);
    const auto cert = search(c);
    if (!cert.witness) continue;
    INFO(spec);
    CHECK(witness_verifies(*cert.witness, t));
    const auto& w = *cert.witness;
    for (const auto& cyc : enumerate_c4(w.graph())) {
      for (int a : cyc.v) {
        if (!c4_anchor_qualifies(w.graph(), a, cyc, t)) continue;
        const auto k = classify_c4(w, cyc, a);
        CHECK(k != CycleClass::Trichromatic);
        CHECK(k != CycleClass::RainbowUnanchored);
      }
    }
    if (t % 4 == 0 && w.vertex_count() <= t + 2) {
      CHECK(degree_structure_report(w, t).structure_holds);
    }
  }
}

}
