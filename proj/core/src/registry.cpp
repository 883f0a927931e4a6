#include "broomlab/registry.hpp"

#include <algorithm>

namespace broomlab {

SearchConfig bichromatic_p4_support_config(int n, const std::vector<Edge>& second_class) {
  SearchConfig config;
  config.host_spec = "clique:" + std::to_string(n);
  config.host = build_clique(n);
  config.t = n - 1;
  config.mode = SearchMode::NearFactorization;
  config.palette_cap = n;
  config.rules = {true, true, false};
  config.fixed_second_class = second_class;
  return config;
}

std::vector<std::vector<Edge>> bichromatic_p4_cases(int n) {
  const auto first = near_factorization_first_class(n);
  std::vector<std::vector<Edge>> out;
  for (auto& cls : near_factorization_second_classes(n)) {
    if (has_bichromatic_p4(first, cls)) out.push_back(std::move(cls));
  }
  return out;
}

void PruneRegistry::add(CertifiedRule rule) {
  rule.active = false;
  rule.status = "unverified";
  rules_.push_back(std::move(rule));
}

namespace {

std::string check_rule(const CertifiedRule& rule, bool rerun) {
  if (rule.name != kBichromaticP4Rule) return "unknown rule";
  const auto cases = bichromatic_p4_cases(rule.n);
  if (rule.supports.size() != cases.size()) return "support count mismatch";
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& cert = rule.supports[i];
    if (cert.engine_version != kEngineVersion) return "stale engine version";
    if (cert.result != SearchResult::Exhausted) return "support not exhausted";
    const auto config = bichromatic_p4_support_config(rule.n, cases[i]);
    if (cert.host_spec != config.host_spec || cert.t != config.t ||
        cert.mode != config.mode || cert.rules != config.rules ||
        cert.palette_cap != config.palette_cap || !cert.deterministic ||
        cert.fixed_second_class != config.fixed_second_class) {
      return "support config mismatch";
    }
    if (rerun && !same_outcome(search(config), cert)) return "stale certificate";
  }
  return {};
}

}  // namespace

void PruneRegistry::verify(bool rerun) {
  for (auto& rule : rules_) {
    const auto problem = check_rule(rule, rerun);
    rule.active = problem.empty();
    rule.status = rule.active ? "active" : "disabled: " + problem;
  }
}

bool PruneRegistry::active(std::string_view name, int n) const {
  return std::any_of(rules_.begin(), rules_.end(), [&](const CertifiedRule& r) {
    return r.active && r.name == name && r.n == n;
  });
}

PruneRegistry lemma_certified_prune_registry(int n) {
  CertifiedRule rule;
  rule.name = kBichromaticP4Rule;
  rule.n = n;
  for (const auto& cls : bichromatic_p4_cases(n)) {
    rule.supports.push_back(search(bichromatic_p4_support_config(n, cls)));
  }
  PruneRegistry registry;
  registry.add(std::move(rule));
  // The supports were produced just now by this engine; rerunning them would
  // only repeat the same work.
  registry.verify(false);
  return registry;
}

}  // namespace broomlab
