#include "broomlab/search.hpp"

#include "broomlab/coloring_io.hpp"
#include "broomlab/detect.hpp"
#include "broomlab/error.hpp"
#include "broomlab/registry.hpp"
#include "engines.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace broomlab {

namespace {

constexpr int kMaxHostVertices = 16;
constexpr int kMaxPalette = 63;

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidParameter, what);
}

int parse_positive(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    invalid("bad host spec '" + spec + "'");
  }
  if (used != text.size() || value < 1) invalid("bad host spec '" + spec + "'");
  return value;
}

}  // namespace

std::string_view to_string(SearchMode mode) noexcept {
  return mode == SearchMode::Generic ? "generic" : "near-factorization";
}

std::string_view to_string(BranchOrder order) noexcept {
  return order == BranchOrder::Canonical ? "canonical" : "most-constrained";
}

std::string_view to_string(SearchResult result) noexcept {
  switch (result) {
    case SearchResult::Witness: return "WITNESS";
    case SearchResult::Exhausted: return "EXHAUSTED";
    case SearchResult::NotFound: return "NOT-FOUND";
  }
  return "?";
}

std::string RuleSet::describe() const {
  std::string out;
  const auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(c4, "c4");
  add(broom_capacity, "broom-capacity");
  add(lemma_certified, "lemma-certified");
  return out.empty() ? "none" : out;
}

RuleSet parse_rules(const std::string& text) {
  RuleSet rules = RuleSet::none();
  if (text == "none") return rules;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "c4") {
      rules.c4 = true;
    } else if (item == "broom-capacity") {
      rules.broom_capacity = true;
    } else if (item == "lemma-certified") {
      rules.lemma_certified = true;
    } else {
      invalid("unknown prune rule '" + item + "'");
    }
  }
  return rules;
}

bool is_complete(const Graph& host) {
  const auto n = static_cast<std::size_t>(host.vertex_count());
  return host.edge_count() == n * (n - 1) / 2;
}

int default_palette_cap(const Graph& host) {
  if (is_complete(host)) return host.vertex_count();
  return static_cast<int>(host.edge_count());
}

Graph parse_host_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) invalid("bad host spec '" + spec + "'");
  const auto kind = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  if (kind == "clique") return build_clique(parse_positive(rest, spec));
  if (kind == "biclique") {
    const auto comma = rest.find(',');
    if (comma == std::string::npos) invalid("bad host spec '" + spec + "'");
    return build_biclique(parse_positive(rest.substr(0, comma), spec),
                          parse_positive(rest.substr(comma + 1), spec));
  }
  if (kind == "file") {
    if (rest.empty()) invalid("bad host spec '" + spec + "'");
    return load_coloring(rest).graph();
  }
  invalid("bad host spec '" + spec + "'");
}

void SearchStats::merge(const SearchStats& other) {
  nodes += other.nodes;
  for (const auto& [rule, count] : other.pruned) pruned[rule] += count;
  max_depth = std::max(max_depth, other.max_depth);
  wall_ms += other.wall_ms;
  audits += other.audits;
  audit_failures += other.audit_failures;
}

bool same_outcome(const SearchCertificate& a, const SearchCertificate& b) {
  return a.host_spec == b.host_spec && a.n == b.n && a.m == b.m && a.t == b.t &&
         a.ell == b.ell && a.mode == b.mode && a.palette_cap == b.palette_cap &&
         a.rules == b.rules && a.order == b.order && a.deterministic == b.deterministic &&
         a.fixed_second_class == b.fixed_second_class && a.assumptions == b.assumptions &&
         a.result == b.result && a.witness == b.witness && a.stats.nodes == b.stats.nodes &&
         a.stats.pruned == b.stats.pruned && a.stats.max_depth == b.stats.max_depth &&
         a.stats.audits == b.stats.audits &&
         a.stats.audit_failures == b.stats.audit_failures &&
         a.engine_version == b.engine_version;
}

bool witness_verifies(const ColoredGraph& witness, int t) {
  return check_proper(witness).proper && !find_rainbow_broom(witness, {t, 3}).has_value();
}

std::vector<std::vector<Edge>> near_factorization_second_classes(int n) {
  if (n < 5 || n % 2 == 0) invalid("near-factorization needs an odd order >= 5");
  return detail::second_classes_for(n);
}

namespace {

int validate(const SearchConfig& config) {
  const Graph& host = config.host;
  const int n = host.vertex_count();
  if (config.ell != 3) invalid("search supports ell = 3 only");
  if (config.t < 3) invalid("search needs t >= 3");
  if (n > kMaxHostVertices) {
    throw Error(ErrorCode::SizeGuard, "search is limited to hosts of at most 16 vertices");
  }
  const int cap = config.palette_cap > 0 ? config.palette_cap : default_palette_cap(host);
  if (config.palette_cap < 0) invalid("palette_cap must be positive");
  if (cap < host.max_degree()) {
    invalid("palette_cap " + std::to_string(cap) + " below max degree " +
            std::to_string(host.max_degree()));
  }
  if (cap > kMaxPalette) {
    throw Error(ErrorCode::SizeGuard, "palette_cap above 63 is not supported");
  }
  if (config.certify && !config.deterministic) {
    invalid("an exhaustion certificate needs a deterministic run");
  }
  if (config.workers < 1) invalid("workers must be >= 1");
  if (!(config.audit_rate >= 0.0 && config.audit_rate <= 1.0)) {
    invalid("audit_rate must lie in [0, 1]");
  }
  if (config.mode == SearchMode::Generic) {
    if (config.rules.c4 && !host_qualifies_for_c4(host, config.t)) {
      invalid("c4 rule needs t - 2 neighbors off every 4-cycle at each anchor");
    }
    if (config.rules.lemma_certified) invalid("lemma-certified rules need near-factorization mode");
    if (config.fixed_second_class) invalid("a fixed second class needs near-factorization mode");
  } else {
    if (!is_complete(host) || n % 2 == 0 || n < 5) {
      invalid("near-factorization mode needs a complete host of odd order >= 5");
    }
    if (cap != n) invalid("near-factorization mode needs palette_cap = |V|");
    if (config.t != n - 1) invalid("near-factorization mode needs t = |V| - 1");
    if (config.fixed_second_class && config.rules.lemma_certified) {
      invalid("sub-searches with a fixed second class run without lemma rules");
    }
  }
  return cap;
}

}  // namespace

SearchCertificate search(const SearchConfig& config) {
  const int cap = validate(config);
  const auto start = std::chrono::steady_clock::now();

  SearchCertificate cert;
  cert.host_spec = config.host_spec;
  cert.n = config.host.vertex_count();
  cert.m = config.host.edge_count();
  cert.t = config.t;
  cert.ell = config.ell;
  cert.mode = config.mode;
  cert.palette_cap = cap;
  cert.rules = config.rules;
  cert.order = config.order;
  cert.fixed_second_class = config.fixed_second_class;
  if (cert.fixed_second_class) std::sort(cert.fixed_second_class->begin(), cert.fixed_second_class->end());

  detail::Outcome outcome;
  if (config.mode == SearchMode::Generic) {
    if (is_complete(config.host) && static_cast<std::size_t>(cap) < cert.m) {
      cert.assumptions.push_back(
          "assumed-reduction palette: colors outside one vertex's palette merge into one class");
    }
    outcome = detail::run_generic(config, cap);
  } else {
    cert.assumptions.push_back(
        "assumed-reduction near-factorization: n colors, vertex v misses color v+1");
    cert.assumptions.push_back(
        "assumed-reduction four-cycle-fact: c(BC) = label(A) pins c(AB) and c(AC)");
    bool lemma = false;
    if (config.rules.lemma_certified) {
      PruneRegistry built;
      const PruneRegistry* registry = config.registry;
      if (!registry) {
        built = lemma_certified_prune_registry(cert.n);
        registry = &built;
      }
      lemma = registry->active(kBichromaticP4Rule, cert.n);
      std::string note = std::string("lemma ") + kBichromaticP4Rule + " ";
      note += lemma ? "active" : "disabled";
      for (const auto& rule : registry->rules()) {
        if (rule.name != kBichromaticP4Rule || rule.n != cert.n) continue;
        std::uint64_t support_nodes = 0;
        for (const auto& s : rule.supports) support_nodes += s.stats.nodes;
        note += " supports=" + std::to_string(rule.supports.size()) +
                " support_nodes=" + std::to_string(support_nodes);
      }
      cert.assumptions.push_back(note);
    }
    outcome = detail::run_near_factorization(config, lemma);
  }

  cert.deterministic = config.deterministic && outcome.deterministic;
  cert.result = outcome.result;
  if (cert.result == SearchResult::Exhausted && !cert.deterministic) {
    cert.result = SearchResult::NotFound;
  }
  cert.stats = std::move(outcome.stats);
  if (outcome.colors) {
    ColoredGraph witness = canonicalize_colors(ColoredGraph(config.host, *outcome.colors));
    if (!witness_verifies(witness, config.t)) {
      throw std::logic_error("search produced a witness that does not verify");
    }
    cert.witness = std::move(witness);
  }
  cert.stats.wall_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return cert;
}

SearchCertificate near_factorization_search(const Graph& host, int t) {
  if (host.vertex_count() % 2 == 0) invalid("near-factorization needs an odd order; use generic mode");
  SearchConfig config;
  config.host_spec = "clique:" + std::to_string(host.vertex_count());
  config.host = host;
  config.t = t;
  config.mode = SearchMode::NearFactorization;
  config.palette_cap = host.vertex_count();
  config.rules = {true, true, true};
  return search(config);
}

}  // namespace broomlab
