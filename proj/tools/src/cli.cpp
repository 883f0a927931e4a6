#include "broomlab_cli/cli.hpp"

#include "broomlab/bounds.hpp"
#include "broomlab/certificate.hpp"
#include "broomlab/coloring_io.hpp"
#include "broomlab/construct.hpp"
#include "broomlab/detect.hpp"
#include "broomlab/error.hpp"
#include "broomlab/search.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

namespace broomlab::cli {

namespace {

struct Flags {
  std::string family;
  std::optional<int> t;
  std::optional<int> s;
  std::string in;
  std::string out;
  int ell = 3;
  std::string host;
  std::string mode = "generic";
  int palette_cap = 0;
  std::string rules = "auto";
  std::string order = "canonical";
  int workers = 1;
  std::uint64_t seed = 20240601;
  double audit_rate = 0.01;
  bool rerun = false;
};

void print_embedding(std::ostream& out, const BroomEmbedding& emb) {
  out << "handle";
  for (int v : emb.handle) out << ' ' << v;
  out << "\nbristles";
  for (int v : emb.bristles) out << ' ' << v;
  out << '\n';
}

int cmd_construct(const Flags& f, std::ostream& out) {
  int parameter = 0;
  if (f.family == "odd-matching") {
    if (!f.t) throw Error(ErrorCode::InvalidParameter, "odd-matching needs --t");
    parameter = *f.t;
  } else {
    if (!f.s) throw Error(ErrorCode::InvalidParameter, f.family + " needs --s");
    parameter = *f.s;
  }
  const auto c = build_construction(f.family, parameter);
  out << "family " << c.family << " t " << c.t << " n " << c.coloring.vertex_count()
      << " edges " << c.coloring.edge_count() << " colors " << c.coloring.color_count() << '\n';
  if (!f.out.empty()) save_coloring(f.out, c.coloring, c.comments());
  return kOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const auto cg = load_coloring(f.in);
  const auto hit = find_rainbow_broom(cg, {*f.t, f.ell});
  if (!hit) {
    out << "rainbow-free t " << *f.t << " ell " << f.ell << '\n';
    return kOk;
  }
  out << "rainbow broom t " << *f.t << " ell " << f.ell << '\n';
  print_embedding(out, *hit);
  return kViolated;
}

int cmd_analyze(const Flags& f, std::ostream& out) {
  const auto cg = load_coloring(f.in);
  const int t = *f.t;
  const auto h = c4_histogram(cg);
  out << "c4 bichromatic " << h.bichromatic << " trichromatic " << h.trichromatic
      << " rainbow_anchored " << h.rainbow_anchored << " rainbow_unanchored "
      << h.rainbow_unanchored << '\n';

  const int n = cg.vertex_count();
  long long pairs = 0, permutations = 0, involutions = 0, derangements = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const auto sigma = extract_sigma(cg, u, v);
      ++pairs;
      permutations += sigma.permutation;
      involutions += sigma.fixed_point_free_involution;
      derangements += sigma.derangement_of_palette;
    }
  }
  out << "sigma pairs " << pairs << " permutations " << permutations
      << " fixed_point_free_involutions " << involutions << " derangements " << derangements
      << '\n';

  if (n <= t + 2) {
    const auto d = degree_structure_report(cg, t);
    out << "degrees high " << d.high << " middle " << d.middle << " low " << d.low
        << " structure " << (d.structure_holds ? "holds" : "fails");
    if (t % 4 != 0) out << " (only claimed for t = 0 mod 4)";
    out << '\n';
  } else {
    out << "degrees skipped (more than t + 2 vertices)\n";
  }
  const auto good = check_good_coloring(cg, t);
  out << "good-coloring " << (good.good ? "yes" : "no");
  if (!good.within_palette) out << " (more than t + 1 colors)";
  if (good.trichromatic) {
    out << " (trichromatic";
    for (int v : good.trichromatic->v) out << ' ' << v;
    out << ')';
  }
  out << '\n';
  return kOk;
}

void print_certificate_summary(std::ostream& out, const SearchCertificate& cert) {
  out << "result " << to_string(cert.result) << '\n';
  out << "nodes " << cert.stats.nodes << " depth " << cert.stats.max_depth << " wall_ms "
      << cert.stats.wall_ms << '\n';
  for (const auto& [rule, count] : cert.stats.pruned) out << "pruned." << rule << ' ' << count << '\n';
  if (cert.stats.audits) {
    out << "audits " << cert.stats.audits << " failures " << cert.stats.audit_failures << '\n';
  }
  for (const auto& a : cert.assumptions) out << "assume " << a << '\n';
  if (cert.witness) write_coloring(out, *cert.witness);
}

int cmd_search(const Flags& f, std::ostream& out) {
  SearchConfig config;
  config.host_spec = f.host;
  config.host = parse_host_spec(f.host);
  config.t = *f.t;
  if (f.mode == "generic") {
    config.mode = SearchMode::Generic;
  } else if (f.mode == "near-factorization") {
    config.mode = SearchMode::NearFactorization;
  } else {
    throw Error(ErrorCode::InvalidParameter, "unknown mode '" + f.mode + "'");
  }
  config.palette_cap = f.palette_cap;
  if (f.rules == "auto") {
    if (config.mode == SearchMode::Generic) {
      config.rules = {host_qualifies_for_c4(config.host, config.t), true, false};
    } else {
      config.rules = {true, true, true};
    }
  } else {
    config.rules = parse_rules(f.rules);
  }
  config.order = f.order == "most-constrained" ? BranchOrder::MostConstrained : BranchOrder::Canonical;
  config.seed = f.seed;
  config.audit_rate = config.host.vertex_count() <= 7 ? f.audit_rate : 0.0;

  std::optional<SearchCertificate> cert;
  if (f.workers > 1 && config.mode == SearchMode::Generic) {
    SearchConfig hunt = config;
    hunt.deterministic = false;
    hunt.certify = false;
    hunt.workers = f.workers;
    hunt.audit_rate = 0.0;
    auto found = search(hunt);
    if (found.result == SearchResult::Witness) {
      cert = std::move(found);
    } else {
      out << "no witness from " << f.workers
          << " workers; exhaustion is certified single-worker, rerunning with 1 worker\n";
    }
  } else if (f.workers > 1) {
    out << "near-factorization runs single-worker; ignoring --workers\n";
  }
  if (!cert) cert = search(config);
  print_certificate_summary(out, *cert);
  if (!f.out.empty()) save_certificate(f.out, *cert);
  return cert->result == SearchResult::Witness ? kOk : kViolated;
}

int cmd_bounds(const Flags& f, std::ostream& out) {
  const auto r = bounds_for(*f.t);
  out << "t " << r.t << ' ' << format_bounds(r) << " lower " << to_string(r.lower_source)
      << " upper " << to_string(r.upper_source) << " advisory "
      << (r.general_advisory ? format_rational(*r.general_advisory) : "n/a") << '\n';
  return kOk;
}

int cmd_certify(const Flags& f, std::ostream& out) {
  const auto cert = load_certificate(f.in);
  out << "certificate " << to_string(cert.result) << " host " << cert.host_spec << " t "
      << cert.t << '\n';
  bool ok = true;
  if (cert.engine_version != kEngineVersion) {
    out << "engine version mismatch: " << cert.engine_version << '\n';
    ok = false;
  }
  if (cert.result == SearchResult::Witness) {
    if (!cert.witness || !witness_verifies(*cert.witness, cert.t)) {
      out << "witness does not verify\n";
      ok = false;
    } else {
      out << "witness verifies\n";
    }
  }
  if (cert.result == SearchResult::Exhausted && !cert.deterministic) {
    out << "exhaustion claimed by a nondeterministic run\n";
    ok = false;
  }
  if (f.rerun) {
    const auto again = search(config_from_certificate(cert));
    const bool same = same_outcome(again, cert);
    out << "rerun " << (same ? "reproduces" : "differs") << '\n';
    ok = ok && same;
  }
  return ok ? kOk : kViolated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"broomlab: rainbow broom colorings, detection and certified search"};
  app.require_subcommand(1);
  Flags f;

  auto* construct = app.add_subcommand("construct", "generate a construction");
  construct->add_option("--family", f.family, "odd-matching | f2-bipartite | f2-clique | f3-clique")
      ->required()
      ->check(CLI::IsMember({"odd-matching", "f2-bipartite", "f2-clique", "f3-clique"}));
  construct->add_option("--t", f.t, "t (odd-matching)");
  construct->add_option("--s", f.s, "dimension s (field families)");
  construct->add_option("--out", f.out, "coloring file to write");

  auto* verify = app.add_subcommand("verify", "check a coloring for a rainbow broom");
  verify->add_option("--in", f.in, "coloring file")->required();
  verify->add_option("--t", f.t, "broom edges")->required();
  verify->add_option("--ell", f.ell, "handle length")->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "structural report of a coloring");
  analyze->add_option("--in", f.in, "coloring file")->required();
  analyze->add_option("--t", f.t, "broom edges")->required();

  auto* search_cmd = app.add_subcommand("search", "certified search for a rainbow-free coloring");
  search_cmd->add_option("--host", f.host, "clique:k | biclique:a,b | file:path")->required();
  search_cmd->add_option("--t", f.t, "broom edges")->required();
  search_cmd->add_option("--mode", f.mode, "generic | near-factorization")->capture_default_str();
  search_cmd->add_option("--palette-cap", f.palette_cap, "max colors (0 = default)");
  search_cmd->add_option("--rules", f.rules, "auto | none | comma list of c4,broom-capacity,lemma-certified")
      ->capture_default_str();
  search_cmd->add_option("--order", f.order, "canonical | most-constrained")
      ->check(CLI::IsMember({"canonical", "most-constrained"}))
      ->capture_default_str();
  search_cmd->add_option("--workers", f.workers, "parallel witness hunting")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  search_cmd->add_option("--seed", f.seed, "prune audit seed")->capture_default_str();
  search_cmd->add_option("--audit-rate", f.audit_rate, "fraction of prunes audited (hosts <= 7)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  search_cmd->add_option("--out", f.out, "certificate file to write");

  auto* bounds = app.add_subcommand("bounds", "coefficient bounds for ex*(n, B_{t,3})");
  bounds->add_option("--t", f.t, "broom edges")->required();

  auto* certify = app.add_subcommand("certify", "re-check a search certificate");
  certify->add_option("--cert", f.in, "certificate file")->required();
  certify->add_flag("--rerun", f.rerun, "rerun the search and compare");

  std::vector<const char*> argv{"broomlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(f, out);
    if (*verify) return cmd_verify(f, out);
    if (*analyze) return cmd_analyze(f, out);
    if (*search_cmd) return cmd_search(f, out);
    if (*bounds) return cmd_bounds(f, out);
    if (*certify) return cmd_certify(f, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace broomlab::cli
