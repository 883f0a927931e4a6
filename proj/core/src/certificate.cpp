#include "broomlab/certificate.hpp"

#include "broomlab/coloring_io.hpp"
#include "broomlab/error.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace broomlab {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedCertificate, "certificate: " + what);
}

long long to_number(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    malformed("bad number for " + key);
  }
  if (used != text.size() || value < 0) malformed("bad number for " + key);
  return value;
}

std::string format_class(const std::vector<Edge>& cls) {
  std::string out;
  for (const auto& e : cls) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return out;
}

std::vector<Edge> parse_class(const std::string& text) {
  std::vector<Edge> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto dash = token.find('-');
    if (dash == std::string::npos) malformed("bad second_class edge '" + token + "'");
    out.push_back({static_cast<int>(to_number(token.substr(0, dash), "second_class")),
                   static_cast<int>(to_number(token.substr(dash + 1), "second_class"))});
  }
  return out;
}

}  // namespace

void write_certificate(std::ostream& out, const SearchCertificate& cert) {
  out << kCertificateMagic << '\n';
  out << "host " << cert.host_spec << '\n';
  out << "n " << cert.n << '\n';
  out << "m " << cert.m << '\n';
  out << "t " << cert.t << '\n';
  out << "ell " << cert.ell << '\n';
  out << "mode " << to_string(cert.mode) << '\n';
  out << "palette_cap " << cert.palette_cap << '\n';
  out << "rules " << cert.rules.describe() << '\n';
  out << "order " << to_string(cert.order) << '\n';
  out << "deterministic " << (cert.deterministic ? "true" : "false") << '\n';
  out << "seed irrelevant\n";
  if (cert.fixed_second_class) out << "second_class " << format_class(*cert.fixed_second_class) << '\n';
  for (const auto& a : cert.assumptions) out << "assume " << a << '\n';
  out << "result " << to_string(cert.result) << '\n';
  if (cert.witness) write_coloring(out, *cert.witness);
  out << "nodes=" << cert.stats.nodes << '\n';
  for (const auto& [rule, count] : cert.stats.pruned) out << "pruned." << rule << '=' << count << '\n';
  out << "depth=" << cert.stats.max_depth << '\n';
  out << "audits=" << cert.stats.audits << '\n';
  out << "audit_failures=" << cert.stats.audit_failures << '\n';
  out << "wall_ms=" << cert.stats.wall_ms << '\n';
  out << "engine " << cert.engine_version << '\n';
}

SearchCertificate read_certificate(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCertificateMagic) malformed("missing header");

  SearchCertificate cert;
  std::map<std::string, std::string> config;
  bool have_result = false;
  while (std::getline(in, line)) {
    const auto space = line.find(' ');
    if (space == std::string::npos) malformed("bad config line '" + line + "'");
    const auto key = line.substr(0, space);
    const auto value = line.substr(space + 1);
    if (key == "assume") {
      cert.assumptions.push_back(value);
      continue;
    }
    if (key == "result") {
      if (value == "WITNESS") {
        cert.result = SearchResult::Witness;
      } else if (value == "EXHAUSTED") {
        cert.result = SearchResult::Exhausted;
      } else if (value == "NOT-FOUND") {
        cert.result = SearchResult::NotFound;
      } else {
        malformed("unknown result '" + value + "'");
      }
      have_result = true;
      break;
    }
    if (!config.emplace(key, value).second) malformed("duplicate key " + key);
  }
  if (!have_result) malformed("missing result line");

  const auto take = [&](const std::string& key) {
    auto it = config.find(key);
    if (it == config.end()) malformed("missing " + key);
    auto value = it->second;
    config.erase(it);
    return value;
  };
  cert.host_spec = take("host");
  cert.n = static_cast<int>(to_number(take("n"), "n"));
  cert.m = static_cast<std::size_t>(to_number(take("m"), "m"));
  cert.t = static_cast<int>(to_number(take("t"), "t"));
  cert.ell = static_cast<int>(to_number(take("ell"), "ell"));
  const auto mode = take("mode");
  if (mode == "generic") {
    cert.mode = SearchMode::Generic;
  } else if (mode == "near-factorization") {
    cert.mode = SearchMode::NearFactorization;
  } else {
    malformed("unknown mode '" + mode + "'");
  }
  cert.palette_cap = static_cast<int>(to_number(take("palette_cap"), "palette_cap"));
  try {
    cert.rules = parse_rules(take("rules"));
  } catch (const Error& e) {
    malformed(e.what());
  }
  const auto order = take("order");
  if (order == "canonical") {
    cert.order = BranchOrder::Canonical;
  } else if (order == "most-constrained") {
    cert.order = BranchOrder::MostConstrained;
  } else {
    malformed("unknown order '" + order + "'");
  }
  const auto det = take("deterministic");
  if (det != "true" && det != "false") malformed("bad deterministic flag");
  cert.deterministic = det == "true";
  if (take("seed") != "irrelevant") malformed("seed line must read 'irrelevant'");
  if (config.count("second_class")) cert.fixed_second_class = parse_class(take("second_class"));
  if (!config.empty()) malformed("unknown key " + config.begin()->first);

  if (cert.result == SearchResult::Witness) {
    cert.witness = read_embedded_coloring(in);
    if (cert.witness->vertex_count() != cert.n || cert.witness->edge_count() != cert.m) {
      malformed("witness does not match the host size");
    }
  }

  bool have_engine = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("engine ", 0) == 0) {
      cert.engine_version = line.substr(7);
      have_engine = true;
      break;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) malformed("bad statistics line '" + line + "'");
    const auto key = line.substr(0, eq);
    const auto value = line.substr(eq + 1);
    if (key == "nodes") {
      cert.stats.nodes = to_number(value, key);
    } else if (key == "depth") {
      cert.stats.max_depth = static_cast<int>(to_number(value, key));
    } else if (key == "audits") {
      cert.stats.audits = to_number(value, key);
    } else if (key == "audit_failures") {
      cert.stats.audit_failures = to_number(value, key);
    } else if (key == "wall_ms") {
      try {
        cert.stats.wall_ms = std::stod(value);
      } catch (const std::exception&) {
        malformed("bad wall_ms");
      }
    } else if (key.rfind("pruned.", 0) == 0) {
      cert.stats.pruned[key.substr(7)] = to_number(value, key);
    } else {
      malformed("unknown statistic " + key);
    }
  }
  if (!have_engine) malformed("missing engine line");
  return cert;
}

void save_certificate(const std::filesystem::path& path, const SearchCertificate& cert) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  write_certificate(out, cert);
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

SearchCertificate load_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  return read_certificate(in);
}

std::string to_certificate_string(const SearchCertificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

SearchCertificate from_certificate_string(const std::string& text) {
  std::istringstream in(text);
  return read_certificate(in);
}

SearchConfig config_from_certificate(const SearchCertificate& cert) {
  SearchConfig config;
  config.host_spec = cert.host_spec;
  config.host = parse_host_spec(cert.host_spec);
  config.t = cert.t;
  config.ell = cert.ell;
  config.mode = cert.mode;
  config.palette_cap = cert.palette_cap;
  config.rules = cert.rules;
  config.order = cert.order;
  config.fixed_second_class = cert.fixed_second_class;
  return config;
}

}  // namespace broomlab
