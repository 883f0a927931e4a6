#include "broomlab/coloring_io.hpp"

#include "broomlab/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace broomlab {

namespace {

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

[[noreturn]] void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

ColoredGraph parse(std::istream& in, bool allow_trailing) {
  std::string line;
  if (!next_line(in, line) || line != kColoringMagic) {
    fail(ErrorCode::MalformedHeader, "expected '" + std::string(kColoringMagic) + "'");
  }
  if (!next_line(in, line)) fail(ErrorCode::MalformedHeader, "missing size line");
  long long n = -1, m = -1, colors = -1;
  {
    std::istringstream header(line);
    std::string kn, km, kc, extra;
    if (!(header >> kn >> n >> km >> m >> kc >> colors) || kn != "n" || km != "m" ||
        kc != "colors" || (header >> extra) || n < 0 || m < 0 || colors < 0 ||
        n > 1'000'000 || m > n * (n - 1) / 2) {
      fail(ErrorCode::MalformedHeader, "bad size line '" + line + "'");
    }
  }

  std::vector<Edge> edges;
  std::vector<int> palette;
  edges.reserve(static_cast<std::size_t>(m));
  palette.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line)) {
      fail(ErrorCode::MalformedEdgeLine,
           "expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
    }
    std::istringstream row(line);
    long long u = 0, v = 0, c = 0;
    std::string extra;
    if (!(row >> u >> v >> c) || (row >> extra) || u < 0 || v >= n || u >= v) {
      fail(ErrorCode::MalformedEdgeLine, "bad edge line " + std::to_string(i + 3) + ": '" +
                                             line + "'");
    }
    const Edge e{static_cast<int>(u), static_cast<int>(v)};
    if (!edges.empty()) {
      if (e == edges.back()) {
        fail(ErrorCode::DuplicateEdge,
             "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      if (e < edges.back()) {
        fail(ErrorCode::UnsortedEdges,
             "edge " + std::to_string(u) + " " + std::to_string(v) + " out of order");
      }
    }
    if (c < 1 || c > colors) {
      fail(ErrorCode::ColorOutOfRange,
           "color " + std::to_string(c) + " not in 1.." + std::to_string(colors));
    }
    edges.push_back(e);
    palette.push_back(static_cast<int>(c));
  }

  if (!allow_trailing) {
    while (next_line(in, line)) {
      if (line.empty() || line.front() == '#') continue;
      fail(ErrorCode::MalformedEdgeLine, "unexpected content after edges: '" + line + "'");
    }
  }

  ColoredGraph cg(Graph::from_edges(static_cast<int>(n), std::move(edges)),
                  std::move(palette));
  if (!cg.is_canonical() || cg.max_color() != colors) {
    fail(ErrorCode::NonCanonicalColors,
         "colors must be 1.." + std::to_string(colors) +
             " in order of first appearance");
  }
  if (auto verdict = check_proper(cg); !verdict) {
    fail(ErrorCode::ImproperColoring,
         "color " + std::to_string(*verdict.color) + " repeats at vertex " +
             std::to_string(*verdict.vertex));
  }
  return cg;
}

}  // namespace

void write_coloring(std::ostream& out, const ColoredGraph& cg,
                    const std::vector<std::string>& comments) {
  const auto canonical = canonicalize_colors(cg);
  out << kColoringMagic << '\n';
  out << "n " << canonical.vertex_count() << " m " << canonical.edge_count() << " colors "
      << canonical.color_count() << '\n';
  const auto& g = canonical.graph();
  for (std::size_t e = 0; e < canonical.edge_count(); ++e) {
    out << g.edge_at(e).u << ' ' << g.edge_at(e).v << ' ' << canonical.color(e) << '\n';
  }
  for (const auto& c : comments) out << "# " << c << '\n';
}

ColoredGraph read_coloring(std::istream& in) { return parse(in, false); }

ColoredGraph read_embedded_coloring(std::istream& in) { return parse(in, true); }

void save_coloring(const std::filesystem::path& path, const ColoredGraph& cg,
                   const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  write_coloring(out, cg, comments);
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

ColoredGraph load_coloring(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return read_coloring(in);
}

std::string to_coloring_string(const ColoredGraph& cg,
                               const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_coloring(out, cg, comments);
  return out.str();
}

ColoredGraph from_coloring_string(const std::string& text) {
  std::istringstream in(text);
  return read_coloring(in);
}

}  // namespace broomlab
