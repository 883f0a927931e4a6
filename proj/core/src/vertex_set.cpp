#include "broomlab/vertex_set.hpp"

#include "broomlab/error.hpp"

#include <string>

namespace broomlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::PreconditionViolation: return "precondition-violation";
    case ErrorCode::SizeGuard: return "size-guard";
    case ErrorCode::MalformedHeader: return "malformed-header";
    case ErrorCode::MalformedEdgeLine: return "malformed-edge-line";
    case ErrorCode::UnsortedEdges: return "unsorted-edges";
    case ErrorCode::DuplicateEdge: return "duplicate-edge";
    case ErrorCode::ColorOutOfRange: return "color-out-of-range";
    case ErrorCode::NonCanonicalColors: return "non-canonical-colors";
    case ErrorCode::ImproperColoring: return "improper-coloring";
    case ErrorCode::MalformedCertificate: return "malformed-certificate";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

void VertexSet::check(int v) const {
  if (v < 0 || v >= universe()) {
    throw Error(ErrorCode::InvalidParameter,
                "vertex " + std::to_string(v) + " outside universe of size " +
                    std::to_string(universe()));
  }
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (other.universe() != universe()) {
    throw Error(ErrorCode::InvalidParameter, "vertex sets over different universes");
  }
}

bool VertexSet::contains(int v) const {
  check(v);
  return bits_.test(static_cast<std::size_t>(v));
}

void VertexSet::insert(int v) {
  check(v);
  bits_.set(static_cast<std::size_t>(v));
}

void VertexSet::erase(int v) {
  check(v);
  bits_.reset(static_cast<std::size_t>(v));
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  bits_ &= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  bits_ |= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  bits_ -= other.bits_;
  return *this;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
       i = bits_.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace broomlab
