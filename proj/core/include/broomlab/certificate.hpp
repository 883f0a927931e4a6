#pragma once

#include "broomlab/search.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace broomlab {

inline constexpr const char* kCertificateMagic = "broomlab-cert v1";

void write_certificate(std::ostream& out, const SearchCertificate& cert);
/// Throws Error(MalformedCertificate) on any structural problem; an embedded
/// witness goes through the strict coloring loader.
SearchCertificate read_certificate(std::istream& in);

void save_certificate(const std::filesystem::path& path, const SearchCertificate& cert);
SearchCertificate load_certificate(const std::filesystem::path& path);

std::string to_certificate_string(const SearchCertificate& cert);
SearchCertificate from_certificate_string(const std::string& text);

/// The configuration a certificate echoes, host rebuilt from its spec.
SearchConfig config_from_certificate(const SearchCertificate& cert);

}  // namespace broomlab
