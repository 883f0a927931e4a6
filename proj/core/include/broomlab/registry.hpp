#pragma once

#include "broomlab/search.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace broomlab {

inline constexpr const char* kBichromaticP4Rule = "bichromatic-p4";

/// A derived prune rule on K_n near-factorization states, backed by the
/// exhaustion certificates of the sub-searches that justify it.
struct CertifiedRule {
  std::string name;
  int n = 0;
  std::vector<SearchCertificate> supports;
  bool active = false;
  std::string status = "unverified";
};

class PruneRegistry {
 public:
  /// Rules enter inactive; verify() decides.
  void add(CertifiedRule rule);

  /// Activates each rule whose supports cover exactly the required
  /// configurations, are Exhausted, carry the current engine version and,
  /// with rerun, are reproduced by running the sub-search again. Any failure
  /// disables the rule.
  void verify(bool rerun = true);

  bool active(std::string_view name, int n) const;
  const std::vector<CertifiedRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

 private:
  std::vector<CertifiedRule> rules_;
};

/// Sub-search config for the bichromatic-P4 rule on K_n with the given second
/// class (c4 and capacity rules on, lemma rules off).
SearchConfig bichromatic_p4_support_config(int n, const std::vector<Edge>& second_class);

/// Second classes whose union with the first class holds a bichromatic P4;
/// the configurations the bichromatic-P4 rule must see exhausted.
std::vector<std::vector<Edge>> bichromatic_p4_cases(int n);

/// Runs the bichromatic-P4 sub-searches on K_n and returns the verified
/// registry. The rule is active only if every case is exhausted.
PruneRegistry lemma_certified_prune_registry(int n = 11);

}  // namespace broomlab
