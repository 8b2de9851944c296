#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fibsum {

inline constexpr const char* kVersion = "0.1.0";

/// Verified trivial-automorphism intervals up to 2278; everything else in
/// [7, 2278] has group order two.
inline constexpr std::pair<std::uint64_t, std::uint64_t> kTrivialAutIntervals[] = {
    {7, 10}, {17, 21}, {30, 50}, {72, 92}, {127, 215}, {305, 393}, {538, 914}, {1292, 1668}};

struct SuiteResult {
  std::string name;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool pass = false;
  std::string counterexample;  // empty when pass
  double seconds = 0.0;
};

struct VerifyReport {
  int schema = 1;
  std::string version = kVersion;
  std::string timestamp;
  std::uint64_t max = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  std::vector<SuiteResult> suites;
};

/// Every suite returns nullopt on success, or a counterexample description.
/// Ranges are inclusive upper bounds on the vertex count swept.
namespace suites {

std::optional<std::string> fib_facts();
std::optional<std::string> degree_and_edge_oracle(std::uint64_t hi);
std::optional<std::string> last_vertex_rule(std::uint64_t hi);
std::optional<std::string> pendant_rule(std::uint64_t hi);
std::optional<std::string> connectivity(std::uint64_t hi);
std::optional<std::string> max_degree_vertex_two(std::uint64_t hi);
std::optional<std::string> bipartite_properness(std::uint64_t hi);
std::optional<std::string> s_function(std::uint64_t scan_hi, std::uint64_t samples, std::uint64_t seed);
std::optional<std::string> bipartition_witnesses();
std::optional<std::string> hamilton_classification(std::uint64_t hi);
std::optional<std::string> hamilton_construction(int max_index);
std::optional<std::string> girth_oracle(std::uint64_t hi);
std::optional<std::string> cycle_chords(std::uint64_t hi);
std::optional<std::string> even_cycles(std::uint64_t max_k);
std::optional<std::string> h_freeness(std::uint64_t hi);
std::optional<std::string> tree_decompositions(std::uint64_t hi);
std::optional<std::string> outerplanar_certificates(std::uint64_t hi);
std::optional<std::string> automorphism_agreement(std::uint64_t hi);
std::optional<std::string> automorphism_edge_preservation(std::uint64_t hi);
std::optional<std::string> automorphism_intervals(std::uint64_t max_n);

}  // namespace suites

/// Run every suite with its range clamped to the documented cap and to max.
VerifyReport run_verify(std::uint64_t max, std::uint64_t seed);

std::string to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

}  // namespace fibsum
