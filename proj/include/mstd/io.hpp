#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mstd/chain_probability.hpp"
#include "mstd/closed_forms.hpp"
#include "mstd/experiments.hpp"
#include "mstd/group.hpp"
#include "mstd/set_algebra.hpp"

namespace mstd::io {

inline constexpr const char* kToolVersion = "mstd 0.1.0";

using Json = nlohmann::json;

/// Group JSON: {name, order, identity, table, labels, descriptor}.
Json group_to_json(const FiniteGroup& group);
/// Cyclic and dihedral descriptors are rebuilt and compared to the stored
/// table; custom tables go through full validation.
FiniteGroup group_from_json(const Json& j);
FiniteGroup read_group_file(const std::string& path);
/// Deterministic text form (2-space indent, trailing newline).
std::string dump(const Json& j);

/// "cyclic:n", "dihedral:n", "klein4", "q8", or a path to a group JSON file.
FiniteGroup parse_group_spec(const std::string& spec);

/// Comma-separated element labels or indices, e.g. "a,b" or "1,3". Empty text is ∅.
SubsetMask parse_subset(const FiniteGroup& group, const std::string& text);
/// Comma-separated integers in 0..n.
SubsetMask parse_interval_subset(std::size_t n, const std::string& text);
std::vector<std::string> labels_of(const FiniteGroup& group, const SubsetMask& s);

/// Shortest decimal text that round-trips the double.
std::string format_double(double value);

Json miss_probability_json(const FiniteGroup& group, Element g, Mode mode);
Json chains_json(const FiniteGroup& group, Element g, Mode mode);
Json classification_json(const FiniteGroup& group, const SubsetMask& s);
Json interval_classification_json(std::size_t n, const SubsetMask& s);
Json audit_json(const AuditReport& report);
Json sample_report_json(const SampleReport& report);
Json census_report_json(const CensusReport& report, const FiniteGroup& group);
Json verification_json(const VerificationReport& report);

inline constexpr const char* kSweepCsvHeader =
    "group,order,trials,seed,rng_id,frac_sum_dominant,frac_balanced,frac_diff_dominant";
inline constexpr const char* kCensusCsvHeader = "group,order,total_subsets,sum_dominant,balanced,diff_dominant";

std::string sweep_csv_row(const SampleReport& report);
std::string census_csv_row(const CensusReport& report);

}  // namespace mstd::io
