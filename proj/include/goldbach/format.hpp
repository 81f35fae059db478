// format.hpp
// JSON and CSV serialization for every CLI result shape. JSON output uses
// insertion-ordered keys so equal inputs always produce identical bytes;
// CSV always carries a header row. All emitters end with a newline.

#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goldbach/correspondence.hpp"
#include "goldbach/partition.hpp"
#include "goldbach/prime_ap.hpp"

namespace goldbach {

enum class OutputFormat { json, csv };

std::string format_solution_set(const SolutionSet& s, OutputFormat f);
std::string format_comet(const CometSeries& c, OutputFormat f);
std::string format_champions(const std::vector<ChampionRecord>& recs, OutputFormat f);
std::string format_aps(const std::vector<PrimeAp>& aps, OutputFormat f);
std::string format_ap_partition(const ApPartition& part,
                                const std::optional<MembershipReport>& membership,
                                OutputFormat f);
std::string format_reconstruction(uint64_t m, const DifferenceProfile& profile,
                                  const ReconstructedAp& ap, OutputFormat f);
std::string format_class_count(int64_t a, uint64_t d, uint64_t max,
                               uint64_t count, OutputFormat f);

// One-line JSON error record for stderr: {"error": <class>, "message": ...}.
std::string format_error(const std::string& error_class, const std::string& message);

} // namespace goldbach
