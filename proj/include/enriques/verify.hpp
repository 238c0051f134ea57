#ifndef ENRIQUES_VERIFY_HPP
#define ENRIQUES_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

namespace enriques {

struct ReportEntry {
    std::string id;       // "AC-1" .. "AC-12"
    std::string status;   // "verified" | "failed" | "inconclusive"
    std::string detail;
    double runtime_ms = 0.0;
};

struct Report {
    std::vector<ReportEntry> entries;
    bool all_verified() const;
};

// Run the acceptance checks (all of them, or a single id); deterministic:
// every randomized check uses fixed seeds.
Report verify_paper(const std::optional<std::string>& only = std::nullopt);

std::vector<std::string> acceptance_ids();

}  // namespace enriques

#endif
