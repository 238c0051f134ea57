// Acceptance suite: runs every criterion and prints one pass/fail line each.

#include <cstdio>
#include <string>

#include "enriques/verify.hpp"

int main(int argc, char** argv) {
    std::optional<std::string> only;
    if (argc > 1) only = argv[1];
    enriques::Report report = enriques::verify_paper(only);
    bool ok = true;
    for (const enriques::ReportEntry& e : report.entries) {
        const char* mark = e.status == "verified" ? "PASS" : "FAIL";
        if (e.status != "verified") ok = false;
        std::printf("[%s] %-6s %-13s %8.1f ms  %s\n", mark, e.id.c_str(), e.status.c_str(),
                    e.runtime_ms, e.detail.c_str());
    }
    return ok ? 0 : 1;
}
