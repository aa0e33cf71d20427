// One PASS/FAIL line per acceptance criterion; exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "terqf/reproduce.hpp"

using namespace terqf;

namespace {

struct Criterion
{
    int id;
    std::string title;
    std::vector<std::string> targets;
    double time_limit = 0;  // seconds; 0 means none
};

}  // namespace

int main()
{
    std::vector<Criterion> criteria = {
        {1, "regime bands reproduced", {"bands"}, 30},
        {2, "automorph groups and orbits", {"automorphs"}},
        {3, "Siegel count equals R(n) for idoneal forms", {"siegel"}},
        {4, "local density closed forms and tables", {"densities"}},
        {5, "theta-identity catalog verified", {"identities"}},
        {6, "prelists exact", {"prelists"}},
        {7, "essentially unique lists", {"unique", "outlook"}},
        {8, "class number catalog h <= 8", {"class-groups"}},
        {9, "property suites", {"properties", "kaplansky"}},
    };

    bool all = true;
    ReproduceOptions opts;
    opts.catalog = &default_catalog();
    for (auto const & c : criteria) {
        bool pass = true;
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        for (auto const & t : c.targets) {
            try {
                auto report = reproduce(t, opts);
                if (!report.pass()) {
                    pass = false;
                    detail += report.diff();
                }
                detail += t + ": " + std::to_string(report.checks.size()) + " checks; ";
            } catch (std::exception const & e) {
                pass = false;
                detail += t + ": " + e.what() + "; ";
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0 && secs > c.time_limit) {
            pass = false;
            detail += "over time limit; ";
        }
        all = all && pass;
        std::printf("%s criterion %d: %s (%s%.1fs)\n", pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), detail.c_str(), secs);
    }
    return all ? 0 : 1;
}
