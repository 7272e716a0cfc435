#pragma once

#include "cubicwalls/riemannroch.hpp"

#include <string>
#include <vector>

namespace cubicwalls {

struct Check {
    std::string id;
    std::string description;
    std::string source;  // module the check exercises
    bool passed = false;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::vector<Check> checks;
    std::size_t passed() const;
    std::size_t failed() const;
    bool all_passed() const { return failed() == 0; }
};

// Runs every reproduction check against the given geometry. Checks run on up
// to `jobs` threads; the report order is fixed.
VerificationReport run_verify_all(const Variety& x = Variety::cubic_fourfold(), unsigned jobs = 1);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace cubicwalls
