#pragma once

#include "cubicwalls/catalog.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cubicwalls {

struct IdentityReport {
    std::string id;
    std::string description;
    bool passed = false;
    std::string lhs;
    std::string rhs;
};

const std::vector<std::string>& identity_ids();
std::string identity_description(std::string_view id);
// Throws UnknownIdentity.
IdentityReport verify_identity(const Catalog& cat, std::string_view id);
std::vector<IdentityReport> verify_all_identities(const Catalog& cat);

}  // namespace cubicwalls
