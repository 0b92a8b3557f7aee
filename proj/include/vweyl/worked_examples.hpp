#pragma once

#include "vweyl/paravector.hpp"

namespace paravector {

struct Check {
    std::string name;
    bool pass;
    std::string witness;
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// A_1^{++}: Xi of the unimodular generators (0,-1;1,0) and (1,1;0,1) lands
/// in SV^+(O), and eta of the images are even Weyl elements.
Report worked_example_a1(const cartan::ExtensionSpec& ext);

/// A_2^{++}: the order basis {1, i, (j-i)/2, (k+1)/2} of the quaternion
/// picture is closed under multiplication and the three (anti-)involutions
/// and spans Z[alpha_1, alpha_2] as a Z-module.
Report worked_example_a2(const cartan::ExtensionSpec& ext);

}  // namespace paravector
