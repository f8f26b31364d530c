#pragma once

#include "orbilat/orbifold.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace orbilat {

struct Check {
    std::string check;
    nlohmann::json expected;
    nlohmann::json got;
    bool pass = false;
};

struct VerifyOptions {
    std::uint64_t seed = 20150801;
    int jobs = 0;        // 0 = hardware concurrency
    std::size_t cap = 200000;
    bool deep = false;   // enable the slow nonsplitness search
};

const std::vector<std::string>& verify_suite_names();

// One of: niemeier, sigma-table, weyl-criterion, autd4, hexacode, fixedr,
// lemma-conj, orbifold-table, leech. Throws std::invalid_argument otherwise.
std::vector<Check> verify_suite(const std::string& name, const VerifyOptions& opt = {});

bool all_pass(const std::vector<Check>& checks);

} // namespace orbilat
