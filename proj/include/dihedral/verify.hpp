#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dihedral/classifier.hpp"
#include "dihedral/metric_dimension.hpp"

namespace dihedral {

struct verify_config {
    search_config search;  // per-instance solver caps
    int jobs = 1;          // instances evaluated concurrently
};

struct verify_record {
    int n = 0;
    std::string set_string;
    bool generating = false;
    bool skipped = false;
    std::string skip_reason;
    std::optional<case_label> label;
    std::optional<prediction> predicted;
    std::optional<int> solver_dimension;
    std::vector<int> solver_basis;
    std::string structure;  // recognized structure, e.g. "prism(5)"
    std::optional<bool> agree;
    double elapsed_seconds = 0.0;

    friend bool operator==(const verify_record&, const verify_record&) = default;
};

struct verify_summary {
    std::uint64_t instances = 0;
    std::uint64_t generating = 0;
    std::uint64_t skipped = 0;
    std::uint64_t agreements = 0;
    std::vector<std::string> disagreements;
    std::map<std::string, std::uint64_t> per_case;

    friend bool operator==(const verify_summary&, const verify_summary&) = default;
};

struct verification_report {
    int n_lo = 0;
    int n_hi = 0;
    int max_size = 0;
    std::vector<verify_record> records;
    verify_summary summary;
};

// Runs classifier, predictor, recognizer and solver over every enumerated
// connection set with n in [n_lo, n_hi] and |S| <= max_size. Record order is
// canonical and independent of the number of jobs. Instances the solver caps
// refuse are marked skipped, never dropped.
verification_report verify_range(int n_lo, int n_hi, int max_size,
                                 const verify_config& cfg = {});

nlohmann::json to_json(const verification_report& report);
verification_report report_from_json(const nlohmann::json& j);

}  // namespace dihedral
