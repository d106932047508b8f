#include "hurwitz/branch_datum.hpp"

#include <stdexcept>

namespace hurwitz {

void validate_datum(const BranchDatum& datum) {
    if (datum.degree < 1) {
        throw std::invalid_argument("branch datum: degree must be >= 1");
    }
    if (datum.genus < 0) {
        throw std::invalid_argument("branch datum: genus must be >= 0");
    }
    for (const auto& p : datum.partitions) {
        if (!is_valid_partition(p, datum.degree)) {
            throw std::invalid_argument(
                "branch datum: partition is not a canonical partition of the degree");
        }
        if (!is_branching_partition(p)) {
            throw std::invalid_argument(
                "branch datum: all-1s partition describes a point with no branching");
        }
    }
}

BranchDatum make_branch_datum(int genus, int degree, std::vector<Partition> partitions) {
    BranchDatum datum{genus, degree, std::move(partitions)};
    validate_datum(datum);
    return datum;
}

int total_length(const BranchDatum& datum) {
    int m = 0;
    for (const auto& p : datum.partitions) m += partition_length(p);
    return m;
}

bool is_compatible(const BranchDatum& datum) {
    const int m = total_length(datum);
    const int n = datum.branch_points();
    return (2 - 2 * datum.genus) - m == datum.degree * (2 - n);
}

bool is_simple_datum(const BranchDatum& datum) {
    for (const auto& p : datum.partitions) {
        if (partition_length(p) < datum.degree - 1) return false;
    }
    return true;
}

std::optional<int> implied_genus(int degree, const std::vector<Partition>& partitions) {
    int ramification = 0;  // R_p = sum_i (d - m_i)
    for (const auto& p : partitions) {
        if (!is_valid_partition(p, degree)) {
            throw std::invalid_argument("implied_genus: partition does not sum to the degree");
        }
        ramification += degree - partition_length(p);
    }
    // 2 - 2g = 2d - R_p
    const int twice_genus = 2 - 2 * degree + ramification;
    if (twice_genus < 0 || twice_genus % 2 != 0) return std::nullopt;
    return twice_genus / 2;
}

}  // namespace hurwitz
