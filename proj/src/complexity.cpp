#include "hurwitz/complexity.hpp"

#include <stdexcept>

namespace hurwitz {

namespace {

void require_positive_genus(int g) {
    if (g < 1) {
        throw std::domain_error("complexity: genus must be >= 1");
    }
}

}  // namespace

PiMultiple hyperbolic_area_coeff(int n) {
    if (n < 3) {
        throw std::domain_error("hyperbolic_area_coeff: sphere minus n points is hyperbolic only for n >= 3");
    }
    return {2 * static_cast<std::int64_t>(n - 2)};
}

PiMultiple cover_complexity(int d, int n) {
    if (d < 1) {
        throw std::domain_error("cover_complexity: degree must be >= 1");
    }
    if (n < 3) {
        throw std::domain_error("cover_complexity: branching set must have n >= 3 points");
    }
    return {2 * static_cast<std::int64_t>(d) * (n - 2)};
}

PiMultiple simple_complexity_formula(int g) {
    require_positive_genus(g);
    return {8 * static_cast<std::int64_t>(g)};
}

std::pair<BranchDatum, PermutationTuple> hyperelliptic_witness(int g) {
    require_positive_genus(g);
    const int n = 2 * g + 2;
    BranchDatum datum = make_branch_datum(g, 2, std::vector<Partition>(n, Partition{2}));
    Permutation swap{{1, 0}};
    PermutationTuple tuple{2, std::vector<Permutation>(n, swap)};
    return {std::move(datum), std::move(tuple)};
}

ComplexityReport simple_complexity_search(int g, int d_cap, std::int64_t budget) {
    require_positive_genus(g);
    if (d_cap < 2) {
        throw std::domain_error("simple_complexity_search: d_cap must be >= 2");
    }
    ComplexityReport report;
    // degree 1 excluded a priori: there is no (1,n)-branched cover
    for (int d = 2; d <= d_cap; ++d) {
        const int n = 2 * (d + g - 1);
        Partition simple_part(d - 1, 1);
        simple_part[0] = 2;
        BranchDatum datum = make_branch_datum(g, d, std::vector<Partition>(n, simple_part));
        RealizabilityResult res = find_monodromy(datum, budget);
        report.trace.push_back({d, 1, res.status == Status::Realizable});
        if (res.status == Status::Unknown) {
            report.inconclusive = true;
        } else if (res.status == Status::Realizable) {
            report.value = {4 * static_cast<std::int64_t>(d) * (d + g - 2)};
            report.achieved_by = std::move(datum);
            report.witness = std::move(*res.witness);
            return report;
        }
    }
    throw std::runtime_error("simple_complexity_search: no realizable simple cover up to d_cap");
}

ComplexityReport m_min_search(int g, std::int64_t budget) {
    require_positive_genus(g);
    ComplexityReport report;
    for (int k = 2; k <= 4 * g; ++k) {
        TraceEntry entry{k, 0, false};
        const int m = k + 2 - 2 * g;
        for (int d = 2; d <= k && !entry.realizable_found; ++d) {
            if (k % d != 0) continue;
            const int n = k / d + 2;
            if (m < n) continue;  // each branch point contributes length >= 1
            for_each_branching_multiset(d, n, m, [&](const std::vector<Partition>& parts) {
                if (entry.realizable_found) return;
                BranchDatum datum = make_branch_datum(g, d, parts);
                RealizabilityResult res = find_monodromy(datum, budget);
                ++entry.data_count;
                if (res.status == Status::Unknown) {
                    report.inconclusive = true;
                } else if (res.status == Status::Realizable) {
                    entry.realizable_found = true;
                    report.value = {2 * static_cast<std::int64_t>(k)};
                    report.achieved_by = std::move(datum);
                    report.witness = std::move(*res.witness);
                }
            });
        }
        report.trace.push_back(entry);
        if (entry.realizable_found) return report;
    }
    // unreachable: the hyperelliptic datum realizes k = 4g
    throw std::logic_error("m_min_search: search passed the hyperelliptic ceiling");
}

ComplexityReport surface_complexity(int g, std::int64_t budget) {
    return m_min_search(g, budget);
}

}  // namespace hurwitz
