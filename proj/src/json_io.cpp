#include "hurwitz/json_io.hpp"

#include <stdexcept>

namespace hurwitz {

json datum_to_json(const BranchDatum& datum) {
    return json{{"genus", datum.genus},
                {"degree", datum.degree},
                {"partitions", datum.partitions}};
}

BranchDatum datum_from_json(const json& j) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("degree") ||
        !j.contains("partitions")) {
        throw std::invalid_argument("datum JSON must have genus, degree and partitions");
    }
    BranchDatum datum;
    try {
        datum.genus = j.at("genus").get<int>();
        datum.degree = j.at("degree").get<int>();
        datum.partitions = j.at("partitions").get<std::vector<Partition>>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed datum JSON: ") + e.what());
    }
    validate_datum(datum);
    return datum;
}

json tuple_to_json(const PermutationTuple& t) {
    json perms = json::array();
    for (const auto& p : t.perms) perms.push_back(p.images);
    return json{{"degree", t.degree}, {"perms", perms}};
}

PermutationTuple tuple_from_json(const json& j) {
    PermutationTuple t;
    try {
        t.degree = j.at("degree").get<int>();
        for (const auto& images : j.at("perms")) {
            t.perms.push_back(Permutation{images.get<std::vector<int>>()});
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed tuple JSON: ") + e.what());
    }
    for (const auto& p : t.perms) {
        if (p.degree() != t.degree || !is_valid_permutation(p)) {
            throw std::invalid_argument("tuple JSON: entry is not a permutation of the degree");
        }
    }
    return t;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Realizable: return "realizable";
        case Status::NotRealizable: return "not_realizable";
        case Status::Unknown: return "unknown";
    }
    return "unknown";
}

json result_to_json(const RealizabilityResult& r) {
    json j{{"status", status_name(r.status)},
           {"witness", nullptr},
           {"nodes_explored", r.nodes_explored}};
    if (r.witness) j["witness"] = tuple_to_json(*r.witness);
    return j;
}

json report_to_json(const ComplexityReport& r) {
    json trace = json::array();
    for (const auto& e : r.trace) {
        trace.push_back(json{{"k", e.k},
                             {"data_count", e.data_count},
                             {"realizable_found", e.realizable_found}});
    }
    return json{{"value", {{"pi_coeff", r.value.coeff}}},
                {"datum", datum_to_json(r.achieved_by)},
                {"witness", tuple_to_json(r.witness)},
                {"trace", trace},
                {"inconclusive", r.inconclusive}};
}

}  // namespace hurwitz
