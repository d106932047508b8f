#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "hurwitz/complexity.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/realizability.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudgetExhausted = 3;

hurwitz::BranchDatum load_datum(const std::string& spec) {
    std::string text;
    if (!spec.empty() && spec.front() == '{') {
        text = spec;
    } else {
        std::ifstream in(spec);
        if (!in) {
            throw std::invalid_argument("cannot open datum file: " + spec);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    hurwitz::json j = hurwitz::json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw std::invalid_argument("datum is not valid JSON");
    }
    return hurwitz::datum_from_json(j);
}

std::int64_t default_budget() {
    if (const char* env = std::getenv("HURWITZ_BUDGET")) {
        return std::stoll(env);
    }
    return hurwitz::kDefaultBudget;
}

void print_partition(std::ostream& out, const hurwitz::Partition& p) {
    out << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out << ",";
        out << p[i];
    }
    out << ")";
}

void print_datum_summary(std::ostream& out, const hurwitz::BranchDatum& d) {
    out << "genus " << d.genus << ", degree " << d.degree << ", partitions";
    for (const auto& p : d.partitions) {
        out << " ";
        print_partition(out, p);
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace hurwitz;

    CLI::App app{"Exact complexity of Riemann surfaces via branched covers of the sphere"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    bool as_json = false;
    std::int64_t budget = default_budget();
    int workers = 1;
    int d_cap = 6;
    app.add_flag("--json", as_json, "emit machine-readable JSON");
    app.add_option("--budget", budget, "search node budget");
    app.add_option("--workers", workers, "parallel workers for the search");
    app.add_option("--d-cap", d_cap, "degree cap for the simple-complexity search");

    std::string datum_spec;
    int genus = 0;
    int enum_d = 0, enum_n = 0, enum_m = 0;

    auto* check = app.add_subcommand("check", "compatibility and simplicity of a datum");
    check->add_option("--datum", datum_spec, "datum file path or inline JSON")->required();

    auto* realize = app.add_subcommand("realize", "search for a monodromy witness");
    realize->add_option("--datum", datum_spec, "datum file path or inline JSON")->required();

    auto* simple = app.add_subcommand("simple-complexity", "simple complexity of the genus-g surface");
    simple->add_option("genus", genus, "genus (>= 1)")->required();

    auto* complexity = app.add_subcommand("complexity", "complexity of the genus-g surface");
    complexity->add_option("genus", genus, "genus (>= 1)")->required();

    auto* hyper = app.add_subcommand("witness-hyperelliptic", "the double-cover datum and witness");
    hyper->add_option("genus", genus, "genus (>= 1)")->required();

    auto* enumerate = app.add_subcommand("enumerate", "stream branching-partition multisets for (d, n, m)");
    enumerate->add_option("degree", enum_d, "degree d")->required();
    enumerate->add_option("points", enum_n, "number of branch points n")->required();
    enumerate->add_option("length", enum_m, "total length m")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            BranchDatum datum = load_datum(datum_spec);
            auto g = implied_genus(datum.degree, datum.partitions);
            if (as_json) {
                json out{{"datum", datum_to_json(datum)},
                         {"compatible", is_compatible(datum)},
                         {"simple", is_simple_datum(datum)},
                         {"total_length", total_length(datum)},
                         {"implied_genus", g ? json(*g) : json(nullptr)}};
                std::cout << out.dump() << "\n";
            } else {
                print_datum_summary(std::cout, datum);
                std::cout << "\n  compatible:    " << (is_compatible(datum) ? "yes" : "no")
                          << "\n  simple:        " << (is_simple_datum(datum) ? "yes" : "no")
                          << "\n  total length:  " << total_length(datum)
                          << "\n  implied genus: ";
                if (g) std::cout << *g;
                else std::cout << "none (no cover of the sphere has these partitions)";
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (*realize) {
            BranchDatum datum = load_datum(datum_spec);
            RealizabilityResult res = find_monodromy(datum, budget, workers);
            if (as_json) {
                json out = result_to_json(res);
                out["datum"] = datum_to_json(datum);
                std::cout << out.dump() << "\n";
            } else {
                print_datum_summary(std::cout, datum);
                std::cout << "\n  status: " << status_name(res.status)
                          << "  (nodes explored: " << res.nodes_explored << ")\n";
                if (res.witness) {
                    std::cout << "  witness: " << tuple_to_json(*res.witness).dump() << "\n";
                }
            }
            return res.status == Status::Unknown ? kExitBudgetExhausted : kExitOk;
        }
        if (*simple) {
            PiMultiple formula = simple_complexity_formula(genus);
            ComplexityReport report = simple_complexity_search(genus, d_cap, budget);
            if (report.inconclusive) return kExitBudgetExhausted;
            if (report.value != formula) {
                std::cerr << "internal disagreement: search " << report.value.coeff
                          << "pi vs formula " << formula.coeff << "pi\n";
                return 1;
            }
            if (as_json) {
                json out = report_to_json(report);
                out["formula_pi_coeff"] = formula.coeff;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "simple complexity of genus " << genus << ": "
                          << formula.coeff << "*pi (formula = search, d_min = "
                          << report.achieved_by.degree << ")\n";
            }
            return kExitOk;
        }
        if (*complexity) {
            ComplexityReport report = surface_complexity(genus, budget);
            if (as_json) {
                std::cout << report_to_json(report).dump() << "\n";
            } else {
                std::cout << "complexity of genus " << genus << ": " << report.value.coeff
                          << "*pi" << (report.inconclusive ? " (upper bound only)" : "")
                          << "\n  achieved by ";
                print_datum_summary(std::cout, report.achieved_by);
                std::cout << "\n  m_min = " << total_length(report.achieved_by) << "\n";
            }
            return report.inconclusive ? kExitBudgetExhausted : kExitOk;
        }
        if (*hyper) {
            auto [datum, tuple] = hyperelliptic_witness(genus);
            if (as_json) {
                json out{{"datum", datum_to_json(datum)}, {"witness", tuple_to_json(tuple)}};
                std::cout << out.dump() << "\n";
            } else {
                print_datum_summary(std::cout, datum);
                std::cout << "\n  witness: " << tuple_to_json(tuple).dump() << "\n";
            }
            return kExitOk;
        }
        if (*enumerate) {
            if (enum_d < 2 || enum_n < 1) {
                throw std::invalid_argument("enumerate: need degree >= 2 and points >= 1");
            }
            for_each_branching_multiset(enum_d, enum_n, enum_m,
                                        [&](const std::vector<Partition>& parts) {
                std::cout << json(parts).dump() << "\n";
            });
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}
