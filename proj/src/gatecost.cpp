#include "qcount/gatecost.hpp"

#include <stdexcept>

namespace qcount {

double GateCostModel::controlled_phase_cost(int k) const {
    if (k < 1) throw std::invalid_argument("controlled_phase_cost: k >= 1");
    if (policy == AncillaPolicy::with_ancillas) return c1 * k;
    return c2 * static_cast<double>(k) * k;
}

CircuitCosts circuit_costs(const Graph& g, const GateCostModel& model) {
    const int e = g.edge_count();
    CircuitCosts c;
    c.t_psi0 = e;
    c.t_x = 2.0 * e + model.controlled_phase_cost(e);
    c.t_z = e;
    for (int d : g.degrees()) c.t_z += model.controlled_phase_cost(d);
    return c;
}

double total_quantum_cost(const CircuitCosts& costs, double steps, double t_count) {
    return t_count * (costs.t_psi0 + (costs.t_x + costs.t_z) * steps);
}

double total_quantum_cost(const RunRecord& record, const CircuitCosts& costs,
                          double t_count) {
    return total_quantum_cost(costs, static_cast<double>(record.steps), t_count);
}

double variational_search_overhead(SearchCostMode mode, double steps) {
    switch (mode) {
        case SearchCostMode::excluded: return 0.0;
        case SearchCostMode::greedy: return steps * steps;
        case SearchCostMode::constant: return 1.0;
    }
    return 0.0;
}

double omcs_unit_cost(const Graph& g) { return g.edge_count(); }

} // namespace qcount
