#ifndef QCOUNT_GATECOST_HPP
#define QCOUNT_GATECOST_HPP

#include "qcount/evolve.hpp"
#include "qcount/graph.hpp"

namespace qcount {

enum class AncillaPolicy { with_ancillas, without_ancillas };

// abstract gate accounting: one-qubit gates and CNOTs cost 1; a k-controlled
// phase costs c1*k with ancillas or c2*k^2 without
struct GateCostModel {
    AncillaPolicy policy = AncillaPolicy::with_ancillas;
    double c1 = 16.0;
    double c2 = 8.0;

    double controlled_phase_cost(int k) const;
};

struct CircuitCosts {
    double t_psi0 = 0.0; // initial-state preparation
    double t_x = 0.0;    // one mixer application
    double t_z = 0.0;    // one phase-separator application
};

// per-application gate counts for the edge-cover circuits:
//   t_psi0 = |E| one-qubit rotations
//   t_x    = 2|E| one-qubit gates + one |E|-controlled phase
//   t_z    = |E| one-qubit phases + one deg(v)-controlled phase per vertex
CircuitCosts circuit_costs(const Graph& g, const GateCostModel& model);

// leading-order total: t_count * (t_psi0 + (t_x + t_z) * steps)
double total_quantum_cost(const CircuitCosts& costs, double steps, double t_count);
double total_quantum_cost(const RunRecord& record, const CircuitCosts& costs,
                          double t_count);

// angle-search overhead, excluded from totals by default: the per-layer
// greedy search re-prepares the state from scratch, so it accumulates
// quadratically in the depth; one shared angle pair costs O(1)
enum class SearchCostMode { excluded, greedy, constant };
double variational_search_overhead(SearchCostMode mode, double steps);

// abstract classical cost of one weighted sample plus one energy check
double omcs_unit_cost(const Graph& g);

} // namespace qcount

#endif
