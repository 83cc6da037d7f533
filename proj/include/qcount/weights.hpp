#ifndef QCOUNT_WEIGHTS_HPP
#define QCOUNT_WEIGHTS_HPP

#include <cstdint>
#include <vector>

namespace qcount {

// nonnegative weight function over basis states, normalized to sum 1.
// the built-in instance is the product model w(phi) = q^{n1} (1-q)^{n0}
// (bit 1 with probability q, independently per qubit).
class WeightModel {
public:
    static WeightModel bernoulli(int qubit_count, double q);
    // takes ownership of a full table of 2^n weights; checks nonnegativity
    // and normalization within 1e-9
    static WeightModel explicit_table(std::vector<double> table);

    int qubit_count() const { return qubit_count_; }
    bool is_bernoulli() const { return table_.empty(); }
    double q() const { return q_; }

    double weight(std::uint64_t basis_state) const;

    // true when every basis state has the same weight
    bool is_uniform() const;

private:
    int qubit_count_ = 0;
    double q_ = 0.5;
    std::vector<double> table_;        // empty for bernoulli
    std::vector<double> pow_q_;        // q^k, (1-q)^k lookup for the product model
    std::vector<double> pow_1mq_;
};

} // namespace qcount

#endif
