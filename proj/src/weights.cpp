#include "qcount/weights.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qcount {

WeightModel WeightModel::bernoulli(int qubit_count, double q) {
    if (qubit_count < 1) throw std::invalid_argument("weights: qubit_count must be positive");
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("weights: q must lie in [0,1]");
    WeightModel m;
    m.qubit_count_ = qubit_count;
    m.q_ = q;
    m.pow_q_.resize(qubit_count + 1);
    m.pow_1mq_.resize(qubit_count + 1);
    m.pow_q_[0] = m.pow_1mq_[0] = 1.0;
    for (int k = 1; k <= qubit_count; ++k) {
        m.pow_q_[k] = m.pow_q_[k - 1] * q;
        m.pow_1mq_[k] = m.pow_1mq_[k - 1] * (1.0 - q);
    }
    return m;
}

WeightModel WeightModel::explicit_table(std::vector<double> table) {
    if (table.empty() || (table.size() & (table.size() - 1)) != 0)
        throw std::invalid_argument("weights: table size must be a power of two");
    double sum = 0.0;
    for (double w : table) {
        if (w < 0.0 || !std::isfinite(w))
            throw std::invalid_argument("weights: negative or non-finite entry");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("weights: table does not sum to 1 within 1e-9");
    WeightModel m;
    m.qubit_count_ = std::countr_zero(table.size());
    m.table_ = std::move(table);
    return m;
}

double WeightModel::weight(std::uint64_t basis_state) const {
    if (!table_.empty()) return table_[basis_state];
    const int ones = std::popcount(basis_state);
    return pow_q_[ones] * pow_1mq_[qubit_count_ - ones];
}

bool WeightModel::is_uniform() const {
    if (is_bernoulli()) return q_ == 0.5;
    for (double w : table_)
        if (std::abs(w - table_[0]) > 1e-15) return false;
    return true;
}

} // namespace qcount
