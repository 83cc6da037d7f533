#include "qcount/lattice_moments.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qcount {

double linear_graph_moment(int edge_count, double q, int mu) {
    if (edge_count < 1) throw std::invalid_argument("linear_graph_moment: edge_count >= 1");
    if (mu < 0) throw std::invalid_argument("linear_graph_moment: mu >= 0");
    const double a = std::pow(1.0 - q, mu);        // leftmost edge present
    const double b = std::pow(q * (1.0 - q), mu);  // absent edge followed by a forced present one
    double p1 = a;      // |E| = 1
    double p2 = a * a;  // |E| = 2
    if (edge_count == 1) return p1;
    if (edge_count == 2) return p2;
    for (int len = 3; len <= edge_count; ++len) {
        const double next = a * p2 + b * p1;
        p1 = p2;
        p2 = next;
    }
    return p2;
}

namespace {

// moments for one mu on a path: frontier state c = whether the newest vertex
// is covered; k = uncovered count among finalized vertices
void path_dp(int edge_count, double fp, double fa, std::vector<double>& out) {
    const int vmax = edge_count + 1;
    // dp[k][c]
    std::vector<std::vector<double>> dp(vmax + 1, std::vector<double>(2, 0.0));
    dp[0][1] = fp; // first edge present: both endpoints covered so far
    dp[1][0] = fa; // first edge absent: left endpoint uncovered for good
    for (int e = 1; e < edge_count; ++e) {
        std::vector<std::vector<double>> nx(vmax + 1, std::vector<double>(2, 0.0));
        for (int k = 0; k <= vmax; ++k)
            for (int c = 0; c < 2; ++c) {
                const double v = dp[k][c];
                if (v == 0.0) continue;
                nx[k][1] += v * fp;                  // edge present covers both ends
                nx[k + (c ? 0 : 1)][0] += v * fa;    // absent: finalize previous vertex
            }
        dp.swap(nx);
    }
    out.assign(vmax + 1, 0.0);
    for (int k = 0; k <= vmax; ++k)
        for (int c = 0; c < 2; ++c) {
            const int total = k + (c ? 0 : 1);
            out[total] += dp[k][c];
        }
}

// ladder of `cols` columns; frontier state is the coverage pair of the
// current column's two vertices
void ladder_dp(int cols, double fp, double fa, std::vector<double>& out) {
    const int vmax = 2 * cols;
    std::vector<std::vector<double>> dp(vmax + 1, std::vector<double>(4, 0.0));
    dp[0][3] = fp; // first rung present: (top,bottom) covered
    dp[0][0] = fa;
    for (int i = 0; i + 1 < cols; ++i) {
        std::vector<std::vector<double>> nx(vmax + 1, std::vector<double>(4, 0.0));
        for (int k = 0; k <= vmax; ++k)
            for (int st = 0; st < 4; ++st) {
                const double v = dp[k][st];
                if (v == 0.0) continue;
                const bool ct = st & 1, cb = st & 2;
                for (int ht = 0; ht < 2; ++ht)
                    for (int hb = 0; hb < 2; ++hb)
                        for (int r = 0; r < 2; ++r) {
                            const double f =
                                v * (ht ? fp : fa) * (hb ? fp : fa) * (r ? fp : fa);
                            const int add = (!(ct || ht)) + (!(cb || hb));
                            const int nst = ((ht || r) ? 1 : 0) | ((hb || r) ? 2 : 0);
                            nx[k + add][nst] += f;
                        }
            }
        dp.swap(nx);
    }
    out.assign(vmax + 1, 0.0);
    for (int k = 0; k <= vmax; ++k)
        for (int st = 0; st < 4; ++st) {
            const int total = k + ((st & 1) ? 0 : 1) + ((st & 2) ? 0 : 1);
            out[total] += dp[k][st];
        }
}

} // namespace

SpectrumSummary dp_spectrum(LatticeKind kind, int edge_count, double q, int max_moment) {
    if (edge_count < 1) throw std::invalid_argument("dp_spectrum: edge_count >= 1");
    int cols = 0;
    if (kind == LatticeKind::grid2xn) {
        if (edge_count % 3 != 1 && edge_count != 1)
            throw std::invalid_argument("dp_spectrum: grid2xn needs edge_count = 3*columns - 2");
        cols = (edge_count + 2) / 3;
        if (3 * cols - 2 != edge_count)
            throw std::invalid_argument("dp_spectrum: grid2xn needs edge_count = 3*columns - 2");
    }
    const int mu_max = std::max(2, max_moment);
    const int vmax = (kind == LatticeKind::path) ? edge_count + 1 : 2 * cols;

    std::vector<std::vector<double>> per_energy(vmax + 1);
    for (int mu = 0; mu <= mu_max; ++mu) {
        const double fp = std::pow(1.0 - q, mu); // edge present (bit 0)
        const double fa = std::pow(q, mu);       // edge absent (bit 1)
        std::vector<double> levels;
        if (kind == LatticeKind::path)
            path_dp(edge_count, fp, fa, levels);
        else
            ladder_dp(cols, fp, fa, levels);
        for (int e = 0; e <= vmax; ++e) per_energy[e].push_back(levels[e]);
    }

    SpectrumSummary s;
    for (int e = 0; e <= vmax; ++e) {
        if (per_energy[e][0] == 0.0) continue; // level does not occur
        s.energies.push_back(static_cast<double>(e));
        s.moments.push_back(per_energy[e]);
    }
    return s;
}

} // namespace qcount
