#include "qcount/qaoa.hpp"

#include <cstdio>
#include <ostream>

namespace qcount {

void write_angle_csv(const RunRecord& rec, std::ostream& out) {
    out << "step,alpha_over_pi,beta_over_pi,occupation\n";
    char buf[128];
    for (std::size_t i = 0; i < rec.angles.size(); ++i) {
        const auto [a, b] = rec.angles[i];
        std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%.17g\n", i + 1, a / M_PI, b / M_PI,
                      rec.occupations[i]);
        out << buf;
    }
}

} // namespace qcount
