#include "hyperhs/opq/collision.hpp"

#include "hyperhs/error.hpp"

#include <algorithm>

namespace hyperhs::opq {

namespace {

constexpr int kBisectionSteps = 60;

std::array<double, 2> two_smallest(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return {v.at(0), v.size() > 1 ? v[1] : v[0]};
}

}  // namespace

CollisionReport trace_collision_path(const BSymMatrix& r0, const BSymMatrix& r1, int steps, double tol) {
    if (steps < 2) throw InvalidArgument("trace_collision_path: steps must be at least 2");
    if (!(r0.metric() == r1.metric())) throw DimensionMismatch("path endpoints have different signatures");
    const auto start = spectral_classify(r0, tol);
    const auto* d0 = std::get_if<Diagonalizable>(&start);
    if (!d0) throw InvalidArgument("trace_collision_path: R0 is not O(p,q)-diagonalizable");
    const Motif motif0 = d0->motif;

    auto inside = [&](const ClassificationSummary& s) {
        return s.status == SpectrumStatus::Diagonalizable && s.motif && *s.motif == motif0;
    };
    auto classify_at = [&](double t) { return summarize(spectral_classify(lerp(r0, r1, t), tol)); };

    CollisionReport report;
    for (int k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) / steps;
        report.points.push_back({t, classify_at(t)});
        const ClassificationSummary& s = report.points.back().summary;
        if (!report.crossing) {
            if (inside(s))
                report.approach.push_back({t, two_smallest(s.bnorms)});
            else
                report.crossing = std::array<double, 2>{report.points[k - 1].t, t};
        }
    }
    if (!report.crossing) return report;

    double lo = (*report.crossing)[0];
    double hi = (*report.crossing)[1];
    for (int it = 0; it < kBisectionSteps && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const ClassificationSummary s = classify_at(mid);
        if (inside(s)) {
            lo = mid;
            report.approach.push_back({mid, two_smallest(s.bnorms)});
        } else {
            hi = mid;
        }
    }
    report.refined_t = 0.5 * (lo + hi);
    return report;
}

}  // namespace hyperhs::opq
