#include "aperiodic/meyer/eps_dual.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aperiodic/error.hpp"

namespace aperiodic::meyer {

bool EpsDualReport::contains(double beta) const
{
    auto it = std::upper_bound(intervals.begin(), intervals.end(), beta,
                               [](double b, const Interval& iv) { return b < iv.lo; });
    if (it == intervals.begin())
        return false;
    --it;
    return beta > it->lo && beta < it->hi;
}

double admissibleHalfWidth(double epsilon)
{
    return std::asin(epsilon / 2.0) / std::numbers::pi;
}

EpsDualReport epsDual(const std::vector<double>& points, double epsilon, double window)
{
    if (!(epsilon > 0.0 && epsilon < 2.0))
        throw DomainError("epsilon must lie in (0, 2)");
    if (!(window > 0.0))
        throw DomainError("window must be positive");
    EpsDualReport r;
    r.epsilon = epsilon;
    r.window = window;
    r.degenerate = points.size() <= 1;

    const long double d = admissibleHalfWidth(epsilon);
    std::vector<double> constraints;
    for (double a : points)
        if (a != 0.0)
            constraints.push_back(std::fabs(a));
    std::sort(constraints.begin(), constraints.end());
    constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());
    double scale = constraints.empty() ? 1.0 : constraints.back();
    r.accuracy = scale * 4e-16 * window;

    // Short constraints first keeps the working list small.
    std::vector<Interval> current{{0.0, window}};
    for (double a : constraints) {
        std::vector<Interval> next;
        const long double la = a;
        for (const auto& iv : current) {
            long k0 = static_cast<long>(std::ceil(iv.lo * la - d));
            long k1 = static_cast<long>(std::floor(iv.hi * la + d));
            for (long k = k0; k <= k1; ++k) {
                double lo = std::max<double>(iv.lo, static_cast<double>((k - d) / la));
                double hi = std::min<double>(iv.hi, static_cast<double>((k + d) / la));
                if (hi > lo)
                    next.push_back({lo, hi});
            }
        }
        current = std::move(next);
        if (current.empty())
            break;
    }
    r.intervals = std::move(current);

    double prev = 0.0;
    r.maxGap = 0.0;
    for (const auto& iv : r.intervals) {
        double mid = (iv.lo + iv.hi) / 2.0;
        r.maxGap = std::max(r.maxGap, mid - prev);
        prev = mid;
    }
    r.maxGap = std::max(r.maxGap, window - prev);
    return r;
}

EpsDualReport epsDual(const geometry::Patch& p, double epsilon, double window)
{
    return epsDual(p.approxPositions(), epsilon, window);
}

double worstPhase(const std::vector<double>& points, double beta)
{
    double worst = 0.0;
    for (double a : points) {
        long double t = static_cast<long double>(beta) * a;
        t -= std::floor(t);
        worst = std::max(worst, static_cast<double>(2.0L * std::sin(std::numbers::pi_v<long double> * t)));
    }
    return worst;
}

} // namespace aperiodic::meyer
