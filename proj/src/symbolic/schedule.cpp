#include "aperiodic/symbolic/schedule.hpp"

#include "aperiodic/error.hpp"

namespace aperiodic::symbolic {

ScrambleSchedule ScrambleSchedule::pow2minus1(int cap)
{
    if (cap < 1 || cap > 62)
        throw ConstraintError("pow2minus1 level cap must be in 1..62");
    ScrambleSchedule s;
    for (int n = 1; n <= cap; ++n)
        s.n_.push_back((1L << n) - 1);
    s.default_ = true;
    return s;
}

ScrambleSchedule ScrambleSchedule::explicitList(std::vector<long> values)
{
    if (values.empty())
        throw ConstraintError("schedule list is empty");
    ScrambleSchedule s;
    if (values.front() == 0)
        values.erase(values.begin());
    s.n_.insert(s.n_.end(), values.begin(), values.end());
    return s;
}

long ScrambleSchedule::N(int level) const
{
    if (level < 0 || level > maxLevel())
        throw DomainError("schedule level " + std::to_string(level) + " outside 0.." + std::to_string(maxLevel()));
    return n_[static_cast<std::size_t>(level)];
}

long ScrambleSchedule::delta(int level) const
{
    if (level < 1)
        throw DomainError("Delta is defined for levels >= 1");
    return N(level) - N(level - 1);
}

std::vector<std::string> ScrambleSchedule::violationsAt(int level) const
{
    std::vector<std::string> out;
    if (level < 1 || level > maxLevel()) {
        out.push_back("level " + std::to_string(level) + " outside the schedule (1.." + std::to_string(maxLevel()) +
                      ")");
        return out;
    }
    long d = delta(level);
    auto tag = [&](int n) { return "(" + std::to_string(n) + ")"; };
    if (d <= 0)
        out.push_back("N" + tag(level) + "=" + std::to_string(N(level)) + " <= N" + tag(level - 1) + "=" +
                      std::to_string(N(level - 1)));
    if (level % 2 == 1 && d < N(level - 1))
        out.push_back("Δ" + tag(level) + "=" + std::to_string(d) + " < N" + tag(level - 1) + "=" +
                      std::to_string(N(level - 1)));
    if (level % 2 == 0 && d < 2)
        out.push_back("Δ" + tag(level) + "=" + std::to_string(d) + " < 2 at even level");
    return out;
}

std::vector<std::string> ScrambleSchedule::violations() const
{
    std::vector<std::string> out;
    for (int n = 1; n <= maxLevel(); ++n) {
        auto v = violationsAt(n);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

namespace {

void throwIfAny(const std::vector<std::string>& v)
{
    if (v.empty())
        return;
    std::string msg = "schedule violation: ";
    for (std::size_t i = 0; i < v.size(); ++i)
        msg += (i ? "; " : "") + v[i];
    throw ConstraintError(msg);
}

} // namespace

void ScrambleSchedule::validate() const
{
    if (maxLevel() < 1)
        throw ConstraintError("schedule has no levels");
    throwIfAny(violations());
}

void ScrambleSchedule::validateAt(int level) const
{
    throwIfAny(violationsAt(level));
}

} // namespace aperiodic::symbolic
