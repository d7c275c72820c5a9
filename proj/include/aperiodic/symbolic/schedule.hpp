#pragma once

#include <string>
#include <vector>

namespace aperiodic::symbolic {

/// Level schedule N(0) = 0 < N(1) < N(2) < ... with Delta(n) = N(n) - N(n-1).
class ScrambleSchedule {
public:
    ScrambleSchedule() = default;
    /// N(n) = 2^n - 1 for n <= cap.
    static ScrambleSchedule pow2minus1(int cap = 9);
    /// Explicit values N(1), N(2), ...; a leading 0 is taken as N(0).
    static ScrambleSchedule explicitList(std::vector<long> values);

    int maxLevel() const { return static_cast<int>(n_.size()) - 1; }
    long N(int level) const;
    long delta(int level) const;
    const std::vector<long>& values() const { return n_; }
    bool isDefault() const { return default_; }

    /// Every violated inequality, each named, e.g. "Δ(3)=1 < N(2)=2".
    std::vector<std::string> violations() const;
    /// Violations that involve level n only.
    std::vector<std::string> violationsAt(int level) const;
    /// Throws ConstraintError listing every violation.
    void validate() const;
    void validateAt(int level) const;

private:
    std::vector<long> n_{0};
    bool default_ = false;
};

} // namespace aperiodic::symbolic
