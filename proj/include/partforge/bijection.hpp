#ifndef PARTFORGE_BIJECTION_HPP
#define PARTFORGE_BIJECTION_HPP

#include "partforge/core.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace partforge {

/// Thrown when a map is handed something outside its domain.
class RejectedInput : public std::invalid_argument {
public:
    RejectedInput(const std::string& what, Violation v) : std::invalid_argument(what), violation(std::move(v)) {}

    Violation violation;
};

enum class Stage { step1, step2, insert, redistribute, step4 };

const char* stage_name(Stage s);

/// Remaining tau parts (all carrying the new top color) and the working list.
struct Snapshot {
    Stage stage = Stage::step1;
    DistinctPartition tau;
    ColoredSequence working;
};

struct StepTrace {
    int n = 1;
    std::vector<Snapshot> snapshots;
};

struct StepResult {
    ColoredSequence partition;
    StepTrace trace;
};

/// One iteration: merges tau (parts colored 2^{n-1}) into lambda, a
/// partition for n-1 ground colors.
StepResult ag_step(const ColoredSequence& lambda, const DistinctPartition& tau, int n);

struct StepPreimage {
    ColoredSequence lambda;
    DistinctPartition tau;
};

/// Exact inverse of ag_step.  Throws RejectedInput unless mu passes check_B.
StepPreimage ag_step_inverse(const ColoredSequence& mu, int n);

/// mu_1 colored 1, then ag_step for r = 2..n.
ColoredSequence forward(const MultiTuple& t);
/// Same, keeping the trace of every iteration (index r-2 for r = 2..n).
ColoredSequence forward(const MultiTuple& t, std::vector<StepTrace>& traces);

MultiTuple inverse(const ColoredSequence& b, int n);

/// Bit-permutes every color.  Maps B onto B_sigma.
ColoredSequence apply_sigma(const ColoredSequence& b, const Permutation& sigma);

/// Subtracts s-i from the entry at 1-based position i (s = length).
ColoredSequence remove_staircase(const ColoredSequence& seq);
ColoredSequence add_staircase(const ColoredSequence& seq);

enum class TraceMode {
    full,  ///< every snapshot
    steps, ///< last snapshot of each stage, step 3 stages merged
};

/// One line per snapshot, "((tau),(working))" or "(final)" for step 4.
std::vector<std::string> render_trace(const StepTrace& trace, TraceMode mode);

} // namespace partforge

#endif
