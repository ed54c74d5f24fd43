#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cogcap/budget.hpp"
#include "cogcap/channel.hpp"
#include "cogcap/conditions.hpp"
#include "cogcap/prob_tensor.hpp"

namespace cogcap {

enum class Verdict { holds, fails, inconclusive };

std::string_view verdict_name(Verdict v);

struct SearchDiagnostics {
    std::size_t restarts = 0;
    std::size_t iterations = 0;        // summed over every restart
    std::size_t grid_points = 0;
    std::size_t grid_aux_card = 1;     // auxiliary symbols covered by the grid
    double best_grid_value = 0.0;
    double optimizer_value = 0.0;      // before recomputation on the full joint
    bool converged = true;             // winning restart stopped before max_iters
};

struct ConditionReport {
    ConditionId id;
    Verdict verdict = Verdict::holds;
    double worst_gap = 0.0;            // min over scope and over the gap list
    std::size_t worst_component = 0;   // index into regime_condition(id).gaps
    std::size_t aux_card = 1;
    ProbTensor witness;                // over (X1,X2) or (U,X1,X2)
    SearchDiagnostics diagnostics;
};

/// Minimizes every gap of the condition over its scope. worst_gap is
/// recomputed on the witness through prob_core. The verdict is "fails" when
/// worst_gap < -kTolClassify, "inconclusive" when worst_gap lies in
/// [-kTolClassify, 0) and the winning restart ran out of iterations, and
/// "holds" otherwise.
ConditionReport check_condition(const Channel& channel, ConditionId id, const Budget& budget);

/// Recomputes min over the condition's gaps at an input distribution.
double recompute_gap(const Channel& channel, ConditionId id, const ProbTensor& input);

/// A violated implication between verdicts: the premise holds and the
/// conclusion fails. Either the search missed a violating distribution or the
/// implication does not hold for this channel (CLN => SI_primal on
/// null_primary_output is one such case).
struct ImplicationAlarm {
    ConditionId premise;
    ConditionId conclusion;
    std::string message;
};

struct ClassificationProfile {
    std::vector<ConditionReport> reports;  // in kAllConditions order
    std::vector<ImplicationAlarm> alarms;

    const ConditionReport& report(ConditionId id) const;
    bool holds(ConditionId id) const { return report(id).verdict == Verdict::holds; }
};

/// Implications checked after classification.
inline constexpr std::array<std::pair<ConditionId, ConditionId>, 5> kImplications = {{
    {ConditionId::CLN, ConditionId::SI_primal},
    {ConditionId::CLN, ConditionId::SI_equiv},
    {ConditionId::SI_primal, ConditionId::CMC},
    {ConditionId::SI_equiv, ConditionId::CMC},
    {ConditionId::BCD, ConditionId::CMC},
}};

std::vector<ImplicationAlarm> implication_alarms(const std::vector<ConditionReport>& reports);

ClassificationProfile classify(const Channel& channel, const Budget& budget);

}  // namespace cogcap
