#pragma once

#include <functional>
#include <string>
#include <vector>

#include "limifrob/cli/family_input.hpp"
#include "limifrob/errors.hpp"
#include "limifrob/ls/limiting.hpp"

namespace limifrob {

// An upstream failure tagged with the pipeline stage it came from; keeps the
// original exit category.
class StageError : public Error {
public:
    StageError(ErrorCategory cat, std::string stage, const std::string& what)
        : Error(cat, stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

struct RunOptions {
    int threads = 1;
    // Called with progress lines when set (the --verbose flag).
    std::function<void(const std::string&)> log;
};

struct StageTiming {
    std::string stage;
    double seconds = 0;
};

struct EscalationStep {
    int N_target = 0;
    std::string outcome;  // "ok" or the error that forced the next round
};

struct SmoothFiberCheck {
    long t0 = 0;
    int kmax = 0;
    bool recognized = false;
    ZPoly Q;  // det(1 - T F(teichmuller(t0)))
    bool pass = false;
    int first_mismatch = 0;
    std::string note;
};

struct Report {
    FamilyInput input;
    int r = 0;
    int e = 1;
    QMatrix N0;
    PadicMatrix Fr0;
    int N_ach = 0;
    int N_target = 0;
    std::vector<int> dims;  // dim W_{-1} .. dim W_{2n}
    StructureCheck structure;
    WeilReport weil;
    // Precisions at which the recognized polynomials were obtained; two
    // entries when a confirmation run agreed.
    std::vector<int> recognized_at;
    bool confirmed = false;
    std::vector<SmoothFiberCheck> smooth_fibers;
    std::vector<StageTiming> timings;
    std::vector<EscalationStep> escalation;
    // Global Frobenius diagnostics of the final round.
    int series_length = 0, numerator_degree = 0, denominator_power = 0, guard_digits = 0;
};

// Digits needed to recognize every polynomial of the report from weight
// bounds alone, given the filtration dimensions and dim Ker N0.
int recognition_digits(long p, const std::vector<int>& dims, int kernel_dim);

Report run(const FamilyInput& in, const RunOptions& opt = {});

// Smooth fibres t0 in F_p used for point-count verification.
std::vector<long> smooth_fiber_choices(const ZPoly& Delta, const QPoly& excised, long p, int count);

}  // namespace limifrob
