#pragma once

#include <string>
#include <vector>

#include "gdd/ratfun.hpp"

namespace gdd {

enum class StepStatus { Verified, Failed, Blocked };

/// Comparison of a re-derived quantity against the published reference form
/// it is expected to match. A mismatch does not invalidate the derivation;
/// it localizes a transcription error and carries the expanded difference.
struct ReferenceComparison {
    std::string display; // which reference formula
    bool matches = false;
    std::string difference; // canonical polynomial text of the discrepancy
};

struct CertStep {
    std::string name;
    std::string claim;
    StepStatus status = StepStatus::Blocked;
    std::string witness; // expanded difference when the step itself fails
    std::vector<std::string> notes;
    std::vector<ReferenceComparison> reference;
};

struct CertificateReport {
    std::vector<CertStep> steps;
    std::vector<std::string> hypotheses;      // assumptions the chain relies on
    std::vector<std::string> side_conditions; // divisions performed and their discharge
    bool contradiction_established = false;
    double seconds = 0.0;

    bool all_steps_verified() const;
    const CertStep* find(const std::string& name) const;
};

/// Names of pipeline steps, in dependency order.
std::vector<std::string> certificate_step_names();

/// Runs the whole certification pipeline.
CertificateReport certify_all();

/// Runs the pipeline and reports the single named step. UnknownStep otherwise.
CertificateReport certify_step(const std::string& name);

/// Deterministic rendering; the machine format is line-oriented and stable.
std::string render_certificate(const CertificateReport& r, bool machine);

} // namespace gdd
