#pragma once

// Script runner replaying flips and divisorial contractions on named
// neighborhoods while keeping track of K^2 of the central fiber.
//
// One statement per line (or separated by ';'); '#' starts a comment.
//
//   n = [4]-[2,6,2,3]
//   classify n
//   flip n
//   contract n
//   mori-seq n 3

#include "smmp/error.hpp"
#include "smmp/mori.hpp"
#include "smmp/neighborhoods.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace smmp {

struct LogEntry {
    std::size_t step = 0;  // 1-based, counting operations only
    std::string op;
    std::string name;
    std::string input;  // notation of the subject before the step
    Invariants invariants;
    std::optional<NeighborhoodClass> classification;
    std::optional<MoriStep> outcome;            // flip, contract
    std::vector<MoriSequence> sequences;        // mori-seq; one per antiflip seed for a P-resolution
    Integer k2_delta = 0;
};

struct PipelineState {
    std::vector<std::pair<std::string, Subject>> neighborhoods;  // in order of definition
    Integer k2 = 0;
    std::vector<LogEntry> log;

    const Subject* find(std::string_view name) const;
};

/// Raised by run_pipeline. `cause()` is the original error, `step()` the
/// 1-based operation index (0 while defining neighborhoods).
class PipelineError : public Error {
public:
    enum class Cause { Parse, Contract };

    PipelineError(Cause cause, std::size_t step, std::size_t line, const std::string& what);

    Cause cause() const noexcept { return cause_; }
    std::size_t step() const noexcept { return step_; }
    std::size_t line() const noexcept { return line_; }

private:
    Cause cause_;
    std::size_t step_;
    std::size_t line_;
};

PipelineState run_pipeline(std::string_view script);

/// Neighborhood invariants are reported in Mori form (m1 < m2).
Invariants subject_invariants(const Subject& s);

enum class RenderFormat { Text, Json };

std::string render(const PipelineState& state, RenderFormat format);

}  // namespace smmp
