#pragma once

// Staged attack on would-be uniform solvers for the broken ladder family:
// feed x consistent with infinity, wait for the ground levels to settle,
// bound what the candidate has committed to, then pick x finite so that the
// committed part cannot be completed.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "comyhill/two_ninfty.hpp"

namespace comyhill {

struct TwoSolution {
    TwoFn h, h_inv;
};

struct Candidate {
    std::string name;
    // x is instrumented: every bit the candidate reads is counted.
    std::function<TwoSolution(const CoNat& x)> solve;
};

// h = f_inf whatever x is.
Candidate assume_infinite();
// Reads x up to bit k-1; solves small x exactly, otherwise assumes infinity.
Candidate lookahead(nat k);
// Sends everything to (0, 0).
Candidate constant_candidate();
// Scans x until it finds the 1.
Candidate non_continuous();
// assume-infinite | lookahead-<k> | constant | non-continuous
std::optional<Candidate> candidate_by_name(const std::string& name);

struct StageBudget {
    std::size_t forced_bits = 100000;  // over the whole run
    std::size_t per_probe = 4096;      // per call of the candidate
    nat max_threshold = 256;           // stabilization probes go up to here
    std::size_t fuel = 512;            // output bits read per value
};

enum class Outcome { Defeated, Survived, NonContinuous };

struct Violation {
    std::string kind;  // NotBijective | NotCompatible | GroundLevelWrong
    bool y_side = false;
    IsoPoint point;
    std::string details;
};

struct TranscriptEntry {
    std::string stage;
    nat n = 0, m = 0;
    std::size_t s_left = 0, s_right = 0;
    std::string note;
};

struct AdversaryReport {
    std::string candidate;
    Outcome outcome = Outcome::Survived;
    std::string stage;
    nat n = 0, m = 0;
    std::size_t s_left = 0, s_right = 0;
    bool committed = false;
    std::optional<nat> committed_x;  // nullopt with committed = true: infinity
    std::optional<Violation> violation;
    std::size_t forced_bits_highwater = 0;
    std::size_t forced_bits_total = 0;
    std::string probe;  // what was running when a limit hit
    std::vector<TranscriptEntry> transcript;
};

AdversaryReport adversary(const Candidate& c, const StageBudget& budget = {});

// Re-evaluates the candidate on the committed x and confirms the violation
// from the exact ladder maps.
bool recheck(const Candidate& c, const AdversaryReport& r, std::size_t fuel = 512);

std::string outcome_name(Outcome o);
// {candidate, outcome, stage, n, m, s_left, s_right, committed_x, violation,
//  forced_bits_highwater, ...} as a JSON text.
std::string report_json(const AdversaryReport& r);

}  // namespace comyhill
