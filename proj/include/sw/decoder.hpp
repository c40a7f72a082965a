#pragma once
// Single-Pauli error injection, detection from flipped referred values, and
// syndrome-matched correction with residual-triviality verification.
#include "sw/engine.hpp"
#include "sw/ssg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sw {

struct ErrorEvent {
    int round = 0;  // injected after this round's measurements
    int qubit = 0;
    char pauli = 'X'; // X (green), Y (blue), Z (red)
};

struct Detection {
    std::vector<int> flipped; // steady-element indices with changed referred value
    int window_begin = 0, window_end = 0;
    bool complete = true; // every element re-referred inside the window
};

// steady elements anticommuting with the error (the expected syndrome)
std::vector<int> expected_flips(const std::vector<PauliWord>& ssg, const PauliWord& err);

// compare referred values of two runs over rounds in (after, upto]
Detection detect_flips(const Ledger& baseline, const Ledger& with_error, int after,
                       int upto);

// single-qubit Pauli whose expected syndrome matches; lowest qubit id wins
std::optional<PauliWord> decode_single(const std::vector<PauliWord>& ssg,
                                       size_t n_qubits,
                                       const std::vector<int>& flipped);

struct SweepCase {
    int qubit = 0;
    char pauli = 'X';
    int offset = 0;
    bool detected = false;
    bool corrected = false;
};

struct SweepReport {
    std::vector<SweepCase> cases;
    size_t n_detected = 0, n_corrected = 0;
    bool all_pass = false;
    std::string csv() const;
};

SweepReport sweep_single_errors(const InteractionDiagram& d, const Schedule& s,
                                int jobs = 1);

} // namespace sw
