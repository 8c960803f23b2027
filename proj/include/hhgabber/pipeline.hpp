#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hhgabber/hochschild.hpp"
#include "hhgabber/parse.hpp"

namespace hhgabber {

enum class Status { involutive, violation, error, unsupported };

const char* to_string(Status s);
/// Exit-code contract: 0 involutive, 1 violation, 2 input error,
/// 3 unsupported.
int exit_code(Status s);

/// Results of the criterion chain run on the radical's generators when they
/// pass the regularity check: eta(Theta) = 0, Theta contracted into omega
/// vanishing mod (fs), and Theta killing the Chern class. The third leg
/// needs a finite-dimensional quotient and is skipped (with a note)
/// otherwise.
struct CrossCheck {
    bool eta_vanishes = false;
    bool contraction_vanishes = false;
    std::optional<bool> chern_vanishes;
    bool agree = false;
    std::string note;
};

struct GabberReport {
    std::string input_digest;
    bool dmodule_input = false;

    std::vector<Polynomial> char_ideal;  // reduced grevlex basis
    InvolutivityResult char_ideal_involutive;

    std::vector<Polynomial> radical_generators;
    RadicalStrategy::Kind strategy_used = RadicalStrategy::Kind::auto_detect;
    bool radical_trusted = true;
    InvolutivityResult radical_involutive;

    std::optional<CrossCheck> cross_check;
    std::string cross_check_note;  // set when the chain was skipped

    Status status = Status::error;
    std::string message;
};

/// The whole check: characteristic ideal (or the raw ideal), its
/// involutivity, the radical under the requested strategy, the radical's
/// involutivity, and the criterion chain when a regular sequence is
/// available. For a D-module input a violation is a bug-or-counterexample
/// alert and is surfaced in the message, never suppressed.
GabberReport run_gabber_check(const Problem& problem, const RadicalStrategy& strategy);

enum class ReportFormat { text, json };

/// Byte-stable rendering; fixed key order in JSON, polynomials in the
/// shared grammar.
std::string report_render(const GabberReport& report, ReportFormat format);

}  // namespace hhgabber
