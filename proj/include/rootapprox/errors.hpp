#pragma once

#include <stdexcept>
#include <string>

namespace rootapprox {

enum class errc {
    log_overflow,        // a ln^2 term would be required below the truncation order
    non_positive_lead,   // fractional power of a series with lead coefficient <= 0
    log_at_lead,         // log term occupies the leading slot of a powered series
    off_grid,            // exponent not representable on the series grid
    beyond_truncation,   // exponent past the retained order
    zero_power,          // reframe with s_pow = 0
    zero_outer,          // degenerate schedule: total power at infinity is 0
    degenerate_pivot,    // affine probe found no dependence on the parameter
    no_convergence,      // iteration cap reached
    negative_base,       // nest base <= 0 at an evaluation point
    singular_system,     // linear system pivot below threshold
    inconsistent_powers, // Pade cannot represent the required asymptotic power
    pole_at,             // rational denominator vanishes at the evaluation point
    non_finite,          // non-finite sample
    parse_error,         // config syntax
    validation_error,    // config key/value rejected
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::log_overflow: return "LogOverflow";
    case errc::non_positive_lead: return "NonPositiveLead";
    case errc::log_at_lead: return "LogAtLead";
    case errc::off_grid: return "OffGrid";
    case errc::beyond_truncation: return "BeyondTruncation";
    case errc::zero_power: return "ZeroPower";
    case errc::zero_outer: return "ZeroOuter";
    case errc::degenerate_pivot: return "DegeneratePivot";
    case errc::no_convergence: return "NoConvergence";
    case errc::negative_base: return "NegativeBase";
    case errc::singular_system: return "SingularSystem";
    case errc::inconsistent_powers: return "InconsistentPowers";
    case errc::pole_at: return "PoleAt";
    case errc::non_finite: return "NonFinite";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::io_error: return "IoError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace rootapprox
