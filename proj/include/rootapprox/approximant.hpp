#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootapprox/errors.hpp"
#include "rootapprox/rational.hpp"
#include "rootapprox/series.hpp"

namespace rootapprox {

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) { // b > 0
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

inline rational floor_to_multiple(rational x, rational step) {
    rational q = x / step;
    return step * rational(floor_div(q.num(), q.den()));
}

/// Extend an exactly-known series (polynomial constituents, closed-form
/// expansions) with zero slots up to max_exp. Not for measured data: padding
/// asserts the padded orders vanish.
inline generalized_series padded(const generalized_series& s, rational max_exp) {
    if (max_exp <= s.truncation_exponent()) return s;
    rational grid_cap = s.lead() + floor_to_multiple(max_exp - s.lead(), s.step());
    rational span = (grid_cap - s.lead()) / s.step();
    auto n = static_cast<std::size_t>(span.num());
    std::vector<double> c(s.coeffs());
    c.resize(n + 1, 0.0);
    std::vector<double> l(s.logcoeffs());
    if (!l.empty()) l.resize(n + 1, 0.0);
    return generalized_series(s.lead(), s.step(), std::move(c), std::move(l));
}

/// The constant 1 on the given grid, exact through max_exp (empty if the
/// constant itself lies beyond the cap).
inline generalized_series one_through(rational step, rational max_exp) {
    if (max_exp < rational(0)) return generalized_series::zero(step, max_exp);
    return padded(generalized_series::monomial(1.0, rational(0), step), max_exp);
}

} // namespace detail

/// One accuracy-through-order requirement on the ratio f/f0 in the nest
/// variable. side == zero: the coefficient at grid exponent `exponent`.
/// side == infinity with exponent 0: the leading amplitude B/A; with
/// exponent d > 0: the correction coefficient at relative offset d,
/// normalized by the amplitude (the b_n ratio convention).
struct match_condition {
    enum class side_t { zero, infinity };
    side_t side = side_t::zero;
    rational exponent{0};
    int logpow = 0;
    double target = 0.0;
};

struct coeff_entry {
    rational exponent{0}; // grid exponent (zero side) or offset (infinity side)
    int logpow = 0;
    double value = 0.0;
};

/// A problem statement: both asymptotic expansions of f in ratio form
/// (the constant term 1 is implicit on both sides). Amplitudes and powers
/// refer to the original variable x; coefficient grids live in the nest
/// variable u = x^var_pow recorded alongside.
struct asymptotic_case {
    double small_amp = 1.0;  // A:  f0 = A x^alpha
    rational small_pow{0};   // alpha
    rational small_step{1};  // grid spacing of the small-side ratio series, in u
    std::vector<coeff_entry> small_coeffs;
    std::optional<double> large_amp; // B:  f_inf = B x^beta
    rational large_pow{0};           // beta
    std::vector<coeff_entry> large_coeffs; // offsets past the leading power, ratio values
    rational var_pow{1}; // u = x^var_pow (1 when no change of variable applied)
    std::string variable_note;

    double amplitude_ratio() const {
        if (!large_amp) raise(errc::validation_error, "case has no large-side amplitude");
        return *large_amp / small_amp;
    }
};

/// The nested-root structure
///
///   f*(x) = pref_amp x^pref_pow ( ( ... (1 + A_1 u^{e_1})^{n_1} + A_2 u^{e_2} )^{n_2}
///            + ... + A_k u^{e_k} )^{n_k}   [+ additive offset],
///
/// in the nest variable u = x^var_pow. A level listed in log_slots contributes
/// A_j u^{e_j} ln(1 + u^{q_j}) instead of the plain term.
struct nest_spec {
    std::vector<rational> term_exps;   // e_1..e_k, nondecreasing
    std::vector<rational> level_pows;  // n_1..n_k
    std::map<int, rational> log_slots; // 1-based level -> q
    double prefactor_amp = 1.0;
    rational prefactor_pow{0}; // in the original variable
    rational var_pow{1};
    rational step{1}; // grid spacing in u
    std::optional<std::pair<double, rational>> additive_offset; // amp, pow in x

    int k() const { return static_cast<int>(term_exps.size()); }
    rational level_pow(int j) const { return level_pows[static_cast<std::size_t>(j - 1)]; }
    rational term_exp(int j) const { return term_exps[static_cast<std::size_t>(j - 1)]; }
};

struct root_approximant {
    nest_spec spec;
    std::vector<double> params; // A_1..A_k
};

/// Standard exponent schedule: term exponents j*step, inner powers
/// n_j = (j + sigma)/j, outer power total_pow/(k*step). sigma = 1 makes every
/// level's dominant term tie with the next added term at infinity; sigma < 1
/// spaces the sub-leading corrections generated at infinity by (1-sigma)*step.
inline nest_spec standard_schedule(int k, rational sigma, rational step, rational total_pow) {
    if (k < 1) raise(errc::validation_error, "schedule needs k >= 1");
    if (!(step > rational(0))) raise(errc::validation_error, "schedule needs step > 0");
    if (total_pow == rational(0))
        raise(errc::zero_outer, "total power 0 makes the outer exponent degenerate");
    nest_spec s;
    s.step = step;
    for (int j = 1; j <= k; ++j) s.term_exps.push_back(step * rational(j));
    for (int j = 1; j < k; ++j) s.level_pows.push_back((rational(j) + sigma) / rational(j));
    s.level_pows.push_back(total_pow / (rational(k) * step));
    return s;
}

namespace detail {

inline generalized_series nest_term_at_zero(const nest_spec& s, double a, int level,
                                            rational cap) {
    rational e = s.term_exp(level);
    auto it = s.log_slots.find(level);
    if (it == s.log_slots.end()) {
        if (e > cap) return generalized_series::zero(s.step, cap);
        return padded(generalized_series::monomial(a, e, s.step), cap);
    }
    rational q = it->second;
    if (cap - e < q) return generalized_series::zero(s.step, cap); // ln(1+u^q) ~ u^q
    rational span = (cap - e) / q;
    int n = static_cast<int>(floor_div(span.num(), span.den()));
    return padded(truncated(shift_scale(log1p_series(n, q), a, e), cap), cap);
}

/// Dominant u-exponent of each partial nest at infinity. Zero-amplitude terms
/// are absent; a log-slot term is never allowed to take the lead.
inline std::vector<rational> infinity_leads(const nest_spec& s, const std::vector<double>& a) {
    std::vector<rational> lam{rational(0)};
    for (int j = 1; j <= s.k(); ++j) {
        rational prev = lam.back() * (j > 1 ? s.level_pow(j - 1) : rational(1));
        rational e = s.term_exp(j);
        bool present = a[static_cast<std::size_t>(j - 1)] != 0.0;
        bool is_log = s.log_slots.count(j) != 0;
        if (present && is_log && e > prev)
            raise(errc::log_at_lead,
                  "log slot dominates at infinity at level " + std::to_string(j));
        lam.push_back(present && !is_log ? std::max(prev, e) : prev);
    }
    return lam;
}

} // namespace detail

/// Ratio series of the approximant at x -> 0 (prefactor divided out, additive
/// offset excluded), through grid exponent order*step in the nest variable.
inline generalized_series expand_at_zero(const nest_spec& s, const std::vector<double>& a,
                                         int order) {
    if (static_cast<int>(a.size()) != s.k())
        raise(errc::validation_error, "parameter count != nest depth");
    rational cap = s.step * rational(order);
    generalized_series acc = generalized_series::one(s.step, order);
    for (int j = 1; j <= s.k(); ++j) {
        if (j > 1) acc = powr(acc, s.level_pow(j - 1), cap);
        acc = add(acc, detail::nest_term_at_zero(s, a[static_cast<std::size_t>(j - 1)], j, cap));
    }
    return powr(acc, s.level_pows.back(), cap);
}

inline generalized_series expand_at_zero(const root_approximant& r, int order) {
    return expand_at_zero(r.spec, r.params, order);
}

/// Ratio series at x -> infinity, as a series in t = 1/u retained through
/// relative offset `window` past the leading exponent. Each level factors its
/// dominant term; a log slot contributes ln u = -ln t via the infinity form
/// of ln(1 + u^q).
inline generalized_series expand_at_infinity(const nest_spec& s, const std::vector<double>& a,
                                             rational window) {
    if (static_cast<int>(a.size()) != s.k())
        raise(errc::validation_error, "parameter count != nest depth");
    auto lam = detail::infinity_leads(s, a);
    // absolute t-exponent caps per level, derived outer-to-inner: relative
    // windows only shrink going inward, so deep levels may drop out entirely
    std::vector<rational> caps(static_cast<std::size_t>(s.k()) + 1, rational(0));
    caps[static_cast<std::size_t>(s.k())] = -lam[static_cast<std::size_t>(s.k())] + window;
    for (int j = s.k(); j >= 2; --j) {
        rational nj = s.level_pow(j - 1);
        rational lam_prev = -lam[static_cast<std::size_t>(j - 1)];
        caps[static_cast<std::size_t>(j - 1)] =
            lam_prev + (caps[static_cast<std::size_t>(j)] - lam_prev * nj);
    }
    generalized_series acc = detail::one_through(s.step, caps[1]);
    for (int j = 1; j <= s.k(); ++j) {
        rational cap = caps[static_cast<std::size_t>(j)];
        if (j > 1) acc = powr(acc, s.level_pow(j - 1), cap);
        double aj = a[static_cast<std::size_t>(j - 1)];
        rational e = s.term_exp(j);
        generalized_series term = generalized_series::zero(s.step, cap);
        auto it = s.log_slots.find(j);
        if (it == s.log_slots.end()) {
            if (-e <= cap)
                term = detail::padded(generalized_series::monomial(aj, -e, s.step), cap);
        } else if (aj != 0.0 && -e <= cap) {
            rational q = it->second;
            rational room = cap + e;
            int n = 1;
            if (room >= q) {
                rational span = room / q;
                n = static_cast<int>(detail::floor_div(span.num(), span.den()));
            }
            term = detail::padded(
                truncated(shift_scale(log1p_series_at_infinity(std::max(n, 1), q), aj, -e), cap),
                cap);
        }
        acc = add(truncated(acc, cap), term);
    }
    rational final_lead = lam[static_cast<std::size_t>(s.k())] * s.level_pows.back();
    return powr(acc, s.level_pows.back(), final_lead + window);
}

inline generalized_series expand_at_infinity(const root_approximant& r, rational window) {
    return expand_at_infinity(r.spec, r.params, window);
}

/// Closed-form leading amplitude of the ratio at infinity: the telescoped
/// chain ((..(A_1^{n_1} + A_2)^{n_2} + ..) + A_k)^{n_k} with the tie and
/// dominance structure implied by the exponents; subdominant levels and
/// log-slot terms drop out of the leading amplitude.
inline double amplitude_at_infinity(const nest_spec& s, const std::vector<double>& a) {
    rational d{0};
    double amp = 1.0;
    for (int j = 1; j <= s.k(); ++j) {
        rational nj = j > 1 ? s.level_pow(j - 1) : rational(1);
        rational prev_e = d * nj;
        double prev_amp = amp;
        if (nj != rational(1)) {
            if (!(amp > 0.0))
                raise(errc::non_positive_lead, "partial amplitude " + std::to_string(amp) +
                                                   " at level " + std::to_string(j - 1));
            prev_amp = std::pow(amp, nj.to_double());
        }
        double aj = a[static_cast<std::size_t>(j - 1)];
        rational e = s.term_exp(j);
        bool is_log = s.log_slots.count(j) != 0;
        if (aj == 0.0 || is_log) {
            if (is_log && aj != 0.0 && e > prev_e)
                raise(errc::log_at_lead,
                      "log slot dominates at infinity at level " + std::to_string(j));
            d = prev_e;
            amp = prev_amp;
        } else if (e > prev_e) {
            d = e;
            amp = aj;
        } else if (e == prev_e) {
            d = e;
            amp = prev_amp + aj;
        } else {
            d = prev_e;
            amp = prev_amp;
        }
    }
    if (!(amp > 0.0))
        raise(errc::non_positive_lead, "final amplitude base " + std::to_string(amp));
    return std::pow(amp, s.level_pows.back().to_double());
}

inline double amplitude_at_infinity(const root_approximant& r) {
    return amplitude_at_infinity(r.spec, r.params);
}

/// Dominant u-exponent of the ratio at infinity implied by the schedule alone
/// (all terms treated as present).
inline rational implied_infinity_exponent(const nest_spec& s) {
    rational d{0};
    for (int j = 1; j <= s.k(); ++j) {
        rational nj = j > 1 ? s.level_pow(j - 1) : rational(1);
        rational prev_e = d * nj;
        rational e = s.term_exp(j);
        bool is_log = s.log_slots.count(j) != 0;
        d = is_log ? prev_e : std::max(prev_e, e);
    }
    return d * s.level_pows.back();
}

/// Evaluate at x >= 0 in the original variable, innermost level outward.
/// Bases must stay positive wherever a fractional power applies; a violation
/// reports the offending level.
inline double evaluate(const root_approximant& r, double x) {
    const nest_spec& s = r.spec;
    if (x < 0.0) raise(errc::validation_error, "evaluate needs x >= 0");
    double offset = 0.0;
    if (s.additive_offset) {
        offset = s.additive_offset->first *
                 (s.additive_offset->second == rational(0)
                      ? 1.0
                      : std::pow(x, s.additive_offset->second.to_double()));
    }
    if (x == 0.0) {
        if (s.var_pow > rational(0)) {
            // u = 0: the nest is exactly 1
            if (s.prefactor_pow == rational(0)) return offset + s.prefactor_amp;
            if (s.prefactor_pow > rational(0)) return offset;
            raise(errc::negative_base, "approximant diverges at x = 0");
        }
        // u -> infinity: prefactor * amplitude * x^(pref_pow + var_pow * lam)
        rational ctot = s.prefactor_pow + s.var_pow * implied_infinity_exponent(s);
        if (ctot > rational(0)) return offset;
        if (ctot == rational(0))
            return offset + s.prefactor_amp * amplitude_at_infinity(s, r.params);
        raise(errc::negative_base, "approximant diverges at x = 0");
    }
    double u = std::pow(x, s.var_pow.to_double());
    auto term_value = [&](int level) {
        double aj = r.params[static_cast<std::size_t>(level - 1)];
        double ue = std::pow(u, s.term_exp(level).to_double());
        auto it = s.log_slots.find(level);
        if (it == s.log_slots.end()) return aj * ue;
        return aj * ue * std::log1p(std::pow(u, it->second.to_double()));
    };
    double v = 1.0 + term_value(1);
    for (int j = 2; j <= s.k(); ++j) {
        rational nj = s.level_pow(j - 1);
        if (nj != rational(1)) {
            if (!(v > 0.0))
                raise(errc::negative_base,
                      "base " + std::to_string(v) + " at level " + std::to_string(j - 1));
            v = std::pow(v, nj.to_double());
        }
        v += term_value(j);
    }
    if (!(v > 0.0))
        raise(errc::negative_base,
              "base " + std::to_string(v) + " at level " + std::to_string(s.k()));
    v = std::pow(v, s.level_pows.back().to_double());
    return offset + s.prefactor_amp * std::pow(x, s.prefactor_pow.to_double()) * v;
}

/// Additive approximant: sum_i A_i (1 + B_i x)^{n_i}.
struct additive_approximant {
    struct term {
        double amp = 0.0;   // A_i
        double slope = 0.0; // B_i
        rational power{1};  // n_i
    };
    std::vector<term> terms;
};

inline double evaluate_additive(const additive_approximant& a, double x) {
    double s = 0.0;
    for (const auto& t : a.terms) {
        double base = 1.0 + t.slope * x;
        if (!(base > 0.0)) raise(errc::negative_base, "1 + B x = " + std::to_string(base));
        s += t.amp * std::pow(base, t.power.to_double());
    }
    return s;
}

/// Expansion of the additive approximant: at 0, plain binomials in x; at
/// infinity, a series in t = 1/x after factoring (B_i x)^{n_i} per term.
/// Terms with different n_i land on the common refined grid.
inline generalized_series expand_additive(const additive_approximant& a,
                                          match_condition::side_t side, int order) {
    if (a.terms.empty()) raise(errc::validation_error, "additive approximant with no terms");
    std::optional<generalized_series> acc;
    for (const auto& t : a.terms) {
        std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
        double p = t.power.to_double();
        double binom = 1.0;
        c[0] = 1.0;
        generalized_series s = generalized_series::one(rational(1), order);
        if (side == match_condition::side_t::zero) {
            for (int m = 1; m <= order; ++m) {
                binom *= (p - (m - 1)) / m * t.slope;
                c[static_cast<std::size_t>(m)] = binom;
            }
            s = scale(generalized_series(rational(0), rational(1), std::move(c)), t.amp);
        } else {
            if (!(t.slope > 0.0))
                raise(errc::non_positive_lead, "infinity expansion needs B > 0");
            for (int m = 1; m <= order; ++m) {
                binom *= (p - (m - 1)) / m / t.slope;
                c[static_cast<std::size_t>(m)] = binom;
            }
            s = shift_scale(generalized_series(rational(0), rational(1), std::move(c)),
                            t.amp * std::pow(t.slope, p), -t.power);
        }
        acc = acc ? add(*acc, s) : s;
    }
    return *acc;
}

} // namespace rootapprox
