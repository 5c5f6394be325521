#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rootapprox/errors.hpp"
#include "rootapprox/rational.hpp"

namespace rootapprox {

/// Truncated series on a rational exponent grid,
///
///     sum_m  x^(lead + m*step) * (coeffs[m] + logcoeffs[m] * ln x),
///
/// with exact exponents and double coefficients. The truncation exponent
/// (lead + order*step) is part of the value: trailing zero coefficients mean
/// "known to vanish through that order" and are never trimmed. Log support is
/// capped at the first power of ln x; an operation that would need ln^2 below
/// the truncation order fails with LogOverflow. Values are immutable in use:
/// every operation returns a fresh series.
class generalized_series {
public:
    generalized_series(rational lead, rational step, std::vector<double> coeffs,
                       std::vector<double> logcoeffs = {})
        : lead_(lead), step_(step), coeffs_(std::move(coeffs)), logcoeffs_(std::move(logcoeffs)) {
        if (!(step_ > rational(0))) raise(errc::validation_error, "series step must be positive");
        if (coeffs_.empty()) raise(errc::validation_error, "series needs at least one slot");
        if (!logcoeffs_.empty() && logcoeffs_.size() != coeffs_.size())
            raise(errc::validation_error, "logcoeffs length mismatch");
        drop_zero_logs();
    }

    /// The constant series 1 with `order` retained grid slots past the constant.
    static generalized_series one(rational step, int order) {
        std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
        c[0] = 1.0;
        return generalized_series(rational(0), step, std::move(c));
    }

    /// c * x^e as a single-slot series (truncation exponent e).
    static generalized_series monomial(double c, rational e, rational step) {
        return generalized_series(e, step, {c});
    }

    /// All-zero series whose truncation exponent is `trunc`.
    static generalized_series zero(rational step, rational trunc) {
        return generalized_series(trunc, step, {0.0});
    }

    rational lead() const { return lead_; }
    rational step() const { return step_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    rational truncation_exponent() const { return lead_ + step_ * rational(order()); }
    const std::vector<double>& coeffs() const { return coeffs_; }
    const std::vector<double>& logcoeffs() const { return logcoeffs_; }
    bool has_log() const { return !logcoeffs_.empty(); }
    rational exponent_at(int m) const { return lead_ + step_ * rational(m); }

    double coeff_at_slot(int m) const { return coeffs_[static_cast<std::size_t>(m)]; }
    double logcoeff_at_slot(int m) const {
        return logcoeffs_.empty() ? 0.0 : logcoeffs_[static_cast<std::size_t>(m)];
    }

    /// Slot index of the first nonzero (plain or log) coefficient, if any.
    std::optional<int> first_nonzero() const {
        for (int m = 0; m <= order(); ++m)
            if (coeff_at_slot(m) != 0.0 || logcoeff_at_slot(m) != 0.0) return m;
        return std::nullopt;
    }
    bool is_zero() const { return !first_nonzero().has_value(); }

private:
    void drop_zero_logs() {
        if (logcoeffs_.empty()) return;
        if (std::all_of(logcoeffs_.begin(), logcoeffs_.end(), [](double v) { return v == 0.0; }))
            logcoeffs_.clear();
    }

    rational lead_;
    rational step_;
    std::vector<double> coeffs_;
    std::vector<double> logcoeffs_;
};

namespace detail {

inline std::vector<double>& log_slot(std::vector<double>& logs, std::size_t n) {
    if (logs.empty()) logs.assign(n, 0.0);
    return logs;
}

} // namespace detail

/// Re-grid a pair to a common lead and step with identical truncation exponent
/// (the min of the two). The common step is the gcd of the steps, refined by
/// the lead difference when that difference is off the gcd grid. Coefficients
/// keep their exponent slots; new slots are zero.
inline std::pair<generalized_series, generalized_series> align(const generalized_series& a,
                                                               const generalized_series& b) {
    rational step = gcd(a.step(), b.step());
    rational dl = a.lead() - b.lead();
    if (!divides(step, dl)) step = gcd(step, abs(dl));
    rational lead = std::min(a.lead(), b.lead());
    rational trunc = std::min(a.truncation_exponent(), b.truncation_exponent());
    if (trunc < lead) trunc = lead;
    rational span = (trunc - lead) / step;
    int order = static_cast<int>(span.num()); // span is integral by construction
    auto regrid = [&](const generalized_series& s) {
        std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
        std::vector<double> l;
        for (int m = 0; m <= s.order(); ++m) {
            rational e = s.exponent_at(m);
            if (e > trunc) break;
            rational idx = (e - lead) / step;
            auto i = static_cast<std::size_t>(idx.num());
            c[i] += s.coeff_at_slot(m);
            if (s.logcoeff_at_slot(m) != 0.0)
                detail::log_slot(l, c.size())[i] += s.logcoeff_at_slot(m);
        }
        return generalized_series(lead, step, std::move(c), std::move(l));
    };
    return {regrid(a), regrid(b)};
}

inline generalized_series add(const generalized_series& a, const generalized_series& b) {
    auto [x, y] = align(a, b);
    std::vector<double> c(x.coeffs());
    std::vector<double> l(x.logcoeffs());
    for (int m = 0; m <= y.order(); ++m) {
        c[static_cast<std::size_t>(m)] += y.coeff_at_slot(m);
        if (y.logcoeff_at_slot(m) != 0.0)
            detail::log_slot(l, c.size())[static_cast<std::size_t>(m)] += y.logcoeff_at_slot(m);
    }
    return generalized_series(x.lead(), x.step(), std::move(c), std::move(l));
}

inline generalized_series scale(const generalized_series& s, double c) {
    std::vector<double> cs(s.coeffs());
    std::vector<double> ls(s.logcoeffs());
    for (auto& v : cs) v *= c;
    for (auto& v : ls) v *= c;
    return generalized_series(s.lead(), s.step(), std::move(cs), std::move(ls));
}

inline generalized_series sub(const generalized_series& a, const generalized_series& b) {
    return add(a, scale(b, -1.0));
}

/// Multiply by c * x^e (shifts the grid anchor, scales coefficients).
inline generalized_series shift_scale(const generalized_series& s, double c, rational e) {
    std::vector<double> cs(s.coeffs());
    std::vector<double> ls(s.logcoeffs());
    for (auto& v : cs) v *= c;
    for (auto& v : ls) v *= c;
    return generalized_series(s.lead() + e, s.step(), std::move(cs), std::move(ls));
}

/// Drop every slot above max_exp. The result's truncation exponent is the
/// largest grid exponent <= max_exp (a series is never extended).
inline generalized_series truncated(const generalized_series& s, rational max_exp) {
    if (s.truncation_exponent() <= max_exp) return s;
    if (max_exp < s.lead()) return generalized_series::zero(s.step(), max_exp);
    rational span = (max_exp - s.lead()) / s.step();
    int keep = static_cast<int>(span.num() / span.den()); // floor for positive span
    std::vector<double> c(s.coeffs().begin(), s.coeffs().begin() + keep + 1);
    std::vector<double> l;
    if (s.has_log()) l.assign(s.logcoeffs().begin(), s.logcoeffs().begin() + keep + 1);
    return generalized_series(s.lead(), s.step(), std::move(c), std::move(l));
}

/// Cauchy product. Exact through the full product order by default; pass
/// max_exp to cap the retained exponents. A ln^2 term needed at or below the
/// retained order raises LogOverflow.
inline generalized_series mul(const generalized_series& a, const generalized_series& b,
                              std::optional<rational> max_exp = std::nullopt) {
    rational step = gcd(a.step(), b.step());
    rational lead = a.lead() + b.lead();
    rational natural = a.truncation_exponent() + b.truncation_exponent();
    rational trunc = max_exp ? std::min(*max_exp, natural) : natural;
    if (trunc < lead) return generalized_series::zero(step, trunc);
    rational span = (trunc - lead) / step;
    int order = static_cast<int>(span.num() / span.den());
    trunc = lead + step * rational(order);
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    std::vector<double> l;
    auto slot_of = [&](rational e) {
        rational idx = (e - lead) / step;
        return static_cast<std::size_t>(idx.num());
    };
    for (int i = 0; i <= a.order(); ++i) {
        double ca = a.coeff_at_slot(i), la = a.logcoeff_at_slot(i);
        if (ca == 0.0 && la == 0.0) continue;
        for (int j = 0; j <= b.order(); ++j) {
            double cb = b.coeff_at_slot(j), lb = b.logcoeff_at_slot(j);
            if (cb == 0.0 && lb == 0.0) continue;
            rational e = a.exponent_at(i) + b.exponent_at(j);
            if (e > trunc) break;
            if (la != 0.0 && lb != 0.0)
                raise(errc::log_overflow, "ln^2 term at exponent " + e.str());
            std::size_t m = slot_of(e);
            c[m] += ca * cb;
            double lg = ca * lb + la * cb;
            if (lg != 0.0) detail::log_slot(l, c.size())[m] += lg;
        }
    }
    return generalized_series(lead, step, std::move(c), std::move(l));
}

/// s^p for rational p via the generalized binomial series: factor the leading
/// term c0 * x^e0, expand (1 + w)^p through the retained order. Requires
/// c0 > 0 and no log coefficient in the leading slot. p = 1 returns s
/// unchanged (up to the cap), whatever the lead sign.
inline generalized_series powr(const generalized_series& s, rational p,
                               std::optional<rational> max_exp = std::nullopt) {
    if (p == rational(1)) return max_exp ? truncated(s, *max_exp) : s;
    auto fnz = s.first_nonzero();
    if (!fnz) {
        // nothing retained: the power's image lies beyond the caller's cap
        return generalized_series::zero(s.step(), max_exp ? *max_exp : s.truncation_exponent());
    }
    int m0 = *fnz;
    rational e0 = s.exponent_at(m0);
    double c0 = s.coeff_at_slot(m0);
    if (s.logcoeff_at_slot(m0) != 0.0)
        raise(errc::log_at_lead, "log term in leading slot at exponent " + e0.str());
    if (!(c0 > 0.0)) raise(errc::non_positive_lead, "leading coefficient " + std::to_string(c0));

    rational new_lead = p * e0;
    rational rel_span = s.truncation_exponent() - e0;
    rational rel_cap = max_exp ? std::min(*max_exp - new_lead, rel_span) : rel_span;
    if (rel_cap < rational(0))
        return generalized_series::zero(s.step(), max_exp ? *max_exp : new_lead);
    rational span = rel_cap / s.step();
    int slots = static_cast<int>(span.num() / span.den());

    // w = tail / (c0 x^e0), on the relative grid starting at 0
    std::vector<double> wc(static_cast<std::size_t>(slots) + 1, 0.0);
    std::vector<double> wl;
    for (int m = m0 + 1; m <= s.order() && m - m0 <= slots; ++m) {
        wc[static_cast<std::size_t>(m - m0)] = s.coeff_at_slot(m) / c0;
        if (s.logcoeff_at_slot(m) != 0.0)
            detail::log_slot(wl, wc.size())[static_cast<std::size_t>(m - m0)] =
                s.logcoeff_at_slot(m) / c0;
    }
    generalized_series w(rational(0), s.step(), std::move(wc), std::move(wl));
    rational rel_trunc = s.step() * rational(slots);

    generalized_series acc = generalized_series::one(s.step(), slots);
    generalized_series term = acc;
    double pf = p.to_double();
    double binom = 1.0;
    for (int m = 1; m <= slots; ++m) {
        binom *= (pf - (m - 1)) / m;
        term = mul(term, w, rel_trunc);
        if (term.is_zero()) break;
        acc = add(acc, scale(term, binom));
    }
    return shift_scale(acc, std::pow(c0, pf), new_lead);
}

/// Series of ln(1 + x^q) at x -> 0 through exponent cap:
/// sum_m (-1)^(m+1) x^(q m) / m.
inline generalized_series log1p_series(int order, rational q = rational(1)) {
    if (order < 1) raise(errc::validation_error, "log1p_series needs order >= 1");
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    for (int m = 1; m <= order; ++m)
        c[static_cast<std::size_t>(m)] = (m % 2 ? 1.0 : -1.0) / m;
    return generalized_series(rational(0), q, std::move(c));
}

/// Infinity form of ln(1 + x^q) as a series in t = 1/x:
/// -q ln t + sum_m (-1)^(m+1) t^(q m) / m. The ln t symbol sits in the
/// leading slot's log coefficient.
inline generalized_series log1p_series_at_infinity(int order, rational q = rational(1)) {
    if (order < 1) raise(errc::validation_error, "log1p_series needs order >= 1");
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    std::vector<double> l(c.size(), 0.0);
    l[0] = -q.to_double();
    for (int m = 1; m <= order; ++m)
        c[static_cast<std::size_t>(m)] = (m % 2 ? 1.0 : -1.0) / m;
    return generalized_series(rational(0), q, std::move(c), std::move(l));
}

/// Re-express the series in t = 1/x^s: exponent e maps to -e/s, ln x maps to
/// -(1/s) ln t. The coefficient order reverses on the grid when s > 0. The
/// inverse transform is reframe_reciprocal(., 1/s); with s = 1 the map is an
/// involution.
inline generalized_series reframe_reciprocal(const generalized_series& s, rational s_pow) {
    if (s_pow == rational(0)) raise(errc::zero_power, "reframe with s_pow = 0");
    bool rev = s_pow > rational(0);
    rational new_step = abs(s.step() / s_pow);
    rational new_lead = rev ? -s.truncation_exponent() / s_pow : -s.lead() / s_pow;
    int n = s.order() + 1;
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    std::vector<double> l;
    double lscale = -1.0 / s_pow.to_double();
    for (int m = 0; m < n; ++m) {
        int src = rev ? n - 1 - m : m;
        c[static_cast<std::size_t>(m)] = s.coeff_at_slot(src);
        if (s.logcoeff_at_slot(src) != 0.0)
            detail::log_slot(l, c.size())[static_cast<std::size_t>(m)] =
                s.logcoeff_at_slot(src) * lscale;
    }
    return generalized_series(new_lead, new_step, std::move(c), std::move(l));
}

/// Stored coefficient at exponent e (log power 0 or 1). Unpopulated grid slots
/// read as zero; off-grid or beyond-truncation exponents are errors.
inline double coeff(const generalized_series& s, rational e, int logpow = 0) {
    if (e > s.truncation_exponent())
        raise(errc::beyond_truncation, "exponent " + e.str() + " past truncation " +
                                           s.truncation_exponent().str());
    rational d = e - s.lead();
    if (!divides(s.step(), d))
        raise(errc::off_grid, "exponent " + e.str() + " not on grid (lead " + s.lead().str() +
                                  ", step " + s.step().str() + ")");
    if (d < rational(0)) return 0.0; // on grid, below the lead: unpopulated
    int m = static_cast<int>((d / s.step()).num());
    return logpow == 0 ? s.coeff_at_slot(m) : s.logcoeff_at_slot(m);
}

} // namespace rootapprox
