#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "rootapprox/approximant.hpp"
#include "rootapprox/detail/linsolve.hpp"
#include "rootapprox/errors.hpp"

namespace rootapprox {

namespace detail {

/// Residual vector for a condition set, ordered as given. Infinity-side
/// corrections are normalized by the leading amplitude (ratio convention).
inline std::vector<double> condition_residuals(const nest_spec& spec,
                                               const std::vector<double>& params,
                                               const std::vector<match_condition>& conds) {
    using side_t = match_condition::side_t;
    int zero_order = 0;
    rational window{0};
    bool any_inf = false;
    for (const auto& c : conds) {
        if (c.side == side_t::zero) {
            rational slots = c.exponent / spec.step;
            zero_order = std::max(zero_order, static_cast<int>((slots.num() + slots.den() - 1) /
                                                               slots.den()));
        } else {
            any_inf = true;
            window = std::max(window, c.exponent);
        }
    }
    std::optional<generalized_series> at_zero, at_inf;
    double amp = 0.0;
    if (zero_order > 0) at_zero = expand_at_zero(spec, params, zero_order);
    if (any_inf) {
        at_inf = expand_at_infinity(spec, params, std::max(window, spec.step));
        amp = coeff(*at_inf, at_inf->first_nonzero() ? at_inf->exponent_at(*at_inf->first_nonzero())
                                                     : at_inf->lead());
    }
    std::vector<double> r;
    r.reserve(conds.size());
    for (const auto& c : conds) {
        if (c.side == side_t::zero) {
            r.push_back(coeff(*at_zero, c.exponent, c.logpow) - c.target);
        } else if (c.exponent == rational(0)) {
            r.push_back(amp - c.target);
        } else {
            rational lead = at_inf->exponent_at(*at_inf->first_nonzero());
            r.push_back(coeff(*at_inf, lead + c.exponent, c.logpow) / amp - c.target);
        }
    }
    return r;
}

inline double scaled_residual_norm(const std::vector<double>& r,
                                   const std::vector<match_condition>& conds) {
    double m = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
        m = std::max(m, std::abs(r[i]) / std::max(1.0, std::abs(conds[i].target)));
    return m;
}

} // namespace detail

/// Conditions implied by a case for a two-point build: small side ascending,
/// then amplitude (when known), then large-side corrections ascending.
inline std::vector<match_condition> conditions_from_case(const asymptotic_case& c) {
    std::vector<match_condition> out;
    for (const auto& e : c.small_coeffs)
        out.push_back({match_condition::side_t::zero, e.exponent, e.logpow, e.value});
    if (c.large_amp)
        out.push_back({match_condition::side_t::infinity, rational(0), 0, c.amplitude_ratio()});
    for (const auto& e : c.large_coeffs)
        out.push_back({match_condition::side_t::infinity, e.exponent, e.logpow, e.value});
    return out;
}

/// Sequential order-by-order solve from small-side ratio coefficients: the
/// order-j coefficient depends affinely on A_j, so two probes (A_j = 0, 1)
/// fix it. Earlier levels never feel later parameters, so each step is final.
inline root_approximant solve_small_only(const nest_spec& spec,
                                         const std::vector<coeff_entry>& targets) {
    if (static_cast<int>(targets.size()) != spec.k())
        raise(errc::validation_error, "need exactly k small-side coefficients");
    std::vector<double> a(static_cast<std::size_t>(spec.k()), 0.0);
    for (int j = 0; j < spec.k(); ++j) {
        const auto& tgt = targets[static_cast<std::size_t>(j)];
        if (tgt.logpow != 0)
            raise(errc::validation_error, "sequential solve takes plain coefficients only");
        rational slots = tgt.exponent / spec.step;
        int order = static_cast<int>(slots.num() / slots.den());
        a[static_cast<std::size_t>(j)] = 0.0;
        double c0 = coeff(expand_at_zero(spec, a, order), tgt.exponent);
        a[static_cast<std::size_t>(j)] = 1.0;
        double c1 = coeff(expand_at_zero(spec, a, order), tgt.exponent);
        if (std::abs(c1 - c0) < 1e-12)
            raise(errc::degenerate_pivot,
                  "order-" + tgt.exponent.str() + " coefficient does not depend on A_" +
                      std::to_string(j + 1));
        a[static_cast<std::size_t>(j)] = (tgt.value - c0) / (c1 - c0);
    }
    return {spec, std::move(a)};
}

inline root_approximant solve_small_only(const asymptotic_case& c, const nest_spec& spec) {
    return solve_small_only(spec, c.small_coeffs);
}

/// A_1..A_{k-1} by the sequential solve, A_k in closed form from the
/// amplitude condition: the required nest base is target^(1/n_k) minus the
/// chain contribution of the earlier levels (zero when they are subdominant).
inline root_approximant solve_with_amplitude(const asymptotic_case& c, const nest_spec& spec) {
    if (!c.large_amp) raise(errc::validation_error, "amplitude mode needs the large amplitude");
    if (static_cast<int>(c.small_coeffs.size()) < spec.k() - 1)
        raise(errc::validation_error, "amplitude mode needs k-1 small coefficients");
    std::vector<double> a(static_cast<std::size_t>(spec.k()), 0.0);
    for (int j = 0; j < spec.k() - 1; ++j) {
        const auto& tgt = c.small_coeffs[static_cast<std::size_t>(j)];
        rational slots = tgt.exponent / spec.step;
        int order = static_cast<int>(slots.num() / slots.den());
        a[static_cast<std::size_t>(j)] = 0.0;
        double c0 = coeff(expand_at_zero(spec, a, order), tgt.exponent);
        a[static_cast<std::size_t>(j)] = 1.0;
        double c1 = coeff(expand_at_zero(spec, a, order), tgt.exponent);
        if (std::abs(c1 - c0) < 1e-12)
            raise(errc::degenerate_pivot,
                  "order-" + tgt.exponent.str() + " coefficient does not depend on A_" +
                      std::to_string(j + 1));
        a[static_cast<std::size_t>(j)] = (tgt.value - c0) / (c1 - c0);
    }
    double target = c.amplitude_ratio();
    rational nk = spec.level_pows.back();
    if (!(target > 0.0))
        raise(errc::non_positive_lead, "amplitude target " + std::to_string(target));
    double needed_base = std::pow(target, 1.0 / nk.to_double());
    // chain contribution of levels 1..k-1 at the exponent of the k-th term
    double chain = 0.0;
    {
        std::vector<double> head(a.begin(), a.end() - 1);
        nest_spec sub = spec;
        sub.term_exps.pop_back();
        sub.level_pows.pop_back();
        sub.log_slots.erase(spec.k());
        rational sub_exp{0};
        if (spec.k() > 1) {
            rational d{0};
            for (int j = 1; j < spec.k(); ++j) {
                rational nj = j > 1 ? sub.level_pow(j - 1) : rational(1);
                rational prev_e = d * nj;
                rational e = sub.term_exp(j);
                bool is_log = sub.log_slots.count(j) != 0;
                d = is_log ? prev_e : std::max(prev_e, e);
            }
            sub_exp = d * spec.level_pow(spec.k() - 1); // exponent after the level-(k-1) power
            if (sub_exp == spec.term_exp(spec.k())) {
                // tie with the k-th term: the chain amplitude adds to A_k
                chain = amplitude_at_infinity(sub, head);
            } else if (sub_exp > spec.term_exp(spec.k())) {
                raise(errc::degenerate_pivot,
                      "amplitude does not depend on A_k (earlier levels dominate)");
            }
        }
    }
    a.back() = needed_base - chain;
    return {spec, std::move(a)};
}

struct newton_options {
    int max_iterations = 200;
    double tolerance = 1e-10; // on max residual relative to max(1, |target|)
    double fd_step = 1e-6;    // central differences, scaled by max(1, |A_j|)
    int max_halvings = 40;
};

/// Damped Newton iteration on the full condition set. Seeded from the
/// sequential solve on the small-side subset (remaining parameters at 1);
/// the step is halved on residual increase or domain error.
inline root_approximant solve_two_point(const asymptotic_case& c, const nest_spec& spec,
                                        const std::vector<match_condition>& conds,
                                        newton_options opt = {}) {
    using side_t = match_condition::side_t;
    if (static_cast<int>(conds.size()) != spec.k())
        raise(errc::validation_error, "need exactly k conditions");
    for (const auto& cond : conds)
        if (cond.logpow != 0 && (spec.log_slots.empty() || cond.side == side_t::zero))
            raise(errc::validation_error, "log condition without a matching log slot");
    const int k = spec.k();
    std::vector<double> a(static_cast<std::size_t>(k), 1.0);
    {
        // seed: sequential solve on the leading small-side conditions
        std::vector<double> probe(static_cast<std::size_t>(k), 0.0);
        int j = 0;
        for (const auto& cond : conds) {
            if (cond.side != side_t::zero || cond.logpow != 0) continue;
            if (j >= k) break;
            rational slots = cond.exponent / spec.step;
            int order = static_cast<int>(slots.num() / slots.den());
            probe[static_cast<std::size_t>(j)] = 0.0;
            double c0 = coeff(expand_at_zero(spec, probe, order), cond.exponent);
            probe[static_cast<std::size_t>(j)] = 1.0;
            double c1 = coeff(expand_at_zero(spec, probe, order), cond.exponent);
            if (std::abs(c1 - c0) < 1e-12)
                raise(errc::degenerate_pivot, "seeding pivot vanished at order " +
                                                  cond.exponent.str());
            probe[static_cast<std::size_t>(j)] = (cond.target - c0) / (c1 - c0);
            a[static_cast<std::size_t>(j)] = probe[static_cast<std::size_t>(j)];
            ++j;
        }
    }
    auto residuals = [&](const std::vector<double>& p) {
        return detail::condition_residuals(spec, p, conds);
    };
    std::vector<double> r = residuals(a);
    double best = detail::scaled_residual_norm(r, conds);
    for (int it = 0; it < opt.max_iterations; ++it) {
        double norm = detail::scaled_residual_norm(r, conds);
        if (norm < opt.tolerance) return {spec, a};
        // Jacobian by central differences
        std::vector<std::vector<double>> jac(static_cast<std::size_t>(k),
                                             std::vector<double>(static_cast<std::size_t>(k)));
        for (int j = 0; j < k; ++j) {
            double h = opt.fd_step * std::max(1.0, std::abs(a[static_cast<std::size_t>(j)]));
            auto ap = a, am = a;
            ap[static_cast<std::size_t>(j)] += h;
            am[static_cast<std::size_t>(j)] -= h;
            auto rp = residuals(ap), rm = residuals(am);
            for (int i = 0; i < k; ++i)
                jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (rp[static_cast<std::size_t>(i)] - rm[static_cast<std::size_t>(i)]) / (2 * h);
        }
        std::vector<double> neg_r(r);
        for (auto& v : neg_r) v = -v;
        std::vector<double> step = detail::solve_linear(jac, neg_r);
        double lambda = 1.0;
        bool accepted = false;
        for (int h = 0; h < opt.max_halvings; ++h) {
            auto trial = a;
            for (int j = 0; j < k; ++j)
                trial[static_cast<std::size_t>(j)] += lambda * step[static_cast<std::size_t>(j)];
            try {
                auto rt = residuals(trial);
                if (detail::scaled_residual_norm(rt, conds) < norm) {
                    a = std::move(trial);
                    r = std::move(rt);
                    accepted = true;
                    break;
                }
            } catch (const error&) {
                // domain error: retry with a shorter step
            }
            lambda /= 2;
        }
        if (!accepted) {
            // take the smallest step that evaluates at all, then keep iterating
            auto trial = a;
            for (int j = 0; j < k; ++j)
                trial[static_cast<std::size_t>(j)] += lambda * step[static_cast<std::size_t>(j)];
            try {
                r = residuals(trial);
                a = std::move(trial);
            } catch (const error&) {
                break;
            }
        }
        best = std::min(best, detail::scaled_residual_norm(r, conds));
    }
    raise(errc::no_convergence,
          "best scaled residual " + std::to_string(best) + " after iteration cap");
}

} // namespace rootapprox
