#include "sdq/invariants.hpp"

#include <stdexcept>

namespace sdq {

namespace {

Rational factorial(long long n) {
    Rational acc(1);
    for (long long k = 2; k <= n; ++k) acc *= Rational(static_cast<long>(k));
    return acc;
}

// prod_{i<n} 1/(L^n - L^i), optionally stepping exponents by 2.
RationalFunction reciprocal_gl_product(long long n, long long step = 1) {
    RationalFunction acc(1);
    for (long long i = 0; i < n; ++i) {
        Polynomial p = Polynomial::monomial(static_cast<int>(step * n)) -
                       Polynomial::monomial(static_cast<int>(step * i));
        acc /= RationalFunction(p);
    }
    return acc;
}

}  // namespace

RationalFunction motive_classifying(GroupFamily family, long long n) {
    if (n < 0) throw std::invalid_argument("negative rank");
    switch (family) {
        case GroupFamily::GL:
            return reciprocal_gl_product(n);
        case GroupFamily::O:
            if (n % 2 == 0)
                return RationalFunction::lefschetz_power(n / 2) * reciprocal_gl_product(n / 2, 2);
            return RationalFunction::lefschetz_power(-(n - 1) / 2) *
                   reciprocal_gl_product((n - 1) / 2, 2);
        case GroupFamily::Sp:
            if (n % 2 != 0) throw std::invalid_argument("Sp rank must be even");
            return RationalFunction::lefschetz_power(-n / 2) * reciprocal_gl_product(n / 2, 2);
    }
    throw std::logic_error("unreachable");
}

RationalFunction& InvariantEngine::memo_slot(char kind, const StabilityFunction& tau,
                                             const DimVector& a, bool& present) {
    Key key{kind, tau.to_string(), class_to_string(a)};
    auto it = cache_.find(key);
    present = it != cache_.end();
    if (present) return it->second;
    return cache_[key];
}

void InvariantEngine::require_selfdual_stability(const StabilityFunction& tau) const {
    if (!is_selfdual(tau, q_))
        throw std::invalid_argument("self-dual invariants need a self-dual stability function");
}

RationalFunction InvariantEngine::I_trivial(const DimVector& alpha) {
    long long e = 0;
    for (const Arrow& ar : q_.arrows) e += alpha[ar.src] * alpha[ar.tgt];
    RationalFunction acc = RationalFunction::lefschetz_power(e);
    for (int i = 0; i < q_.num_vertices(); ++i)
        acc *= motive_classifying(GroupFamily::GL, alpha[i]);
    return acc;
}

RationalFunction InvariantEngine::Isd_trivial(const DimVector& theta) {
    require_selfdual_class(q_, theta);
    long long twice_e = 0;  // accumulate 2*(arrow exponent) to keep integrality visible
    for (int a = 0; a < q_.num_arrows(); ++a) {
        const Arrow& ar = q_.arrows[a];
        if (q_.arrow_kind[a] == ArrowKind::Tri)
            twice_e += 2 * theta[ar.src] * theta[ar.tgt];
        else if (q_.arrow_kind[a] != ArrowKind::TriDual)
            twice_e += theta[ar.tgt] * (theta[ar.tgt] + q_.u[ar.tgt] * q_.v[a]);
    }
    if (twice_e % 2 != 0) throw std::logic_error("Isd_trivial: half-integral exponent");
    RationalFunction acc = RationalFunction::lefschetz_power(twice_e / 2);
    for (int i = 0; i < q_.num_vertices(); ++i) {
        switch (q_.vertex_kind[i]) {
            case VertexKind::Tri:
                acc *= motive_classifying(GroupFamily::GL, theta[i]);
                break;
            case VertexKind::Plus:
                acc *= motive_classifying(GroupFamily::O, theta[i]);
                break;
            case VertexKind::Minus:
                acc *= motive_classifying(GroupFamily::Sp, theta[i]);
                break;
            case VertexKind::TriDual:
                break;
        }
    }
    return acc;
}

RationalFunction InvariantEngine::I(const DimVector& alpha, const StabilityFunction& tau) {
    if (is_zero(alpha)) return RationalFunction(1);
    bool present = false;
    RationalFunction& slot = memo_slot('I', tau, alpha, present);
    if (present) return slot;

    RationalFunction acc(0);
    PrefixPredicate anti_dominant = [&](const std::vector<DimVector>& parts,
                                        const DimVector& prefix) {
        DimVector suffix = sub(alpha, prefix);
        if (is_zero(suffix)) return true;  // complete tuple, no condition at the last cut
        (void)parts;
        return compare_slopes(tau, prefix, suffix) > 0;
    };
    enumerate_ordered_decompositions(alpha, anti_dominant,
                                     [&](const std::vector<DimVector>& parts) {
                                         RationalFunction term =
                                             RationalFunction::lefschetz_power(
                                                 -multi_chi(q_, parts));
                                         for (const DimVector& p : parts) term *= I_trivial(p);
                                         if (parts.size() % 2 == 0) term = -term;
                                         acc += term;
                                         return true;
                                     });
    slot = acc;
    return slot;
}

RationalFunction InvariantEngine::Isd(const DimVector& theta, const StabilityFunction& tau) {
    require_selfdual_stability(tau);
    if (is_zero(theta)) return RationalFunction(1);
    bool present = false;
    RationalFunction& slot = memo_slot('S', tau, theta, present);
    if (present) return slot;

    RationalFunction acc(0);
    PrefixPredicate positive_prefix = [&](const std::vector<DimVector>&, const DimVector& prefix) {
        return slope_sign(tau, prefix) > 0;
    };
    enumerate_sd_decompositions(
        q_, theta, positive_prefix,
        [&](const std::vector<DimVector>& parts, const DimVector& rho) {
            RationalFunction term =
                RationalFunction::lefschetz_power(-multi_chi_sd(q_, parts, rho));
            for (const DimVector& p : parts) term *= I_trivial(p);
            term *= Isd_trivial(rho);
            if (parts.size() % 2 == 1) term = -term;
            acc += term;
            return true;
        });
    slot = acc;
    return slot;
}

RationalFunction InvariantEngine::J(const DimVector& alpha, const StabilityFunction& tau) {
    if (is_zero(alpha)) throw std::invalid_argument("J of the zero class is undefined");
    bool present = false;
    RationalFunction& slot = memo_slot('J', tau, alpha, present);
    if (present) return slot;

    RationalFunction acc(0);
    PrefixPredicate equal_slope = [&](const std::vector<DimVector>& parts, const DimVector&) {
        return compare_slopes(tau, parts.back(), alpha) == 0;
    };
    enumerate_ordered_decompositions(
        alpha, equal_slope, [&](const std::vector<DimVector>& parts) {
            long long n = static_cast<long long>(parts.size());
            RationalFunction term = RationalFunction::lefschetz_power(-multi_chi(q_, parts));
            for (const DimVector& p : parts) term *= I(p, tau);
            term *= RationalFunction(Rational(n % 2 == 1 ? 1 : -1) / Rational(static_cast<long>(n)));
            acc += term;
            return true;
        });
    RationalFunction scaled = (RationalFunction::lefschetz() - RationalFunction(1)) * acc;
    if (!scaled.is_zero() && scaled.pole_order_at_one() > 0)
        throw NoPoleViolation("(L-1)*J has a pole at L = 1 for class " + class_to_string(alpha));
    slot = acc;
    return slot;
}

RationalFunction InvariantEngine::Jsd(const DimVector& theta, const StabilityFunction& tau) {
    require_selfdual_stability(tau);
    if (is_zero(theta)) return RationalFunction(1);
    bool present = false;
    RationalFunction& slot = memo_slot('T', tau, theta, present);
    if (present) return slot;

    RationalFunction acc(0);
    PrefixPredicate zero_slope = [&](const std::vector<DimVector>& parts, const DimVector&) {
        return slope_sign(tau, parts.back()) == 0;
    };
    enumerate_sd_decompositions(
        q_, theta, zero_slope, [&](const std::vector<DimVector>& parts, const DimVector& rho) {
            long long n = static_cast<long long>(parts.size());
            RationalFunction term = RationalFunction::lefschetz_power(-multi_chi_sd(q_, parts, rho));
            for (const DimVector& p : parts) term *= I(p, tau);
            term *= Isd(rho, tau);
            term *= RationalFunction(rational_binomial(Rational(-1, 2), n));
            acc += term;
            return true;
        });
    if (!acc.is_zero() && acc.pole_order_at_one() > 0)
        throw NoPoleViolation("J^sd has a pole at L = 1 for class " + class_to_string(theta));
    slot = acc;
    return slot;
}

Rational InvariantEngine::chiJ(const DimVector& alpha, const StabilityFunction& tau) {
    RationalFunction scaled = (RationalFunction::lefschetz() - RationalFunction(1)) * J(alpha, tau);
    try {
        return scaled.evaluate(Rational(1));
    } catch (const PoleError&) {
        throw NoPoleViolation("(L-1)*J not regular at L = 1 for class " + class_to_string(alpha));
    }
}

Rational InvariantEngine::chiJsd(const DimVector& theta, const StabilityFunction& tau) {
    try {
        return Jsd(theta, tau).evaluate(Rational(1));
    } catch (const PoleError&) {
        throw NoPoleViolation("J^sd not regular at L = 1 for class " + class_to_string(theta));
    }
}

Rational InvariantEngine::DT(const DimVector& alpha, const StabilityFunction& tau) {
    Rational value = chiJ(alpha, tau);
    return chi(q_, alpha, alpha) % 2 == 0 ? -value : value;
}

Rational InvariantEngine::DTsd(const DimVector& theta, const StabilityFunction& tau) {
    Rational value = chiJsd(theta, tau);
    return chi_sd_zero(q_, theta) % 2 == 0 ? value : -value;
}

RationalFunction InvariantEngine::wallcross_I(const DimVector& alpha,
                                              const StabilityFunction& tau,
                                              const StabilityFunction& tau_tilde) {
    if (is_zero(alpha)) return RationalFunction(1);
    RationalFunction acc(0);
    enumerate_ordered_decompositions(
        alpha, nullptr, [&](const std::vector<DimVector>& parts) {
            int s = coeff_S(parts, tau, tau_tilde);
            if (s != 0) {
                RationalFunction term = RationalFunction::lefschetz_power(-multi_chi(q_, parts));
                for (const DimVector& p : parts) term *= I(p, tau);
                acc += RationalFunction(s) * term;
            }
            return true;
        });
    return acc;
}

RationalFunction InvariantEngine::wallcross_Isd(const DimVector& theta,
                                                const StabilityFunction& tau,
                                                const StabilityFunction& tau_tilde) {
    require_selfdual_stability(tau);
    require_selfdual_stability(tau_tilde);
    RationalFunction acc(0);
    enumerate_sd_decompositions(
        q_, theta, nullptr, [&](const std::vector<DimVector>& parts, const DimVector& rho) {
            int s = coeff_S_sd(parts, tau, tau_tilde);
            if (s != 0) {
                RationalFunction term =
                    RationalFunction::lefschetz_power(-multi_chi_sd(q_, parts, rho));
                for (const DimVector& p : parts) term *= I(p, tau);
                term *= Isd(rho, tau);
                acc += RationalFunction(s) * term;
            }
            return true;
        });
    return acc;
}

RationalFunction InvariantEngine::wallcross_J(const DimVector& alpha,
                                              const StabilityFunction& tau,
                                              const StabilityFunction& tau_tilde) {
    if (is_zero(alpha)) throw std::invalid_argument("J of the zero class is undefined");
    RationalFunction acc(0);
    enumerate_ordered_decompositions(
        alpha, nullptr, [&](const std::vector<DimVector>& parts) {
            Rational u = coeff_U(parts, tau, tau_tilde);
            if (u != 0) {
                RationalFunction term = RationalFunction::lefschetz_power(-multi_chi(q_, parts));
                for (const DimVector& p : parts) term *= J(p, tau);
                acc += RationalFunction(u) * term;
            }
            return true;
        });
    return acc;
}

RationalFunction InvariantEngine::wallcross_Jsd(const DimVector& theta,
                                                const StabilityFunction& tau,
                                                const StabilityFunction& tau_tilde) {
    require_selfdual_stability(tau);
    require_selfdual_stability(tau_tilde);
    RationalFunction acc(0);
    enumerate_sd_decompositions(
        q_, theta, nullptr, [&](const std::vector<DimVector>& parts, const DimVector& rho) {
            Rational u = coeff_U_sd(parts, tau, tau_tilde);
            if (u != 0) {
                RationalFunction term =
                    RationalFunction::lefschetz_power(-multi_chi_sd(q_, parts, rho));
                for (const DimVector& p : parts) term *= J(p, tau);
                term *= Jsd(rho, tau);
                acc += RationalFunction(u) * term;
            }
            return true;
        });
    return acc;
}

RationalFunction InvariantEngine::I_from_J(const DimVector& alpha, const StabilityFunction& tau) {
    if (is_zero(alpha)) return RationalFunction(1);
    RationalFunction acc(0);
    PrefixPredicate equal_slope = [&](const std::vector<DimVector>& parts, const DimVector&) {
        return compare_slopes(tau, parts.back(), alpha) == 0;
    };
    enumerate_ordered_decompositions(
        alpha, equal_slope, [&](const std::vector<DimVector>& parts) {
            RationalFunction term = RationalFunction::lefschetz_power(-multi_chi(q_, parts));
            for (const DimVector& p : parts) term *= J(p, tau);
            term *= RationalFunction(Rational(1) / factorial(parts.size()));
            acc += term;
            return true;
        });
    return acc;
}

RationalFunction InvariantEngine::Isd_from_Jsd(const DimVector& theta,
                                               const StabilityFunction& tau) {
    require_selfdual_stability(tau);
    RationalFunction acc(0);
    PrefixPredicate zero_slope = [&](const std::vector<DimVector>& parts, const DimVector&) {
        return slope_sign(tau, parts.back()) == 0;
    };
    enumerate_sd_decompositions(
        q_, theta, zero_slope, [&](const std::vector<DimVector>& parts, const DimVector& rho) {
            long long n = static_cast<long long>(parts.size());
            RationalFunction term = RationalFunction::lefschetz_power(-multi_chi_sd(q_, parts, rho));
            for (const DimVector& p : parts) term *= J(p, tau);
            term *= Jsd(rho, tau);
            Rational twopow(1);
            for (long long k = 0; k < n; ++k) twopow *= Rational(2);
            term *= RationalFunction(Rational(1) / (twopow * factorial(n)));
            acc += term;
            return true;
        });
    return acc;
}

}  // namespace sdq
