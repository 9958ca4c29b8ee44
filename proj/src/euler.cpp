#include "sdq/euler.hpp"

#include <stdexcept>

namespace sdq {

namespace {

long long add_ck(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("euler form overflow");
    return r;
}

long long sub_ck(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("euler form overflow");
    return r;
}

long long mul_ck(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("euler form overflow");
    return r;
}

}  // namespace

long long chi(const SelfDualQuiver& q, const DimVector& a, const DimVector& b) {
    long long acc = 0;
    for (int i = 0; i < q.num_vertices(); ++i) acc = add_ck(acc, mul_ck(a[i], b[i]));
    for (const Arrow& ar : q.arrows) acc = sub_ck(acc, mul_ck(a[ar.tgt], b[ar.src]));
    return acc;
}

long long chi_sd_zero(const SelfDualQuiver& q, const DimVector& alpha) {
    // Accumulate twice the value; every contribution below is even-safe.
    long long twice = 0;
    for (int i = 0; i < q.num_vertices(); ++i) {
        switch (q.vertex_kind[i]) {
            case VertexKind::Plus:
            case VertexKind::Minus:
                twice = add_ck(twice, mul_ck(alpha[i], sub_ck(alpha[i], q.u[i])));
                break;
            case VertexKind::Tri:
                twice = add_ck(twice, mul_ck(2, mul_ck(alpha[q.sigma0[i]], alpha[i])));
                break;
            case VertexKind::TriDual:
                break;
        }
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[a];
        switch (q.arrow_kind[a]) {
            case ArrowKind::Plus:
            case ArrowKind::Minus:
                twice = sub_ck(twice, mul_ck(alpha[ar.tgt],
                                             add_ck(alpha[ar.tgt],
                                                    mul_ck(q.u[ar.tgt], q.v[a]))));
                break;
            case ArrowKind::Tri:
                twice = sub_ck(twice, mul_ck(2, mul_ck(alpha[q.sigma0[ar.src]], alpha[ar.tgt])));
                break;
            case ArrowKind::TriDual:
                break;
        }
    }
    if (twice % 2 != 0) throw std::logic_error("chi_sd_zero: odd accumulator");
    return twice / 2;
}

long long chi_sd(const SelfDualQuiver& q, const DimVector& alpha, const DimVector& theta) {
    return add_ck(chi(q, alpha, theta), chi_sd_zero(q, alpha));
}

long long multi_chi(const SelfDualQuiver& q, const std::vector<DimVector>& parts) {
    long long acc = 0;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            acc = add_ck(acc, chi(q, parts[i], parts[j]));
    return acc;
}

long long multi_chi_sd(const SelfDualQuiver& q, const std::vector<DimVector>& parts,
                       const DimVector& rho) {
    long long acc = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        for (size_t j = i + 1; j < parts.size(); ++j) {
            acc = add_ck(acc, chi(q, parts[i], parts[j]));
            acc = add_ck(acc, chi(q, parts[i], dual_class(q, parts[j])));
        }
        acc = add_ck(acc, chi_sd(q, parts[i], rho));
    }
    return acc;
}

long long chi_bar(const SelfDualQuiver& q, const DimVector& a, const DimVector& b) {
    return sub_ck(chi(q, b, a), chi(q, a, b));
}

long long chi_bar_sd(const SelfDualQuiver& q, const DimVector& a, const DimVector& theta) {
    return sub_ck(chi_sd(q, dual_class(q, a), theta), chi_sd(q, a, theta));
}

long long chi_tilde(const SelfDualQuiver& q, const std::vector<DimVector>& parts) {
    long long acc = 1;
    for (size_t j = 1; j < parts.size(); ++j) {
        long long col = 0;
        for (size_t i = 0; i < j; ++i) col = add_ck(col, chi_bar(q, parts[i], parts[j]));
        acc = mul_ck(acc, col);
    }
    return acc;
}

long long chi_tilde_sd(const SelfDualQuiver& q, const std::vector<std::vector<DimVector>>& groups,
                       const DimVector& rho) {
    int nv = q.num_vertices();
    long long acc = 1;
    for (const auto& group : groups) {
        std::vector<DimVector> bars;
        bars.reserve(group.size());
        for (const DimVector& a : group) bars.push_back(add(a, dual_class(q, a)));
        acc = mul_ck(acc, chi_tilde(q, bars));
    }
    for (size_t i = 0; i < groups.size(); ++i) {
        DimVector group_sum(nv, 0);
        for (const DimVector& a : groups[i]) group_sum = add(group_sum, a);
        DimVector tail = rho;
        for (size_t j = i + 1; j < groups.size(); ++j)
            for (const DimVector& a : groups[j]) tail = bar_add(q, a, tail);
        acc = mul_ck(acc, chi_bar_sd(q, group_sum, tail));
    }
    return acc;
}

}  // namespace sdq
