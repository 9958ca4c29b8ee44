#include "sdq/wallcross.hpp"

#include <stdexcept>

namespace sdq {

namespace {

Rational factorial(long long n) {
    Rational acc(1);
    for (long long k = 2; k <= n; ++k) acc *= Rational(static_cast<long>(k));
    return acc;
}

// Blocks of 1..n determined by ascending cut positions; cuts[i] is the end of
// block i, cuts.back() == n.
std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << (n > 0 ? n - 1 : 0)); ++mask) {
        std::vector<int> cuts;
        for (int p = 1; p < n; ++p)
            if (mask & (1u << (p - 1))) cuts.push_back(p);
        cuts.push_back(n);
        out.push_back(std::move(cuts));
    }
    if (n == 0) out.assign(1, {});
    return out;
}

DimVector sum_range(const std::vector<DimVector>& xs, int lo, int hi) {  // [lo, hi)
    DimVector acc(xs.empty() ? 0 : xs[0].size(), 0);
    for (int i = lo; i < hi; ++i) acc = add(acc, xs[i]);
    return acc;
}

}  // namespace

int coeff_S(const std::vector<DimVector>& classes, const StabilityFunction& tau,
            const StabilityFunction& tau_tilde) {
    int n = static_cast<int>(classes.size());
    if (n == 0) throw std::invalid_argument("coeff_S needs a nonempty list");
    std::vector<DimVector> prefix(n), suffix(n);
    prefix[0] = classes[0];
    for (int i = 1; i < n; ++i) prefix[i] = add(prefix[i - 1], classes[i]);
    suffix[n - 1] = classes[n - 1];
    for (int i = n - 2; i >= 0; --i) suffix[i] = add(suffix[i + 1], classes[i]);
    int product = 1;
    for (int i = 0; i + 1 < n; ++i) {
        int ct = compare_slopes(tau, classes[i], classes[i + 1]);
        int cs = compare_slopes(tau_tilde, prefix[i], suffix[i + 1]);
        if (ct > 0 && cs <= 0)
            continue;  // factor +1
        else if (ct <= 0 && cs > 0)
            product = -product;
        else
            return 0;
    }
    return product;
}

int coeff_S_sd(const std::vector<DimVector>& classes, const StabilityFunction& tau,
               const StabilityFunction& tau_tilde) {
    int n = static_cast<int>(classes.size());
    int product = 1;
    DimVector prefix(classes.empty() ? 0 : classes[0].size(), 0);
    for (int i = 0; i < n; ++i) {
        prefix = add(prefix, classes[i]);
        int ct = i + 1 < n ? compare_slopes(tau, classes[i], classes[i + 1])
                           : slope_sign(tau, classes[i]);
        int ps = slope_sign(tau_tilde, prefix);
        if (ct > 0 && ps <= 0)
            continue;
        else if (ct <= 0 && ps > 0)
            product = -product;
        else
            return 0;
    }
    return product;
}

namespace {

struct BlockData {
    std::vector<DimVector> beta;   // block sums
    Rational block_weight;         // prod 1/(size of block)!
    bool tau_constant = true;      // tau-slope constant inside every block
};

BlockData split_blocks(const std::vector<DimVector>& classes, const std::vector<int>& cuts,
                       const StabilityFunction& tau) {
    BlockData out;
    out.block_weight = Rational(1);
    int lo = 0;
    for (int hi : cuts) {
        for (int i = lo; i + 1 < hi; ++i)
            if (compare_slopes(tau, classes[i], classes[i + 1]) != 0) out.tau_constant = false;
        out.beta.push_back(sum_range(classes, lo, hi));
        out.block_weight /= factorial(hi - lo);
        lo = hi;
    }
    return out;
}

// S over every contiguous beta range: table[i][j] = coeff_S(beta[i..j)).
std::vector<std::vector<int>> s_table(const std::vector<DimVector>& beta,
                                      const StabilityFunction& tau,
                                      const StabilityFunction& tau_tilde) {
    int m = static_cast<int>(beta.size());
    std::vector<std::vector<int>> table(m + 1, std::vector<int>(m + 1, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j <= m; ++j)
            table[i][j] =
                coeff_S(std::vector<DimVector>(beta.begin() + i, beta.begin() + j), tau, tau_tilde);
    return table;
}

}  // namespace

Rational coeff_U(const std::vector<DimVector>& classes, const StabilityFunction& tau,
                 const StabilityFunction& tau_tilde) {
    int n = static_cast<int>(classes.size());
    if (n == 0) throw std::invalid_argument("coeff_U needs a nonempty list");
    DimVector total = sum_range(classes, 0, n);
    Rational acc(0);
    for (const std::vector<int>& cuts : compositions(n)) {
        BlockData blocks = split_blocks(classes, cuts, tau);
        if (!blocks.tau_constant) continue;
        int m = static_cast<int>(blocks.beta.size());
        std::vector<std::vector<int>> table = s_table(blocks.beta, tau, tau_tilde);
        for (const std::vector<int>& bcuts : compositions(m)) {
            int l = static_cast<int>(bcuts.size());
            bool ok = true;
            int sproduct = 1;
            int lo = 0;
            for (int hi : bcuts) {
                DimVector gamma = sum_range(blocks.beta, lo, hi);
                if (compare_slopes(tau_tilde, gamma, total) != 0) {
                    ok = false;
                    break;
                }
                sproduct *= table[lo][hi];
                lo = hi;
            }
            if (!ok || sproduct == 0) continue;
            Rational term = Rational(l % 2 == 1 ? 1 : -1) / Rational(static_cast<long>(l));
            acc += term * Rational(sproduct) * blocks.block_weight;
        }
    }
    return acc;
}

Rational coeff_U_sd(const std::vector<DimVector>& classes, const StabilityFunction& tau,
                    const StabilityFunction& tau_tilde) {
    int n = static_cast<int>(classes.size());
    Rational acc(0);
    for (int t = n; t >= 0; --t) {
        if (t < n && slope_sign(tau, classes[t]) != 0) break;  // classes after t must be tau-slope 0
        Rational twopow(1);
        for (int k = 0; k < n - t; ++k) twopow *= Rational(2);
        Rational tail_weight = Rational(1) / (twopow * factorial(n - t));
        std::vector<DimVector> head(classes.begin(), classes.begin() + t);
        for (const std::vector<int>& cuts : compositions(t)) {
            BlockData blocks = split_blocks(head, cuts, tau);
            if (!blocks.tau_constant) continue;
            int m = static_cast<int>(blocks.beta.size());
            std::vector<std::vector<int>> table = s_table(blocks.beta, tau, tau_tilde);
            std::vector<int> sd_from(m + 1);
            for (int i = 0; i <= m; ++i)
                sd_from[i] = coeff_S_sd(
                    std::vector<DimVector>(blocks.beta.begin() + i, blocks.beta.end()), tau,
                    tau_tilde);
            // Chains 0 = b_0 < ... < b_l <= m as subsets of {1..m}.
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                std::vector<int> bs{0};
                for (int p = 1; p <= m; ++p)
                    if (mask & (1u << (p - 1))) bs.push_back(p);
                int l = static_cast<int>(bs.size()) - 1;
                bool ok = true;
                int sproduct = 1;
                for (int i = 1; i <= l; ++i) {
                    DimVector gamma = sum_range(blocks.beta, bs[i - 1], bs[i]);
                    if (slope_sign(tau_tilde, gamma) != 0) {
                        ok = false;
                        break;
                    }
                    sproduct *= table[bs[i - 1]][bs[i]];
                }
                if (!ok || sproduct == 0) continue;
                int last = bs.back();
                if (sd_from[last] == 0) continue;
                Rational term = rational_binomial(Rational(-1, 2), l);
                term *= Rational(sproduct * sd_from[last]);
                term *= blocks.block_weight * tail_weight;
                acc += term;
            }
        }
    }
    return acc;
}

}  // namespace sdq
