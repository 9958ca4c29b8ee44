#include "sdq/identities.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace sdq {

namespace {

Rational rational_factorial(long long n) {
    Rational acc(1);
    for (long long k = 2; k <= n; ++k) acc *= Rational(static_cast<long>(k));
    return acc;
}

Rational rational_binom(long long n, long long k) {
    if (k < 0 || k > n) return Rational(0);
    return rational_factorial(n) / (rational_factorial(k) * rational_factorial(n - k));
}

Polynomial power(const Polynomial& p, int e) {
    Polynomial acc(Rational(1));
    for (int j = 0; j < e; ++j) acc = acc * p;
    return acc;
}

Rational rational_pow2(long long e) {  // 2^e for any integer e
    Rational acc(1);
    for (long long j = 0; j < (e >= 0 ? e : -e); ++j) acc *= Rational(2);
    return e >= 0 ? acc : Rational(1) / acc;
}

}  // namespace

Polynomial bernoulli_poly(int k) {
    static std::vector<Polynomial> table{Polynomial(Rational(1))};
    while (static_cast<int>(table.size()) <= k) {
        int m = static_cast<int>(table.size());
        // B_m(x) = x^m - 1/(m+1) * sum_{j<m} binom(m+1, j) B_j(x)
        Polynomial b = Polynomial::monomial(m);
        Polynomial correction;
        for (int j = 0; j < m; ++j)
            correction = correction + table[j] * rational_binom(m + 1, j);
        b = b - correction * (Rational(1) / Rational(static_cast<long>(m + 1)));
        table.push_back(b);
    }
    return table[k];
}

bool check_bernoulli_identity(int which, int i, int n) {
    if (which < 1 || which > 3 || i < 1 || i > n)
        throw std::invalid_argument("check_bernoulli_identity: need which in 1..3, 1 <= i <= n");
    Polynomial lhs;
    Rational nfac1 = rational_factorial(n - 1);
    for (int p = 0; p <= i - 1; ++p) {
        for (int q = 0; q <= n - i; ++q) {
            Rational coeff = nfac1 / (rational_factorial(n - p - q) * rational_factorial(p) *
                                      rational_factorial(q));
            int sign_exp = which == 3 ? p : q;
            if (sign_exp % 2 != 0) coeff = -coeff;
            Polynomial b = bernoulli_poly(p + q);
            if (which >= 2) {
                coeff *= rational_pow2(p + q - 1);
                b = b.substitute_linear(Rational(1, 2), Rational(0));
            }
            lhs = lhs + b * coeff;
        }
    }
    if (which >= 2) {
        for (int k = n - i + 1; k <= n; ++k) {
            Rational coeff = rational_pow2(k - 1) * nfac1 /
                             (Rational(static_cast<long>(k)) * rational_factorial(n - k) *
                              rational_factorial(n - i) * rational_factorial(i + k - n - 1));
            int sign_exp = which == 2 ? n - i + 1 : i + k - n - 1;
            if (sign_exp % 2 != 0) coeff = -coeff;
            Polynomial diff = bernoulli_poly(k).substitute_linear(Rational(1, 2), Rational(0)) -
                              bernoulli_poly(k).substitute_linear(Rational(1, 2), Rational(1, 2));
            lhs = lhs + diff * coeff;
        }
    }
    Polynomial rhs;
    if (which != 3) {
        Polynomial x = Polynomial::variable();
        Polynomial one_minus_x = Polynomial(Rational(1)) - x;
        rhs = power(x, i - 1) * power(one_minus_x, n - i) * rational_binom(n - 1, i - 1);
    }
    return lhs == rhs;
}

bool check_alt_binom(int i, int k, int n) {
    if (i < 1 || i > n || k < 1 || k > n - 1)
        throw std::invalid_argument("check_alt_binom: need 1 <= i <= n, 1 <= k <= n-1");
    Rational lhs(0);
    for (int q = 0; q <= n - i; ++q) {
        if (k - q < 0 || k - q > i - 1) continue;
        Rational term = rational_binom(k, q);
        lhs += q % 2 == 0 ? term : -term;
    }
    Rational rhs = rational_binom(k - 1, i - 1);
    if ((i + k - 1) % 2 != 0) rhs = -rhs;
    Rational second = rational_binom(k - 1, n - i);
    rhs += (n - i) % 2 == 0 ? second : -second;
    return lhs == rhs;
}

long long stirling2(long long n, long long k) {
    if (n < 0 || k < 0) return 0;
    if (k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<std::vector<long long>> table(n + 1, std::vector<long long>(k + 1, 0));
    table[0][0] = 1;
    for (long long a = 1; a <= n; ++a)
        for (long long b = 1; b <= k && b <= a; ++b)
            table[a][b] = b * table[a - 1][b] + table[a - 1][b - 1];
    return table[n][k];
}

long long double_factorial_odd(long long r) {
    long long acc = 1;
    for (long long j = 1; j <= r; ++j) acc *= 2 * j - 1;
    return acc;
}

namespace {

long long pow2_ll(long long e) {
    long long acc = 1;
    for (long long j = 0; j < e; ++j) acc *= 2;
    return acc;
}

long long binom_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long acc = 1;
    for (long long j = 1; j <= k; ++j) acc = acc * (n - k + j) / j;
    return acc;
}

// Exhaustive count of equivariant surjections as raw maps. Elements of (r, s):
// pairs (2i, 2i+1) for i < r, then s fixed points. A map is determined by its
// values on the r pair representatives and the s fixed points; fixed points
// must land on fixed points.
long long brute_force_surjections(Z2FinObject src, Z2FinObject dst) {
    if (dst.cardinality() > src.cardinality()) return 0;
    if (dst.cardinality() == 0) return src.cardinality() == 0 ? 1 : 0;
    if (src.s > 0 && dst.s == 0) return 0;
    long long pair_choices = dst.cardinality();
    std::vector<long long> choice(src.r + src.s, 0);
    long long count = 0;
    while (true) {
        std::vector<bool> hit(dst.cardinality(), false);
        for (long long i = 0; i < src.r; ++i) {
            long long v = choice[i];
            long long vd = v < 2 * dst.r ? (v ^ 1) : v;  // involution on dst
            hit[v] = true;
            hit[vd] = true;
        }
        for (long long i = 0; i < src.s; ++i) hit[2 * dst.r + choice[src.r + i]] = true;
        bool surjective = true;
        for (bool h : hit) surjective = surjective && h;
        if (surjective) ++count;
        long long pos = static_cast<long long>(choice.size()) - 1;
        for (; pos >= 0; --pos) {
            long long limit = pos < src.r ? pair_choices : dst.s;
            if (choice[pos] + 1 < limit) {
                ++choice[pos];
                for (size_t z = pos + 1; z < choice.size(); ++z) choice[z] = 0;
                break;
            }
        }
        if (pos < 0) break;
    }
    return count;
}

}  // namespace

long long count_z2_surjections(Z2FinObject src, Z2FinObject dst) {
    if (dst.s == 0) {
        if (src.s > 0) return 0;
        return stirling2(src.r, dst.r) * pow2_ll(src.r - dst.r > 0 ? src.r - dst.r : 0);
    }
    if (dst.s == 1) {
        long long acc = 0;
        long long lo = src.s >= 1 ? 0 : 1;
        for (long long k = lo; k <= src.r - dst.r; ++k)
            acc += binom_ll(src.r, k) * stirling2(src.r - k, dst.r) * pow2_ll(src.r - dst.r - k);
        return acc;
    }
    long long raw = brute_force_surjections(src, dst);
    long long aut = pow2_ll(dst.r);
    for (long long j = 2; j <= dst.r; ++j) aut *= j;
    for (long long j = 2; j <= dst.s; ++j) aut *= j;
    if (raw % aut != 0) throw std::logic_error("surjection count not divisible by |Aut|");
    return raw / aut;
}

long long chain_sum_z2(long long r, long long s) {
    static std::map<Z2FinObject, long long> memo;
    Z2FinObject self{r, s};
    auto it = memo.find(self);
    if (it != memo.end()) return it->second;
    long long acc = r == 0 ? 1 : 0;
    for (long long r1 = 0; r1 <= r; ++r1) {
        for (long long s1 = 0; 2 * r1 + s1 <= 2 * r + s; ++s1) {
            Z2FinObject target{r1, s1};
            if (target == self) continue;
            long long ways = count_z2_surjections(self, target);
            if (ways == 0) continue;
            acc -= ways * chain_sum_z2(r1, s1);
        }
    }
    memo[self] = acc;
    return acc;
}

long long chain_sum_fin(long long cardinality) {
    if (cardinality < 1) throw std::invalid_argument("chain_sum_fin needs a nonempty set");
    static std::vector<long long> memo{0, 1};  // index by cardinality
    while (static_cast<long long>(memo.size()) <= cardinality) {
        long long c = static_cast<long long>(memo.size());
        long long acc = 0;
        for (long long c1 = 1; c1 < c; ++c1) acc -= stirling2(c, c1) * memo[c1];
        memo.push_back(acc);
    }
    return memo[cardinality];
}

bool check_signed_surjection_sum(long long r) {
    Integer total(0);
    for (long long rp = 0; rp <= r; ++rp) {
        Integer inner(0);
        for (long long k = 0; k <= r - rp; ++k) {
            Integer term(1);
            mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(r),
                         static_cast<unsigned long>(k));
            term *= Integer(static_cast<long>(stirling2(r - k, rp)));
            for (long long j = 0; j < r - rp - k; ++j) term *= 2;
            inner += term;
        }
        Integer weight(static_cast<long>(double_factorial_odd(rp)));
        if (rp % 2 != 0) weight = -weight;
        total += weight * inner;
    }
    return total == 0;
}

}  // namespace sdq
