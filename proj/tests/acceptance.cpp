// Acceptance sweep: prints one line per criterion and exits with the number
// of hard failures. Conjectural series comparisons report deviations without
// failing, except where they overlap the exact reference table.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sdq/cli.hpp"
#include "sdq/identities.hpp"
#include "sdq/invariants.hpp"
#include "sdq/lambda.hpp"

using namespace sdq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::map<std::string, InvariantEngine>& engines() {
    static std::map<std::string, InvariantEngine> reg;
    return reg;
}

InvariantEngine& engine(const std::string& spec) {
    auto it = engines().find(spec);
    if (it == engines().end())
        it = engines().emplace(spec, InvariantEngine(builtin_quiver(spec))).first;
    return it->second;
}

struct Criterion {
    int hard_failures = 0;
    int soft_deviations = 0;
    std::string first_detail;

    void hard(bool ok, const std::string& detail) {
        if (!ok) {
            if (hard_failures == 0 && soft_deviations == 0) first_detail = detail;
            ++hard_failures;
        }
    }
    void soft(bool ok, const std::string& detail) {
        if (!ok) {
            if (hard_failures == 0 && soft_deviations == 0) first_detail = detail;
            ++soft_deviations;
        }
    }
};

int report(int number, const Criterion& c, const std::string& label, double elapsed,
           double budget) {
    bool over_budget = budget > 0 && elapsed > budget;
    std::ostringstream line;
    line << "criterion " << number << ": ";
    if (c.hard_failures > 0 || over_budget) {
        line << "FAIL " << label;
        if (c.hard_failures > 0) line << " (" << c.hard_failures << " mismatches";
        if (c.hard_failures > 0 && !c.first_detail.empty()) line << "; first: " << c.first_detail;
        if (c.hard_failures > 0) line << ")";
        if (over_budget) line << " (over time budget)";
    } else if (c.soft_deviations > 0) {
        line << "PASS " << label << " (conjecture-status: " << c.soft_deviations
             << " deviations reported; first: " << c.first_detail << ")";
    } else {
        line << "PASS " << label;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", elapsed);
    line << " [" << buf << "s]";
    std::cout << line.str() << "\n";
    return (c.hard_failures > 0 || over_budget) ? 1 : 0;
}

const StabilityFunction tau1 = StabilityFunction::trivial(1);
const StabilityFunction tau2 = StabilityFunction::trivial(2);
const StabilityFunction skew({Rational(1), Rational(-1)});

// Reference values for the orthogonal point at trivial stability.
struct PointRow {
    const char* jsd;
    const char* chi;
    const char* dt;
};
const PointRow point_table[8] = {
    {"1", "1", "1"},
    {"1", "1", "1"},
    {"1 / (2*(L+1))", "1/4", "-1/4"},
    {"-1 / (2*L*(L+1))", "-1/4", "1/4"},
    {"-(L^2 + 4*L + 1) / (8*L^2 * (L+1)^2 * (L^2+1))", "-3/32", "-3/32"},
    {"(3*L^2 + 4*L + 3) / (8*L^4 * (L+1)^2 * (L^2+1))", "5/32", "5/32"},
    {"(L^4 + 3*L^3 + 6*L^2 + 3*L + 1) / (16*L^6 * (L+1)^3 * (L^2+1) * (L^2-L+1))", "7/128",
     "-7/128"},
    {"-(5*L^4 + 7*L^3 + 6*L^2 + 7*L + 5) / (16*L^9 * (L+1)^3 * (L^2+1) * (L^2-L+1))", "-15/128",
     "15/128"},
};

int criterion_1() {
    auto start = Clock::now();
    Criterion c;
    InvariantEngine& eng = engine("point:+");
    for (int d = 0; d <= 7; ++d) {
        DimVector cls{d};
        c.hard(eng.Jsd(cls, tau1) == RationalFunction::parse(point_table[d].jsd),
               "Jsd at d=" + std::to_string(d));
        c.hard(eng.chiJsd(cls, tau1) == rational_from_string(point_table[d].chi),
               "chiJsd at d=" + std::to_string(d));
        c.hard(eng.DTsd(cls, tau1) == rational_from_string(point_table[d].dt),
               "DTsd at d=" + std::to_string(d));
    }
    return report(1, c, "orthogonal point invariants d<=7", seconds_since(start), 1.0);
}

// Reference numerical invariants for loop quivers, one column per sign
// pattern; "-" marks dimensions with no valid class anywhere in the column.
struct LoopColumn {
    std::vector<const char*> specs;
    const char* chi[12];
};
const std::vector<LoopColumn> loop_table = {
    {{"loop:1:+:+"},
     {"1", "1", "3/4", "3/4", "21/32", "21/32", "77/128", "77/128", "1155/2048", "1155/2048",
      "4389/8192", "4389/8192"}},
    {{"loop:1:+:-", "loop:1:-:-"},
     {"1", "1", "1/4", "1/4", "5/32", "5/32", "15/128", "15/128", "195/2048", "195/2048",
      "663/8192", "663/8192"}},
    {{"loop:1:-:+"},
     {"1", "-", "-1/4", "-", "-3/32", "-", "-7/128", "-", "-77/2048", "-", "-231/8192", "-"}},
    {{"loop:2:+:++"},
     {"1", "1", "5/4", "7/4", "93/32", "141/32", "1043/128", "1633/128", "51283/2048",
      "81555/2048", "665667/8192", "1067313/8192"}},
    {{"loop:2:+:+-", "loop:2:-:--"},
     {"1", "1", "3/4", "5/4", "53/32", "93/32", "589/128", "1043/128", "28995/2048", "51283/2048",
      "378021/8192", "665667/8192"}},
    {{"loop:2:+:--", "loop:2:-:+-"},
     {"1", "1", "1/4", "3/4", "21/32", "53/32", "255/128", "589/128", "13283/2048", "28995/2048",
      "180279/8192", "378021/8192"}},
    {{"loop:2:-:++"},
     {"1", "-", "-1/4", "-", "-3/32", "-", "25/128", "-", "2867/2048", "-", "51801/8192", "-"}},
    {{"loop:3:+:+++"},
     {"1", "1", "7/4", "11/4", "213/32", "365/32", "3993/128", "7053/128", "330275/2048",
      "590707/2048", "7229697/8192", "12996685/8192"}},
    {{"loop:3:+:++-", "loop:3:-:---"},
     {"1", "1", "5/4", "9/4", "149/32", "285/32", "2795/128", "5407/128", "232259/2048",
      "448947/2048", "5111379/8192", "9834399/8192"}},
    {{"loop:3:+:+--", "loop:3:-:+--"},
     {"1", "1", "3/4", "7/4", "93/32", "213/32", "1797/128", "3993/128", "152595/2048",
      "330275/2048", "3414261/8192", "7229697/8192"}},
    {{"loop:3:+:---", "loop:3:-:++-"},
     {"1", "1", "1/4", "5/4", "45/32", "149/32", "983/128", "2795/128", "89107/2048",
      "232259/2048", "2078919/8192", "5111379/8192"}},
    {{"loop:3:-:+++"},
     {"1", "-", "-1/4", "-", "5/32", "-", "337/128", "-", "39747/2048", "-", "1051433/8192",
      "-"}},
};

int criterion_2() {
    auto start = Clock::now();
    Criterion c;
    for (const LoopColumn& col : loop_table) {
        for (const char* spec : col.specs) {
            InvariantEngine& eng = engine(spec);
            bool symplectic = eng.quiver().u[0] < 0;
            for (int d = 0; d <= 11; ++d) {
                DimVector cls{d};
                bool valid = is_valid_selfdual_class(eng.quiver(), cls);
                c.hard(valid == !(symplectic && d % 2 == 1),
                       std::string(spec) + ": parity of valid classes at d=" + std::to_string(d));
                std::string expected = col.chi[d];
                if (expected == "-") {
                    c.hard(!valid, std::string(spec) + ": d=" + std::to_string(d) +
                                       " should have no valid class");
                    continue;
                }
                if (!valid) continue;  // odd dimension on a symplectic column member
                c.hard(eng.chiJsd(cls, tau1) == rational_from_string(expected),
                       std::string(spec) + ": chiJsd at d=" + std::to_string(d));
            }
        }
    }
    return report(2, c, "loop quiver tables d<=11", seconds_since(start), 300.0);
}

int criterion_3() {
    auto start = Clock::now();
    Criterion c;
    RationalFunction L = RationalFunction::lefschetz();
    RationalFunction one(1);
    c.hard(motive_classifying(GroupFamily::GL, 1) == one / (L - one), "GL(1)");
    c.hard(motive_classifying(GroupFamily::O, 1) == one, "O(1)");
    c.hard(motive_classifying(GroupFamily::O, 2) == L / (L.pow(2) - one), "O(2)");
    for (long long n = 0; n <= 6; ++n) {
        RationalFunction gl(1);
        for (long long i = 0; i < n; ++i)
            gl = gl / (RationalFunction::lefschetz_power(n) - RationalFunction::lefschetz_power(i));
        c.hard(motive_classifying(GroupFamily::GL, n) == gl, "GL(" + std::to_string(n) + ")");

        long long half = n / 2;
        RationalFunction core(1);
        for (long long i = 0; i < half; ++i)
            core = core / (RationalFunction::lefschetz_power(2 * half) -
                           RationalFunction::lefschetz_power(2 * i));
        if (n % 2 == 0) {
            c.hard(motive_classifying(GroupFamily::O, n) ==
                       RationalFunction::lefschetz_power(half) * core,
                   "O(" + std::to_string(n) + ")");
            c.hard(motive_classifying(GroupFamily::Sp, n) ==
                       RationalFunction::lefschetz_power(-half) * core,
                   "Sp(" + std::to_string(n) + ")");
        } else {
            c.hard(motive_classifying(GroupFamily::O, n) ==
                       RationalFunction::lefschetz_power(-half) * core,
                   "O(" + std::to_string(n) + ")");
        }
    }
    for (long long n = 1; n <= 3; ++n)
        c.hard(motive_classifying(GroupFamily::O, 2 * n + 1) ==
                   motive_classifying(GroupFamily::Sp, 2 * n),
               "O(2n+1) = Sp(2n) at n=" + std::to_string(n));
    return report(3, c, "classifying stack motives n<=6", seconds_since(start), 0);
}

int criterion_4() {
    auto start = Clock::now();
    Criterion c;
    InvariantEngine& plus = engine("point:+");
    for (int n = 0; n <= 5; ++n) {
        Rational even = rational_binomial(Rational(1, 4), n);
        Rational odd = rational_binomial(Rational(-1, 4), n);
        Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        bool overlap_even = 2 * n <= 7;
        bool overlap_odd = 2 * n + 1 <= 7;
        auto check = [&](bool ok, bool overlap, const std::string& what) {
            if (overlap)
                c.hard(ok, what);
            else
                c.soft(ok, what);
        };
        check(plus.chiJsd({2 * n}, tau1) == even, overlap_even,
              "chiJsd(2n) at n=" + std::to_string(n));
        check(plus.chiJsd({2 * n + 1}, tau1) == odd, overlap_odd,
              "chiJsd(2n+1) at n=" + std::to_string(n));
        check(plus.DTsd({2 * n}, tau1) == sign * even, overlap_even,
              "DTsd(2n) at n=" + std::to_string(n));
        check(plus.DTsd({2 * n + 1}, tau1) == sign * odd, overlap_odd,
              "DTsd(2n+1) at n=" + std::to_string(n));
    }
    InvariantEngine& minus = engine("point:-");
    for (int n = 0; n <= 5; ++n) {
        Rational odd = rational_binomial(Rational(-1, 4), n);
        Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        c.soft(minus.chiJsd({2 * n}, tau1) == odd,
               "symplectic chiJsd(2n) at n=" + std::to_string(n));
        c.soft(minus.DTsd({2 * n}, tau1) == sign * odd,
               "symplectic DTsd(2n) at n=" + std::to_string(n));
    }
    return report(4, c, "point quarter-power series n<=5", seconds_since(start), 0);
}

int criterion_5() {
    auto start = Clock::now();
    Criterion c;
    for (const char* spec : {"atilde1:+,++", "atilde1:+,+-", "atilde1:+,--"}) {
        InvariantEngine& eng = engine(spec);
        for (char kind : {'J', 'c', 'D'}) {
            std::vector<RationalFunction> expected =
                expand_series(conjectured_series_factors(eng.quiver(), kind), 5);
            for (int n = 0; n <= 5; ++n) {
                DimVector cls{n, n};
                RationalFunction computed;
                if (kind == 'J')
                    computed = eng.Jsd(cls, skew);
                else if (kind == 'c')
                    computed = RationalFunction(eng.chiJsd(cls, skew));
                else
                    computed = RationalFunction(eng.DTsd(cls, skew));
                c.soft(computed == expected[n], std::string(spec) + " kind " + kind + " at n=" +
                                                    std::to_string(n));
            }
        }
    }
    return report(5, c, "two-vertex square-root series dim<=10", seconds_since(start), 0);
}

int criterion_6() {
    auto start = Clock::now();
    Criterion c;
    auto check_sd = [&](InvariantEngine& eng, const DimVector& cls, const StabilityFunction& tau,
                        const std::string& what) {
        RationalFunction jsd = eng.Jsd(cls, tau);
        c.hard(jsd.is_zero() || jsd.pole_order_at_one() <= 0, what);
    };
    for (int d = 0; d <= 11; ++d) check_sd(engine("point:+"), {d}, tau1, "point:+ Jsd");
    for (int d = 0; d <= 10; d += 2) check_sd(engine("point:-"), {d}, tau1, "point:- Jsd");
    for (const LoopColumn& col : loop_table)
        for (const char* spec : col.specs) {
            InvariantEngine& eng = engine(spec);
            for (int d = 0; d <= 11; ++d)
                if (is_valid_selfdual_class(eng.quiver(), {d}))
                    check_sd(eng, {d}, tau1, std::string(spec) + " Jsd");
        }
    for (const char* spec : {"atilde1:+,++", "atilde1:+,+-", "atilde1:+,--"}) {
        InvariantEngine& eng = engine(spec);
        for (int n = 0; n <= 5; ++n) check_sd(eng, {n, n}, skew, std::string(spec) + " Jsd");
        for (const DimVector& cls : classes_up_to(2, 6)) {
            RationalFunction j = eng.J(cls, tau2);
            RationalFunction scaled = (RationalFunction::lefschetz() - RationalFunction(1)) * j;
            c.hard(j.is_zero() || scaled.pole_order_at_one() <= 0,
                   std::string(spec) + " (L-1)*J at (" + class_to_string(cls) + ")");
        }
    }
    return report(6, c, "no pole at L=1 across computed invariants", seconds_since(start), 0);
}

int run_suite(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (code != 0) std::cout << out.str() << err.str();
    return code;
}

int criterion_7() {
    auto start = Clock::now();
    Criterion c;
    c.hard(run_suite({"verify", "wallcross", "--seed", "20260814", "--cases", "200"}) == 0,
           "wallcross suite exit code");
    return report(7, c, "coefficient identities, 200 random cases", seconds_since(start), 120.0);
}

int criterion_8() {
    auto start = Clock::now();
    Criterion c;
    for (const char* spec : {"atilde1:+,++", "a2:+"}) {
        InvariantEngine& eng = engine(spec);
        std::vector<std::pair<StabilityFunction, StabilityFunction>> dirs = {{tau2, skew},
                                                                             {skew, tau2}};
        for (const auto& [from, to] : dirs) {
            for (const DimVector& cls : classes_up_to(2, 6)) {
                c.hard(eng.I(cls, to) == eng.wallcross_I(cls, from, to),
                       std::string(spec) + " I at (" + class_to_string(cls) + ")");
                c.hard(eng.J(cls, to) == eng.wallcross_J(cls, from, to),
                       std::string(spec) + " J at (" + class_to_string(cls) + ")");
            }
            for (const DimVector& cls : sd_classes_up_to(eng.quiver(), 6)) {
                c.hard(eng.Isd(cls, to) == eng.wallcross_Isd(cls, from, to),
                       std::string(spec) + " Isd at (" + class_to_string(cls) + ")");
                c.hard(eng.Jsd(cls, to) == eng.wallcross_Jsd(cls, from, to),
                       std::string(spec) + " Jsd at (" + class_to_string(cls) + ")");
            }
        }
    }
    return report(8, c, "wall-crossing round trips dim<=6", seconds_since(start), 0);
}

int criterion_9() {
    auto start = Clock::now();
    Criterion c;
    for (const char* spec : {"point:+", "loop:2:+:+-", "atilde1:+,++"}) {
        InvariantEngine& eng = engine(spec);
        int nv = eng.quiver().num_vertices();
        std::vector<StabilityFunction> stabs = {StabilityFunction::trivial(nv)};
        if (nv == 2) stabs.push_back(skew);
        for (const StabilityFunction& tau : stabs) {
            for (const DimVector& cls : classes_up_to(nv, 6))
                c.hard(eng.I_from_J(cls, tau) == eng.I(cls, tau),
                       std::string(spec) + " I at (" + class_to_string(cls) + ")");
            for (const DimVector& cls : sd_classes_up_to(eng.quiver(), 6))
                c.hard(eng.Isd_from_Jsd(cls, tau) == eng.Isd(cls, tau),
                       std::string(spec) + " Isd at (" + class_to_string(cls) + ")");
        }
    }
    return report(9, c, "log-relation inversions dim<=6", seconds_since(start), 0);
}

int criterion_10() {
    auto start = Clock::now();
    Criterion c;
    c.hard(run_suite({"verify", "bernoulli"}) == 0, "bernoulli suite exit code");
    c.hard(run_suite({"verify", "chains"}) == 0, "chains suite exit code");
    return report(10, c, "combinatorial identity sweeps", seconds_since(start), 120.0);
}

int criterion_11() {
    auto start = Clock::now();
    Criterion c;
    c.hard(run_suite({"verify", "lambda", "--seed", "20260814", "--cases", "100"}) == 0,
           "lambda suite exit code");
    return report(11, c, "twisted algebra laws, 100 random cases", seconds_since(start), 0);
}

}  // namespace

int main() {
    int failures = 0;
    failures += criterion_1();
    failures += criterion_2();
    failures += criterion_3();
    failures += criterion_4();
    failures += criterion_5();
    failures += criterion_6();
    failures += criterion_7();
    failures += criterion_8();
    failures += criterion_9();
    failures += criterion_10();
    failures += criterion_11();
    if (failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << failures << " criteria failed\n";
    return failures;
}
