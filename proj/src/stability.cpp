#include "sdq/stability.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sdq {

Rational StabilityFunction::pairing(const DimVector& a) const {
    Rational acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += weights[i] * Rational(static_cast<long>(a[i]));
    return acc;
}

std::string StabilityFunction::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < weights.size(); ++i) {
        if (i) out += ",";
        out += rational_to_string(weights[i]);
    }
    return out + ")";
}

Rational slope(const StabilityFunction& tau, const DimVector& a) {
    long long total = total_dim(a);
    if (total == 0) throw ZeroClassError();
    return tau.pairing(a) / Rational(static_cast<long>(total));
}

bool is_selfdual(const StabilityFunction& tau, const SelfDualQuiver& q) {
    for (int i = 0; i < q.num_vertices(); ++i)
        if (tau.weights[i] != -tau.weights[q.sigma0[i]]) return false;
    return true;
}

int compare_slopes(const StabilityFunction& tau, const DimVector& a, const DimVector& b) {
    long long ta = total_dim(a), tb = total_dim(b);
    if (ta == 0 || tb == 0) throw ZeroClassError();
    Rational lhs = tau.pairing(a) * Rational(static_cast<long>(tb));
    Rational rhs = tau.pairing(b) * Rational(static_cast<long>(ta));
    return cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

int slope_sign(const StabilityFunction& tau, const DimVector& a) {
    if (total_dim(a) == 0) throw ZeroClassError();
    Rational p = tau.pairing(a);
    return sgn(p);
}

bool dominates(const StabilityFunction& tau_tilde, const StabilityFunction& tau, int num_vertices,
               long long box) {
    std::vector<DimVector> classes = classes_up_to(num_vertices, box);
    for (const DimVector& a : classes)
        for (const DimVector& b : classes)
            if (compare_slopes(tau, a, b) <= 0 && compare_slopes(tau_tilde, a, b) > 0)
                return false;
    return true;
}

StabilityFunction load_stability(const std::string& spec, const SelfDualQuiver& q) {
    if (spec == "trivial") return StabilityFunction::trivial(q.num_vertices());
    std::string text = spec;
    if (!spec.empty() && spec[0] != '{') {
        std::ifstream in(spec);
        if (!in) throw ParseError("cannot open stability file: " + spec);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad stability JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("stability JSON must be an object");
    StabilityFunction tau = StabilityFunction::trivial(q.num_vertices());
    std::vector<bool> seen(q.num_vertices(), false);
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        int i = q.vertex_index(it.key());
        if (i < 0) throw ParseError("stability names unknown vertex: " + it.key());
        std::string value =
            it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        tau.weights[i] = rational_from_string(value);
        seen[i] = true;
    }
    for (int i = 0; i < q.num_vertices(); ++i)
        if (!seen[i]) throw ParseError("stability missing weight for vertex " + q.vertex_ids[i]);
    return tau;
}

}  // namespace sdq
