#include "sdq/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sdq {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

int parse_sign_char(char ch, const std::string& what) {
    if (ch == '+') return 1;
    if (ch == '-') return -1;
    throw ParseError("bad sign character in " + what);
}

}  // namespace

QuiverValidationError::QuiverValidationError(std::vector<std::string> list)
    : std::runtime_error("quiver validation failed:\n  " + join(list, "\n  ")),
      violations(std::move(list)) {}

int SelfDualQuiver::vertex_index(const std::string& id) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertex_ids[i] == id) return i;
    return -1;
}

std::string SelfDualQuiver::content_key() const {
    std::ostringstream out;
    for (int i = 0; i < num_vertices(); ++i)
        out << "v" << vertex_ids[i] << ">" << sigma0[i] << ":" << u[i] << ";";
    for (int a = 0; a < num_arrows(); ++a)
        out << "a" << arrows[a].id << ":" << arrows[a].src << ">" << arrows[a].tgt << ">"
            << sigma1[a] << ":" << v[a] << ";";
    return out.str();
}

SelfDualQuiver validate(SelfDualQuiver raw) {
    std::vector<std::string> bad;
    int nv = raw.num_vertices(), na = raw.num_arrows();
    auto vertex_name = [&](int i) { return raw.vertex_ids[i]; };
    auto arrow_name = [&](int a) { return raw.arrows[a].id; };

    if (static_cast<int>(raw.sigma0.size()) != nv || static_cast<int>(raw.u.size()) != nv)
        bad.push_back("vertex tables have inconsistent sizes");
    if (static_cast<int>(raw.sigma1.size()) != na || static_cast<int>(raw.v.size()) != na)
        bad.push_back("arrow tables have inconsistent sizes");
    if (!bad.empty()) throw QuiverValidationError(std::move(bad));

    for (int i = 0; i < nv; ++i) {
        if (raw.sigma0[i] < 0 || raw.sigma0[i] >= nv) {
            bad.push_back("vertex " + vertex_name(i) + ": dual out of range");
            continue;
        }
        if (raw.sigma0[raw.sigma0[i]] != i)
            bad.push_back("vertex " + vertex_name(i) + ": sigma0 is not an involution");
        if (raw.u[i] != 1 && raw.u[i] != -1)
            bad.push_back("vertex " + vertex_name(i) + ": sign u must be +1 or -1");
        if (raw.u[i] != raw.u[raw.sigma0[i]])
            bad.push_back("vertex " + vertex_name(i) + ": u differs from u at the dual vertex");
    }
    for (int a = 0; a < na; ++a) {
        if (raw.sigma1[a] < 0 || raw.sigma1[a] >= na) {
            bad.push_back("arrow " + arrow_name(a) + ": dual out of range");
            continue;
        }
        int ad = raw.sigma1[a];
        if (raw.sigma1[ad] != a)
            bad.push_back("arrow " + arrow_name(a) + ": sigma1 is not an involution");
        const Arrow& ar = raw.arrows[a];
        if (ar.src < 0 || ar.src >= nv || ar.tgt < 0 || ar.tgt >= nv) {
            bad.push_back("arrow " + arrow_name(a) + ": endpoint out of range");
            continue;
        }
        if (raw.sigma0[ar.src] != raw.arrows[ad].tgt || raw.sigma0[ar.tgt] != raw.arrows[ad].src)
            bad.push_back("arrow " + arrow_name(a) +
                          ": sigma is not contravariant (dual arrow endpoints mismatch)");
        if (raw.v[a] != 1 && raw.v[a] != -1)
            bad.push_back("arrow " + arrow_name(a) + ": sign v must be +1 or -1");
        if (raw.v[a] * raw.v[ad] != raw.u[ar.src] * raw.u[ar.tgt])
            bad.push_back("arrow " + arrow_name(a) + ": v_a * v_{a^dual} != u_src * u_tgt");
    }
    if (!bad.empty()) throw QuiverValidationError(std::move(bad));

    raw.vertex_kind.resize(nv);
    for (int i = 0; i < nv; ++i) {
        if (raw.sigma0[i] == i)
            raw.vertex_kind[i] = raw.u[i] > 0 ? VertexKind::Plus : VertexKind::Minus;
        else
            raw.vertex_kind[i] = i < raw.sigma0[i] ? VertexKind::Tri : VertexKind::TriDual;
    }
    raw.arrow_kind.resize(na);
    for (int a = 0; a < na; ++a) {
        if (raw.sigma1[a] == a)
            raw.arrow_kind[a] =
                raw.u[raw.arrows[a].tgt] * raw.v[a] > 0 ? ArrowKind::Plus : ArrowKind::Minus;
        else
            raw.arrow_kind[a] = a < raw.sigma1[a] ? ArrowKind::Tri : ArrowKind::TriDual;
    }
    return raw;
}

SelfDualQuiver quiver_from_json(const std::string& json_text) {
    SelfDualQuiver q;
    std::vector<std::string> vertex_duals, arrow_ids, arrow_duals;
    try {
        nlohmann::json doc = nlohmann::json::parse(json_text);
        for (const auto& v : doc.at("vertices")) {
            q.vertex_ids.push_back(v.at("id").get<std::string>());
            vertex_duals.push_back(v.at("dual").get<std::string>());
            q.u.push_back(v.at("sign").get<int>());
        }
        if (doc.contains("arrows")) {
            for (const auto& a : doc.at("arrows")) {
                Arrow ar;
                ar.id = a.at("id").get<std::string>();
                ar.src = q.vertex_index(a.at("src").get<std::string>());
                ar.tgt = q.vertex_index(a.at("tgt").get<std::string>());
                if (ar.src < 0 || ar.tgt < 0)
                    throw QuiverValidationError({"arrow " + ar.id + ": unknown endpoint vertex"});
                arrow_ids.push_back(ar.id);
                arrow_duals.push_back(a.at("dual").get<std::string>());
                q.arrows.push_back(ar);
                q.v.push_back(a.at("sign").get<int>());
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad quiver JSON: ") + e.what());
    }
    for (int i = 0; i < q.num_vertices(); ++i) {
        int d = q.vertex_index(vertex_duals[i]);
        if (d < 0) throw QuiverValidationError({"vertex " + q.vertex_ids[i] + ": unknown dual id"});
        q.sigma0.push_back(d);
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int d = -1;
        for (int b = 0; b < q.num_arrows(); ++b)
            if (arrow_ids[b] == arrow_duals[a]) d = b;
        if (d < 0) throw QuiverValidationError({"arrow " + arrow_ids[a] + ": unknown dual id"});
        q.sigma1.push_back(d);
    }
    return validate(std::move(q));
}

SelfDualQuiver builtin_quiver(const std::string& spec) {
    SelfDualQuiver q;
    q.name = spec;
    if (spec.rfind("point:", 0) == 0 && spec.size() == 7) {
        q.vertex_ids = {"1"};
        q.sigma0 = {0};
        q.u = {parse_sign_char(spec[6], spec)};
        return validate(std::move(q));
    }
    if (spec.rfind("loop:", 0) == 0) {
        // loop:m:<u>:<v_1...v_m>
        std::string rest = spec.substr(5);
        size_t c1 = rest.find(':');
        size_t c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ParseError("loop builtin needs loop:m:<u>:<v...>");
        int m = std::stoi(rest.substr(0, c1));
        std::string us = rest.substr(c1 + 1, c2 - c1 - 1);
        std::string vs = rest.substr(c2 + 1);
        if (us.size() != 1 || static_cast<int>(vs.size()) != m)
            throw ParseError("loop builtin: need one u sign and m loop signs");
        q.vertex_ids = {"1"};
        q.sigma0 = {0};
        q.u = {parse_sign_char(us[0], spec)};
        for (int j = 0; j < m; ++j) {
            q.arrows.push_back({"a" + std::to_string(j + 1), 0, 0});
            q.sigma1.push_back(j);
            q.v.push_back(parse_sign_char(vs[j], spec));
        }
        return validate(std::move(q));
    }
    if (spec.rfind("atilde1:", 0) == 0) {
        // atilde1:<u>,<v1><v2>
        std::string rest = spec.substr(8);
        if (rest.size() != 4 || rest[1] != ',')
            throw ParseError("atilde1 builtin needs atilde1:<u>,<v1><v2>");
        int uu = parse_sign_char(rest[0], spec);
        q.vertex_ids = {"1", "2"};
        q.sigma0 = {1, 0};
        q.u = {uu, uu};
        q.arrows = {{"a1", 0, 1}, {"a2", 0, 1}};
        q.sigma1 = {0, 1};
        q.v = {parse_sign_char(rest[2], spec), parse_sign_char(rest[3], spec)};
        return validate(std::move(q));
    }
    if (spec == "a2" || spec == "a2:+" || spec == "a2:-") {
        q.vertex_ids = {"1", "2"};
        q.sigma0 = {1, 0};
        q.u = {1, 1};
        q.arrows = {{"a", 0, 1}};
        q.sigma1 = {0};
        q.v = {spec == "a2:-" ? -1 : 1};
        return validate(std::move(q));
    }
    throw ParseError("unknown builtin quiver: " + spec);
}

SelfDualQuiver load_quiver(const std::string& spec_or_path) {
    for (const char* prefix : {"point:", "loop:", "atilde1:", "a2"})
        if (spec_or_path.rfind(prefix, 0) == 0) return builtin_quiver(spec_or_path);
    std::ifstream in(spec_or_path);
    if (!in) throw ParseError("cannot open quiver file: " + spec_or_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    SelfDualQuiver q = quiver_from_json(buf.str());
    q.name = spec_or_path;
    return q;
}

DimVector dual_class(const SelfDualQuiver& q, const DimVector& alpha) {
    DimVector r(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) r[q.sigma0[i]] = alpha[i];
    return r;
}

DimVector add(const DimVector& a, const DimVector& b) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DimVector sub(const DimVector& a, const DimVector& b) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool is_zero(const DimVector& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

long long total_dim(const DimVector& a) {
    long long t = 0;
    for (long long x : a) t += x;
    return t;
}

DimVector bar_add(const SelfDualQuiver& q, const DimVector& alpha, const DimVector& theta) {
    return add(add(alpha, dual_class(q, alpha)), theta);
}

bool is_valid_selfdual_class(const SelfDualQuiver& q, const DimVector& theta) {
    for (int i = 0; i < q.num_vertices(); ++i) {
        if (theta[i] < 0) return false;
        if (theta[i] != theta[q.sigma0[i]]) return false;
        if (q.vertex_kind[i] == VertexKind::Minus && theta[i] % 2 != 0) return false;
    }
    return true;
}

void require_selfdual_class(const SelfDualQuiver& q, const DimVector& theta) {
    if (!is_valid_selfdual_class(q, theta))
        throw QuiverValidationError({"invalid self-dual class " + class_to_string(theta)});
}

namespace {

// Next nonzero vector <= bound in lexicographic order (leftmost entry most
// significant); false when exhausted. Start from the zero vector.
bool next_vector(DimVector& w, const DimVector& bound) {
    for (size_t j = w.size(); j-- > 0;) {
        if (w[j] < bound[j]) {
            ++w[j];
            for (size_t k = j + 1; k < w.size(); ++k) w[k] = 0;
            return true;
        }
    }
    return false;
}

struct OrdEnum {
    const DimVector& alpha;
    const PrefixPredicate& prefix_ok;
    const std::function<bool(const std::vector<DimVector>&)>& emit;
    std::vector<DimVector> parts;
    DimVector prefix;
    bool stop = false;

    void rec() {
        if (stop) return;
        DimVector remaining = sub(alpha, prefix);
        if (is_zero(remaining)) {
            if (!parts.empty() && !emit(parts)) stop = true;
            return;
        }
        DimVector w(alpha.size(), 0);
        while (!stop && next_vector(w, remaining)) {
            parts.push_back(w);
            DimVector next_prefix = add(prefix, w);
            if (!prefix_ok || prefix_ok(parts, next_prefix)) {
                std::swap(prefix, next_prefix);
                rec();
                std::swap(prefix, next_prefix);
            }
            parts.pop_back();
        }
    }
};

}  // namespace

void enumerate_ordered_decompositions(const DimVector& alpha, const PrefixPredicate& prefix_ok,
                                      const std::function<bool(const std::vector<DimVector>&)>& emit) {
    if (is_zero(alpha)) throw std::invalid_argument("decomposing the zero class");
    OrdEnum e{alpha, prefix_ok, emit, {}, DimVector(alpha.size(), 0)};
    e.rec();
}

namespace {

struct SdEnum {
    const SelfDualQuiver& q;
    const DimVector& theta;
    const PrefixPredicate& prefix_ok;
    const std::function<bool(const std::vector<DimVector>&, const DimVector&)>& emit;
    std::vector<DimVector> parts;
    DimVector alpha_prefix;
    DimVector bar_sum;
    bool stop = false;

    void rec() {
        if (stop) return;
        DimVector rho = sub(theta, bar_sum);
        if (is_valid_selfdual_class(q, rho)) {
            if (!emit(parts, rho)) {
                stop = true;
                return;
            }
        }
        DimVector remaining = sub(theta, bar_sum);
        DimVector w(theta.size(), 0);
        while (!stop && next_vector(w, remaining)) {
            DimVector wbar = add(w, dual_class(q, w));
            bool fits = true;
            for (size_t i = 0; i < wbar.size(); ++i)
                if (wbar[i] > remaining[i]) fits = false;
            if (!fits) continue;
            parts.push_back(w);
            DimVector next_alpha = add(alpha_prefix, w);
            if (!prefix_ok || prefix_ok(parts, next_alpha)) {
                DimVector next_bar = add(bar_sum, wbar);
                std::swap(alpha_prefix, next_alpha);
                std::swap(bar_sum, next_bar);
                rec();
                std::swap(alpha_prefix, next_alpha);
                std::swap(bar_sum, next_bar);
            }
            parts.pop_back();
        }
    }
};

}  // namespace

void enumerate_sd_decompositions(
    const SelfDualQuiver& q, const DimVector& theta, const PrefixPredicate& prefix_ok,
    const std::function<bool(const std::vector<DimVector>&, const DimVector&)>& emit) {
    require_selfdual_class(q, theta);
    SdEnum e{q,  theta, prefix_ok, emit, {}, DimVector(theta.size(), 0),
             DimVector(theta.size(), 0)};
    e.rec();
}

namespace {

bool tuple_before(const std::vector<DimVector>& a, const std::vector<DimVector>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

std::vector<std::vector<DimVector>> collect_ordered_decompositions(const DimVector& alpha) {
    std::vector<std::vector<DimVector>> out;
    enumerate_ordered_decompositions(alpha, nullptr, [&](const std::vector<DimVector>& parts) {
        out.push_back(parts);
        return true;
    });
    std::sort(out.begin(), out.end(), tuple_before);
    return out;
}

std::vector<std::pair<std::vector<DimVector>, DimVector>> collect_sd_decompositions(
    const SelfDualQuiver& q, const DimVector& theta) {
    std::vector<std::pair<std::vector<DimVector>, DimVector>> out;
    enumerate_sd_decompositions(q, theta, nullptr,
                                [&](const std::vector<DimVector>& parts, const DimVector& rho) {
                                    out.emplace_back(parts, rho);
                                    return true;
                                });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

std::vector<DimVector> classes_up_to(int num_vertices, long long bound) {
    std::vector<DimVector> out;
    DimVector w(num_vertices, 0), cap(num_vertices, bound);
    while (next_vector(w, cap))
        if (total_dim(w) <= bound) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DimVector> sd_classes_up_to(const SelfDualQuiver& q, long long bound) {
    std::vector<DimVector> out;
    for (const DimVector& w : classes_up_to(q.num_vertices(), bound))
        if (is_valid_selfdual_class(q, w)) out.push_back(w);
    return out;
}

std::string class_to_string(const DimVector& a) {
    std::string out;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a[i]);
    }
    return out;
}

DimVector class_from_string(const std::string& text, int num_vertices) {
    DimVector out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        long long value = std::stoll(item, &used);
        out.push_back(value);
    }
    if (static_cast<int>(out.size()) != num_vertices)
        throw ParseError("class has " + std::to_string(out.size()) + " entries, quiver has " +
                         std::to_string(num_vertices) + " vertices");
    for (long long x : out)
        if (x < 0) throw ParseError("class entries must be nonnegative");
    return out;
}

}  // namespace sdq
