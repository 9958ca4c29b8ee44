#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sdq/ratfun.hpp"

namespace sdq {

struct QuiverValidationError : std::runtime_error {
    std::vector<std::string> violations;
    explicit QuiverValidationError(std::vector<std::string> list);
};

// Dimension vectors and self-dual classes are entry lists in vertex
// declaration order. Self-dual classes additionally satisfy theta_i =
// theta_{i^dual} with even entries at sign -1 fixed vertices.
using DimVector = std::vector<long long>;

enum class VertexKind { Plus, Minus, Tri, TriDual };
enum class ArrowKind { Plus, Minus, Tri, TriDual };

struct Arrow {
    std::string id;
    int src = 0;
    int tgt = 0;
};

// A quiver with a contravariant involution sigma and sign functions u, v.
// The +/-/triangle classification is derived from declaration order.
struct SelfDualQuiver {
    std::vector<std::string> vertex_ids;
    std::vector<Arrow> arrows;
    std::vector<int> sigma0;  // vertex involution, by index
    std::vector<int> sigma1;  // arrow involution, by index
    std::vector<int> u;       // +1 / -1 per vertex
    std::vector<int> v;       // +1 / -1 per arrow

    std::vector<VertexKind> vertex_kind;  // derived
    std::vector<ArrowKind> arrow_kind;    // derived

    std::string name;  // builtin tag or file stem, for display only

    int num_vertices() const { return static_cast<int>(vertex_ids.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }
    int dual_vertex(int i) const { return sigma0[i]; }
    int dual_arrow(int a) const { return sigma1[a]; }
    int vertex_index(const std::string& id) const;  // -1 when absent

    // Stable content key for memoization across equal quivers.
    std::string content_key() const;
};

// Checks the involution axioms and sign constraints, filling in the derived
// classification. Throws QuiverValidationError listing every violation.
SelfDualQuiver validate(SelfDualQuiver raw);

// JSON schema:
// {"vertices":[{"id":str,"dual":str,"sign":+-1}],
//  "arrows":[{"id":str,"src":str,"tgt":str,"dual":str,"sign":+-1}]}
SelfDualQuiver quiver_from_json(const std::string& json_text);

// Builtins: "point:+", "point:-", "loop:m:<u>:<v_1...v_m>" (e.g.
// "loop:2:+:+-"), "atilde1:<u>,<v1><v2>" (e.g. "atilde1:+,++"),
// "a2:+"/"a2:-" (A_2 with the swap involution; default sign +).
SelfDualQuiver builtin_quiver(const std::string& spec);

// Builtin name when recognized, otherwise load a JSON file.
SelfDualQuiver load_quiver(const std::string& spec_or_path);

DimVector dual_class(const SelfDualQuiver& q, const DimVector& alpha);
DimVector add(const DimVector& a, const DimVector& b);
DimVector sub(const DimVector& a, const DimVector& b);
bool is_zero(const DimVector& a);
long long total_dim(const DimVector& a);

// alpha + alpha^dual + theta.
DimVector bar_add(const SelfDualQuiver& q, const DimVector& alpha, const DimVector& theta);

bool is_valid_selfdual_class(const SelfDualQuiver& q, const DimVector& theta);
void require_selfdual_class(const SelfDualQuiver& q, const DimVector& theta);

// Prefix predicate: called after each part is appended, with the parts so
// far and their running sum; returning false prunes every extension (and the
// tuple itself).
using PrefixPredicate =
    std::function<bool(const std::vector<DimVector>& parts, const DimVector& prefix_sum)>;

// Every ordered tuple (alpha_1,...,alpha_n), n >= 1, of nonzero vectors
// summing to alpha. The emit callback returns false to stop early.
void enumerate_ordered_decompositions(const DimVector& alpha, const PrefixPredicate& prefix_ok,
                                      const std::function<bool(const std::vector<DimVector>&)>& emit);

// Every tuple ((alpha_1,...,alpha_n), rho), n >= 0, of nonzero vectors with
// sum_i (alpha_i + alpha_i^dual) + rho = theta and rho a valid self-dual
// class. The predicate sees alpha-prefixes (not barred sums).
void enumerate_sd_decompositions(
    const SelfDualQuiver& q, const DimVector& theta, const PrefixPredicate& prefix_ok,
    const std::function<bool(const std::vector<DimVector>&, const DimVector&)>& emit);

// Materialized, deterministically ordered: lexicographic in (n, parts).
std::vector<std::vector<DimVector>> collect_ordered_decompositions(const DimVector& alpha);
std::vector<std::pair<std::vector<DimVector>, DimVector>> collect_sd_decompositions(
    const SelfDualQuiver& q, const DimVector& theta);

// All nonzero dimension vectors with total dimension <= bound.
std::vector<DimVector> classes_up_to(int num_vertices, long long bound);

// All valid nonzero self-dual classes with total dimension <= bound.
std::vector<DimVector> sd_classes_up_to(const SelfDualQuiver& q, long long bound);

std::string class_to_string(const DimVector& a);
DimVector class_from_string(const std::string& text, int num_vertices);

}  // namespace sdq
