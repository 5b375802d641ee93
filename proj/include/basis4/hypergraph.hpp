#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "basis4/completion.hpp"

namespace basis4 {

/// Orthogonality hypergraph with a partial vector labeling. Contexts
/// are fixed at size 4 (four-dimensional scope); labeled vertices carry
/// nonzero vectors. Real-field documents must not use imaginary
/// literals; storage is Gaussian-rational either way.
struct Hypergraph {
    struct Vertex {
        std::string id;
        std::optional<Vec4<GaussianRational>> vector;
    };

    FieldTag field = FieldTag::complex;
    std::vector<Vertex> vertices;
    std::vector<std::array<std::string, 4>> contexts;
    std::unordered_map<std::string, std::size_t> index;  // id -> position

    const Vertex& at(const std::string& id) const { return vertices[index.at(id)]; }
    Vertex& at(const std::string& id) { return vertices[index.at(id)]; }
    bool fully_labeled() const {
        for (const auto& v : vertices)
            if (!v.vector) return false;
        return true;
    }
    void rebuild_index();
};

/// Parses the JSON exchange format:
/// {"field": "real"|"complex",
///  "vertices": [{"id": "...", "vector": "(...)"}, ...],
///  "contexts": [[id, id, id, id], ...]}
Hypergraph parse_hypergraph(const std::string& text);

/// Canonical serialization; parse(serialize(parse(x))) == parse(x).
std::string serialize_hypergraph(const Hypergraph& h);

/// Per-context analysis of an incomplete context: the Gramian of the
/// two known vectors determines the type of the plane the missing pair
/// must span, computed both by transfer and directly (the two must
/// agree), plus the decomposable locus of that plane.
struct ContextAnalysis {
    enum class Status { complete, pair, error };

    int index = -1;
    std::array<std::string, 4> vertex_ids{};
    std::vector<std::string> known_ids;
    std::vector<Vec4<GaussianRational>> known_vectors;
    std::vector<std::string> missing_ids;
    Status status = Status::error;
    std::string error;  // set when status == error
    std::optional<Vec4<GaussianRational>> forced_vector;  // three labeled: the unique 4th ray
    std::optional<Gramian2<GaussianRational>> known_gramian;  // exactly two labeled
    int gramian_rank = -1;
    std::optional<PlaneType> missing_plane_type;
    std::optional<DecomposableLocus<GaussianRational>> locus;
};

/// Contexts are analyzed independently; this entry point fans out over
/// them with OpenMP when available.
std::vector<ContextAnalysis> analyze_contexts(const Hypergraph& h);

/// Serial reference implementation; kept for testing and benchmarking
/// against the parallel path.
std::vector<ContextAnalysis> analyze_contexts_serial(const Hypergraph& h);

struct FaithfulnessReport {
    struct Violation {
        int context_index;
        std::string u;
        std::string v;
    };
    std::vector<Violation> orthogonality_violations;
    std::vector<std::pair<std::string, std::string>> multiplicities;  // proportional labels

    bool faithful() const {
        return orthogonality_violations.empty() && multiplicities.empty();
    }
};

/// Requires a fully labeled hypergraph: every intra-context pair must
/// be orthogonal and no two vertices may carry proportional vectors.
FaithfulnessReport check_faithfulness(const Hypergraph& h);

struct ContextRefusal {
    int context_index;
    Refusal refusal;
};

struct LabelingCompletion {
    Hypergraph completed;
    std::vector<ContextRefusal> refusals;
    std::vector<std::pair<int, std::string>> errors;  // per-context analysis errors
    std::optional<FaithfulnessReport> faithfulness;   // present when fully labeled
};

/// Fills every missing pair subject to the policy; refusals leave their
/// contexts unlabeled and are reported. Earlier completions feed later
/// contexts that share vertices.
LabelingCompletion complete_labeling(const Hypergraph& h, CompletionPolicy policy);

/// The 9-vertex, 3-context triangle labeled with decomposable tensor
/// products only: corners s(x)t, s(x)t^x, s^x(x)t; edge interiors
/// s^x(x)v, s^x(x)v^x | u(x)t^x, u^x(x)t^x | s^x(x)t^x, s(x)t. The last
/// label repeats the first corner, the representation's one forced
/// multiplicity. Requires {s,u}, {s^x,u}, {t,v}, {t^x,v} to be bases.
Hypergraph triangle_representation(const Vec2<GaussianRational>& s,
                                   const Vec2<GaussianRational>& t,
                                   const Vec2<GaussianRational>& u,
                                   const Vec2<GaussianRational>& v,
                                   FieldTag tag = FieldTag::complex);

/// Verifies, on a faithful fully labeled triangle with decomposable
/// edge labels, the forced chain: the corner planes are type (0,0), the
/// opposite corners match the derived ray pair s1(x)t1^x, s1^x(x)t1 of
/// the factorized top corner, and the remaining two labels are
/// indecomposable.
struct TriangleObstructionReport {
    struct Step {
        std::string name;
        bool pass;
        std::string detail;
    };

    bool preconditions_ok = false;
    std::string precondition_error;
    std::vector<Step> steps;

    bool all_pass() const {
        if (!preconditions_ok) return false;
        for (const auto& s : steps)
            if (!s.pass) return false;
        return true;
    }
};

TriangleObstructionReport triangle_obstruction_check(const Hypergraph& h);

// ---- JSON report rendering (stable key order) -----------------------------

std::string analyses_to_json(const Hypergraph& h, const std::vector<ContextAnalysis>& as);
std::string completion_to_json(CompletionPolicy policy, const LabelingCompletion& lc);
std::string faithfulness_to_json(const FaithfulnessReport& r);

}  // namespace basis4
