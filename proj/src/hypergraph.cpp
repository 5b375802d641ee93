#include "basis4/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "basis4/literal.hpp"

namespace basis4 {

using Json = nlohmann::ordered_json;
using GR = GaussianRational;
using V4 = Vec4<GR>;

void Hypergraph::rebuild_index() {
    index.clear();
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i].id] = i;
}

Hypergraph parse_hypergraph(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) throw ParseError("hypergraph document must be a JSON object", 0);

    Hypergraph h;
    if (!doc.contains("field") || !doc["field"].is_string())
        throw ParseError("missing string key \"field\"", 0);
    std::string field = doc["field"].get<std::string>();
    if (field == "real")
        h.field = FieldTag::real;
    else if (field == "complex")
        h.field = FieldTag::complex;
    else
        throw ParseError("\"field\" must be \"real\" or \"complex\"", 0);

    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("missing array key \"vertices\"", 0);
    std::size_t vi = 0;
    for (const auto& jv : doc["vertices"]) {
        std::string where = "vertices[" + std::to_string(vi) + "]";
        if (!jv.is_object() || !jv.contains("id") || !jv["id"].is_string())
            throw ParseError(where + " needs a string \"id\"", 0);
        Hypergraph::Vertex v;
        v.id = jv["id"].get<std::string>();
        if (v.id.empty()) throw ParseError(where + ": empty vertex id", 0);
        if (h.index.count(v.id))
            throw ParseError(where + ": duplicate vertex id \"" + v.id + "\"", 0);
        if (jv.contains("vector")) {
            if (!jv["vector"].is_string())
                throw ParseError(where + ".vector must be a string literal", 0);
            std::string lit = jv["vector"].get<std::string>();
            V4 vec;
            try {
                vec = parse_vec4<GR>(lit);
            } catch (const ParseError& e) {
                throw ParseError(where + ".vector: " + e.what(), e.position);
            }
            if (h.field == FieldTag::real)
                for (int k = 0; k < 4; ++k)
                    if (!vec[k].im.is_zero())
                        throw ParseError(where + ".vector: imaginary component in a real-field document", 0);
            if (is_zero(vec))
                throw ParseError(where + ".vector: labeled vertices need nonzero vectors", 0);
            v.vector = vec;
        }
        h.index[v.id] = h.vertices.size();
        h.vertices.push_back(std::move(v));
        ++vi;
    }

    if (!doc.contains("contexts") || !doc["contexts"].is_array())
        throw ParseError("missing array key \"contexts\"", 0);
    std::size_t ci = 0;
    for (const auto& jc : doc["contexts"]) {
        std::string where = "contexts[" + std::to_string(ci) + "]";
        if (!jc.is_array() || jc.size() != 4)
            throw ParseError(where + " must list exactly 4 vertex ids", 0);
        std::array<std::string, 4> ctx;
        std::set<std::string> seen;
        for (int k = 0; k < 4; ++k) {
            if (!jc[k].is_string()) throw ParseError(where + " entries must be strings", 0);
            ctx[k] = jc[k].get<std::string>();
            if (!h.index.count(ctx[k]))
                throw ParseError(where + ": unknown vertex \"" + ctx[k] + "\"", 0);
            if (!seen.insert(ctx[k]).second)
                throw ParseError(where + ": duplicate vertex \"" + ctx[k] + "\" in context", 0);
        }
        h.contexts.push_back(ctx);
        ++ci;
    }
    return h;
}

std::string serialize_hypergraph(const Hypergraph& h) {
    Json doc;
    doc["field"] = to_string(h.field);
    doc["vertices"] = Json::array();
    for (const auto& v : h.vertices) {
        Json jv;
        jv["id"] = v.id;
        if (v.vector) jv["vector"] = format_vec(*v.vector);
        doc["vertices"].push_back(jv);
    }
    doc["contexts"] = Json::array();
    for (const auto& c : h.contexts) doc["contexts"].push_back(c);
    return doc.dump(2) + "\n";
}

namespace {

ContextAnalysis analyze_one(const Hypergraph& h, int idx) {
    ContextAnalysis a;
    a.index = idx;
    a.vertex_ids = h.contexts[idx];
    for (const auto& id : a.vertex_ids) {
        const auto& vx = h.at(id);
        if (vx.vector) {
            a.known_ids.push_back(id);
            a.known_vectors.push_back(*vx.vector);
        } else {
            a.missing_ids.push_back(id);
        }
    }
    const std::size_t n = a.known_ids.size();
    if (n == 4) {
        a.status = ContextAnalysis::Status::complete;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (!is_zero(inner4(a.known_vectors[i], a.known_vectors[j]))) {
                    a.status = ContextAnalysis::Status::error;
                    a.error = "labeled context is not orthogonal (" + a.known_ids[i] +
                              "," + a.known_ids[j] + ")";
                    return a;
                }
        return a;
    }
    if (n == 2) {
        if (!is_zero(inner4(a.known_vectors[0], a.known_vectors[1]))) {
            a.error = "the two labeled vectors are not orthogonal";
            return a;
        }
        a.known_gramian = gramian(a.known_vectors[0], a.known_vectors[1]);
        a.gramian_rank = a.known_gramian->rank();
        Plane<GR> span = make_plane(a.known_vectors[0], a.known_vectors[1], h.field);
        PlaneType via_transfer = transfer_type(classify(tilde_plane(span)), h.field);
        auto [pa, pb] = orthocomplement(a.known_vectors[0], a.known_vectors[1]);
        PlaneType direct = classify(pa, pb, h.field);
        if (via_transfer != direct)
            throw std::logic_error("transfer rule disagrees with direct classification");
        a.missing_plane_type = direct;
        a.locus = decomposables_in_plane(pa, pb, h.field);
        a.status = ContextAnalysis::Status::pair;
        return a;
    }
    if (n == 3) {
        a.error = "context has 3 labeled vertices; the 4th ray is forced";
        auto ns = null_space<GR>({conj(a.known_vectors[0]), conj(a.known_vectors[1]),
                                  conj(a.known_vectors[2])});
        if (ns.size() == 1)
            a.forced_vector = ns[0];
        else
            a.error += " (labeled vectors are dependent; no unique ray)";
        return a;
    }
    a.error = "context has " + std::to_string(n) +
              " labeled vertices; analysis needs exactly 2";
    return a;
}

}  // namespace

std::vector<ContextAnalysis> analyze_contexts_serial(const Hypergraph& h) {
    std::vector<ContextAnalysis> out(h.contexts.size());
    for (std::size_t i = 0; i < h.contexts.size(); ++i)
        out[i] = analyze_one(h, static_cast<int>(i));
    return out;
}

std::vector<ContextAnalysis> analyze_contexts(const Hypergraph& h) {
    std::vector<ContextAnalysis> out(h.contexts.size());
    std::exception_ptr pending = nullptr;
    const auto count = static_cast<std::ptrdiff_t>(h.contexts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            out[i] = analyze_one(h, static_cast<int>(i));
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!pending) pending = std::current_exception();
        }
    }
    if (pending) std::rethrow_exception(pending);
    return out;
}

FaithfulnessReport check_faithfulness(const Hypergraph& h) {
    for (const auto& v : h.vertices)
        if (!v.vector) throw DomainError("vertex \"" + v.id + "\" is unlabeled");
    FaithfulnessReport rep;
    for (std::size_t c = 0; c < h.contexts.size(); ++c) {
        const auto& ctx = h.contexts[c];
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!is_zero(inner4(*h.at(ctx[i]).vector, *h.at(ctx[j]).vector)))
                    rep.orthogonality_violations.push_back(
                        {static_cast<int>(c), ctx[i], ctx[j]});
    }
    for (std::size_t i = 0; i < h.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < h.vertices.size(); ++j)
            if (proportional(*h.vertices[i].vector, *h.vertices[j].vector))
                rep.multiplicities.emplace_back(h.vertices[i].id, h.vertices[j].id);
    return rep;
}

LabelingCompletion complete_labeling(const Hypergraph& h, CompletionPolicy policy) {
    LabelingCompletion out;
    out.completed = h;
    std::vector<bool> done(h.contexts.size(), false);

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < h.contexts.size(); ++i) {
            if (done[i]) continue;
            std::vector<std::string> missing;
            std::vector<V4> known;
            for (const auto& id : out.completed.contexts[i]) {
                const auto& vx = out.completed.at(id);
                if (vx.vector)
                    known.push_back(*vx.vector);
                else
                    missing.push_back(id);
            }
            if (missing.empty()) {
                done[i] = true;
                progress = true;
                continue;
            }
            if (known.size() == 2) {
                done[i] = true;
                progress = true;
                try {
                    auto res = complete_context(known[0], known[1], policy, h.field);
                    if (res.context) {
                        out.completed.at(missing[0]).vector = res.context->vectors[2];
                        out.completed.at(missing[1]).vector = res.context->vectors[3];
                    } else if (res.approx_context) {
                        out.refusals.push_back(
                            {static_cast<int>(i),
                             Refusal{policy, res.perp_type,
                                     "completion exists only at float precision; exact "
                                     "labeling refused"}});
                    } else {
                        out.refusals.push_back({static_cast<int>(i), *res.refusal});
                    }
                } catch (const DomainError& e) {
                    out.errors.emplace_back(static_cast<int>(i), e.what());
                }
            } else if (known.size() == 3) {
                done[i] = true;
                progress = true;
                auto ns = null_space<GR>({conj(known[0]), conj(known[1]), conj(known[2])});
                if (ns.size() != 1) {
                    out.errors.emplace_back(static_cast<int>(i),
                                            "three labeled vectors are dependent");
                    continue;
                }
                bool ok = true;
                std::string why;
                if (policy == CompletionPolicy::decomposable_pair && !is_decomposable(ns[0])) {
                    ok = false;
                    why = "forced fourth ray is indecomposable";
                } else if (policy == CompletionPolicy::indecomposable_pair &&
                           is_decomposable(ns[0])) {
                    ok = false;
                    why = "forced fourth ray is decomposable";
                }
                if (ok)
                    out.completed.at(missing[0]).vector = ns[0];
                else
                    out.errors.emplace_back(static_cast<int>(i), why);
            }
        }
    }
    for (std::size_t i = 0; i < h.contexts.size(); ++i)
        if (!done[i])
            out.errors.emplace_back(static_cast<int>(i),
                                    "context never reached 2 labeled vertices");
    if (out.completed.fully_labeled())
        out.faithfulness = check_faithfulness(out.completed);
    return out;
}

// ---- triangle ---------------------------------------------------------------

Hypergraph triangle_representation(const Vec2<GR>& s, const Vec2<GR>& t,
                                   const Vec2<GR>& u, const Vec2<GR>& v, FieldTag tag) {
    if (tag == FieldTag::real)
        for (const auto* w : {&s, &t, &u, &v})
            if (!(*w)[0].im.is_zero() || !(*w)[1].im.is_zero())
                throw DomainError("real-field triangle needs real input vectors");
    if (is_zero(det2(s, u))) throw DomainError("det(s,u) vanishes: {s,u} is not a basis");
    if (is_zero(det2(cross(s), u)))
        throw DomainError("det(s^x,u) vanishes: {s^x,u} is not a basis");
    if (is_zero(det2(t, v))) throw DomainError("det(t,v) vanishes: {t,v} is not a basis");
    if (is_zero(det2(cross(t), v)))
        throw DomainError("det(t^x,v) vanishes: {t^x,v} is not a basis");

    Hypergraph h;
    h.field = tag;
    auto add = [&](const std::string& id, const V4& vec) {
        h.index[id] = h.vertices.size();
        h.vertices.push_back({id, vec});
    };
    add("b1", tensor2(s, t));
    add("b2", tensor2(cross(s), v));
    add("b3", tensor2(cross(s), cross(v)));
    add("b4", tensor2(s, cross(t)));
    add("b5", tensor2(u, cross(t)));
    add("b6", tensor2(cross(u), cross(t)));
    add("b7", tensor2(cross(s), t));
    add("b8", tensor2(cross(s), cross(t)));
    add("b9", tensor2(s, t));  // the representation's one multiplicity
    h.contexts.push_back({"b1", "b2", "b3", "b4"});
    h.contexts.push_back({"b1", "b5", "b6", "b7"});
    h.contexts.push_back({"b4", "b8", "b9", "b7"});
    return h;
}

TriangleObstructionReport triangle_obstruction_check(const Hypergraph& h) {
    TriangleObstructionReport rep;
    auto fail_pre = [&](std::string msg) {
        rep.precondition_error = std::move(msg);
        return rep;
    };
    if (h.contexts.size() != 3) return fail_pre("triangle needs exactly 3 contexts");
    if (h.vertices.size() != 9) return fail_pre("triangle needs exactly 9 vertices");
    if (!h.fully_labeled()) return fail_pre("triangle must be fully labeled");

    std::unordered_map<std::string, std::vector<int>> occurrences;
    for (int c = 0; c < 3; ++c)
        for (const auto& id : h.contexts[c]) occurrences[id].push_back(c);
    std::array<std::string, 3> corner_of_pair;  // index = 3 - i - j for contexts i < j
    std::array<int, 3> pair_count{0, 0, 0};
    for (const auto& [id, occ] : occurrences) {
        if (occ.size() == 2) {
            int slot = 3 - occ[0] - occ[1];
            corner_of_pair[slot] = id;
            ++pair_count[slot];
        } else if (occ.size() != 1) {
            return fail_pre("vertex \"" + id + "\" appears in " +
                            std::to_string(occ.size()) + " contexts");
        }
    }
    if (pair_count != std::array<int, 3>{1, 1, 1})
        return fail_pre("each pair of contexts must share exactly one corner vertex");

    FaithfulnessReport faith = check_faithfulness(h);
    if (!faith.faithful()) {
        std::string detail = "representation is not faithful";
        if (!faith.multiplicities.empty())
            detail += " (multiplicity " + faith.multiplicities[0].first + "," +
                      faith.multiplicities[0].second + ")";
        if (!faith.orthogonality_violations.empty())
            detail += " (non-orthogonal pair " + faith.orthogonality_violations[0].u + "," +
                      faith.orthogonality_violations[0].v + ")";
        return fail_pre(detail);
    }

    auto vec = [&](const std::string& id) -> const V4& { return *h.at(id).vector; };
    auto interiors_decomposable = [&](int c) {
        for (const auto& id : h.contexts[c])
            if (occurrences[id].size() == 1 && !is_decomposable(vec(id))) return false;
        return true;
    };
    std::vector<int> decomposable_edges;
    for (int c = 0; c < 3; ++c)
        if (interiors_decomposable(c)) decomposable_edges.push_back(c);
    if (decomposable_edges.size() < 2)
        return fail_pre("interior labels of two edges must be decomposable");
    if (decomposable_edges.size() == 3)
        return fail_pre("all interior labels decomposable; no candidate for the free edge");

    int green = 3 - decomposable_edges[0] - decomposable_edges[1];
    const std::string& b1 = corner_of_pair[green];  // shared by the two decomposable edges
    std::vector<std::string> green_corners;
    std::vector<std::string> green_interior;
    for (const auto& id : h.contexts[green]) {
        if (occurrences[id].size() == 2)
            green_corners.push_back(id);
        else
            green_interior.push_back(id);
    }
    rep.preconditions_ok = true;

    auto add_step = [&](std::string name, bool pass, std::string detail = "") {
        rep.steps.push_back({std::move(name), pass, std::move(detail)});
    };

    bool corners_dec = is_decomposable(vec(b1)) && is_decomposable(vec(green_corners[0])) &&
                       is_decomposable(vec(green_corners[1]));
    add_step("corner labels decomposable", corners_dec);

    bool planes_00 = true;
    for (const auto& corner : green_corners) {
        Plane<GR> span = make_plane(vec(b1), vec(corner), h.field);
        auto [pa, pb] = orthocomplement(vec(b1), vec(corner));
        planes_00 = planes_00 && classify(span) == PlaneType::zero_zero &&
                    classify(pa, pb, h.field) == PlaneType::zero_zero;
    }
    add_step("corner planes and their complements are type (0,0)", planes_00);

    bool rays_match = false;
    std::string ray_detail;
    try {
        Factorization<GR> f = factorize(vec(b1));
        V4 p = tensor2(f.left, cross(f.right));
        V4 q = tensor2(cross(f.left), f.right);
        const V4& c1 = vec(green_corners[0]);
        const V4& c2 = vec(green_corners[1]);
        rays_match = (proportional(c1, p) && proportional(c2, q)) ||
                     (proportional(c1, q) && proportional(c2, p));
    } catch (const DomainError& e) {
        ray_detail = e.what();
    }
    add_step("free-edge corners match the derived ray pair", rays_match, ray_detail);

    bool indec = !is_decomposable(vec(green_interior[0])) &&
                 !is_decomposable(vec(green_interior[1]));
    add_step("free-edge interior labels indecomposable", indec);
    return rep;
}

// ---- JSON reports -----------------------------------------------------------

namespace {

Json locus_to_json(const DecomposableLocus<GR>& locus) {
    Json j;
    j["kind"] = to_string(locus.kind);
    j["approximate"] = locus.approximate();
    Json rays = Json::array();
    for (const auto& r : locus.rays) rays.push_back(format_vec(r));
    j["rays"] = rays;
    if (locus.approximate()) {
        Json approx = Json::array();
        for (const auto& r : locus.approx_rays) approx.push_back(format_vec(r));
        j["approx_rays"] = approx;
        j["approx_residual"] = locus.approx_residual;
    }
    return j;
}

const char* to_string(ContextAnalysis::Status s) {
    switch (s) {
        case ContextAnalysis::Status::complete: return "complete";
        case ContextAnalysis::Status::pair: return "pair";
        case ContextAnalysis::Status::error: return "error";
    }
    return "?";
}

}  // namespace

std::string analyses_to_json(const Hypergraph& h, const std::vector<ContextAnalysis>& as) {
    Json doc;
    doc["field"] = to_string(h.field);
    doc["contexts"] = Json::array();
    for (const auto& a : as) {
        Json j;
        j["index"] = a.index;
        j["vertices"] = a.vertex_ids;
        Json known = Json::array();
        for (std::size_t i = 0; i < a.known_ids.size(); ++i) {
            known.push_back(Json{{"id", a.known_ids[i]}, {"vector", format_vec(a.known_vectors[i])}});
        }
        j["known"] = known;
        j["missing"] = a.missing_ids;
        j["status"] = to_string(a.status);
        if (!a.error.empty()) j["error"] = a.error;
        if (a.forced_vector) j["forced_vector"] = format_vec(*a.forced_vector);
        if (a.known_gramian) {
            const auto& g = *a.known_gramian;
            j["known_gramian"] = Json::array(
                {Json::array({format_scalar(g.g11), format_scalar(g.g12)}),
                 Json::array({format_scalar(g.g12), format_scalar(g.g22)})});
            j["gramian_rank"] = a.gramian_rank;
        }
        if (a.missing_plane_type) j["missing_plane_type"] = to_string(*a.missing_plane_type);
        if (a.locus) j["locus"] = locus_to_json(*a.locus);
        doc["contexts"].push_back(j);
    }
    return doc.dump(2) + "\n";
}

std::string completion_to_json(CompletionPolicy policy, const LabelingCompletion& lc) {
    Json doc;
    doc["policy"] = to_string(policy);
    doc["refusals"] = Json::array();
    for (const auto& r : lc.refusals) {
        doc["refusals"].push_back(Json{{"context", r.context_index},
                                       {"policy", to_string(r.refusal.policy)},
                                       {"perp_type", to_string(r.refusal.perp_type)},
                                       {"reason", r.refusal.reason}});
    }
    doc["errors"] = Json::array();
    for (const auto& [idx, msg] : lc.errors)
        doc["errors"].push_back(Json{{"context", idx}, {"message", msg}});
    doc["fully_labeled"] = lc.completed.fully_labeled();
    if (lc.faithfulness) doc["faithful"] = lc.faithfulness->faithful();
    doc["hypergraph"] = Json::parse(serialize_hypergraph(lc.completed));
    return doc.dump(2) + "\n";
}

std::string faithfulness_to_json(const FaithfulnessReport& r) {
    Json doc;
    doc["faithful"] = r.faithful();
    doc["orthogonality_violations"] = Json::array();
    for (const auto& v : r.orthogonality_violations)
        doc["orthogonality_violations"].push_back(
            Json{{"context", v.context_index}, {"pair", Json::array({v.u, v.v})}});
    doc["multiplicities"] = Json::array();
    for (const auto& [u, v] : r.multiplicities)
        doc["multiplicities"].push_back(Json::array({u, v}));
    return doc.dump(2) + "\n";
}

}  // namespace basis4
