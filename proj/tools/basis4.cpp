// basis4: classify planes of 4-dimensional Hilbert space by their
// decomposability structure, complete orthogonal contexts, and analyze
// partially coordinatized orthogonality hypergraphs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "basis4/hypergraph.hpp"
#include "basis4/literal.hpp"

using namespace basis4;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefusal = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string field = "complex";
    std::string mode = "exact";
    double eps = kDefaultEps;
    std::uint64_t seed = 0;
    std::string output = "human";

    FieldTag tag() const { return field == "real" ? FieldTag::real : FieldTag::complex; }
    bool json() const { return output == "json"; }
    bool float_mode() const { return mode == "float"; }
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--field", opt.field, "scalar field: real or complex")
        ->check(CLI::IsMember({"real", "complex"}));
    cmd->add_option("--mode", opt.mode, "arithmetic mode: exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--eps", opt.eps, "tolerance for float mode");
    cmd->add_option("--seed", opt.seed, "seed for sampling determinism");
    cmd->add_option("--output", opt.output, "output format: human or json")
        ->check(CLI::IsMember({"human", "json"}));
}

void emit(const Options& opt, const Json& doc, const std::string& human) {
    if (opt.json())
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human;
}

/// Runs fn<K>() for the scalar type selected by --field/--mode.
template <class F>
int dispatch(const Options& opt, F&& fn) {
    if (opt.float_mode()) return fn.template operator()<FloatScalar>();
    if (opt.tag() == FieldTag::real) return fn.template operator()<Rational>();
    return fn.template operator()<GaussianRational>();
}

template <Scalar K>
Vec4<K> vec4_arg(const Options& opt, const std::string& lit) {
    return parse_vec4<K>(lit, opt.eps);
}
template <Scalar K>
Vec2<K> vec2_arg(const Options& opt, const std::string& lit) {
    return parse_vec2<K>(lit, opt.eps);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw DomainError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <Scalar K>
Json locus_json(const DecomposableLocus<K>& locus) {
    Json j;
    j["kind"] = to_string(locus.kind);
    Json rays = Json::array();
    for (const auto& r : locus.rays) rays.push_back(format_vec(r));
    j["rays"] = rays;
    j["approximate"] = locus.approximate();
    if (locus.approximate()) {
        Json ar = Json::array();
        for (const auto& r : locus.approx_rays) ar.push_back(format_vec(r));
        j["approx_rays"] = ar;
        j["approx_residual"] = locus.approx_residual;
    }
    return j;
}

template <Scalar K>
std::string locus_human(const DecomposableLocus<K>& locus) {
    std::ostringstream out;
    out << "kind: " << to_string(locus.kind) << "\n";
    for (const auto& r : locus.rays) out << "ray: " << format_vec(r) << "\n";
    for (const auto& r : locus.approx_rays)
        out << "ray (approx): " << format_vec(r) << "\n";
    return out.str();
}

int run_classify(const Options& opt, const std::string& la, const std::string& lb) {
    return dispatch(opt, [&]<Scalar K>() {
        auto p = make_plane(vec4_arg<K>(opt, la), vec4_arg<K>(opt, lb), opt.tag());
        Classification c = classify_tagged(p);
        Json j;
        j["type"] = to_string(c.type);
        std::string human = std::string(to_string(c.type)) + "\n";
        if (opt.float_mode()) {
            j["tolerance_dependent"] = c.tolerance_dependent;
            if (c.tolerance_dependent) human += "tolerance-dependent\n";
        }
        emit(opt, j, human);
        return kExitOk;
    });
}

int run_locus(const Options& opt, const std::string& la, const std::string& lb) {
    return dispatch(opt, [&]<Scalar K>() {
        auto locus =
            decomposables_in_plane(vec4_arg<K>(opt, la), vec4_arg<K>(opt, lb), opt.tag());
        emit(opt, locus_json(locus), locus_human(locus));
        return kExitOk;
    });
}

int run_complement(const Options& opt, const std::string& l1, const std::string& l2) {
    return dispatch(opt, [&]<Scalar K>() {
        auto [a, b] = orthocomplement(vec4_arg<K>(opt, l1), vec4_arg<K>(opt, l2));
        Json j;
        j["a"] = format_vec(a);
        j["b"] = format_vec(b);
        emit(opt, j, "a: " + format_vec(a) + "\nb: " + format_vec(b) + "\n");
        return kExitOk;
    });
}

int run_complete(const Options& opt, const std::string& l1, const std::string& l2,
                 const std::string& policy_name) {
    auto policy = parse_policy(policy_name);
    if (!policy) throw DomainError("unknown policy: " + policy_name);
    return dispatch(opt, [&]<Scalar K>() {
        auto out = complete_context(vec4_arg<K>(opt, l1), vec4_arg<K>(opt, l2), *policy,
                                    opt.tag());
        Json j;
        j["policy"] = to_string(*policy);
        j["perp_type"] = to_string(out.perp_type);
        if (out.refusal) {
            j["refusal"] = Json{{"policy", to_string(out.refusal->policy)},
                                {"perp_type", to_string(out.refusal->perp_type)},
                                {"reason", out.refusal->reason}};
            std::ostringstream human;
            human << "refused: policy=" << to_string(out.refusal->policy)
                  << " perp_type=" << to_string(out.refusal->perp_type)
                  << " reason=" << out.refusal->reason << "\n";
            emit(opt, j, human.str());
            return kExitRefusal;
        }
        Json ctx = Json::array();
        std::ostringstream human;
        if (out.context) {
            j["mode"] = "exact";
            for (const auto& v : out.context->vectors) ctx.push_back(format_vec(v));
            for (const auto& v : out.context->vectors)
                human << format_vec(v) << "\n";
        } else {
            j["mode"] = "float";
            for (const auto& v : out.approx_context->vectors) ctx.push_back(format_vec(v));
            for (const auto& v : out.approx_context->vectors)
                human << format_vec(v) << "\n";
        }
        j["context"] = ctx;
        emit(opt, j, human.str());
        return kExitOk;
    });
}

int run_factorize(const Options& opt, const std::string& lz) {
    return dispatch(opt, [&]<Scalar K>() {
        auto f = factorize(vec4_arg<K>(opt, lz));
        Json j;
        j["left"] = format_vec(f.left);
        j["right"] = format_vec(f.right);
        j["scale"] = format_scalar(f.scale);
        emit(opt, j,
             "left: " + format_vec(f.left) + "\nright: " + format_vec(f.right) +
                 "\nscale: " + format_scalar(f.scale) + "\n");
        return kExitOk;
    });
}

int run_tensor(const Options& opt, const std::array<std::string, 4>& lits) {
    return dispatch(opt, [&]<Scalar K>() {
        auto [a, b] = tensor_complete(vec2_arg<K>(opt, lits[0]), vec2_arg<K>(opt, lits[1]),
                                      vec2_arg<K>(opt, lits[2]), vec2_arg<K>(opt, lits[3]));
        Json j;
        j["a"] = format_vec(a);
        j["b"] = format_vec(b);
        emit(opt, j, "a: " + format_vec(a) + "\nb: " + format_vec(b) + "\n");
        return kExitOk;
    });
}

int run_tetrahedron(const Options& opt, const std::array<std::string, 4>& lits) {
    return dispatch(opt, [&]<Scalar K>() {
        auto tetra =
            tetrahedron_planes(vec2_arg<K>(opt, lits[0]), vec2_arg<K>(opt, lits[1]),
                               vec2_arg<K>(opt, lits[2]), vec2_arg<K>(opt, lits[3]),
                               opt.tag());
        Json j;
        Json verts = Json::array();
        for (const auto& v : tetra.vertices) verts.push_back(format_vec(v));
        j["vertices"] = verts;
        Json planes = Json::array();
        std::ostringstream human;
        std::map<std::string, int> counts;
        for (const auto& p : tetra.planes) {
            planes.push_back(Json{{"i", p.i}, {"j", p.j}, {"type", to_string(p.type)}});
            human << "span{v" << p.i << ",v" << p.j << "}: " << to_string(p.type) << "\n";
            counts[to_string(p.type)]++;
        }
        j["planes"] = planes;
        Json jc;
        for (const auto& [k, n] : counts) jc[k] = n;
        j["counts"] = jc;
        emit(opt, j, human.str());
        return kExitOk;
    });
}

int run_steer(const Options& opt, const std::string& l1, const std::string& l2) {
    return dispatch(opt, [&]<Scalar K>() {
        Vec4<K> e1 = vec4_arg<K>(opt, l1);
        Vec4<K> e2 = vec4_arg<K>(opt, l2);
        SteeringReport rep = steering_report(e1, e2, opt.tag());
        Json j;
        j["source_type"] = to_string(rep.source_type);
        j["perp_type"] = to_string(rep.perp_type);
        j["guarantee"] = to_string(rep.guarantee);
        std::ostringstream human;
        human << "source: " << to_string(rep.source_type) << "\n"
              << "perp: " << to_string(rep.perp_type) << "\n"
              << "guarantee: " << to_string(rep.guarantee) << "\n";
        if (opt.float_mode()) {
            auto mc = steering_confirmation(e1, e2, 100, opt.seed, opt.eps, opt.tag());
            j["confirmation"] = Json{{"samples", mc.samples},
                                     {"decomposable", mc.decomposable},
                                     {"indecomposable", mc.indecomposable},
                                     {"consistent", mc.consistent}};
            human << "samples: " << mc.samples << " decomposable: " << mc.decomposable
                  << " indecomposable: " << mc.indecomposable
                  << " consistent: " << (mc.consistent ? "yes" : "no") << "\n";
        }
        emit(opt, j, human.str());
        return kExitOk;
    });
}

int run_verify(const Options& opt, const std::array<std::string, 4>& lits) {
    return dispatch(opt, [&]<Scalar K>() {
        Context<K> ctx{{vec4_arg<K>(opt, lits[0]), vec4_arg<K>(opt, lits[1]),
                        vec4_arg<K>(opt, lits[2]), vec4_arg<K>(opt, lits[3])}};
        auto rep = verify_context(ctx);
        Json j;
        j["pass"] = rep.pass;
        j["orthogonal"] = rep.orthogonal;
        Json fails = Json::array();
        for (auto [i, k] : rep.failures) fails.push_back(Json::array({i, k}));
        j["failures"] = fails;
        Json gram = Json::array();
        for (int r = 0; r < 4; ++r) {
            Json row = Json::array();
            for (int c = 0; c < 4; ++c) row.push_back(format_scalar(rep.gram[r][c]));
            gram.push_back(row);
        }
        j["gram"] = gram;
        std::ostringstream human;
        human << (rep.pass ? "pass" : "fail") << "\n";
        for (auto [i, k] : rep.failures)
            human << "non-orthogonal pair: " << i << "," << k << " <vi|vj> = "
                  << format_scalar(rep.gram[i][k]) << "\n";
        if (rep.det_magnitude) {
            j["det_magnitude"] = *rep.det_magnitude;
            j["quarter_trace"] = *rep.quarter_trace;
            human << "det magnitude: " << format_double(*rep.det_magnitude) << "\n"
                  << "quarter trace: " << format_double(*rep.quarter_trace) << "\n";
        }
        emit(opt, j, human.str());
        return rep.pass ? kExitOk : kExitRefusal;
    });
}

std::string analyses_human(const std::vector<ContextAnalysis>& as) {
    std::ostringstream out;
    for (const auto& a : as) {
        out << "context " << a.index << " [";
        for (std::size_t k = 0; k < 4; ++k) out << (k ? "," : "") << a.vertex_ids[k];
        out << "]: ";
        switch (a.status) {
            case ContextAnalysis::Status::complete:
                out << "complete\n";
                break;
            case ContextAnalysis::Status::pair:
                out << "missing ";
                for (std::size_t k = 0; k < a.missing_ids.size(); ++k)
                    out << (k ? "," : "") << a.missing_ids[k];
                out << "; gramian rank " << a.gramian_rank << "; missing plane type "
                    << to_string(*a.missing_plane_type) << "; locus "
                    << to_string(a.locus->kind) << "\n";
                break;
            case ContextAnalysis::Status::error:
                out << "error: " << a.error;
                if (a.forced_vector) out << "; forced " << format_vec(*a.forced_vector);
                out << "\n";
                break;
        }
    }
    return out.str();
}

int run_hypergraph_analyze(const Options& opt, const std::string& path) {
    Hypergraph h = parse_hypergraph(read_file(path));
    auto as = analyze_contexts(h);
    if (opt.json())
        std::cout << analyses_to_json(h, as);
    else
        std::cout << analyses_human(as);
    return kExitOk;
}

int run_hypergraph_complete(const Options& opt, const std::string& path,
                            const std::string& policy_name) {
    auto policy = parse_policy(policy_name);
    if (!policy) throw DomainError("unknown policy: " + policy_name);
    Hypergraph h = parse_hypergraph(read_file(path));
    auto lc = complete_labeling(h, *policy);
    if (opt.json()) {
        std::cout << completion_to_json(*policy, lc);
    } else {
        std::ostringstream out;
        for (const auto& r : lc.refusals)
            out << "refused context " << r.context_index << ": perp_type="
                << to_string(r.refusal.perp_type) << " reason=" << r.refusal.reason
                << "\n";
        for (const auto& [idx, msg] : lc.errors)
            out << "error context " << idx << ": " << msg << "\n";
        if (lc.faithfulness)
            out << "faithful: " << (lc.faithfulness->faithful() ? "yes" : "no") << "\n";
        out << serialize_hypergraph(lc.completed);
        std::cout << out.str();
    }
    return lc.refusals.empty() && lc.errors.empty() ? kExitOk : kExitRefusal;
}

int run_hypergraph_check(const Options& opt, const std::string& path) {
    Hypergraph h = parse_hypergraph(read_file(path));
    auto rep = check_faithfulness(h);
    if (opt.json()) {
        std::cout << faithfulness_to_json(rep);
    } else {
        std::ostringstream out;
        out << (rep.faithful() ? "faithful" : "unfaithful") << "\n";
        for (const auto& v : rep.orthogonality_violations)
            out << "non-orthogonal pair " << v.u << "," << v.v << " in context "
                << v.context_index << "\n";
        for (const auto& [u, v] : rep.multiplicities)
            out << "multiplicity: " << u << "," << v << "\n";
        std::cout << out.str();
    }
    return rep.faithful() ? kExitOk : kExitRefusal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification and completion of planes in 4-dimensional "
                 "Hilbert space"};
    app.require_subcommand(1);
    Options opt;

    std::string lit_a, lit_b, lit_z, policy = "any", file;
    std::array<std::string, 4> lits;

    auto* classify_cmd = app.add_subcommand("classify", "plane type of span{a,b}");
    classify_cmd->add_option("a", lit_a)->required();
    classify_cmd->add_option("b", lit_b)->required();
    add_common(classify_cmd, opt);

    auto* locus_cmd = app.add_subcommand("locus", "decomposable rays inside span{a,b}");
    locus_cmd->add_option("a", lit_a)->required();
    locus_cmd->add_option("b", lit_b)->required();
    add_common(locus_cmd, opt);

    auto* compl_cmd = app.add_subcommand("complement", "orthogonal basis of span{e1,e2}^perp");
    compl_cmd->add_option("e1", lit_a)->required();
    compl_cmd->add_option("e2", lit_b)->required();
    add_common(compl_cmd, opt);

    auto* complete_cmd =
        app.add_subcommand("complete", "complete {e1,e2} to a context under a policy");
    complete_cmd->add_option("e1", lit_a)->required();
    complete_cmd->add_option("e2", lit_b)->required();
    complete_cmd->add_option("--policy", policy,
                             "any | decomposable | indecomposable | mixed");
    add_common(complete_cmd, opt);

    auto* fact_cmd = app.add_subcommand("factorize", "tensor factors of a decomposable vector");
    fact_cmd->add_option("z", lit_z)->required();
    add_common(fact_cmd, opt);

    auto* tensor_cmd = app.add_subcommand(
        "tensor", "decomposable orthocomplement pair of span{s(x)t, u(x)v}");
    tensor_cmd->add_option("s", lits[0])->required();
    tensor_cmd->add_option("t", lits[1])->required();
    tensor_cmd->add_option("u", lits[2])->required();
    tensor_cmd->add_option("v", lits[3])->required();
    add_common(tensor_cmd, opt);

    auto* tetra_cmd = app.add_subcommand(
        "tetrahedron", "six planes spanned by the crossed tensor basis");
    tetra_cmd->add_option("s", lits[0])->required();
    tetra_cmd->add_option("t", lits[1])->required();
    tetra_cmd->add_option("u", lits[2])->required();
    tetra_cmd->add_option("v", lits[3])->required();
    add_common(tetra_cmd, opt);

    auto* steer_cmd = app.add_subcommand("steer", "steering report for span{e1,e2}");
    steer_cmd->add_option("e1", lit_a)->required();
    steer_cmd->add_option("e2", lit_b)->required();
    add_common(steer_cmd, opt);

    auto* verify_cmd = app.add_subcommand("verify", "verify a 4-vector context");
    verify_cmd->add_option("v1", lits[0])->required();
    verify_cmd->add_option("v2", lits[1])->required();
    verify_cmd->add_option("v3", lits[2])->required();
    verify_cmd->add_option("v4", lits[3])->required();
    add_common(verify_cmd, opt);

    auto* hyper_cmd = app.add_subcommand("hypergraph", "orthogonality hypergraph tools");
    hyper_cmd->require_subcommand(1);
    auto* hyper_analyze = hyper_cmd->add_subcommand("analyze", "per-context analysis");
    hyper_analyze->add_option("file", file)->required();
    add_common(hyper_analyze, opt);
    auto* hyper_complete =
        hyper_cmd->add_subcommand("complete", "complete the labeling under a policy");
    hyper_complete->add_option("file", file)->required();
    hyper_complete->add_option("--policy", policy,
                               "any | decomposable | indecomposable | mixed");
    add_common(hyper_complete, opt);
    auto* hyper_check = hyper_cmd->add_subcommand("check", "faithfulness check");
    hyper_check->add_option("file", file)->required();
    add_common(hyper_check, opt);

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("BASIS4_OUTPUT")) {
        std::string v = env;
        if (v == "human" || v == "json") opt.output = v;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(opt, lit_a, lit_b);
        if (locus_cmd->parsed()) return run_locus(opt, lit_a, lit_b);
        if (compl_cmd->parsed()) return run_complement(opt, lit_a, lit_b);
        if (complete_cmd->parsed()) return run_complete(opt, lit_a, lit_b, policy);
        if (fact_cmd->parsed()) return run_factorize(opt, lit_z);
        if (tensor_cmd->parsed()) return run_tensor(opt, lits);
        if (tetra_cmd->parsed()) return run_tetrahedron(opt, lits);
        if (steer_cmd->parsed()) return run_steer(opt, lit_a, lit_b);
        if (verify_cmd->parsed()) return run_verify(opt, lits);
        if (hyper_analyze->parsed()) return run_hypergraph_analyze(opt, file);
        if (hyper_complete->parsed()) return run_hypergraph_complete(opt, file, policy);
        if (hyper_check->parsed()) return run_hypergraph_check(opt, file);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NotDecomposableError& e) {
        std::cerr << "input error: " << e.what() << " (residual " << e.residual << ")\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
