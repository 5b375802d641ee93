#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "basis4/hypergraph.hpp"
#include "basis4/literal.hpp"
#include "support.hpp"

using namespace basis4;
using testsupport::Rng;

namespace {

using GR = GaussianRational;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string hardy_path() {
    return std::string(TEST_SOURCE_DIR) + "/../data/hardy.json";
}

Vec2<GR> g2(const char* lit) { return parse_vec2<GR>(lit); }

}  // namespace

TEST_CASE("parsing the Hardy fixture") {
    Hypergraph h = parse_hypergraph(read_file(hardy_path()));
    CHECK(h.field == FieldTag::complex);
    CHECK(h.vertices.size() == 21);
    CHECK(h.contexts.size() == 8);
    int labeled = 0;
    for (const auto& v : h.vertices) labeled += v.vector.has_value();
    CHECK(labeled == 9);
    int incomplete = 0;
    for (const auto& ctx : h.contexts) {
        int missing = 0;
        for (const auto& id : ctx) missing += !h.at(id).vector.has_value();
        incomplete += missing > 0;
    }
    CHECK(incomplete == 6);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_hypergraph("not json"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph(R"json({"vertices": [], "contexts": []})json"), ParseError);
    CHECK_THROWS_AS(
        parse_hypergraph(
            R"json({"field": "real", "vertices": [{"id": "a", "vector": "(i,0,0,0)"}], "contexts": []})json"),
        ParseError);
    CHECK_THROWS_AS(
        parse_hypergraph(
            R"json({"field": "complex", "vertices": [{"id": "a", "vector": "(0,0,0,0)"}], "contexts": []})json"),
        ParseError);
    CHECK_THROWS_AS(
        parse_hypergraph(
            R"json({"field": "complex", "vertices": [{"id": "a"}], "contexts": [["a","a","a","a"]]})json"),
        ParseError);
    CHECK_THROWS_AS(
        parse_hypergraph(
            R"json({"field": "complex", "vertices": [{"id": "a"}], "contexts": [["a","b","c","d"]]})json"),
        ParseError);
    CHECK_THROWS_AS(
        parse_hypergraph(
            R"json({"field": "complex", "vertices": [{"id": "a"},{"id": "b"},{"id": "c"}], "contexts": [["a","b","c"]]})json"),
        ParseError);
    // trivial empty hypergraph is fine
    Hypergraph h = parse_hypergraph(R"json({"field": "real", "vertices": [], "contexts": []})json");
    CHECK(h.contexts.empty());
}

TEST_CASE("parse-serialize-parse is the identity on the canonical form") {
    Hypergraph h1 = parse_hypergraph(read_file(hardy_path()));
    std::string canon = serialize_hypergraph(h1);
    Hypergraph h2 = parse_hypergraph(canon);
    CHECK(serialize_hypergraph(h2) == canon);
    CHECK(h2.vertices.size() == h1.vertices.size());
    CHECK(h2.contexts == h1.contexts);
}

TEST_CASE("Hardy context analysis") {
    Hypergraph h = parse_hypergraph(read_file(hardy_path()));
    auto as = analyze_contexts(h);
    REQUIRE(as.size() == 8);

    // the quoted context: Gramian proportional to
    // (1/4) ((2-2i, -3+9i), (-3+9i, -36+20i)), exact factor 2
    const auto& a0 = as[0];
    CHECK(a0.status == ContextAnalysis::Status::pair);
    REQUIRE(a0.known_gramian.has_value());
    GR quarter(Rational(1, 4));
    GR factor(2);
    CHECK(a0.known_gramian->g11 == factor * quarter * GR(2, Rational(-2)));
    CHECK(a0.known_gramian->g12 == factor * quarter * GR(Rational(-3), 9));
    CHECK(a0.known_gramian->g22 == factor * quarter * GR(Rational(-36), 20));
    CHECK(a0.gramian_rank == 2);
    CHECK(a0.missing_plane_type == PlaneType::one_one);
    CHECK(a0.missing_ids == std::vector<std::string>{"2", "3"});

    int pairs = 0;
    for (const auto& a : as) {
        if (a.status != ContextAnalysis::Status::pair) {
            CHECK(a.status == ContextAnalysis::Status::complete);
            continue;
        }
        ++pairs;
        CHECK(a.gramian_rank == 2);
        CHECK(a.missing_plane_type == PlaneType::one_one);
        REQUIRE(a.locus.has_value());
        CHECK(a.locus->kind == LocusKind::two_rays);
    }
    CHECK(pairs == 6);
}

TEST_CASE("parallel analysis equals the serial reference") {
    Hypergraph h = parse_hypergraph(read_file(hardy_path()));
    auto par = analyze_contexts(h);
    auto ser = analyze_contexts_serial(h);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].status == ser[i].status);
        CHECK(par[i].missing_plane_type == ser[i].missing_plane_type);
        CHECK(par[i].gramian_rank == ser[i].gramian_rank);
        CHECK(par[i].known_gramian.has_value() == ser[i].known_gramian.has_value());
        if (par[i].known_gramian)
            CHECK(*par[i].known_gramian == *ser[i].known_gramian);
    }
}

TEST_CASE("analysis error entries") {
    // 3 labeled vertices: the fourth ray is forced and reported
    std::string text = R"json({"field": "real",
      "vertices": [
        {"id": "a", "vector": "(1,0,0,0)"},
        {"id": "b", "vector": "(0,1,0,0)"},
        {"id": "c", "vector": "(0,0,1,0)"},
        {"id": "d"}],
      "contexts": [["a","b","c","d"]]})json";
    auto as = analyze_contexts(parse_hypergraph(text));
    REQUIRE(as.size() == 1);
    CHECK(as[0].status == ContextAnalysis::Status::error);
    REQUIRE(as[0].forced_vector.has_value());
    CHECK(proportional(*as[0].forced_vector,
                       Vec4<GR>(GR(0), GR(0), GR(0), GR(1))));

    // 1 labeled vertex: error without a forced ray
    std::string one = R"json({"field": "real",
      "vertices": [{"id": "a", "vector": "(1,0,0,0)"}, {"id": "b"}, {"id": "c"}, {"id": "d"}],
      "contexts": [["a","b","c","d"]]})json";
    auto as1 = analyze_contexts(parse_hypergraph(one));
    CHECK(as1[0].status == ContextAnalysis::Status::error);
    CHECK(!as1[0].forced_vector.has_value());

    // non-orthogonal labeled pair violates the analysis precondition
    std::string bad = R"json({"field": "real",
      "vertices": [{"id": "a", "vector": "(1,0,0,0)"}, {"id": "b", "vector": "(1,1,0,0)"}, {"id": "c"}, {"id": "d"}],
      "contexts": [["a","b","c","d"]]})json";
    auto as2 = analyze_contexts(parse_hypergraph(bad));
    CHECK(as2[0].status == ContextAnalysis::Status::error);
}

TEST_CASE("known pair type agrees with the transferred tilde type on the fixture") {
    // the invariant is asserted inside analyze_contexts; this re-checks
    // it externally on all six incomplete Hardy contexts
    Hypergraph h = parse_hypergraph(read_file(hardy_path()));
    for (const auto& a : analyze_contexts(h)) {
        if (a.status != ContextAnalysis::Status::pair) continue;
        auto span = make_plane(a.known_vectors[0], a.known_vectors[1], h.field);
        auto [pa, pb] = orthocomplement(a.known_vectors[0], a.known_vectors[1]);
        CHECK(transfer_type(classify(tilde_plane(span)), h.field) ==
              classify(pa, pb, h.field));
    }
}

TEST_CASE("Hardy completion: indecomposable everywhere") {
    Hypergraph h = parse_hypergraph(read_file(hardy_path()));
    auto lc = complete_labeling(h, CompletionPolicy::indecomposable_pair);
    CHECK(lc.refusals.empty());
    CHECK(lc.errors.empty());
    CHECK(lc.completed.fully_labeled());
    for (const auto& v : lc.completed.vertices) {
        if (h.at(v.id).vector) continue;  // originally labeled
        CHECK(!is_decomposable(*v.vector));
    }
    REQUIRE(lc.faithfulness.has_value());
    CHECK(lc.faithfulness->faithful());
}

TEST_CASE("Hardy completion: decomposable pairs are refused per context") {
    Hypergraph h = parse_hypergraph(read_file(hardy_path()));
    auto lc = complete_labeling(h, CompletionPolicy::decomposable_pair);
    // every incomplete context has a (1,1) missing plane whose two rays
    // are either non-orthogonal or irrational; each context must refuse
    // or produce two exact orthogonal decomposable labels
    int handled = 0;
    for (const auto& r : lc.refusals) {
        CHECK(r.refusal.perp_type == PlaneType::one_one);
        ++handled;
    }
    for (const auto& v : lc.completed.vertices)
        if (!h.at(v.id).vector && v.vector) CHECK(is_decomposable(*v.vector));
    CHECK(handled == 6);  // none of the six admits an exact orthogonal ray pair
}

TEST_CASE("completion on a decomposable-friendly fixture") {
    std::string text = R"json({"field": "real",
      "vertices": [
        {"id": "a", "vector": "(1,0,0,0)"},
        {"id": "b", "vector": "(0,1,0,0)"},
        {"id": "c"}, {"id": "d"}],
      "contexts": [["a","b","c","d"]]})json";
    auto as = analyze_contexts(parse_hypergraph(text));
    REQUIRE(as.size() == 1);
    CHECK(as[0].missing_plane_type == PlaneType::zero_zero);
    CHECK(as[0].locus->kind == LocusKind::all);
    auto lc = complete_labeling(parse_hypergraph(text), CompletionPolicy::decomposable_pair);
    CHECK(lc.refusals.empty());
    REQUIRE(lc.completed.fully_labeled());
    CHECK(same_span<GR>({*lc.completed.at("c").vector, *lc.completed.at("d").vector},
                        {Vec4<GR>(GR(0), GR(0), GR(1), GR(0)),
                         Vec4<GR>(GR(0), GR(0), GR(0), GR(1))}));
    CHECK(lc.faithfulness->faithful());

    auto refused = complete_labeling(parse_hypergraph(text),
                                     CompletionPolicy::indecomposable_pair);
    REQUIRE(refused.refusals.size() == 1);
    CHECK(refused.refusals[0].refusal.perp_type == PlaneType::zero_zero);
}

TEST_CASE("completion threads shared vertices between contexts") {
    // second context starts with one label and picks two up from the first
    std::string text = R"json({"field": "real",
      "vertices": [
        {"id": "a", "vector": "(1,0,0,0)"},
        {"id": "b", "vector": "(0,1,0,0)"},
        {"id": "c"}, {"id": "d"},
        {"id": "e", "vector": "(1,0,0,0)"}],
      "contexts": [["a","b","c","d"], ["e","b","c","d"]]})json";
    // a and e carry the same vector, so the second context is consistent
    auto lc = complete_labeling(parse_hypergraph(text), CompletionPolicy::any);
    CHECK(lc.completed.fully_labeled());
    CHECK(lc.errors.empty());
    // faithfulness reports the a/e multiplicity
    REQUIRE(lc.faithfulness.has_value());
    CHECK(!lc.faithfulness->faithful());
    REQUIRE(lc.faithfulness->multiplicities.size() == 1);
}

TEST_CASE("check_faithfulness flags bad labelings") {
    std::string text = R"json({"field": "real",
      "vertices": [
        {"id": "a", "vector": "(1,0,0,0)"},
        {"id": "b", "vector": "(1,1,0,0)"},
        {"id": "c", "vector": "(0,0,1,0)"},
        {"id": "d", "vector": "(0,0,0,1)"}],
      "contexts": [["a","b","c","d"]]})json";
    auto rep = check_faithfulness(parse_hypergraph(text));
    CHECK(!rep.faithful());
    REQUIRE(rep.orthogonality_violations.size() == 1);
    CHECK(rep.orthogonality_violations[0].u == "a");
    CHECK(rep.orthogonality_violations[0].v == "b");

    std::string unlabeled = R"json({"field": "real",
      "vertices": [{"id": "a"}], "contexts": []})json";
    CHECK_THROWS_AS(check_faithfulness(parse_hypergraph(unlabeled)), DomainError);
}

TEST_CASE("triangle representation") {
    auto s = g2("(1,1)");
    auto t = g2("(1,1)");
    auto u = g2("(1,2)");
    auto v = g2("(1,2)");
    Hypergraph h = triangle_representation(s, t, u, v);
    CHECK(h.vertices.size() == 9);
    CHECK(h.contexts.size() == 3);
    for (const auto& vx : h.vertices) CHECK(is_decomposable(*vx.vector));
    // intra-context orthogonality holds by construction
    auto rep = check_faithfulness(h);
    CHECK(rep.orthogonality_violations.empty());
    REQUIRE(rep.multiplicities.size() == 1);
    CHECK(rep.multiplicities[0] == std::pair<std::string, std::string>{"b1", "b9"});

    CHECK_THROWS_WITH_AS(
        triangle_representation(g2("(1,0)"), g2("(1,0)"), g2("(0,1)"), g2("(0,1)")),
        "det(s^x,u) vanishes: {s^x,u} is not a basis", DomainError);
}

namespace {

/// Faithful triangle: replace the free edge's interior labels with an
/// exact indecomposable orthogonal pair from the same plane.
Hypergraph faithful_triangle() {
    auto s = g2("(1,1)");
    auto t = g2("(1,1)");
    auto u = g2("(1,2)");
    auto v = g2("(1,2)");
    Hypergraph h = triangle_representation(s, t, u, v);
    Vec4<GR> w = *h.at("b8").vector;  // s^x (x) t^x
    Vec4<GR> z = *h.at("b9").vector;  // s (x) t
    REQUIRE(is_zero(inner4(w, z)));
    // sweep w + k z against its in-plane orthogonal partner
    for (int k = 1; k <= 5; ++k) {
        Vec4<GR> cand = w + GR(k) * z;
        Vec4<GR> partner = (conj(GR(k)) * inner4(z, z)) * w - inner4(w, w) * z;
        if (!is_decomposable(cand) && !is_decomposable(partner)) {
            h.at("b8").vector = cand;
            h.at("b9").vector = partner;
            return h;
        }
    }
    FAIL("no indecomposable pair found in the free-edge plane");
    return h;
}

}  // namespace

TEST_CASE("triangle obstruction check passes on the faithful fixture") {
    Hypergraph h = faithful_triangle();
    auto rep = triangle_obstruction_check(h);
    CHECK(rep.preconditions_ok);
    REQUIRE(rep.steps.size() == 4);
    for (const auto& step : rep.steps) CHECK_MESSAGE(step.pass, step.name);
    CHECK(rep.all_pass());
}

TEST_CASE("triangle obstruction check rejects the raw decomposable labeling") {
    auto s = g2("(1,1)");
    auto t = g2("(1,1)");
    auto u = g2("(1,2)");
    auto v = g2("(1,2)");
    auto rep = triangle_obstruction_check(triangle_representation(s, t, u, v));
    CHECK(!rep.preconditions_ok);
    CHECK(rep.precondition_error.find("not faithful") != std::string::npos);
}

TEST_CASE("triangle obstruction precondition failures") {
    Hypergraph h = faithful_triangle();

    Hypergraph two_contexts = h;
    two_contexts.contexts.pop_back();
    CHECK(!triangle_obstruction_check(two_contexts).preconditions_ok);

    Hypergraph unlabeled = h;
    unlabeled.at("b2").vector.reset();
    CHECK(!triangle_obstruction_check(unlabeled).preconditions_ok);

    // corrupt the topology: one context no longer shares a corner
    Hypergraph broken = h;
    broken.contexts[2] = {"b2", "b8", "b9", "b3"};
    CHECK(!triangle_obstruction_check(broken).preconditions_ok);

    // indecomposable interiors on two edges leave no candidate free edge
    Hypergraph wrong_edges = h;
    std::swap(wrong_edges.at("b2").vector, wrong_edges.at("b8").vector);
    auto rep = triangle_obstruction_check(wrong_edges);
    CHECK(!rep.preconditions_ok);
}

TEST_CASE("no faithful triangle with a decomposable free edge exists") {
    // bounded search: every decomposable vector of the free-edge plane is
    // proportional to one of its two rays, and either choice collides
    // with a corner label
    auto s = g2("(1,1)");
    auto t = g2("(1,1)");
    auto u = g2("(1,2)");
    auto v = g2("(1,2)");
    Hypergraph h = triangle_representation(s, t, u, v);
    Vec4<GR> w = *h.at("b8").vector;
    Vec4<GR> z = *h.at("b9").vector;
    int faithful_found = 0;
    auto try_labeling = [&](const Vec4<GR>& b8) {
        if (!is_decomposable(b8)) return;
        // in-plane orthogonal partner
        Vec4<GR> b9 = inner4(b8, b8) * ((proportional(b8, w)) ? z : w);
        b9 = b9 - inner4(b8, b9) * b8;  // not normalized; projective
        if (is_zero(b9)) return;
        Hypergraph trial = h;
        trial.at("b8").vector = b8;
        trial.at("b9").vector = b9;
        if (check_faithfulness(trial).faithful()) ++faithful_found;
    };
    for (int p = -4; p <= 4; ++p)
        for (int q = -4; q <= 4; ++q) {
            if (p == 0 && q == 0) continue;
            try_labeling(GR(p) * w + GR(q) * z);
        }
    CHECK(faithful_found == 0);
}
