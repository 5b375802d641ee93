// Benchmark: serial vs OpenMP-parallel context analysis on a synthetic
// hypergraph of random exact orthogonal pairs.

#include <chrono>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "basis4/hypergraph.hpp"
#include "basis4/literal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace basis4;

namespace {

GaussianRational rand_gr(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-10, 10);
    std::uniform_int_distribution<int> den(1, 10);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

Vec4<GaussianRational> rand_vec(std::mt19937_64& rng) {
    return {rand_gr(rng), rand_gr(rng), rand_gr(rng), rand_gr(rng)};
}

Hypergraph synthetic(int contexts, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Hypergraph h;
    h.field = FieldTag::complex;
    for (int i = 0; i < contexts; ++i) {
        Vec4<GaussianRational> e1, e2;
        for (;;) {
            e1 = rand_vec(rng);
            if (is_zero(e1)) continue;
            Vec4<GaussianRational> x = rand_vec(rng);
            e2 = inner4(e1, e1) * x - inner4(e1, x) * e1;
            if (!is_zero(e2) && linearly_independent(e1, e2)) break;
        }
        std::string n = std::to_string(i);
        auto add = [&](const std::string& id,
                       std::optional<Vec4<GaussianRational>> vec) {
            h.index[id] = h.vertices.size();
            h.vertices.push_back({id, std::move(vec)});
        };
        add("a" + n, e1);
        add("b" + n, e2);
        add("c" + n, std::nullopt);
        add("d" + n, std::nullopt);
        h.contexts.push_back({"a" + n, "b" + n, "c" + n, "d" + n});
    }
    return h;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare serial and parallel hypergraph context analysis"};
    int contexts = 20000;
    int repeats = 3;
    std::uint64_t seed = 1;
    app.add_option("--contexts", contexts, "number of synthetic contexts");
    app.add_option("--repeats", repeats, "timing repetitions");
    app.add_option("--seed", seed, "generator seed");
    CLI11_PARSE(app, argc, argv);

    Hypergraph h = synthetic(contexts, seed);
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (OpenMP disabled)\n";
#endif
    std::cout << "contexts: " << contexts << "\n";

    double best_serial = 1e300;
    double best_parallel = 1e300;
    std::vector<ContextAnalysis> serial, parallel;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        serial = analyze_contexts_serial(h);
        best_serial = std::min(best_serial, ms_since(t0));

        t0 = std::chrono::steady_clock::now();
        parallel = analyze_contexts(h);
        best_parallel = std::min(best_parallel, ms_since(t0));
    }

    for (std::size_t i = 0; i < serial.size(); ++i) {
        if (serial[i].missing_plane_type != parallel[i].missing_plane_type ||
            serial[i].gramian_rank != parallel[i].gramian_rank) {
            std::cerr << "mismatch between serial and parallel results at context " << i
                      << "\n";
            return 1;
        }
    }

    std::cout << "serial:   " << best_serial << " ms\n";
    std::cout << "parallel: " << best_parallel << " ms\n";
    std::cout << "speedup:  " << best_serial / best_parallel << "x\n";
    return 0;
}
