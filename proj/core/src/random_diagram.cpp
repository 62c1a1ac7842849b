#include "zx/simplify.hpp"

#include "zx/evaluate.hpp"

#include <algorithm>

namespace zx {

Diagram random_diagram(std::uint64_t seed, const RandomDiagramOptions& opts) {
    // splitmix64: tiny, reproducible, and good enough for shapes
    std::uint64_t state = seed + 0x9e3779b97f4a7c15ULL;
    auto next = [&]() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    auto uniform = [&](std::uint64_t n) { return n == 0 ? 0 : next() % n; };
    auto coin = [&](int percent) { return static_cast<int>(uniform(100)) < percent; };
    auto rand_kind = [&] { return coin(50) ? VertexKind::Z : VertexKind::X; };
    auto rand_phase = [&] { return Phase(static_cast<std::int64_t>(uniform(8)), 4); };

    // at most 20 internal vertices, boundaries on top
    const std::size_t budget = 20;
    std::size_t internal = 0;

    Diagram g;
    const std::size_t n_in = uniform(opts.max_wires / 2 + 1);
    const std::size_t n_out = uniform(opts.max_wires - n_in + 1);
    const std::size_t n_spiders = 1 + uniform(opts.max_spiders);
    std::vector<VertexId> spiders;
    for (std::size_t i = 0; i < n_spiders; ++i) {
        spiders.push_back(g.add_spider(rand_kind(), rand_phase()));
        ++internal;
    }
    auto rand_spider = [&] { return spiders[uniform(spiders.size())]; };
    auto room_for = [&](std::size_t n) { return internal + n <= budget; };

    const std::size_t n_edges = uniform(2 * n_spiders + 2);
    for (std::size_t i = 0; i < n_edges; ++i) {
        VertexId a = rand_spider();
        VertexId b = coin(10) ? a : rand_spider();
        g.add_edge(a, b);
    }
    for (std::size_t i = 0; i < n_in; ++i) {
        VertexId b = g.add_vertex(VertexKind::Boundary);
        g.mutable_inputs().push_back(b);
        g.add_edge(b, rand_spider());
    }
    for (std::size_t i = 0; i < n_out; ++i) {
        VertexId b = g.add_vertex(VertexKind::Boundary);
        g.mutable_outputs().push_back(b);
        g.add_edge(b, rand_spider());
    }
    // splice H vertices into some spider-spider edges
    {
        std::vector<Diagram::Edge> candidates;
        for (const auto& [e, mult]: g.edges()) {
            if (e.first != e.second && is_spider(g.vertex(e.first).kind) &&
                is_spider(g.vertex(e.second).kind)) {
                candidates.push_back(e);
            }
        }
        for (const auto& e: candidates) {
            if (room_for(1) && coin(30)) {
                g.remove_edge(e.first, e.second, 1);
                VertexId h = g.add_h();
                ++internal;
                g.add_edge(e.first, h);
                g.add_edge(h, e.second);
            }
        }
    }
    if (opts.motifs) {
        if (room_for(2) && coin(40)) { // parallel pair between opposite colors
            VertexId z = g.add_spider(VertexKind::Z, rand_phase());
            VertexId x = g.add_spider(VertexKind::X, rand_phase());
            internal += 2;
            g.add_edge(z, x, 2);
            g.add_edge(z, rand_spider());
            g.add_edge(x, rand_spider());
        }
        if (room_for(2) && coin(40)) { // loop through H
            VertexId s = g.add_spider(rand_kind(), rand_phase());
            VertexId h = g.add_h();
            internal += 2;
            g.add_edge(s, h, 2);
            g.add_edge(s, rand_spider());
        }
        if (room_for(2) && coin(40)) { // H-H chain
            VertexId h1 = g.add_h();
            VertexId h2 = g.add_h();
            internal += 2;
            g.add_edge(h1, h2);
            g.add_edge(rand_spider(), h1);
            g.add_edge(h2, rand_spider());
        }
        if (room_for(2) && coin(50)) { // classical pendant on an opposite-color spider
            VertexKind k = rand_kind();
            VertexId s = g.add_spider(flip_color(k), rand_phase());
            VertexId p = g.add_spider(k, coin(50) ? Phase::pi() : Phase());
            internal += 2;
            g.add_edge(p, s);
            const std::size_t fan = 1 + uniform(3);
            for (std::size_t i = 0; i < fan; ++i) {
                g.add_edge(s, rand_spider());
            }
        }
        if (room_for(2) && coin(40)) { // pi spider on a wire into an opposite spider
            VertexKind k = rand_kind();
            VertexId s = g.add_spider(flip_color(k), rand_phase());
            VertexId v = g.add_spider(k, Phase::pi());
            internal += 2;
            g.add_edge(v, s);
            g.add_edge(v, rand_spider());
            const std::size_t fan = 1 + uniform(2);
            for (std::size_t i = 0; i < fan; ++i) {
                g.add_edge(s, rand_spider());
            }
        }
        if (room_for(4) && coin(35)) { // complete bipartite square with outer legs
            VertexId za = g.add_spider(VertexKind::Z, Phase());
            VertexId zb = g.add_spider(VertexKind::Z, Phase());
            VertexId xc = g.add_spider(VertexKind::X, Phase());
            VertexId xd = g.add_spider(VertexKind::X, Phase());
            internal += 4;
            for (VertexId z: {za, zb}) {
                for (VertexId x: {xc, xd}) {
                    g.add_edge(z, x);
                }
            }
            for (VertexId v: {za, zb, xc, xd}) {
                g.add_edge(v, rand_spider());
            }
        }
        if (room_for(2) && coin(30)) { // pi next to an H on a wire
            VertexId v = g.add_spider(rand_kind(), Phase::pi());
            VertexId h = g.add_h();
            internal += 2;
            g.add_edge(v, h);
            g.add_edge(v, rand_spider());
            g.add_edge(h, rand_spider());
        }
    }
    return g;
}

RuleSoundnessReport check_rule_sound(RuleId rule, int trials, std::uint64_t seed,
                                     double tol) {
    RuleSoundnessReport report;
    report.rule = rule;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
        Diagram g = random_diagram(s);
        auto matches = find_matches(g, rule);
        if (matches.empty()) {
            continue;
        }
        ++report.diagrams_with_matches;
        ComplexMatrix before = evaluate(g);
        const std::size_t cap = std::min<std::size_t>(matches.size(), 4);
        for (std::size_t i = 0; i < cap; ++i) {
            Diagram g2 = apply(g, matches[i]);
            ComplexMatrix after = evaluate(g2);
            auto cmp = equal_matrices(after, before, CompareMode::Exact, tol);
            ++report.applications;
            report.max_residual = std::max(report.max_residual, cmp.residual);
            if (!cmp.equal) {
                report.failures.push_back({s, i, cmp.residual});
            }
        }
    }
    return report;
}

} // namespace zx
