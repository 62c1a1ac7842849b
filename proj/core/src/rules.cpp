#include "zx/rules.hpp"

#include "zx/error.hpp"

#include <algorithm>

namespace zx {

std::string rule_name(RuleId rule) {
    switch (rule) {
        case RuleId::SpiderFuse: return "SpiderFuse";
        case RuleId::IdentityRemove: return "IdentityRemove";
        case RuleId::SelfLoop: return "SelfLoop";
        case RuleId::HLoop: return "HLoop";
        case RuleId::HHCancel: return "HHCancel";
        case RuleId::ColorChange: return "ColorChange";
        case RuleId::Hopf: return "Hopf";
        case RuleId::Bialgebra: return "Bialgebra";
        case RuleId::StateCopy: return "StateCopy";
        case RuleId::UnitCopy: return "UnitCopy";
        case RuleId::PiCommute: return "PiCommute";
        case RuleId::PiThroughH: return "PiThroughH";
    }
    return "?";
}

namespace {

bool spider_at(const Diagram& d, VertexId v) {
    return is_spider(d.vertex(v).kind);
}

bool plain_pendant(const Diagram& d, VertexId p) {
    return spider_at(d, p) && d.degree(p) == 1 && d.self_loops(p) == 0;
}

/// Edge instances incident to v, excluding those to `except`; self-loops
/// excluded. Each entry is one (other endpoint) per multiplicity.
std::vector<VertexId> leg_ends(const Diagram& d, VertexId v, VertexId except) {
    std::vector<VertexId> ends;
    for (const auto& [e, mult]: d.edges()) {
        if (e.first == e.second) {
            continue;
        }
        VertexId other;
        if (e.first == v) {
            other = e.second;
        } else if (e.second == v) {
            other = e.first;
        } else {
            continue;
        }
        if (other == except) {
            continue;
        }
        for (int m = 0; m < mult; ++m) {
            ends.push_back(other);
        }
    }
    return ends;
}

void copy_match(const Diagram& d, RuleId rule, std::vector<Match>& out) {
    // StateCopy and UnitCopy share the pattern; they differ in the number
    // of remaining legs of the copying spider.
    for (const auto& [p, vp]: d.vertices()) {
        if (!plain_pendant(d, p)) {
            continue;
        }
        if (!(vp.phase.is_zero() || vp.phase.is_pi())) {
            continue;
        }
        VertexId s = leg_ends(d, p, p).front();
        const Vertex& vs = d.vertex(s);
        if (!is_spider(vs.kind) || vs.kind == vp.kind) {
            continue;
        }
        if (d.self_loops(s) != 0) {
            continue;
        }
        int n = d.degree(s) - 1;
        bool unit = n == 1;
        if (unit == (rule == RuleId::UnitCopy)) {
            out.push_back({rule, {p, s}, d.revision()});
        }
    }
}

} // namespace

std::vector<Match> find_matches(const Diagram& d, RuleId rule) {
    std::vector<Match> out;
    switch (rule) {
        case RuleId::SpiderFuse:
            for (const auto& [e, mult]: d.edges()) {
                if (e.first == e.second) {
                    continue;
                }
                if (spider_at(d, e.first) && spider_at(d, e.second) &&
                    d.vertex(e.first).kind == d.vertex(e.second).kind) {
                    out.push_back({rule, {e.first, e.second}, d.revision()});
                }
            }
            break;
        case RuleId::IdentityRemove:
            for (const auto& [v, vert]: d.vertices()) {
                if (!is_spider(vert.kind) || !vert.phase.is_zero()) {
                    continue;
                }
                if (d.degree(v) != 2 || d.self_loops(v) != 0) {
                    continue;
                }
                auto ends = leg_ends(d, v, v);
                // a spider wired twice into one H vertex is HLoop territory
                if (ends[0] == ends[1] && d.vertex(ends[0]).kind == VertexKind::H) {
                    continue;
                }
                out.push_back({rule, {v}, d.revision()});
            }
            break;
        case RuleId::SelfLoop:
            for (const auto& [v, vert]: d.vertices()) {
                if (is_spider(vert.kind) && d.self_loops(v) > 0) {
                    out.push_back({rule, {v}, d.revision()});
                }
            }
            break;
        case RuleId::HLoop:
            for (const auto& [v, vert]: d.vertices()) {
                if (!is_spider(vert.kind)) {
                    continue;
                }
                for (VertexId h: d.neighbors(v)) {
                    if (d.vertex(h).kind == VertexKind::H && d.edge_multiplicity(v, h) == 2) {
                        out.push_back({rule, {v, h}, d.revision()});
                    }
                }
            }
            break;
        case RuleId::HHCancel:
            for (const auto& [e, mult]: d.edges()) {
                if (e.first != e.second && d.vertex(e.first).kind == VertexKind::H &&
                    d.vertex(e.second).kind == VertexKind::H) {
                    out.push_back({rule, {e.first, e.second}, d.revision()});
                }
            }
            break;
        case RuleId::ColorChange:
            for (const auto& [v, vert]: d.vertices()) {
                if (!is_spider(vert.kind) || d.self_loops(v) != 0 || d.degree(v) < 1) {
                    continue;
                }
                auto hs = d.neighbors(v);
                bool all_h = true;
                for (VertexId n: hs) {
                    if (d.vertex(n).kind != VertexKind::H || d.edge_multiplicity(v, n) != 1) {
                        all_h = false;
                        break;
                    }
                    // an H whose far end is another leg of v hides a
                    // self-loop; HHCancel untangles those first
                    VertexId far = leg_ends(d, n, v).front();
                    if (std::find(hs.begin(), hs.end(), far) != hs.end()) {
                        all_h = false;
                        break;
                    }
                }
                if (all_h) {
                    out.push_back({rule, {v}, d.revision()});
                }
            }
            break;
        case RuleId::Hopf:
            for (const auto& [e, mult]: d.edges()) {
                if (e.first == e.second || mult < 2) {
                    continue;
                }
                const Vertex& a = d.vertex(e.first);
                const Vertex& b = d.vertex(e.second);
                if (is_spider(a.kind) && is_spider(b.kind) && a.kind != b.kind) {
                    VertexId z = a.kind == VertexKind::Z ? e.first : e.second;
                    VertexId x = a.kind == VertexKind::Z ? e.second : e.first;
                    out.push_back({rule, {z, x}, d.revision()});
                }
            }
            break;
        case RuleId::Bialgebra: {
            std::vector<VertexId> zs;
            std::vector<VertexId> xs;
            for (const auto& [v, vert]: d.vertices()) {
                if (is_spider(vert.kind) && vert.phase.is_zero() && d.degree(v) == 3 &&
                    d.self_loops(v) == 0) {
                    (vert.kind == VertexKind::Z ? zs : xs).push_back(v);
                }
            }
            for (std::size_t i = 0; i < zs.size(); ++i) {
                for (std::size_t j = i + 1; j < zs.size(); ++j) {
                    if (d.edge_multiplicity(zs[i], zs[j]) != 0) {
                        continue;
                    }
                    for (std::size_t k = 0; k < xs.size(); ++k) {
                        for (std::size_t l = k + 1; l < xs.size(); ++l) {
                            if (d.edge_multiplicity(xs[k], xs[l]) != 0) {
                                continue;
                            }
                            if (d.edge_multiplicity(zs[i], xs[k]) == 1 &&
                                d.edge_multiplicity(zs[i], xs[l]) == 1 &&
                                d.edge_multiplicity(zs[j], xs[k]) == 1 &&
                                d.edge_multiplicity(zs[j], xs[l]) == 1) {
                                out.push_back(
                                    {rule, {zs[i], zs[j], xs[k], xs[l]}, d.revision()});
                            }
                        }
                    }
                }
            }
            break;
        }
        case RuleId::StateCopy:
        case RuleId::UnitCopy:
            copy_match(d, rule, out);
            break;
        case RuleId::PiCommute:
            for (const auto& [v, vert]: d.vertices()) {
                if (!is_spider(vert.kind) || !vert.phase.is_pi()) {
                    continue;
                }
                if (d.degree(v) != 2 || d.self_loops(v) != 0) {
                    continue;
                }
                for (VertexId s: d.neighbors(v)) {
                    const Vertex& vs = d.vertex(s);
                    if (!is_spider(vs.kind) || vs.kind == vert.kind) {
                        continue;
                    }
                    if (d.edge_multiplicity(v, s) != 1 || d.self_loops(s) != 0) {
                        continue;
                    }
                    out.push_back({rule, {v, s}, d.revision()});
                }
            }
            break;
        case RuleId::PiThroughH:
            for (const auto& [v, vert]: d.vertices()) {
                if (!is_spider(vert.kind) || !vert.phase.is_pi()) {
                    continue;
                }
                if (d.degree(v) != 2 || d.self_loops(v) != 0) {
                    continue;
                }
                for (VertexId h: d.neighbors(v)) {
                    if (d.vertex(h).kind == VertexKind::H && d.edge_multiplicity(v, h) == 1) {
                        out.push_back({rule, {v, h}, d.revision()});
                    }
                }
            }
            break;
    }
    std::sort(out.begin(), out.end(),
              [](const Match& a, const Match& b) { return a.verts < b.verts; });
    return out;
}

namespace {

void require(bool cond, const char* what) {
    if (!cond) {
        throw StaleMatchError(std::string("match no longer applies: ") + what);
    }
}

Scalar apply_spider_fuse(Diagram& d, VertexId a, VertexId b) {
    require(d.has_vertex(a) && d.has_vertex(b), "vertex gone");
    int k = d.edge_multiplicity(a, b);
    require(k >= 1 && d.vertex(a).kind == d.vertex(b).kind, "spider pair changed");
    d.add_phase(a, d.vertex(b).phase);
    d.remove_edge(a, b, k);
    if (k > 1) {
        d.add_edge(a, a, k - 1);
    }
    for (const auto& [w, mult]: [&] {
             std::vector<std::pair<VertexId, int>> moved;
             for (const auto& [e, mult]: d.edges()) {
                 if (e.first == b && e.second == b) {
                     moved.emplace_back(a, mult); // b's self-loops move to a
                 } else if (e.first == b) {
                     moved.emplace_back(e.second, mult);
                 } else if (e.second == b) {
                     moved.emplace_back(e.first, mult);
                 }
             }
             return moved;
         }()) {
        d.add_edge(a, w, mult);
    }
    d.remove_vertex(b);
    return Scalar::one();
}

Scalar apply_identity_remove(Diagram& d, VertexId v) {
    require(d.has_vertex(v), "vertex gone");
    require(d.degree(v) == 2 && d.self_loops(v) == 0 && d.vertex(v).phase.is_zero(),
            "not an identity spider");
    auto ends = leg_ends(d, v, v);
    d.remove_vertex(v);
    d.add_edge(ends[0], ends[1]);
    return Scalar::one();
}

Scalar apply_self_loop(Diagram& d, VertexId v) {
    require(d.has_vertex(v) && d.self_loops(v) > 0, "no self-loop");
    d.remove_edge(v, v, 1);
    return Scalar::one();
}

Scalar apply_h_loop(Diagram& d, VertexId s, VertexId h) {
    require(d.has_vertex(s) && d.has_vertex(h), "vertex gone");
    require(d.edge_multiplicity(s, h) == 2 && d.vertex(h).kind == VertexKind::H,
            "no loop through H");
    d.remove_vertex(h);
    d.add_phase(s, Phase::pi());
    Scalar delta = Scalar::sqrt2_pow(-1);
    d.multiply_scalar(delta);
    return delta;
}

Scalar apply_hh_cancel(Diagram& d, VertexId h1, VertexId h2) {
    require(d.has_vertex(h1) && d.has_vertex(h2), "vertex gone");
    int k = d.edge_multiplicity(h1, h2);
    require(k >= 1, "H pair not adjacent");
    if (k == 2) {
        // closed pair: tr(H H) = 2
        d.remove_vertex(h1);
        d.remove_vertex(h2);
        Scalar delta = Scalar::sqrt2_pow(2);
        d.multiply_scalar(delta);
        return delta;
    }
    VertexId a = leg_ends(d, h1, h2).front();
    VertexId b = leg_ends(d, h2, h1).front();
    d.remove_vertex(h1);
    d.remove_vertex(h2);
    d.add_edge(a, b);
    return Scalar::one();
}

Scalar apply_color_change(Diagram& d, VertexId s) {
    require(d.has_vertex(s) && d.self_loops(s) == 0, "vertex changed");
    auto hs = d.neighbors(s);
    std::vector<VertexId> far;
    for (VertexId h: hs) {
        require(d.vertex(h).kind == VertexKind::H && d.edge_multiplicity(s, h) == 1,
                "legs not all H");
        VertexId w = leg_ends(d, h, s).front();
        require(std::find(hs.begin(), hs.end(), w) == hs.end(), "H chain loops back");
        far.push_back(w);
    }
    for (VertexId h: hs) {
        d.remove_vertex(h);
    }
    for (VertexId w: far) {
        d.add_edge(s, w);
    }
    d.set_kind(s, flip_color(d.vertex(s).kind));
    return Scalar::one();
}

Scalar apply_hopf(Diagram& d, VertexId z, VertexId x) {
    require(d.has_vertex(z) && d.has_vertex(x), "vertex gone");
    require(d.edge_multiplicity(z, x) >= 2, "parallel pair gone");
    require(d.vertex(z).kind != d.vertex(x).kind, "colors equal");
    d.remove_edge(z, x, 2);
    Scalar delta = Scalar::sqrt2_pow(-2);
    d.multiply_scalar(delta);
    return delta;
}

Scalar apply_bialgebra(Diagram& d, VertexId za, VertexId zb, VertexId xc, VertexId xd) {
    for (VertexId v: {za, zb, xc, xd}) {
        require(d.has_vertex(v) && d.degree(v) == 3 && d.self_loops(v) == 0 &&
                    d.vertex(v).phase.is_zero(),
                "square changed");
    }
    require(d.edge_multiplicity(za, xc) == 1 && d.edge_multiplicity(za, xd) == 1 &&
                d.edge_multiplicity(zb, xc) == 1 && d.edge_multiplicity(zb, xd) == 1,
            "square edges gone");
    const VertexKind zk = d.vertex(za).kind;
    const VertexKind xk = d.vertex(xc).kind;
    // the new fan-in spider takes over the old comultiplication side's
    // outer legs, and vice versa
    VertexId fan_in = d.add_spider(xk, Phase());
    VertexId fan_out = d.add_spider(zk, Phase());
    std::vector<std::pair<VertexId, VertexId>> moved;
    auto collect = [&](VertexId old, VertexId nv, std::vector<VertexId> internal) {
        for (VertexId other: leg_ends(d, old, old)) {
            if (std::find(internal.begin(), internal.end(), other) == internal.end()) {
                moved.emplace_back(nv, other);
            }
        }
    };
    collect(za, fan_in, {xc, xd});
    collect(zb, fan_in, {xc, xd});
    collect(xc, fan_out, {za, zb});
    collect(xd, fan_out, {za, zb});
    for (VertexId v: {za, zb, xc, xd}) {
        d.remove_vertex(v);
    }
    for (auto [nv, other]: moved) {
        d.add_edge(nv, other);
    }
    d.add_edge(fan_in, fan_out);
    Scalar delta = Scalar::sqrt2_pow(-1);
    d.multiply_scalar(delta);
    return delta;
}

Scalar apply_copy(Diagram& d, VertexId p, VertexId s) {
    require(d.has_vertex(p) && d.has_vertex(s), "vertex gone");
    require(plain_pendant(d, p) && d.edge_multiplicity(p, s) == 1, "pendant changed");
    const Vertex pendant = d.vertex(p);
    const Vertex spider = d.vertex(s);
    require(is_spider(spider.kind) && spider.kind != pendant.kind && d.self_loops(s) == 0,
            "spider changed");
    require(pendant.phase.is_zero() || pendant.phase.is_pi(), "pendant not classical");
    auto legs = leg_ends(d, s, p);
    const int n = static_cast<int>(legs.size());
    d.remove_vertex(p);
    d.remove_vertex(s);
    for (VertexId w: legs) {
        VertexId nv = d.add_spider(pendant.kind, pendant.phase);
        d.add_edge(nv, w);
    }
    Scalar delta = Scalar::sqrt2_pow(1 - n);
    if (pendant.phase.is_pi()) {
        delta *= Scalar::from_phase(spider.phase);
    }
    d.multiply_scalar(delta);
    return delta;
}

Scalar apply_pi_commute(Diagram& d, VertexId v, VertexId s) {
    require(d.has_vertex(v) && d.has_vertex(s), "vertex gone");
    require(d.degree(v) == 2 && d.self_loops(v) == 0 && d.vertex(v).phase.is_pi(),
            "pi spider changed");
    require(d.edge_multiplicity(v, s) == 1 && d.self_loops(s) == 0, "link changed");
    const Vertex pi = d.vertex(v);
    const Vertex spider = d.vertex(s);
    require(is_spider(spider.kind) && spider.kind != pi.kind, "colors changed");
    VertexId w = leg_ends(d, v, s).front();
    auto other_legs = leg_ends(d, s, v);
    d.remove_vertex(v);
    d.add_edge(w, s);
    for (VertexId u: other_legs) {
        d.remove_edge(s, u, 1);
        VertexId nv = d.add_spider(pi.kind, Phase::pi());
        d.add_edge(s, nv);
        d.add_edge(nv, u);
    }
    d.set_phase(s, -spider.phase);
    Scalar delta = Scalar::from_phase(spider.phase);
    d.multiply_scalar(delta);
    return delta;
}

Scalar apply_pi_through_h(Diagram& d, VertexId v, VertexId h) {
    require(d.has_vertex(v) && d.has_vertex(h), "vertex gone");
    require(d.degree(v) == 2 && d.self_loops(v) == 0 && d.vertex(v).phase.is_pi(),
            "pi spider changed");
    require(d.vertex(h).kind == VertexKind::H && d.edge_multiplicity(v, h) == 1,
            "H link changed");
    VertexId w = leg_ends(d, v, h).front();
    VertexId u = leg_ends(d, h, v).front();
    d.remove_edge(v, w, 1);
    d.remove_edge(h, u, 1);
    d.add_edge(h, w);
    d.add_edge(v, u);
    d.set_kind(v, flip_color(d.vertex(v).kind));
    return Scalar::one();
}

} // namespace

Scalar apply_in_place(Diagram& d, const Match& m) {
    if (m.revision != d.revision()) {
        throw StaleMatchError("diagram changed since the match was found");
    }
    switch (m.rule) {
        case RuleId::SpiderFuse: return apply_spider_fuse(d, m.verts[0], m.verts[1]);
        case RuleId::IdentityRemove: return apply_identity_remove(d, m.verts[0]);
        case RuleId::SelfLoop: return apply_self_loop(d, m.verts[0]);
        case RuleId::HLoop: return apply_h_loop(d, m.verts[0], m.verts[1]);
        case RuleId::HHCancel: return apply_hh_cancel(d, m.verts[0], m.verts[1]);
        case RuleId::ColorChange: return apply_color_change(d, m.verts[0]);
        case RuleId::Hopf: return apply_hopf(d, m.verts[0], m.verts[1]);
        case RuleId::Bialgebra:
            return apply_bialgebra(d, m.verts[0], m.verts[1], m.verts[2], m.verts[3]);
        case RuleId::StateCopy:
        case RuleId::UnitCopy: return apply_copy(d, m.verts[0], m.verts[1]);
        case RuleId::PiCommute: return apply_pi_commute(d, m.verts[0], m.verts[1]);
        case RuleId::PiThroughH: return apply_pi_through_h(d, m.verts[0], m.verts[1]);
    }
    throw ZXError("unknown rule");
}

Diagram apply(const Diagram& d, const Match& m) {
    Diagram out = d;
    // copying preserves the revision counter, so the staleness check holds
    apply_in_place(out, m);
    return out;
}

} // namespace zx
