#include "zx/simplify.hpp"

#include <algorithm>

namespace zx {

namespace {

/// Degree-0 spiders are bare scalars (1 + e^{i a}); an H vertex wired to
/// itself traces to zero. Folding them keeps the rewrite rules free of
/// rank-0 corner cases.
bool absorb_bare_scalars(Diagram& d, std::vector<TraceStep>* trace) {
    for (const auto& [id, v]: d.vertices()) {
        if (is_spider(v.kind) && d.degree(id) == 0) {
            Scalar delta = Scalar::one_plus_exp(v.phase);
            d.multiply_scalar(delta);
            d.remove_vertex(id);
            if (trace) {
                trace->push_back({"ScalarAbsorb", {id}, delta});
            }
            return true;
        }
        if (v.kind == VertexKind::H && d.self_loops(id) == 1) {
            d.multiply_scalar(Scalar::zero());
            d.remove_vertex(id);
            if (trace) {
                trace->push_back({"ScalarAbsorb", {id}, Scalar::zero()});
            }
            return true;
        }
    }
    return false;
}

/// PiCommute variant safe for exhaustive application: the commuted pi
/// immediately meets a same-color spider (or disappears into a pendant),
/// so a fusion follows and the diagram keeps shrinking.
std::vector<Match> guarded_pi_commute(const Diagram& d) {
    std::vector<Match> out;
    for (const Match& m: find_matches(d, RuleId::PiCommute)) {
        VertexId s = m.verts[1];
        const int others = d.degree(s) - 1;
        if (others == 0) {
            out.push_back(m);
            continue;
        }
        if (others != 1) {
            continue;
        }
        auto legs = [&] {
            std::vector<VertexId> ends;
            for (const auto& [e, mult]: d.edges()) {
                if (e.first == e.second) {
                    continue;
                }
                VertexId other;
                if (e.first == s) {
                    other = e.second;
                } else if (e.second == s) {
                    other = e.first;
                } else {
                    continue;
                }
                if (other != m.verts[0]) {
                    for (int k = 0; k < mult; ++k) {
                        ends.push_back(other);
                    }
                }
            }
            return ends;
        }();
        if (legs.size() == 1 && d.vertex(legs[0]).kind == d.vertex(m.verts[0]).kind) {
            out.push_back(m);
        }
    }
    return out;
}

} // namespace

Diagram simplify(const Diagram& d, Strategy strategy, std::vector<TraceStep>* trace) {
    Diagram g = d;
    const RuleId basic_order[] = {
        RuleId::SpiderFuse, RuleId::IdentityRemove, RuleId::SelfLoop,
        RuleId::HLoop,      RuleId::HHCancel,       RuleId::Hopf,
        RuleId::UnitCopy,   RuleId::StateCopy,      RuleId::PiCommute,
    };
    for (;;) {
        if (absorb_bare_scalars(g, trace)) {
            continue;
        }
        bool applied = false;
        for (RuleId rule: basic_order) {
            std::vector<Match> ms = rule == RuleId::PiCommute ? guarded_pi_commute(g)
                                                              : find_matches(g, rule);
            if (!ms.empty()) {
                Scalar delta = apply_in_place(g, ms.front());
                if (trace) {
                    trace->push_back({rule_name(rule), ms.front().verts, delta});
                }
                applied = true;
                break;
            }
        }
        if (applied) {
            continue;
        }
        if (strategy == Strategy::Full) {
            auto ms = find_matches(g, RuleId::ColorChange);
            if (!ms.empty()) {
                Scalar delta = apply_in_place(g, ms.front());
                if (trace) {
                    trace->push_back({rule_name(RuleId::ColorChange), ms.front().verts, delta});
                }
                continue;
            }
        }
        break;
    }
    return g;
}

} // namespace zx
