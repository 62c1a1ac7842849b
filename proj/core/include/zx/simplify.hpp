#pragma once

#include "zx/diagram.hpp"
#include "zx/rules.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zx {

enum class Strategy { Basic, Full };

struct TraceStep {
    std::string rule; // rule name, or "ScalarAbsorb" for bare-scalar vertices
    std::vector<VertexId> bindings;
    Scalar scalar_delta;
};

/// Exhaustively apply the shrinking rule set in fixed priority order
/// (SpiderFuse, IdentityRemove, SelfLoop, HLoop, HHCancel, Hopf, UnitCopy,
/// StateCopy, PiCommute) until no rule matches; Full additionally applies
/// ColorChange whenever it strictly reduces the H count. Deterministic,
/// terminating, and semantics-preserving including the tracked scalar.
///
/// PiCommute is auto-applied only in the guarded form that is guaranteed
/// to feed a spider fusion (the general rule stays available through
/// find_matches/apply).
Diagram simplify(const Diagram& d, Strategy strategy = Strategy::Basic,
                 std::vector<TraceStep>* trace = nullptr);

// --- random diagrams and rule soundness --------------------------------

struct RandomDiagramOptions {
    std::size_t max_wires = 6;      // inputs + outputs
    std::size_t max_spiders = 12;   // internal spiders before motifs
    bool motifs = true;             // seed rule-specific shapes
};

/// Seeded, validated random diagram with concrete phases on the pi/4 grid;
/// includes parallel edges, self-loops, H vertices and rule motifs.
Diagram random_diagram(std::uint64_t seed, const RandomDiagramOptions& opts = {});

struct RuleSoundnessReport {
    RuleId rule = RuleId::SpiderFuse;
    int trials = 0;
    int diagrams_with_matches = 0;
    int applications = 0;
    double max_residual = 0.0;
    struct Failure {
        std::uint64_t seed;
        std::size_t match_index;
        double residual;
    };
    std::vector<Failure> failures;
};

/// Generate `trials` random diagrams, apply every match of `rule` on each
/// (capped per diagram), and verify exact semantic preservation at `tol`.
RuleSoundnessReport check_rule_sound(RuleId rule, int trials, std::uint64_t seed,
                                     double tol = 1e-9);

} // namespace zx
