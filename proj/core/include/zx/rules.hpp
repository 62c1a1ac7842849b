#pragma once

#include "zx/diagram.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zx {

enum class RuleId {
    SpiderFuse,
    IdentityRemove,
    SelfLoop,
    HLoop,
    HHCancel,
    ColorChange,
    Hopf,
    Bialgebra,
    StateCopy,
    UnitCopy,
    PiCommute,
    PiThroughH,
};

constexpr RuleId kAllRules[] = {
    RuleId::SpiderFuse, RuleId::IdentityRemove, RuleId::SelfLoop,
    RuleId::HLoop,      RuleId::HHCancel,       RuleId::ColorChange,
    RuleId::Hopf,       RuleId::Bialgebra,      RuleId::StateCopy,
    RuleId::UnitCopy,   RuleId::PiCommute,      RuleId::PiThroughH,
};

std::string rule_name(RuleId rule);

/// A rule instance bound to concrete vertices. The binding layout depends
/// on the rule:
///   SpiderFuse     [a, b]            two same-color spiders, a kept
///   IdentityRemove [v]
///   SelfLoop       [v]
///   HLoop          [s, h]            spider s doubly wired to H vertex h
///   HHCancel       [h1, h2]
///   ColorChange    [s]
///   Hopf           [z, x]            >= 2 parallel plain edges
///   Bialgebra      [za, zb, xc, xd]  complete bipartite square
///   StateCopy      [p, s]            pendant p copied through spider s
///   UnitCopy       [p, s]            one-target case of StateCopy
///   PiCommute      [v, s]            pi-spider v pushed through spider s
///   PiThroughH     [v, h]            pi-spider v swapped past H vertex h
struct Match {
    RuleId rule;
    std::vector<VertexId> verts;
    std::uint64_t revision = 0;
};

/// All matches of one rule, in ascending binding order. Complete and
/// deterministic on a validated diagram.
std::vector<Match> find_matches(const Diagram& d, RuleId rule);

/// Apply a match, returning the rewritten diagram. Every rule preserves
/// evaluator semantics exactly, tracked scalar included. Throws
/// StaleMatchError when the diagram changed since the match was found.
Diagram apply(const Diagram& d, const Match& m);

/// In-place variant used by the simplifier; same staleness contract.
/// Returns the scalar factor introduced by the step.
Scalar apply_in_place(Diagram& d, const Match& m);

} // namespace zx
