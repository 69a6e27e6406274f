#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qlevr/quantifier.hpp"
#include "qlevr/scene.hpp"
#include "qlevr/spatial.hpp"

namespace qlevr {

// ---------------------------------------------------------------------------
// Object filters

struct AttrFilter {
    std::optional<ObjectSize> size;
    std::optional<ObjectColor> color;
    std::optional<ObjectMaterial> material;
    std::optional<ObjectShape> shape;

    bool matches(const ObjectAttributes& obj) const;
    bool empty() const { return !size && !color && !material && !shape; }
    // True when every object matching *this necessarily matches other.
    bool implies(const AttrFilter& other) const;
    bool operator==(const AttrFilter&) const = default;
};

// "<filter> <relation> the <anchor>"; the anchor description must denote a
// unique object in the scene.
struct SpatialConstraint {
    SpatialRelation relation = SpatialRelation::Front;
    AttrFilter anchor;
    bool operator==(const SpatialConstraint&) const = default;
};

struct ObjectFilter {
    AttrFilter attrs;
    std::optional<SpatialConstraint> spatial;
    bool operator==(const ObjectFilter&) const = default;
};

// ---------------------------------------------------------------------------
// Plane selection

// The eleven plane-template forms.
enum class PlaneTemplate {
    Attributes = 1,     // "on the black planes", "on the white non-geometric plane"
    UniqueAttribute,    // "on the plane with a different shape from other planes"
    SpatialToAnchor,    // "on the black planes to the left rear of the circular plane"
    EachAtLeast,        // "... where there are at least 3 red cubes on each plane"
    AtMost,             // "... where there are at most 5 blue balls"
    EachBetween,        // "... where there are between 1 and 4 prisms on each plane"
    Exactly,            // "... where there is exactly 1 leathery object"
    NotBetween,         // "... where there are not 2 to 4 prisms"
    EachNotExactly,     // "... where there are not exactly 3 items on each plane"
    None,               // "... where there are not any wooden cones"
    Total,              // "... where there is a total of 7 small rubber objects"
};

inline constexpr int kNumPlaneTemplates = 11;

enum class PlaneUniqueDim { Shape, Color, Material };

struct PlaneAttrFilter {
    bool non_geometric = false;   // background only
    bool geometric_only = false;  // "geometric"/"non-white" wording
    std::optional<PlaneShape> shape;
    std::optional<PlaneColor> color;
    std::optional<PlaneMaterial> material;

    bool matches(const PlaneAttributes& plane) const;
    bool operator==(const PlaneAttrFilter&) const = default;
};

enum class CountMode { SinglePlane, EachPlane, Total };

struct PlaneCountConstraint {
    CountMode mode = CountMode::SinglePlane;
    QuantifierExpr quantifier;  // count quantifier; kind Total carries the aggregate count
    AttrFilter object_filter;   // which objects are counted
    bool operator==(const PlaneCountConstraint&) const = default;
};

struct PlaneSpatialConstraint {
    SpatialRelation relation = SpatialRelation::Front;
    PlaneAttrFilter anchor;  // must denote a unique geometric plane
    bool operator==(const PlaneSpatialConstraint&) const = default;
};

struct PlaneSelector {
    PlaneTemplate template_id = PlaneTemplate::Attributes;
    PlaneAttrFilter attrs;
    bool singular = false;  // definite singular surface form
    std::optional<PlaneUniqueDim> unique_dim;
    std::optional<PlaneSpatialConstraint> spatial;
    std::optional<PlaneCountConstraint> count;
    bool operator==(const PlaneSelector&) const = default;
};

// ---------------------------------------------------------------------------
// Programs

enum class QuestionForm {
    Existence1 = 1,      // is a quantified set on the selected planes
    Existence2,          // is a quantified set in some direction of a unique object
    CompareAttributes,   // shares an attribute value with a quantified set
    QuantityComparison,  // compares the sizes of two sets
    SizeComparison,      // is larger/smaller than a quantified set
    SpatialRelations,    // compares two direction-restricted sets
};

inline constexpr int kNumQuestionForms = 6;

enum class AttrDim { Size, Color, Material, Shape };

// Scope of CompareAttributes: x is in B iff inner(C \ {x}, {y : dim(y) == dim(x)}).
struct AttributeScope {
    AttrDim dim = AttrDim::Color;
    ObjectFilter target;
    QuantifierExpr inner;
    bool operator==(const AttributeScope&) const = default;
};

// Scope of SizeComparison: x is in B iff inner(C \ {x}, {y : radius(y) < radius(x)})
// (or > for smaller).
struct SizeScope {
    bool larger = true;
    ObjectFilter target;
    QuantifierExpr inner;
    bool operator==(const SizeScope&) const = default;
};

struct QuestionProgram {
    PlaneSelector planes;
    QuestionForm form = QuestionForm::Existence1;
    ObjectFilter restrictor;                   // set A
    std::optional<ObjectFilter> scope_filter;  // Existence2 and both comparison forms (set B)
    std::optional<AttributeScope> attr_scope;  // CompareAttributes
    std::optional<SizeScope> size_scope;       // SizeComparison
    std::optional<AttrFilter> except_anchor;   // descriptor of c for the except kinds

    // Surface quantifier plus its square-of-opposition realization route. The
    // answer is computed mechanically along the route; tags use the effective
    // quantifier outer^sentence(inner^scope(main)).
    QuantifierExpr main;
    bool scope_negated = false;
    bool sentence_negated = false;
};

// The program's quantifier slots in canonical order: plane-template
// quantifiers, the effective main quantifier, then the embedded scope
// quantifier. Between 1 and 4 entries for well-formed programs.
std::vector<QuantifierExpr> quantifier_slots(const QuestionProgram& program);

// The main quantifier after folding the negation route into it.
QuantifierExpr effective_main(const QuestionProgram& program);

// ---------------------------------------------------------------------------
// Evaluation

enum class RestrictionKind { PragmaticallyOdd, IllPosed, Trivial };

std::string_view to_string(RestrictionKind kind);

struct Rejected {
    RestrictionKind kind = RestrictionKind::PragmaticallyOdd;
    std::string reason;
};

using SelectResult = std::variant<std::vector<int>, Rejected>;

struct RunResult {
    std::optional<bool> answer;
    std::optional<Rejected> rejection;

    bool accepted() const { return answer.has_value(); }
    static RunResult of(bool value) { return {value, std::nullopt}; }
    static RunResult reject(RestrictionKind kind, std::string reason) {
        return {std::nullopt, Rejected{kind, std::move(reason)}};
    }
};

// Applies attribute, uniqueness, spatial and count restrictions and the
// pragmatic narrowing rules; returns the selected plane indices or a
// Rejected value. Never throws on valid scenes.
SelectResult select_planes(const PlaneSelector& selector, const SceneGraph& scene);

// Model-checks the program against the scene: builds the universe from the
// selected planes, the restrictor and scope sets from the filters, applies
// quantifiers innermost first, and enforces every restriction predicate.
RunResult run_program(const QuestionProgram& program, const SceneGraph& scene,
                      const EvalOptions& options = {});

// Scene-independent truth detection: filter-implication analysis for the
// comparison forms and count-pinning contradictions between a plane count
// constraint and the main count quantifier.
bool detect_trivial(const QuestionProgram& program, const EvalOptions& options = {});

// Programs provably equivalent to the input via square-of-opposition
// transforms of the main quantifier (the realization route flips along).
std::vector<QuestionProgram> equivalent_rewrites(const QuestionProgram& program);

}  // namespace qlevr
