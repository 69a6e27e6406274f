#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace qlevr {

// The 27 quantifier types a question can be tagged with. "each" and "total"
// are distribution modes of plane count phrases ("... on each plane", "a
// total of n ...") but carry degenerate binary readings so that evaluation
// is total over the whole enum: each == all, total(n) == |A intersect B| = n.
enum class QuantifierKind {
    Each,
    Total,
    All,
    Most,
    NotAll,
    No,
    Some,
    SomeButNotAll,
    ExactlyN,
    NotExactlyN,
    Between,
    NotBetween,
    AllButAtMostN,
    AllButAtLeastN,
    MoreThanN,
    AtLeastN,
    FewerThanN,
    AtMostN,
    MoreThanF,
    AtLeastF,
    FewerThanF,
    AtMostF,
    EveryExcept,
    NoExcept,
    MoreOThanO,
    FewerOThanO,
    EqualOAndO,
};

inline constexpr int kNumQuantifierKinds = 27;

// Canonical snake_case names used in dataset tags and the program schema.
std::string_view kind_name(QuantifierKind kind);
std::optional<QuantifierKind> kind_from_name(std::string_view name);

struct Fraction {
    int num = 1;
    int den = 2;  // fraction num/den in (0, 1]

    bool operator==(const Fraction&) const = default;
};

struct QuantifierExpr {
    QuantifierKind kind = QuantifierKind::All;
    std::optional<int> n;            // exactly/at least/at most/... and total
    std::optional<int> n_low;        // between
    std::optional<int> n_high;       // between
    std::optional<Fraction> fraction;
    std::optional<int> exception_id;  // object id c for the except kinds

    static QuantifierExpr simple(QuantifierKind kind) { return {kind, {}, {}, {}, {}, {}}; }
    static QuantifierExpr count(QuantifierKind kind, int n) { return {kind, n, {}, {}, {}, {}}; }
    static QuantifierExpr range(QuantifierKind kind, int lo, int hi) { return {kind, {}, lo, hi, {}, {}}; }
    static QuantifierExpr frac(QuantifierKind kind, int num, int den) {
        return {kind, {}, {}, {}, Fraction{num, den}, {}};
    }
    static QuantifierExpr except(QuantifierKind kind, int object_id) {
        return {kind, {}, {}, {}, {}, object_id};
    }

    bool operator==(const QuantifierExpr&) const = default;
};

// Universe P and the two argument sets of a generalized quantifier: the
// restrictor A and the scope B, with A and B subsets of P. Sets are sorted,
// duplicate-free object id vectors.
struct SetArgs {
    std::vector<int> universe;
    std::vector<int> restrictor;
    std::vector<int> scope;

    // Sorts, dedups and checks the subset invariants.
    static SetArgs make(std::vector<int> universe, std::vector<int> restrictor, std::vector<int> scope);
};

// Tri-valued outcome: fraction quantifiers over an empty restrictor have no
// truth value. IllPosed is ordinary data, never an error; the restriction
// layer keeps such questions out of emitted datasets.
enum class EvalResult { False, True, IllPosed };

inline EvalResult to_result(bool b) { return b ? EvalResult::True : EvalResult::False; }

inline EvalResult negate(EvalResult r) {
    switch (r) {
        case EvalResult::False: return EvalResult::True;
        case EvalResult::True: return EvalResult::False;
        default: return EvalResult::IllPosed;
    }
}

struct EvalOptions {
    // The default "exactly n" reading requires |A| = n together with A as a
    // subset of B. The alternative counts the intersection only.
    bool exactly_counts_intersection = false;
};

struct MissingParameter : std::invalid_argument {
    explicit MissingParameter(std::string_view what)
        : std::invalid_argument("missing quantifier parameter: " + std::string(what)) {}
};

struct ExceptionNotInUniverse : std::invalid_argument {
    ExceptionNotInUniverse() : std::invalid_argument("exception object not in universe") {}
};

EvalResult eval(const QuantifierExpr& q, const SetArgs& args, const EvalOptions& options = {});

enum class SquareTransform { OuterNegation, InnerNegation, Dual };

// Maps a quantifier to its square-of-opposition counterpart when the 27-kind
// vocabulary contains an exact one:
//   eval(outer(q), (P,A,B)) == not eval(q, (P,A,B))
//   eval(inner(q), (P,A,B)) == eval(q, (P,A,P-B))
//   dual = outer after inner
// The identities hold pointwise including the IllPosed value. Kinds whose
// counterpart is not expressible (e.g. the comparatives) yield nullopt.
std::optional<QuantifierExpr> transform(const QuantifierExpr& q, SquareTransform t);

}  // namespace qlevr
