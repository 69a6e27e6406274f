#include "qlevr/quantifier.hpp"

#include <algorithm>
#include <array>

namespace qlevr {

namespace {

constexpr std::array<std::string_view, kNumQuantifierKinds> kKindNames{
    "each",
    "total",
    "all",
    "most",
    "not_all",
    "no",
    "some",
    "some_but_not_all",
    "exactly_n",
    "not_exactly_n",
    "between",
    "not_between",
    "all_but_at_most_n",
    "all_but_at_least_n",
    "more_than_n",
    "at_least_n",
    "fewer_than_n",
    "at_most_n",
    "more_than_f",
    "at_least_f",
    "fewer_than_f",
    "at_most_f",
    "every_except",
    "no_except",
    "more_o_than_o",
    "fewer_o_than_o",
    "equal_o_and_o",
};

void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

bool member(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

int require_n(const QuantifierExpr& q) {
    if (!q.n) throw MissingParameter("n");
    return *q.n;
}

std::pair<int, int> require_range(const QuantifierExpr& q) {
    if (!q.n_low || !q.n_high) throw MissingParameter("n1/n2");
    return {*q.n_low, *q.n_high};
}

Fraction require_fraction(const QuantifierExpr& q) {
    if (!q.fraction) throw MissingParameter("fraction");
    return *q.fraction;
}

int require_exception(const QuantifierExpr& q, const SetArgs& args) {
    if (!q.exception_id) throw MissingParameter("exception object");
    if (!member(args.universe, *q.exception_id)) throw ExceptionNotInUniverse{};
    return *q.exception_id;
}

}  // namespace

std::string_view kind_name(QuantifierKind kind) { return kKindNames[static_cast<size_t>(kind)]; }

std::optional<QuantifierKind> kind_from_name(std::string_view name) {
    for (size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == name) return static_cast<QuantifierKind>(i);
    }
    return std::nullopt;
}

SetArgs SetArgs::make(std::vector<int> universe, std::vector<int> restrictor, std::vector<int> scope) {
    SetArgs args{std::move(universe), std::move(restrictor), std::move(scope)};
    sort_unique(args.universe);
    sort_unique(args.restrictor);
    sort_unique(args.scope);
    for (int x : args.restrictor) {
        if (!member(args.universe, x)) throw std::invalid_argument("restrictor not a subset of universe");
    }
    for (int x : args.scope) {
        if (!member(args.universe, x)) throw std::invalid_argument("scope not a subset of universe");
    }
    return args;
}

EvalResult eval(const QuantifierExpr& q, const SetArgs& args, const EvalOptions& options) {
    const std::vector<int>& A = args.restrictor;
    const std::vector<int>& B = args.scope;
    const int size_a = static_cast<int>(A.size());
    const int size_b = static_cast<int>(B.size());
    const int inter = intersection_size(A, B);
    const int diff = size_a - inter;  // |A - B|

    using K = QuantifierKind;
    switch (q.kind) {
        case K::Each:
        case K::All: return to_result(diff == 0);
        case K::NotAll: return to_result(diff != 0);
        case K::Some: return to_result(inter > 0);
        case K::No: return to_result(inter == 0);
        case K::SomeButNotAll: return to_result(inter > 0 && diff > 0);
        case K::Most: return to_result(inter > diff);
        case K::Total: return to_result(inter == require_n(q));
        case K::ExactlyN: {
            const int n = require_n(q);
            if (options.exactly_counts_intersection) return to_result(inter == n);
            return to_result(size_a == n && diff == 0);
        }
        case K::NotExactlyN: {
            const int n = require_n(q);
            if (options.exactly_counts_intersection) return to_result(inter != n);
            return to_result(!(size_a == n && diff == 0));
        }
        case K::Between: {
            const auto [lo, hi] = require_range(q);
            return to_result(lo <= inter && inter <= hi);
        }
        case K::NotBetween: {
            const auto [lo, hi] = require_range(q);
            return to_result(inter < lo || inter > hi);
        }
        case K::AtLeastN: return to_result(inter >= require_n(q));
        case K::MoreThanN: return to_result(inter > require_n(q));
        case K::AtMostN: return to_result(inter <= require_n(q));
        case K::FewerThanN: return to_result(inter < require_n(q));
        case K::AllButAtLeastN: return to_result(diff >= require_n(q));
        case K::AllButAtMostN: return to_result(diff <= require_n(q));
        case K::AtLeastF:
        case K::MoreThanF:
        case K::FewerThanF:
        case K::AtMostF: {
            const Fraction f = require_fraction(q);
            if (size_a == 0) return EvalResult::IllPosed;
            // Exact rational comparison of inter/|A| against num/den.
            const long lhs = static_cast<long>(inter) * f.den;
            const long rhs = static_cast<long>(f.num) * size_a;
            switch (q.kind) {
                case K::AtLeastF: return to_result(lhs >= rhs);
                case K::MoreThanF: return to_result(lhs > rhs);
                case K::FewerThanF: return to_result(lhs < rhs);
                default: return to_result(lhs <= rhs);
            }
        }
        case K::NoExcept: {
            const int c = require_exception(q, args);
            return to_result(inter == 1 && member(A, c) && member(B, c));
        }
        case K::EveryExcept: {
            const int c = require_exception(q, args);
            return to_result(diff == 1 && member(A, c) && !member(B, c));
        }
        case K::MoreOThanO: return to_result(size_a > size_b);
        case K::FewerOThanO: return to_result(size_a < size_b);
        case K::EqualOAndO: return to_result(size_a == size_b);
    }
    throw std::logic_error("eval: unhandled quantifier kind");
}

namespace {

QuantifierExpr with_kind(const QuantifierExpr& q, QuantifierKind kind) {
    QuantifierExpr out = q;
    out.kind = kind;
    return out;
}

std::optional<QuantifierExpr> outer_negation(const QuantifierExpr& q) {
    using K = QuantifierKind;
    switch (q.kind) {
        case K::All: return QuantifierExpr::simple(K::NotAll);
        case K::Each: return QuantifierExpr::simple(K::NotAll);
        case K::NotAll: return QuantifierExpr::simple(K::All);
        case K::Some: return QuantifierExpr::simple(K::No);
        case K::No: return QuantifierExpr::simple(K::Some);
        case K::ExactlyN: return with_kind(q, K::NotExactlyN);
        case K::NotExactlyN: return with_kind(q, K::ExactlyN);
        case K::Between: return with_kind(q, K::NotBetween);
        case K::NotBetween: return with_kind(q, K::Between);
        case K::AtLeastN: return with_kind(q, K::FewerThanN);
        case K::FewerThanN: return with_kind(q, K::AtLeastN);
        case K::MoreThanN: return with_kind(q, K::AtMostN);
        case K::AtMostN: return with_kind(q, K::MoreThanN);
        case K::AtLeastF: return with_kind(q, K::FewerThanF);
        case K::FewerThanF: return with_kind(q, K::AtLeastF);
        case K::MoreThanF: return with_kind(q, K::AtMostF);
        case K::AtMostF: return with_kind(q, K::MoreThanF);
        case K::AllButAtLeastN:
            // not(|A-B| >= n) == |A-B| <= n-1; needs n >= 1.
            if (!q.n || *q.n < 1) return std::nullopt;
            return QuantifierExpr::count(K::AllButAtMostN, *q.n - 1);
        case K::AllButAtMostN:
            if (!q.n) return std::nullopt;
            return QuantifierExpr::count(K::AllButAtLeastN, *q.n + 1);
        case K::Total:
            // not(|A^B| = n) == |A^B| outside [n, n].
            if (!q.n) return std::nullopt;
            return QuantifierExpr::range(K::NotBetween, *q.n, *q.n);
        default: return std::nullopt;
    }
}

std::optional<QuantifierExpr> inner_negation(const QuantifierExpr& q) {
    using K = QuantifierKind;
    // Swapping B for P-B swaps |A^B| with |A-B|.
    switch (q.kind) {
        case K::All: return QuantifierExpr::simple(K::No);
        case K::Each: return QuantifierExpr::simple(K::No);
        case K::No: return QuantifierExpr::simple(K::All);
        case K::Some: return QuantifierExpr::simple(K::NotAll);
        case K::NotAll: return QuantifierExpr::simple(K::Some);
        case K::SomeButNotAll: return q;  // symmetric in A^B and A-B
        case K::AtLeastN: return with_kind(q, K::AllButAtLeastN);
        case K::AllButAtLeastN: return with_kind(q, K::AtLeastN);
        case K::AtMostN: return with_kind(q, K::AllButAtMostN);
        case K::AllButAtMostN: return with_kind(q, K::AtMostN);
        case K::MoreThanN:
            if (!q.n) return std::nullopt;
            return QuantifierExpr::count(K::AllButAtLeastN, *q.n + 1);
        case K::FewerThanN:
            if (!q.n || *q.n < 1) return std::nullopt;
            return QuantifierExpr::count(K::AllButAtMostN, *q.n - 1);
        case K::AtLeastF:
        case K::MoreThanF:
        case K::FewerThanF:
        case K::AtMostF: {
            // |A-B|/|A| cmp n/d == |A^B|/|A| cmp' (d-n)/d; complement must
            // stay a valid fraction in (0, 1].
            if (!q.fraction || q.fraction->num >= q.fraction->den) return std::nullopt;
            const Fraction flipped{q.fraction->den - q.fraction->num, q.fraction->den};
            QuantifierKind kind;
            switch (q.kind) {
                case K::AtLeastF: kind = K::AtMostF; break;
                case K::AtMostF: kind = K::AtLeastF; break;
                case K::MoreThanF: kind = K::FewerThanF; break;
                default: kind = K::MoreThanF; break;
            }
            return QuantifierExpr::frac(kind, flipped.num, flipped.den);
        }
        case K::EveryExcept: return with_kind(q, K::NoExcept);
        case K::NoExcept: return with_kind(q, K::EveryExcept);
        default: return std::nullopt;
    }
}

}  // namespace

std::optional<QuantifierExpr> transform(const QuantifierExpr& q, SquareTransform t) {
    switch (t) {
        case SquareTransform::OuterNegation: return outer_negation(q);
        case SquareTransform::InnerNegation: return inner_negation(q);
        case SquareTransform::Dual: {
            const auto inner = inner_negation(q);
            if (!inner) return std::nullopt;
            return outer_negation(*inner);
        }
    }
    return std::nullopt;
}

}  // namespace qlevr
