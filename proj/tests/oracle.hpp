#pragma once

// Brute-force reference semantics for the quantifier table, written against
// std::set with explicit loops. This deliberately shares no code with the
// library evaluator; the equivalence test in test_quantifier.cpp compares the
// two over an exhaustive domain.

#include <optional>
#include <set>

#include "qlevr/quantifier.hpp"

namespace qlevr::testing {

inline EvalResult oracle_eval(const QuantifierExpr& q, const std::set<int>& P, const std::set<int>& A,
                              const std::set<int>& B, bool exactly_counts_intersection = false) {
    (void)P;
    int in_both = 0;
    int only_a = 0;
    for (int a : A) {
        if (B.count(a)) {
            ++in_both;
        } else {
            ++only_a;
        }
    }

    auto tv = [](bool b) { return b ? EvalResult::True : EvalResult::False; };

    using K = QuantifierKind;
    switch (q.kind) {
        case K::Each:
        case K::All: {
            for (int a : A) {
                if (!B.count(a)) return EvalResult::False;
            }
            return EvalResult::True;
        }
        case K::NotAll: {
            for (int a : A) {
                if (!B.count(a)) return EvalResult::True;
            }
            return EvalResult::False;
        }
        case K::Some: return tv(in_both > 0);
        case K::No: return tv(in_both == 0);
        case K::SomeButNotAll: return tv(in_both > 0 && only_a > 0);
        case K::Most: return tv(in_both > only_a);
        case K::Total: return tv(in_both == *q.n);
        case K::ExactlyN:
            if (exactly_counts_intersection) return tv(in_both == *q.n);
            return tv(static_cast<int>(A.size()) == *q.n && only_a == 0);
        case K::NotExactlyN:
            if (exactly_counts_intersection) return tv(in_both != *q.n);
            return tv(!(static_cast<int>(A.size()) == *q.n && only_a == 0));
        case K::Between: return tv(*q.n_low <= in_both && in_both <= *q.n_high);
        case K::NotBetween: return tv(!(*q.n_low <= in_both && in_both <= *q.n_high));
        case K::AtLeastN: return tv(in_both >= *q.n);
        case K::MoreThanN: return tv(in_both > *q.n);
        case K::AtMostN: return tv(in_both <= *q.n);
        case K::FewerThanN: return tv(in_both < *q.n);
        case K::AllButAtLeastN: return tv(only_a >= *q.n);
        case K::AllButAtMostN: return tv(only_a <= *q.n);
        case K::AtLeastF:
        case K::MoreThanF:
        case K::FewerThanF:
        case K::AtMostF: {
            if (A.empty()) return EvalResult::IllPosed;
            const double ratio = static_cast<double>(in_both) / static_cast<double>(A.size());
            const double frac = static_cast<double>(q.fraction->num) / static_cast<double>(q.fraction->den);
            // Exact comparison via cross multiplication to not depend on
            // floating point; the doubles above are only for readability.
            const long lhs = static_cast<long>(in_both) * q.fraction->den;
            const long rhs = static_cast<long>(q.fraction->num) * static_cast<long>(A.size());
            (void)ratio;
            (void)frac;
            if (q.kind == K::AtLeastF) return tv(lhs >= rhs);
            if (q.kind == K::MoreThanF) return tv(lhs > rhs);
            if (q.kind == K::FewerThanF) return tv(lhs < rhs);
            return tv(lhs <= rhs);
        }
        case K::NoExcept: {
            std::set<int> inter;
            for (int a : A) {
                if (B.count(a)) inter.insert(a);
            }
            return tv(inter == std::set<int>{*q.exception_id});
        }
        case K::EveryExcept: {
            std::set<int> rest;
            for (int a : A) {
                if (!B.count(a)) rest.insert(a);
            }
            return tv(rest == std::set<int>{*q.exception_id});
        }
        case K::MoreOThanO: return tv(A.size() > B.size());
        case K::FewerOThanO: return tv(A.size() < B.size());
        case K::EqualOAndO: return tv(A.size() == B.size());
    }
    return EvalResult::False;
}

}  // namespace qlevr::testing
