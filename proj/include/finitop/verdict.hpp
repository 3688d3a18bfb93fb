#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finitop/subset.hpp"

namespace finitop {

struct WitnessItem {
    enum class Type { Set, Point, Text };

    std::string label;
    Type type = Type::Text;
    Mask set = 0;
    int point = -1;
    std::string text;

    static WitnessItem of_set(std::string label, Mask m) { return {std::move(label), Type::Set, m, -1, {}}; }
    static WitnessItem of_point(std::string label, int x) { return {std::move(label), Type::Point, 0, x, {}}; }
    static WitnessItem of_text(std::string label, std::string t) {
        return {std::move(label), Type::Text, 0, -1, std::move(t)};
    }

    bool operator==(const WitnessItem&) const = default;
};

/// Structured data justifying a verdict, replayable against the predicate.
struct Witness {
    std::string role;
    std::vector<WitnessItem> payload;

    Witness& add_set(std::string label, Mask m) {
        payload.push_back(WitnessItem::of_set(std::move(label), m));
        return *this;
    }
    Witness& add_point(std::string label, int x) {
        payload.push_back(WitnessItem::of_point(std::move(label), x));
        return *this;
    }
    Witness& add_text(std::string label, std::string t) {
        payload.push_back(WitnessItem::of_text(std::move(label), std::move(t)));
        return *this;
    }

    std::optional<Mask> set(const std::string& label) const;
    std::optional<int> point(const std::string& label) const;
    std::optional<std::string> text(const std::string& label) const;

    bool operator==(const Witness&) const = default;
};

struct Verdict {
    std::string property_id;
    bool holds = false;
    /// True when the verdict holds only because a hypothesis failed.
    bool vacuous = false;
    std::optional<Witness> witness;

    bool operator==(const Verdict&) const = default;
};

inline Verdict holds(std::string id) { return Verdict{std::move(id), true, false, std::nullopt}; }
inline Verdict fails(std::string id, Witness w) { return Verdict{std::move(id), false, false, std::move(w)}; }

/// Independently evaluated clauses of an equivalence theorem.
struct ClauseVector {
    std::string theorem_id;
    std::vector<bool> clauses;
    bool all_equal = true;
    std::optional<Witness> witness;

    /// Computes all_equal and, on disagreement, a witness listing each clause.
    static ClauseVector from(std::string theorem_id, std::vector<bool> clauses);

    bool operator==(const ClauseVector&) const = default;
};

}  // namespace finitop
