#include "finitop/verdict.hpp"

#include <algorithm>

namespace finitop {

namespace {

const WitnessItem* find(const Witness& w, const std::string& label, WitnessItem::Type type) {
    auto it = std::find_if(w.payload.begin(), w.payload.end(),
                           [&](const WitnessItem& i) { return i.label == label && i.type == type; });
    return it == w.payload.end() ? nullptr : &*it;
}

}  // namespace

std::optional<Mask> Witness::set(const std::string& label) const {
    const auto* i = find(*this, label, WitnessItem::Type::Set);
    return i ? std::optional<Mask>(i->set) : std::nullopt;
}

std::optional<int> Witness::point(const std::string& label) const {
    const auto* i = find(*this, label, WitnessItem::Type::Point);
    return i ? std::optional<int>(i->point) : std::nullopt;
}

std::optional<std::string> Witness::text(const std::string& label) const {
    const auto* i = find(*this, label, WitnessItem::Type::Text);
    return i ? std::optional<std::string>(i->text) : std::nullopt;
}

ClauseVector ClauseVector::from(std::string theorem_id, std::vector<bool> clauses) {
    ClauseVector cv;
    cv.theorem_id = std::move(theorem_id);
    cv.clauses = std::move(clauses);
    cv.all_equal = std::adjacent_find(cv.clauses.begin(), cv.clauses.end(), std::not_equal_to<>()) == cv.clauses.end();
    if (!cv.all_equal) {
        Witness w{"clause disagreement", {}};
        for (std::size_t i = 0; i < cv.clauses.size(); ++i) {
            w.add_text("clause" + std::to_string(i + 1), cv.clauses[i] ? "true" : "false");
        }
        cv.witness = std::move(w);
    }
    return cv;
}

}  // namespace finitop
