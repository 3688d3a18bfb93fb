#include "finitop/kinds.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace finitop {

std::string_view kind_name(Kind k) {
    switch (k) {
        case Kind::Open: return "OPEN";
        case Kind::Semi: return "SEMI";
        case Kind::Pre: return "PRE";
        case Kind::B: return "B";
        case Kind::Beta: return "BETA";
        case Kind::E: return "E";
        case Kind::EStar: return "ESTAR";
        case Kind::DeltaOpen: return "DELTA_OPEN";
        case Kind::RegularOpen: return "REGULAR_OPEN";
    }
    return "?";
}

std::string_view kind_slug(Kind k) {
    switch (k) {
        case Kind::Open: return "open";
        case Kind::Semi: return "semi";
        case Kind::Pre: return "pre";
        case Kind::B: return "b";
        case Kind::Beta: return "beta";
        case Kind::E: return "e";
        case Kind::EStar: return "estar";
        case Kind::DeltaOpen: return "delta-open";
        case Kind::RegularOpen: return "regular-open";
    }
    return "?";
}

std::string_view theta_kind_name(ThetaKind tk) { return tk == ThetaKind::EStarTheta ? "ESTAR_THETA" : "BETA_THETA"; }
std::string_view theta_kind_slug(ThetaKind tk) { return tk == ThetaKind::EStarTheta ? "estar-theta" : "beta-theta"; }
std::string_view g_variant_name(GVariant v) { return v == GVariant::GeStarTheta ? "GE_STAR_THETA" : "PAIR"; }

namespace {

// Accepts both "ESTAR_THETA" and "estar-theta".
std::string normalize(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return c == '_' ? '-' : static_cast<char>(std::tolower(c));
    });
    return out;
}

}  // namespace

std::optional<Kind> parse_kind(std::string_view s) {
    const std::string norm = normalize(s);
    for (Kind k : all_kinds) {
        if (norm == kind_slug(k)) return k;
    }
    return std::nullopt;
}

std::optional<ThetaKind> parse_theta_kind(std::string_view s) {
    const std::string norm = normalize(s);
    for (ThetaKind tk : all_theta_kinds) {
        if (norm == theta_kind_slug(tk)) return tk;
    }
    return std::nullopt;
}

}  // namespace finitop
