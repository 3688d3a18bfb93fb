#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace finitop {

/// Generalized-open families, each decided by one defining inclusion.
enum class Kind {
    Open,
    Semi,          // A ⊆ cl(int A)
    Pre,           // A ⊆ int(cl A)
    B,             // A ⊆ cl(int A) ∪ int(cl A)
    Beta,          // A ⊆ cl(int(cl A))
    E,             // A ⊆ cl(int_δ A) ∪ int(cl_δ A)
    EStar,         // A ⊆ cl(int(cl_δ A))
    DeltaOpen,     // complement is δ-closed
    RegularOpen,   // A = int(cl A)
};

inline constexpr std::array<Kind, 9> all_kinds = {Kind::Open, Kind::Semi, Kind::Pre,       Kind::B,          Kind::Beta,
                                                  Kind::E,    Kind::EStar, Kind::DeltaOpen, Kind::RegularOpen};

/// θ-operators built on a base generalized-open family.
enum class ThetaKind {
    EStarTheta,  // base e*-open, e*-closure
    BetaTheta,   // base β-open, β-closure
};

inline constexpr std::array<ThetaKind, 2> all_theta_kinds = {ThetaKind::EStarTheta, ThetaKind::BetaTheta};

constexpr Kind base_kind(ThetaKind tk) { return tk == ThetaKind::EStarTheta ? Kind::EStar : Kind::Beta; }

/// Variants of the generalized-closed sets.
enum class GVariant {
    GeStarTheta,  // e*-cl_θ(A) ⊆ U for every open U ⊇ A
    Pair,         // e*-cl_θ(A) ⊆ U for every e*-θ-open U ⊇ A
};

std::string_view kind_name(Kind k);          // "OPEN", "ESTAR", ...
std::string_view kind_slug(Kind k);          // "open", "estar", ...
std::string_view theta_kind_name(ThetaKind tk);  // "ESTAR_THETA", "BETA_THETA"
std::string_view theta_kind_slug(ThetaKind tk);  // "estar-theta", "beta-theta"
std::string_view g_variant_name(GVariant v);     // "GE_STAR_THETA", "PAIR"

std::optional<Kind> parse_kind(std::string_view s);
std::optional<ThetaKind> parse_theta_kind(std::string_view s);

}  // namespace finitop
