#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "finitop/lattice.hpp"
#include "finitop/verdict.hpp"

namespace finitop {

/// A total function between two finite spaces, given by its image array.
class SpaceMap {
public:
    /// Throws PointOutOfRange / Malformed unless image has one in-range entry
    /// per domain point.
    SpaceMap(Space dom, Space cod, std::vector<int> image);

    static SpaceMap identity(const Space& s);
    static SpaceMap constant(const Space& dom, const Space& cod, int point);

    const Space& dom() const { return dom_; }
    const Space& cod() const { return cod_; }
    const std::vector<int>& image() const { return image_; }

    /// f[A]
    Mask image_of(Mask a) const;
    /// f⁻¹[B]
    Mask preimage_of(Mask b) const;

    bool injective() const;
    bool surjective() const;

    /// next ∘ this
    SpaceMap then(const SpaceMap& next) const;

    /// "dom-fp->cod-fp:[0,2,2,1]"
    std::string id() const;

private:
    Space dom_;
    Space cod_;
    std::vector<int> image_;
};

/// Every function class, each flag decided from its own definition.
struct MapClassReport {
    bool continuous = false;
    bool closed = false;
    bool open = false;
    bool injective = false;
    bool surjective = false;
    bool estar_theta_continuous = false;
    bool strongly_estar_irresolute_pointwise = false;
    bool strongly_estar_irresolute_preimage = false;
    bool estar_theta_closed = false;
    bool estar_theta_open = false;
    bool pre_estar_theta_closed = false;
    bool pre_estar_theta_open = false;
    bool ge_closed = false;
    bool ge_open = false;
    bool pre_ge_closed = false;
    bool pre_ge_open = false;
    bool pair_star_closed = false;
    bool almost_estar_theta_irresolute = false;
    /// Same as above with ⊆ in place of =.
    bool almost_estar_theta_irresolute_inclusion = false;

    /// (name, value) in declaration order.
    std::vector<std::pair<std::string, bool>> flags() const;
    bool operator==(const MapClassReport&) const = default;
};

MapClassReport classify_map(const SpaceMap& f, const Lattice& dom, const Lattice& cod);
MapClassReport classify_map(const SpaceMap& f);

enum class MapLemma { Closed, PreClosed, G, PreG, Pair };
inline constexpr MapLemma all_map_lemmas[] = {MapLemma::Closed, MapLemma::PreClosed, MapLemma::G, MapLemma::PreG,
                                              MapLemma::Pair};
std::string_view lemma_id(MapLemma l);  // "L_CLOSED", ...

/// (definition flag, B/U-quantified characterization).
ClauseVector lemma_equivalence(const SpaceMap& f, const Lattice& dom, const Lattice& cod, MapLemma l);
ClauseVector lemma_equivalence(const SpaceMap& f, MapLemma l);

enum class PreservationTheorem { T8, NormPush, NormG, Pull, Pull2, PairPush, PairPull };
inline constexpr PreservationTheorem all_preservation_theorems[] = {
    PreservationTheorem::T8,   PreservationTheorem::NormPush, PreservationTheorem::NormG,   PreservationTheorem::Pull,
    PreservationTheorem::Pull2, PreservationTheorem::PairPush, PreservationTheorem::PairPull,
};
std::string_view theorem_id(PreservationTheorem t);  // "T8", "T_norm_push", ...
/// Throws TopologyError(UnknownTheorem).
PreservationTheorem parse_preservation_theorem(std::string_view id);

/// Vacuous (holds, vacuous=true) unless every hypothesis holds; otherwise the
/// concluded property, with the conclusion's witness on violation.
Verdict preservation_check(PreservationTheorem t, const SpaceMap& f, const Lattice& dom, const Lattice& cod);
Verdict preservation_check(PreservationTheorem t, const SpaceMap& f);

/// All image arrays dom_n -> cod_n when cod_n^dom_n <= 2^20, else `samples`
/// arrays drawn with the given seed.
std::vector<std::vector<int>> enumerate_images(int dom_n, int cod_n, std::uint64_t seed = 0,
                                               std::size_t samples = 4096);

struct MapCampaignReport {
    std::size_t space_pairs = 0;
    std::size_t maps = 0;
    std::map<std::string, std::size_t> lemma_disagreements;
    std::size_t irresolute_disagreements = 0;
    std::map<std::string, std::size_t> theorem_triggers;
    std::map<std::string, std::size_t> theorem_violations;
    /// Human-readable descriptions of every discrepancy (capped).
    std::vector<std::string> discrepancies;
    /// Cases where the equality and inclusion readings of almost
    /// e*θ-irresolute differ.
    std::size_t almost_irresolute_reading_differs = 0;

    std::size_t total_discrepancies() const;
};

/// Runs every lemma, the two strongly e*-irresolute definitions and every
/// preservation theorem over all maps between all ordered pairs of spaces.
MapCampaignReport map_campaign(const std::vector<Space>& spaces, std::uint64_t seed = 0);

}  // namespace finitop
