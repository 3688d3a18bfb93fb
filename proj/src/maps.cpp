#include "finitop/maps.hpp"

#include <algorithm>
#include <random>

#include "finitop/axioms.hpp"
#include "finitop/error.hpp"
#include "finitop/kernels.hpp"

namespace finitop {

SpaceMap::SpaceMap(Space dom, Space cod, std::vector<int> image)
    : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {
    if (static_cast<int>(image_.size()) != dom_.size()) {
        throw TopologyError(ErrorCode::Malformed, "image has " + std::to_string(image_.size()) +
                                                      " entries for a " + std::to_string(dom_.size()) +
                                                      "-point domain");
    }
    for (int y : image_) {
        if (y < 0 || y >= cod_.size()) {
            throw TopologyError(ErrorCode::PointOutOfRange, "image point " + std::to_string(y) +
                                                                " outside codomain 0.." +
                                                                std::to_string(cod_.size() - 1));
        }
    }
}

SpaceMap SpaceMap::identity(const Space& s) {
    std::vector<int> image(s.size());
    for (int x = 0; x < s.size(); ++x) image[x] = x;
    return SpaceMap(s, s, std::move(image));
}

SpaceMap SpaceMap::constant(const Space& dom, const Space& cod, int point) {
    return SpaceMap(dom, cod, std::vector<int>(dom.size(), point));
}

Mask SpaceMap::image_of(Mask a) const {
    Mask out = 0;
    for_each_point(a, [&](int x) { out |= point_mask(image_[x]); });
    return out;
}

Mask SpaceMap::preimage_of(Mask b) const {
    Mask out = 0;
    for (int x = 0; x < dom_.size(); ++x) {
        if ((b >> image_[x] & 1U) != 0) out |= point_mask(x);
    }
    return out;
}

bool SpaceMap::injective() const { return cardinality(image_of(dom_.full())) == dom_.size(); }
bool SpaceMap::surjective() const { return image_of(dom_.full()) == cod_.full(); }

SpaceMap SpaceMap::then(const SpaceMap& next) const {
    if (!(next.dom_ == cod_)) throw TopologyError(ErrorCode::FingerprintMismatch, "maps are not composable");
    std::vector<int> image(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x) image[x] = next.image_[image_[x]];
    return SpaceMap(dom_, next.cod_, std::move(image));
}

std::string SpaceMap::id() const {
    std::string s = dom_.fingerprint_hex() + "->" + cod_.fingerprint_hex() + ":[";
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(image_[i]);
    }
    return s + "]";
}

std::vector<std::pair<std::string, bool>> MapClassReport::flags() const {
    return {
        {"continuous", continuous},
        {"closed", closed},
        {"open", open},
        {"injective", injective},
        {"surjective", surjective},
        {"estar_theta_continuous", estar_theta_continuous},
        {"strongly_estar_irresolute_pointwise", strongly_estar_irresolute_pointwise},
        {"strongly_estar_irresolute_preimage", strongly_estar_irresolute_preimage},
        {"estar_theta_closed", estar_theta_closed},
        {"estar_theta_open", estar_theta_open},
        {"pre_estar_theta_closed", pre_estar_theta_closed},
        {"pre_estar_theta_open", pre_estar_theta_open},
        {"ge_closed", ge_closed},
        {"ge_open", ge_open},
        {"pre_ge_closed", pre_ge_closed},
        {"pre_ge_open", pre_ge_open},
        {"pair_star_closed", pair_star_closed},
        {"almost_estar_theta_irresolute", almost_estar_theta_irresolute},
        {"almost_estar_theta_irresolute_inclusion", almost_estar_theta_irresolute_inclusion},
    };
}

namespace {

void require_lattices(const SpaceMap& f, const Lattice& dom, const Lattice& cod) {
    if (!(dom.space() == f.dom()) || !(cod.space() == f.cod())) {
        throw TopologyError(ErrorCode::FingerprintMismatch, "lattices do not belong to the map's spaces");
    }
}

// Images of every member of `from` land in `to`.
bool images_in(const SpaceMap& f, const Family& from, const Family& to) {
    return std::all_of(from.members.begin(), from.members.end(), [&](Mask a) { return to.contains(f.image_of(a)); });
}

// Preimages of every member of `from` land in `to`.
bool preimages_in(const SpaceMap& f, const Family& from, const Family& to) {
    return std::all_of(from.members.begin(), from.members.end(), [&](Mask b) { return to.contains(f.preimage_of(b)); });
}

bool strongly_irresolute_pointwise(const SpaceMap& f, const Lattice& dom, const Lattice& cod) {
    const Family& ex = dom.family(Kind::EStar);
    const Family& ey = cod.family(Kind::EStar);
    for (int x = 0; x < dom.size(); ++x) {
        const int fx = f.image()[x];
        for (Mask v : ey.members) {
            if ((v >> fx & 1U) == 0) continue;
            const bool found = std::any_of(ex.members.begin(), ex.members.end(), [&](Mask u) {
                return (u >> x & 1U) != 0 && is_subset(f.image_of(dom.estar_closure(u)), v);
            });
            if (!found) return false;
        }
    }
    return true;
}

// ∀ B ⊆ Y, ∀ U in u_sort with f⁻¹[B] ⊆ U: ∃ V in v_sort, B ⊆ V, f⁻¹[V] ⊆ U.
bool lemma_characterization(const SpaceMap& f, const Lattice& cod, const Family& u_sort, const Family& v_sort) {
    for (Mask b = 0;; ++b) {
        const Mask pre = f.preimage_of(b);
        for (Mask u : u_sort.members) {
            if (!is_subset(pre, u)) continue;
            const bool found = std::any_of(v_sort.members.begin(), v_sort.members.end(), [&](Mask v) {
                return is_subset(b, v) && is_subset(f.preimage_of(v), u);
            });
            if (!found) return false;
        }
        if (b == cod.full()) break;
    }
    return true;
}

}  // namespace

MapClassReport classify_map(const SpaceMap& f, const Lattice& dom, const Lattice& cod) {
    require_lattices(f, dom, cod);
    MapClassReport r;
    r.continuous = preimages_in(f, cod.open_sets(), dom.open_sets());
    r.closed = images_in(f, dom.closed_sets(), cod.closed_sets());
    r.open = images_in(f, dom.open_sets(), cod.open_sets());
    r.injective = f.injective();
    r.surjective = f.surjective();
    r.estar_theta_continuous = preimages_in(f, cod.closed_sets(), dom.etheta_closed());
    r.strongly_estar_irresolute_pointwise = strongly_irresolute_pointwise(f, dom, cod);
    r.strongly_estar_irresolute_preimage = preimages_in(f, cod.etheta_open(), dom.etheta_open());
    r.estar_theta_closed = images_in(f, dom.closed_sets(), cod.etheta_closed());
    r.estar_theta_open = images_in(f, dom.open_sets(), cod.etheta_open());
    r.pre_estar_theta_closed = images_in(f, dom.etheta_closed(), cod.etheta_closed());
    r.pre_estar_theta_open = images_in(f, dom.etheta_open(), cod.etheta_open());
    r.ge_closed = images_in(f, dom.closed_sets(), cod.g_closed(GVariant::GeStarTheta));
    r.ge_open = images_in(f, dom.open_sets(), cod.g_open(GVariant::GeStarTheta));
    r.pre_ge_closed = images_in(f, dom.g_closed(GVariant::GeStarTheta), cod.g_closed(GVariant::GeStarTheta));
    r.pre_ge_open = images_in(f, dom.g_open(GVariant::GeStarTheta), cod.g_open(GVariant::GeStarTheta));
    r.pair_star_closed = images_in(f, dom.etheta_closed(), cod.g_closed(GVariant::Pair));
    r.almost_estar_theta_irresolute = true;
    r.almost_estar_theta_irresolute_inclusion = true;
    for (Mask u : dom.etheta_open().members) {
        const Mask lhs = f.image_of(dom.etheta_closure(u));
        const Mask rhs = cod.etheta_closure(f.image_of(u));
        if (lhs != rhs) r.almost_estar_theta_irresolute = false;
        if (!is_subset(lhs, rhs)) r.almost_estar_theta_irresolute_inclusion = false;
    }
    return r;
}

MapClassReport classify_map(const SpaceMap& f) { return classify_map(f, *Lattice::of(f.dom()), *Lattice::of(f.cod())); }

std::string_view lemma_id(MapLemma l) {
    switch (l) {
        case MapLemma::Closed: return "L_CLOSED";
        case MapLemma::PreClosed: return "L_PRECLOSED";
        case MapLemma::G: return "L_G";
        case MapLemma::PreG: return "L_PRE_G";
        case MapLemma::Pair: return "L_PAIR";
    }
    return "?";
}

ClauseVector lemma_equivalence(const SpaceMap& f, const Lattice& dom, const Lattice& cod, MapLemma l) {
    require_lattices(f, dom, cod);
    const std::string id(lemma_id(l));
    switch (l) {
        case MapLemma::Closed:
            return ClauseVector::from(id, {images_in(f, dom.closed_sets(), cod.etheta_closed()),
                                           lemma_characterization(f, cod, dom.open_sets(), cod.etheta_open())});
        case MapLemma::PreClosed:
            return ClauseVector::from(id, {images_in(f, dom.etheta_closed(), cod.etheta_closed()),
                                           lemma_characterization(f, cod, dom.etheta_open(), cod.etheta_open())});
        case MapLemma::G:
            return ClauseVector::from(
                id, {images_in(f, dom.closed_sets(), cod.g_closed(GVariant::GeStarTheta)),
                     lemma_characterization(f, cod, dom.open_sets(), cod.g_open(GVariant::GeStarTheta))});
        case MapLemma::PreG:
            return ClauseVector::from(id, {images_in(f, dom.g_closed(GVariant::GeStarTheta),
                                                     cod.g_closed(GVariant::GeStarTheta)),
                                           lemma_characterization(f, cod, dom.g_open(GVariant::GeStarTheta),
                                                                  cod.g_open(GVariant::GeStarTheta))});
        case MapLemma::Pair:
            return ClauseVector::from(id, {images_in(f, dom.etheta_closed(), cod.g_closed(GVariant::Pair)),
                                           lemma_characterization(f, cod, dom.etheta_open(), cod.g_open(GVariant::Pair))});
    }
    throw TopologyError(ErrorCode::UnknownTheorem, "unknown lemma");
}

ClauseVector lemma_equivalence(const SpaceMap& f, MapLemma l) {
    return lemma_equivalence(f, *Lattice::of(f.dom()), *Lattice::of(f.cod()), l);
}

std::string_view theorem_id(PreservationTheorem t) {
    switch (t) {
        case PreservationTheorem::T8: return "T8";
        case PreservationTheorem::NormPush: return "T_norm_push";
        case PreservationTheorem::NormG: return "T_norm_g";
        case PreservationTheorem::Pull: return "T_pull";
        case PreservationTheorem::Pull2: return "T_pull2";
        case PreservationTheorem::PairPush: return "T_pair_push";
        case PreservationTheorem::PairPull: return "T_pair_pull";
    }
    return "?";
}

PreservationTheorem parse_preservation_theorem(std::string_view id) {
    for (PreservationTheorem t : all_preservation_theorems) {
        if (id == theorem_id(t)) return t;
    }
    throw TopologyError(ErrorCode::UnknownTheorem, "unknown preservation theorem '" + std::string(id) + "'");
}

namespace {

Verdict conclude(std::string id, const SpaceMap& f, const Verdict& conclusion, std::string_view which_space) {
    if (conclusion.holds) return holds(std::move(id));
    Witness w = *conclusion.witness;
    w.role = "theorem violation: " + w.role;
    w.add_text("map", f.id());
    w.add_text("space", std::string(which_space));
    w.add_text("property", conclusion.property_id);
    return fails(std::move(id), std::move(w));
}

}  // namespace

Verdict preservation_check(PreservationTheorem t, const SpaceMap& f, const Lattice& dom, const Lattice& cod) {
    const MapClassReport c = classify_map(f, dom, cod);
    std::string id(theorem_id(t));
    const Verdict vacuous{id, true, true, std::nullopt};
    switch (t) {
        case PreservationTheorem::T8:
            if (!(c.continuous && c.estar_theta_open && c.ge_closed && c.surjective &&
                  regularity(dom, RegularityVariant::Classical).holds))
                return vacuous;
            return conclude(id, f, regularity(cod, RegularityVariant::EStarTheta), "codomain");
        case PreservationTheorem::NormPush:
            if (!(c.pre_estar_theta_open && c.continuous && c.almost_estar_theta_irresolute && c.surjective &&
                  normality(dom, NormalityVariant::EStarTheta).holds))
                return vacuous;
            return conclude(id, f, normality(cod, NormalityVariant::EStarTheta), "codomain");
        case PreservationTheorem::NormG: {
            const bool from_normal =
                c.ge_closed && c.continuous && c.surjective && normality(dom, NormalityVariant::Classical).holds;
            const bool from_etheta_normal =
                c.pre_ge_closed && c.continuous && c.surjective && normality(dom, NormalityVariant::EStarTheta).holds;
            if (!from_normal && !from_etheta_normal) return vacuous;
            Verdict v = conclude(id, f, normality(cod, NormalityVariant::EStarTheta), "codomain");
            if (v.witness) v.witness->add_text("case", from_normal ? "ge-closed from normal" : "pre ge-closed from e*theta-normal");
            return v;
        }
        case PreservationTheorem::Pull:
            if (!(c.strongly_estar_irresolute_pointwise && c.closed && c.injective &&
                  normality(cod, NormalityVariant::EStarTheta).holds))
                return vacuous;
            return conclude(id, f, normality(dom, NormalityVariant::EStarTheta), "domain");
        case PreservationTheorem::Pull2:
            if (!(c.estar_theta_continuous && c.closed && c.injective &&
                  normality(cod, NormalityVariant::Classical).holds))
                return vacuous;
            return conclude(id, f, normality(dom, NormalityVariant::EStarTheta), "domain");
        case PreservationTheorem::PairPush:
            if (!(c.pair_star_closed && c.strongly_estar_irresolute_pointwise && c.surjective &&
                  normality(dom, NormalityVariant::PairStar).holds))
                return vacuous;
            return conclude(id, f, normality(cod, NormalityVariant::PairStar), "codomain");
        case PreservationTheorem::PairPull:
            if (!(c.pre_estar_theta_closed && c.strongly_estar_irresolute_pointwise && c.injective &&
                  normality(cod, NormalityVariant::PairStar).holds))
                return vacuous;
            return conclude(id, f, normality(dom, NormalityVariant::PairStar), "domain");
    }
    throw TopologyError(ErrorCode::UnknownTheorem, "unknown preservation theorem");
}

Verdict preservation_check(PreservationTheorem t, const SpaceMap& f) {
    return preservation_check(t, f, *Lattice::of(f.dom()), *Lattice::of(f.cod()));
}

std::vector<std::vector<int>> enumerate_images(int dom_n, int cod_n, std::uint64_t seed, std::size_t samples) {
    double count = 1;
    for (int i = 0; i < dom_n; ++i) count *= cod_n;
    std::vector<std::vector<int>> out;
    if (count <= double(1 << 20)) {
        std::vector<int> img(dom_n, 0);
        while (true) {
            out.push_back(img);
            int i = 0;
            while (i < dom_n && ++img[i] == cod_n) img[i++] = 0;
            if (i == dom_n) break;
        }
        return out;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, cod_n - 1);
    out.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<int> img(dom_n);
        for (int& y : img) y = pick(rng);
        out.push_back(std::move(img));
    }
    return out;
}

std::size_t MapCampaignReport::total_discrepancies() const {
    std::size_t t = irresolute_disagreements;
    for (const auto& [k, v] : lemma_disagreements) t += v;
    for (const auto& [k, v] : theorem_violations) t += v;
    return t;
}

MapCampaignReport map_campaign(const std::vector<Space>& spaces, std::uint64_t seed) {
    std::vector<std::shared_ptr<const Lattice>> lattices;
    for (const Space& s : spaces) lattices.push_back(std::make_shared<const Lattice>(s));

    const std::size_t pairs = spaces.size() * spaces.size();
    std::vector<MapCampaignReport> per_pair(pairs);
    kernels::parallel_for(pairs, [&](std::size_t p) {
        const Lattice& dom = *lattices[p / spaces.size()];
        const Lattice& cod = *lattices[p % spaces.size()];
        MapCampaignReport& r = per_pair[p];
        for (auto& img : enumerate_images(dom.size(), cod.size(), seed + p)) {
            const SpaceMap f(dom.space(), cod.space(), std::move(img));
            ++r.maps;
            for (MapLemma l : all_map_lemmas) {
                const ClauseVector cv = lemma_equivalence(f, dom, cod, l);
                if (!cv.all_equal) {
                    ++r.lemma_disagreements[std::string(lemma_id(l))];
                    r.discrepancies.push_back(std::string(lemma_id(l)) + " " + f.id());
                }
            }
            const MapClassReport c = classify_map(f, dom, cod);
            if (c.strongly_estar_irresolute_pointwise != c.strongly_estar_irresolute_preimage) {
                ++r.irresolute_disagreements;
                r.discrepancies.push_back(std::string("strongly-e*-irresolute pointwise=") +
                                          (c.strongly_estar_irresolute_pointwise ? "1" : "0") + " preimage=" +
                                          (c.strongly_estar_irresolute_preimage ? "1" : "0") + " " + f.id());
            }
            if (c.almost_estar_theta_irresolute != c.almost_estar_theta_irresolute_inclusion) {
                ++r.almost_irresolute_reading_differs;
            }
            for (PreservationTheorem t : all_preservation_theorems) {
                const Verdict v = preservation_check(t, f, dom, cod);
                const std::string id(theorem_id(t));
                if (!v.vacuous) ++r.theorem_triggers[id];
                if (!v.holds) {
                    ++r.theorem_violations[id];
                    r.discrepancies.push_back(id + " " + f.id());
                }
            }
        }
    });

    MapCampaignReport total;
    total.space_pairs = pairs;
    for (PreservationTheorem t : all_preservation_theorems) {
        total.theorem_triggers[std::string(theorem_id(t))] = 0;
        total.theorem_violations[std::string(theorem_id(t))] = 0;
    }
    for (MapLemma l : all_map_lemmas) total.lemma_disagreements[std::string(lemma_id(l))] = 0;
    constexpr std::size_t discrepancy_cap = 200;
    for (const MapCampaignReport& r : per_pair) {
        total.maps += r.maps;
        total.irresolute_disagreements += r.irresolute_disagreements;
        total.almost_irresolute_reading_differs += r.almost_irresolute_reading_differs;
        for (const auto& [k, v] : r.lemma_disagreements) total.lemma_disagreements[k] += v;
        for (const auto& [k, v] : r.theorem_triggers) total.theorem_triggers[k] += v;
        for (const auto& [k, v] : r.theorem_violations) total.theorem_violations[k] += v;
        for (const auto& d : r.discrepancies) {
            if (total.discrepancies.size() < discrepancy_cap) total.discrepancies.push_back(d);
        }
    }
    return total;
}

}  // namespace finitop
