#include "finitop/zoo.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "finitop/error.hpp"
#include "finitop/genop.hpp"
#include "finitop/kernels.hpp"
#include "finitop/lattice.hpp"

namespace finitop {

namespace {

// A family of subsets of an n ≤ 5 point set as a bitmap over the 32 masks.
using FamilyBits = std::uint64_t;

bool has(FamilyBits f, Mask m) { return (f >> m & 1U) != 0; }

FamilyBits close_family(FamilyBits f, int n) {
    const Mask subsets = Mask{1} << n;
    bool grew = true;
    while (grew) {
        grew = false;
        for (Mask a = 0; a < subsets; ++a) {
            if (!has(f, a)) continue;
            for (Mask b = a + 1; b < subsets; ++b) {
                if (!has(f, b)) continue;
                const FamilyBits add = (FamilyBits{1} << (a | b)) | (FamilyBits{1} << (a & b));
                if ((f | add) != f) {
                    f |= add;
                    grew = true;
                }
            }
        }
    }
    return f;
}

std::vector<Mask> family_members(FamilyBits f, int n) {
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        if (has(f, m)) out.push_back(m);
    }
    return out;
}

// Close-by-one: a child adds candidate c to a closed family and is kept only
// if closing it introduces no candidate below c that the parent lacked, so
// each closed family is reached along exactly one path.
void grow(FamilyBits f, Mask last, int n, const std::function<void(const Space&)>& visit) {
    visit(Space::validate(n, family_members(f, n)));
    const Mask full = full_mask(n);
    for (Mask c = last + 1; c < full; ++c) {
        if (has(f, c)) continue;
        const FamilyBits g = close_family(f | (FamilyBits{1} << c), n);
        const FamilyBits below = (FamilyBits{1} << c) - 1;
        if ((g & below) != (f & below)) continue;
        grow(g, c, n, visit);
    }
}

void require_enumerable(int n) {
    if (n < 1) throw TopologyError(ErrorCode::Malformed, "need at least one point");
    if (n > exhaustive_cap) {
        throw TopologyError(ErrorCode::CapExceeded, "exhaustive enumeration is capped at n=" +
                                                        std::to_string(exhaustive_cap) + ", got n=" +
                                                        std::to_string(n));
    }
}

std::vector<Mask> least_relabelling(const Space& s) {
    std::vector<int> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Mask> best;
    std::vector<Mask> cur(s.opens().size());
    do {
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = permute_mask(s.opens()[i], perm);
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string id_of(int n, const std::vector<Mask>& opens) {
    std::string id = std::to_string(n) + ":";
    for (std::size_t i = 0; i < opens.size(); ++i) {
        if (i) id += ',';
        id += mask_to_hex(opens[i]);
    }
    return id;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Bumped whenever an evaluator changes meaning.
constexpr std::string_view evaluator_revision = "1";

}  // namespace

void for_each_topology(int n, const std::function<void(const Space&)>& visit) {
    require_enumerable(n);
    const Mask full = full_mask(n);
    grow(close_family((FamilyBits{1} << 0) | (FamilyBits{1} << full), n), 0, n, visit);
}

std::vector<Space> enumerate_topologies(int n, EnumerationMode mode) {
    std::vector<Space> out;
    if (mode == EnumerationMode::Labeled) {
        for_each_topology(n, [&](const Space& s) { out.push_back(s); });
        return out;
    }
    std::map<std::string, Space> classes;
    for_each_topology(n, [&](const Space& s) {
        const std::vector<Mask> least = least_relabelling(s);
        classes.try_emplace(id_of(n, least), Space::validate(n, least));
    });
    for (auto& [id, s] : classes) out.push_back(s);
    return out;
}

std::vector<Space> enumerate_up_to(int n_max, EnumerationMode mode) {
    std::vector<Space> out;
    for (int n = 1; n <= n_max; ++n) {
        auto part = enumerate_topologies(n, mode);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::string canonical_form(const Space& s) { return id_of(s.size(), least_relabelling(s)); }

Space canonical_representative(const Space& s) { return Space::validate(s.size(), least_relabelling(s)); }

Space random_space(int n, std::uint64_t seed, double density) {
    if (n < 1 || n > max_points) {
        throw TopologyError(n < 1 ? ErrorCode::Malformed : ErrorCode::TooManyPoints,
                            "random_space needs 1 <= n <= " + std::to_string(max_points));
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
    std::vector<Mask> gens;
    for (Mask m = 1; m < full_mask(n); ++m) {
        if (keep(rng)) gens.push_back(m);
    }
    return Space::generated_by(n, gens);
}

ZooRecord make_record(const Space& s, bool with_properties) {
    ZooRecord r{canonical_form(s), s.size(), s.opens(), {}};
    if (with_properties) {
        const Lattice lat(s);
        for (const std::string& id : property_ids()) r.properties[id] = evaluate_property(lat, id).holds;
    }
    return r;
}

bool replay_record(const ZooRecord& r) {
    const Space s = r.space();
    if (canonical_form(s) != r.canonical_id) return false;
    const Lattice lat(s);
    return std::all_of(r.properties.begin(), r.properties.end(),
                       [&](const auto& kv) { return evaluate_property(lat, kv.first).holds == kv.second; });
}

std::string_view campaign_name(Campaign c) {
    switch (c) {
        case Campaign::Theorems: return "THEOREMS";
        case Campaign::Implications: return "IMPLICATIONS";
        case Campaign::Separations: return "SEPARATIONS";
    }
    return "?";
}

std::string_view entailment_name(Entailment e) { return e == Entailment::Implied ? "IMPLIED" : "REFUTED"; }

const MatrixCell& ImplicationMatrix::at(const std::string& premise, const std::string& conclusion) const {
    const auto index = [&](const std::string& id) {
        const auto it = std::find(properties.begin(), properties.end(), id);
        if (it == properties.end()) throw TopologyError(ErrorCode::Malformed, "property '" + id + "' not in matrix");
        return static_cast<std::size_t>(it - properties.begin());
    };
    return cells[index(premise) * properties.size() + index(conclusion)];
}

std::size_t ScanReport::discrepancies() const {
    std::size_t total = 0;
    for (const auto& t : theorems) total += t.spaces - t.agreements;
    for (const auto& a : arrows) total += a.violations;
    return total;
}

const std::vector<std::string>& theorem_campaign_ids() {
    static const std::vector<std::string> ids = {
        "thm1", "thm2",  "lemma2", "thm9",  "thm10",         "thm00",      "sep",
        "lemma1", "gopen.ge_star_theta", "gopen.pair", "thm3", "thm.normal_r0", "refinement",
    };
    return ids;
}

namespace {

bool g_open_agrees(const Lattice& lat, GVariant v) {
    const Family& open = lat.g_open(v);
    for (Mask a = 0;; ++a) {
        if (g_open_check(lat, v, a).holds != open.contains(a)) return false;
        if (a == lat.full()) break;
    }
    return true;
}

bool theorem_agrees(const Lattice& lat, const std::string& id) {
    if (id == "thm1") return regularity_clauses_thm1(lat).all_equal;
    if (id == "thm2") return regularity_clauses_thm2(lat).all_equal;
    if (id == "lemma2") return regularity_clauses_lemma2(lat).all_equal;
    if (id == "thm9") return normality_clauses(lat, NormalityTheorem::Thm9).all_equal;
    if (id == "thm10") return normality_clauses(lat, NormalityTheorem::Thm10).all_equal;
    if (id == "thm00") return normality_clauses(lat, NormalityTheorem::Thm00).all_equal;
    if (id == "sep") return separation_axioms(lat).all_equal;
    if (id == "lemma1") return lemma1_exhaustive(lat).holds;
    if (id == "gopen.ge_star_theta") return g_open_agrees(lat, GVariant::GeStarTheta);
    if (id == "gopen.pair") return g_open_agrees(lat, GVariant::Pair);
    if (id == "thm3") return composite_thm3(lat).holds;
    if (id == "thm.normal_r0") return normal_r0_theorem(lat).holds;
    if (id == "refinement") return refinement_violations(lat).empty();
    throw TopologyError(ErrorCode::UnknownTheorem, "unknown theorem '" + id + "'");
}

std::vector<std::string> matrix_properties(Campaign c) {
    std::vector<std::string> ids;
    for (const std::string& id : property_ids()) {
        const bool sep = id.rfind("sep.", 0) == 0;
        if (sep == (c == Campaign::Separations)) ids.push_back(id);
    }
    return ids;
}

struct Evaluated {
    std::string canonical_id;
    std::vector<bool> theorem_ok;
    std::map<std::string, bool> props;
};

void add_witness(std::vector<std::string>& ws, const std::string& id) {
    if (std::find(ws.begin(), ws.end(), id) == ws.end()) ws.push_back(id);
}

}  // namespace

ScanReport scan(const std::vector<Space>& corpus, Campaign campaign) {
    if (corpus.empty()) throw TopologyError(ErrorCode::Malformed, "scan needs a nonempty corpus");

    std::vector<std::string> theorem_ids;
    if (campaign == Campaign::Theorems) theorem_ids = theorem_campaign_ids();
    if (campaign == Campaign::Separations) theorem_ids = {"sep"};
    std::vector<std::string> props;
    if (campaign != Campaign::Theorems) props = matrix_properties(campaign);

    std::vector<Evaluated> ev(corpus.size());
    kernels::parallel_for(corpus.size(), [&](std::size_t i) {
        const Lattice lat(corpus[i]);
        Evaluated& e = ev[i];
        e.canonical_id = canonical_form(corpus[i]);
        for (const std::string& id : theorem_ids) e.theorem_ok.push_back(theorem_agrees(lat, id));
        for (const std::string& id : props) e.props[id] = evaluate_property(lat, id).holds;
        if (campaign == Campaign::Implications) {
            for (const Arrow& a : implication_expectations()) {
                for (const std::string& p : a.premises) e.props.try_emplace(p, evaluate_property(lat, p).holds);
                e.props.try_emplace(a.conclusion, evaluate_property(lat, a.conclusion).holds);
            }
        }
    });

    // Assembly is serial and walks the corpus in canonical-id order so that
    // witness lists do not depend on thread scheduling or corpus order.
    std::vector<std::size_t> order(corpus.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ev[a].canonical_id < ev[b].canonical_id; });

    ScanReport r;
    r.campaign = campaign;
    r.corpus_size = corpus.size();
    for (std::size_t t = 0; t < theorem_ids.size(); ++t) {
        TheoremTally tally{theorem_ids[t], corpus.size(), 0, {}};
        for (std::size_t i : order) {
            if (ev[i].theorem_ok[t]) {
                ++tally.agreements;
            } else {
                add_witness(tally.discrepancies, ev[i].canonical_id);
            }
        }
        r.theorems.push_back(std::move(tally));
    }

    if (!props.empty()) {
        ImplicationMatrix m;
        m.properties = props;
        for (const std::string& p : props) {
            for (const std::string& q : props) {
                MatrixCell cell{p, q, Entailment::Implied, 0, {}};
                for (std::size_t i : order) {
                    if (ev[i].props.at(p) && !ev[i].props.at(q)) {
                        ++cell.refutations;
                        add_witness(cell.witnesses, ev[i].canonical_id);
                    }
                }
                if (cell.refutations > 0) cell.status = Entailment::Refuted;
                m.cells.push_back(std::move(cell));
            }
        }
        r.matrix = std::move(m);
    }

    if (campaign == Campaign::Implications) {
        for (const Arrow& a : implication_expectations()) {
            ArrowCheck check{a, 0, 0, {}};
            for (std::size_t i : order) {
                const auto& pr = ev[i].props;
                const bool premises = std::all_of(a.premises.begin(), a.premises.end(),
                                                  [&](const std::string& p) { return pr.at(p); });
                if (!premises) continue;
                ++check.triggered;
                if (!pr.at(a.conclusion)) {
                    ++check.violations;
                    add_witness(check.witnesses, ev[i].canonical_id);
                }
            }
            if (a.premises.size() == 1) {
                ConverseCheck conv{a.conclusion, a.premises.front(), false, std::nullopt};
                for (std::size_t i : order) {
                    const auto& pr = ev[i].props;
                    if (pr.at(conv.premise) && !pr.at(conv.conclusion)) {
                        conv.refuted = true;
                        conv.witness = ev[i].canonical_id;
                        break;
                    }
                }
                r.converses.push_back(std::move(conv));
            }
            r.arrows.push_back(std::move(check));
        }
    }
    return r;
}

std::string property_version() {
    std::string text(evaluator_revision);
    for (const std::string& id : property_ids()) text += "|" + id;
    for (const std::string& id : theorem_campaign_ids()) text += "|" + id;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
    return buf;
}

OpenQuestionReport search_open_question(int n_max) {
    require_enumerable(n_max);
    OpenQuestionReport r;
    r.n_max = n_max;
    r.property_version = property_version();
    for (int n = 1; n <= n_max && !r.found; ++n) {
        const std::vector<Space> spaces = enumerate_topologies(n, EnumerationMode::Canonical);
        // Evaluate in parallel, then take the first hit in canonical order.
        std::vector<std::uint8_t> hit(spaces.size());
        kernels::parallel_for(spaces.size(), [&](std::size_t i) {
            const Lattice lat(spaces[i]);
            hit[i] = regularity(lat, RegularityVariant::EStar).holds &&
                     !regularity(lat, RegularityVariant::EStarTheta).holds;
        });
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            ++r.corpus_size;
            if (!hit[i]) continue;
            const Lattice lat(spaces[i]);
            r.found = true;
            r.canonical_id = canonical_form(spaces[i]);
            r.n = n;
            r.opens = spaces[i].opens();
            r.evidence = {regularity(lat, RegularityVariant::EStar), regularity(lat, RegularityVariant::EStarTheta)};
            break;
        }
    }
    return r;
}

}  // namespace finitop
