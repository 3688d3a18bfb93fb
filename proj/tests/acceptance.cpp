// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "finitop/axioms.hpp"
#include "finitop/genop.hpp"
#include "finitop/json_io.hpp"
#include "finitop/kernels.hpp"
#include "finitop/maps.hpp"
#include "finitop/zoo.hpp"
#include "fixtures.hpp"

using namespace finitop;
using fixtures::set;
using fixtures::sets;

namespace {

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0 = untimed
    std::function<bool(std::string&)> body;
};

bool run(const Criterion& c) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = c.body(detail);
    } catch (const std::exception& e) {
        detail += std::string(" exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
    if (!in_time) detail += " (over the time limit)";
    const bool pass = ok && in_time;
    std::printf("%s C%d %s: %.3f s", pass ? "PASS" : "FAIL", c.number, c.title.c_str(), secs);
    if (c.limit_seconds > 0) std::printf(" (limit %.0f s)", c.limit_seconds);
    std::printf("; %s\n", detail.c_str());
    std::fflush(stdout);
    return pass;
}

bool all_equal_on(const std::vector<Space>& corpus, const std::function<ClauseVector(const Lattice&)>& f,
                  std::size_t& failures) {
    std::vector<std::uint8_t> ok(corpus.size());
    kernels::parallel_for(corpus.size(), [&](std::size_t i) { ok[i] = f(Lattice(corpus[i])).all_equal; });
    failures = std::count(ok.begin(), ok.end(), 0);
    return failures == 0;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

bool example1(std::string& detail) {
    const Space s = fixtures::s1();
    const Lattice lat(s);
    const bool estar = lat.etheta_open().count() == 16;
    const bool beta = lat.theta_open(ThetaKind::BetaTheta).members == sets({{}, {1}, {0, 2, 3}, {0, 1, 2, 3}});
    const bool reg = regularity(lat, RegularityVariant::EStarTheta).holds;
    const bool not_beta = !regularity(lat, RegularityVariant::BetaTheta).holds;
    detail = "e*thetaO=" + std::to_string(lat.etheta_open().count()) + " sets, betathetaO " +
             (beta ? "matches" : "differs") + ", e*theta-regular=" + (reg ? "true" : "false") +
             ", betatheta-regular=" + (not_beta ? "false" : "true");
    return estar && beta && reg && not_beta;
}

bool example2(std::string& detail) {
    const Lattice lat(fixtures::s2());
    const auto expected = fixtures::all_but(4, sets({{2}, {3}, {2, 3}}));
    const bool fam = lat.family(Kind::EStar).members == expected && lat.etheta_open().members == expected;
    const bool reg = regularity(lat, RegularityVariant::EStarTheta).holds;
    const bool classical = regularity(lat, RegularityVariant::Classical).holds;
    const bool pair = regularity(lat, RegularityVariant::PairETheta).holds;
    detail = std::string("families ") + (fam ? "match" : "differ") + ", e*theta-regular=" + (reg ? "true" : "false") +
             ", regular=" + (classical ? "true" : "false") + ", (e*,theta)-regular=" + (pair ? "true" : "false");
    return fam && reg && !classical && !pair;
}

bool example3(std::string& detail) {
    const Lattice lat(fixtures::s3());
    const auto expected = fixtures::all_but(4, {set({3})});
    const bool fam = lat.family(Kind::EStar).members == expected && lat.etheta_open().members == expected;
    const bool etheta = normality(lat, NormalityVariant::EStarTheta).holds;
    const bool normal = normality(lat, NormalityVariant::Classical).holds;
    detail = std::string("families ") + (fam ? "match" : "differ") + ", e*theta-normal=" +
             (etheta ? "true" : "false") + ", normal=" + (normal ? "true" : "false");
    return fam && etheta && !normal;
}

bool lemma1_suite(std::string& detail) {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> size(2, 6);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    std::size_t random_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = size(rng);
        const Space s = random_space(n, rng(), density(rng));
        const Lattice lat(s);
        std::uniform_int_distribution<Mask> pick(0, s.full());
        if (!lemma1_check(lat, pick(rng), pick(rng)).holds) ++random_failures;
    }
    std::size_t spaces = 0, exhaustive_failures = 0;
    for (const Space& s : enumerate_up_to(3, EnumerationMode::Labeled)) {
        ++spaces;
        if (!lemma1_exhaustive(Lattice(s)).holds) ++exhaustive_failures;
    }
    detail = "1000 random instances, " + std::to_string(random_failures) + " failures; " + std::to_string(spaces) +
             " spaces exhaustively, " + std::to_string(exhaustive_failures) + " failures";
    return random_failures == 0 && exhaustive_failures == 0;
}

bool campaigns(std::string& detail) {
    const std::vector<Space> corpus = enumerate_topologies(4, EnumerationMode::Labeled);
    const std::size_t oracle = fixtures::brute_force_topology_count(4);
    const std::vector<std::pair<std::string, std::function<ClauseVector(const Lattice&)>>> theorems = {
        {"thm1", regularity_clauses_thm1},
        {"thm2", regularity_clauses_thm2},
        {"thm9", [](const Lattice& l) { return normality_clauses(l, NormalityTheorem::Thm9); }},
        {"thm10", [](const Lattice& l) { return normality_clauses(l, NormalityTheorem::Thm10); }},
        {"thm00", [](const Lattice& l) { return normality_clauses(l, NormalityTheorem::Thm00); }},
        {"sep", separation_axioms},
    };
    bool ok = corpus.size() == 355 && oracle == 355;
    detail = std::to_string(corpus.size()) + " spaces (oracle " + std::to_string(oracle) + ")";
    // Smaller sizes ride along so that the whole n <= 4 range is covered.
    std::vector<Space> all = enumerate_up_to(3, EnumerationMode::Labeled);
    all.insert(all.end(), corpus.begin(), corpus.end());
    for (const auto& [id, f] : theorems) {
        std::size_t failures = 0;
        ok = all_equal_on(all, f, failures) && ok;
        detail += ", " + id + ":" + std::to_string(failures);
    }
    detail += " discrepancies over " + std::to_string(all.size()) + " spaces with n <= 4";
    return ok;
}

bool implications(std::string& detail) {
    const ScanReport r = scan(enumerate_up_to(4, EnumerationMode::Labeled), Campaign::Implications);
    std::size_t violations = 0;
    for (const ArrowCheck& a : r.arrows) violations += a.violations;
    const MatrixCell& beta = r.matrix->at("regular.estar_theta", "regular.beta_theta");
    const MatrixCell& normal = r.matrix->at("normal.estar_theta", "normal.classical");
    const bool s1 = beta.status == Entailment::Refuted && contains(beta.witnesses, canonical_form(fixtures::s1()));
    const bool s3 = normal.status == Entailment::Refuted && contains(normal.witnesses, canonical_form(fixtures::s3()));
    detail = std::to_string(r.corpus_size) + " spaces, " + std::to_string(r.arrows.size()) + " arrows, " +
             std::to_string(violations) + " violations; S1 witness " + (s1 ? "present" : "missing") +
             ", S3 witness " + (s3 ? "present" : "missing");
    return violations == 0 && r.arrows.size() == implication_expectations().size() && s1 && s3;
}

bool map_campaigns(std::string& detail) {
    const auto spaces = enumerate_up_to(3, EnumerationMode::Canonical);
    const MapCampaignReport r = map_campaign(spaces);
    std::size_t lemma = 0, violations = 0;
    for (const auto& [k, v] : r.lemma_disagreements) lemma += v;
    for (const auto& [k, v] : r.theorem_violations) violations += v;
    detail = std::to_string(spaces.size()) + " spaces, " + std::to_string(r.maps) + " maps; lemma disagreements " +
             std::to_string(lemma) + ", irresolute disagreements " + std::to_string(r.irresolute_disagreements) +
             ", theorem violations " + std::to_string(violations) + "; triggers";
    for (const auto& [k, v] : r.theorem_triggers) detail += " " + k + "=" + std::to_string(v);
    return spaces.size() == 13 && lemma == 0 && r.irresolute_disagreements == 0 && violations == 0 &&
           r.theorem_triggers.size() == std::size(all_preservation_theorems);
}

bool open_question(std::string& detail) {
    const OpenQuestionReport a = search_open_question(5);
    const OpenQuestionReport b = search_open_question(5);
    const bool deterministic = search_json(a).dump() == search_json(b).dump();
    bool sound = false;
    if (a.found) {
        const Lattice lat(Space::validate(a.n, a.opens));
        const Verdict theta = regularity(lat, RegularityVariant::EStarTheta);
        sound = regularity(lat, RegularityVariant::EStar).holds && !theta.holds && replay_witness(lat, theta);
        detail = "witness " + *a.canonical_id + (sound ? " checks out" : " does not check out");
    } else {
        sound = a.n_max == 5 && a.corpus_size == 185;
        detail = "none found up to n=5 over " + std::to_string(a.corpus_size) + " canonical spaces";
    }
    detail += std::string(", rerun ") + (deterministic ? "identical" : "differs");
    return sound && deterministic;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Example-1 reproduction", 1, example1},
        {2, "Example-2 reproduction", 0, example2},
        {3, "Example-3 reproduction", 0, example3},
        {4, "Lemma-1 suite", 30, lemma1_suite},
        {5, "Characterization campaigns", 300, campaigns},
        {6, "Implication scan", 0, implications},
        {7, "Map campaigns", 600, map_campaigns},
        {8, "Open-question search", 0, open_question},
    };
    int failed = 0;
    for (const Criterion& c : criteria) failed += run(c) ? 0 : 1;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
