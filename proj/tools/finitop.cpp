#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "finitop/axioms.hpp"
#include "finitop/error.hpp"
#include "finitop/genop.hpp"
#include "finitop/json_io.hpp"
#include "finitop/kernels.hpp"
#include "finitop/maps.hpp"
#include "finitop/zoo.hpp"

using namespace finitop;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_discrepancy = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << j.dump(2) << '\n';
}

Space load_space(const std::string& path, PointLabels& labels) {
    return space_from_json(parse_json(read_file(path)), &labels);
}

// "0,2" or "a,c"; the empty string is the empty set.
Mask parse_set(const std::string& text, const Space& s, const PointLabels& labels) {
    json points = json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const bool numeric = item.find_first_not_of("0123456789") == std::string::npos;
        if (numeric) {
            points.push_back(std::stoi(item));
        } else {
            points.push_back(item);
        }
    }
    return subset_from_json(points, s.size(), labels);
}

// Flags of every verb; CLI11 binds straight into these.
struct Options {
    std::string space_path;
    std::string op;
    std::string set = "";
    std::string kind;
    std::string properties = "all";
    std::string theorem;
    int n = 0;
    bool exhaustive = false;
    std::optional<std::uint64_t> seed;
    std::size_t samples = 100;
    bool implications = false;
    bool theorems = false;
    bool separations = false;
    std::string out;
    std::string corpus;
    bool canonical = false;
    bool up_to = false;
    bool with_properties = false;
    std::string question;
};

int run_op(const Options& o) {
    PointLabels labels;
    const Space s = load_space(o.space_path, labels);
    const auto lat = Lattice::of(s);
    const Mask a = parse_set(o.set, s, labels);

    std::string name = o.op;
    Mask result = 0;
    const auto suffix = [&](std::string_view tail) {
        return name.size() > tail.size() && name.compare(name.size() - tail.size(), tail.size(), tail) == 0;
    };
    const bool closure = suffix("-closure");
    const bool interior = suffix("-interior");
    if (name == "closure") {
        result = lat->closure(a);
    } else if (name == "interior") {
        result = lat->interior(a);
    } else if (name == "delta-closure") {
        result = lat->delta_closure(a);
    } else if (name == "delta-interior") {
        result = lat->delta_interior(a);
    } else if (closure || interior) {
        const std::string base = name.substr(0, name.size() - (closure ? 8 : 9));
        if (const auto tk = parse_theta_kind(base)) {
            result = closure ? lat->theta_closure(*tk, a) : lat->theta_interior(*tk, a);
        } else if (const auto k = parse_kind(base)) {
            result = closure ? lat->kind_closure(*k, a) : lat->kind_interior(*k, a);
        } else {
            throw UsageError("unknown operator '" + name + "'");
        }
    } else {
        throw UsageError("unknown operator '" + name +
                         "' (expected closure, interior, delta-closure, delta-interior, <kind>-closure, "
                         "<kind>-interior, estar-theta-closure, ...)");
    }
    json j;
    j["schema"] = "finitop.op/1";
    j["space"] = s.fingerprint_hex();
    j["op"] = name;
    j["input"] = subset_json(a, labels);
    j["result"] = subset_json(result, labels);
    emit(j, o.out);
    return exit_ok;
}

SetFamily family_by_name(const Space& s, const std::string& name) {
    if (const auto tk = parse_theta_kind(name)) return theta_open_family(s, *tk);
    if (const auto k = parse_kind(name)) return open_family(s, *k);
    if (name == "regular-closed") return regular_closed_family(s);
    if (name == "estar-regular") return regular_sets(s, estar_tag);
    if (name == "estar-theta-regular") return regular_sets(s, ThetaKind::EStarTheta);
    if (name == "beta-theta-regular") return regular_sets(s, ThetaKind::BetaTheta);
    if (name == "estar-theta-closed") return theta_closed_family(s, ThetaKind::EStarTheta);
    if (name == "beta-theta-closed") return theta_closed_family(s, ThetaKind::BetaTheta);
    if (name == "ge-star-theta-closed") return g_closed_family(s, GVariant::GeStarTheta);
    if (name == "ge-star-theta-open") return g_open_family(s, GVariant::GeStarTheta);
    if (name == "pair-closed") return g_closed_family(s, GVariant::Pair);
    if (name == "pair-open") return g_open_family(s, GVariant::Pair);
    throw UsageError("unknown family '" + name + "'");
}

int run_family(const Options& o) {
    PointLabels labels;
    const Space s = load_space(o.space_path, labels);
    emit(family_json(family_by_name(s, o.kind), labels), o.out);
    return exit_ok;
}

std::vector<std::string> split_ids(const std::string& text) {
    if (text == "all") return property_ids();
    std::vector<std::string> ids;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) ids.push_back(item);
    }
    return ids;
}

int run_check(const Options& o) {
    PointLabels labels;
    const Space s = load_space(o.space_path, labels);
    const std::vector<std::string> ids = split_ids(o.properties);
    for (const std::string& id : ids) {
        const auto& known = property_ids();
        if (std::find(known.begin(), known.end(), id) == known.end()) throw UsageError("unknown property '" + id + "'");
    }
    const auto lat = Lattice::of(s);
    json j;
    j["schema"] = schema::check;
    j["space"] = s.fingerprint_hex();
    j["canonical_id"] = canonical_form(s);
    json props = json::object();
    json verdicts = json::array();
    bool unreplayable = false;
    for (const std::string& id : ids) {
        const Verdict v = evaluate_property(*lat, id);
        props[id] = v.holds;
        verdicts.push_back(verdict_json(v, labels));
        if (!v.holds && !replay_witness(*lat, v)) unreplayable = true;
    }
    j["properties"] = std::move(props);
    j["verdicts"] = std::move(verdicts);
    j["witnesses_replayed"] = !unreplayable;
    emit(j, o.out);
    return unreplayable ? exit_discrepancy : exit_ok;
}

// Whether one space agrees with a space-level theorem.
bool space_theorem_holds(const Lattice& lat, const std::string& theorem) {
    if (theorem == "thm1") return regularity_clauses_thm1(lat).all_equal;
    if (theorem == "thm2") return regularity_clauses_thm2(lat).all_equal;
    if (theorem == "lemma2") return regularity_clauses_lemma2(lat).all_equal;
    if (theorem == "thm9") return normality_clauses(lat, NormalityTheorem::Thm9).all_equal;
    if (theorem == "thm10") return normality_clauses(lat, NormalityTheorem::Thm10).all_equal;
    if (theorem == "thm00") return normality_clauses(lat, NormalityTheorem::Thm00).all_equal;
    if (theorem == "sep") return separation_axioms(lat).all_equal;
    if (theorem == "lemma1") return lemma1_exhaustive(lat).holds;
    if (theorem == "thm3") return composite_thm3(lat).holds;
    if (theorem == "thm.normal_r0") return normal_r0_theorem(lat).holds;
    throw TopologyError(ErrorCode::UnknownTheorem,
                        "unknown theorem '" + theorem +
                            "' (expected thm1, thm2, lemma1, lemma2, thm3, thm9, thm10, thm00, sep, thm.normal_r0, maps)");
}

std::vector<Space> verify_corpus(const Options& o, std::string& mode) {
    if (o.exhaustive) {
        mode = "exhaustive";
        return enumerate_topologies(o.n, EnumerationMode::Labeled);
    }
    if (!o.seed) throw UsageError("random verification needs an explicit --seed (or pass --exhaustive)");
    mode = "random";
    std::vector<Space> out;
    std::mt19937_64 rng(*o.seed);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (std::size_t i = 0; i < o.samples; ++i) out.push_back(random_space(o.n, rng(), density(rng)));
    return out;
}

int run_verify(const Options& o) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    json j;
    j["schema"] = schema::verify;
    j["theorem"] = o.theorem;
    j["n"] = o.n;
    if (o.theorem == "maps") {
        if (!o.exhaustive) throw UsageError("map verification is exhaustive only; pass --exhaustive");
        const auto spaces = enumerate_up_to(o.n, EnumerationMode::Canonical);
        const MapCampaignReport r = map_campaign(spaces, o.seed.value_or(0));
        j["mode"] = "exhaustive";
        j["spaces"] = spaces.size();
        j["discrepancies"] = r.total_discrepancies();
        j["summary"] = std::to_string(spaces.size()) + " spaces, " + std::to_string(r.maps) + " maps, " +
                       std::to_string(r.total_discrepancies()) + " discrepancies";
        j["report"] = map_campaign_json(r);
        emit(j, o.out);
        return r.total_discrepancies() == 0 ? exit_ok : exit_discrepancy;
    }
    std::string mode;
    // Validate the theorem id before enumerating anything.
    space_theorem_holds(Lattice(Space::discrete(1)), o.theorem);
    const std::vector<Space> corpus = verify_corpus(o, mode);
    std::vector<std::uint8_t> ok(corpus.size());
    kernels::parallel_for(corpus.size(), [&](std::size_t i) {
        ok[i] = space_theorem_holds(Lattice(corpus[i]), o.theorem);
    });
    std::set<std::string> bad;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!ok[i]) bad.insert(canonical_form(corpus[i]));
    }
    const std::size_t failures = std::count(ok.begin(), ok.end(), 0);
    j["mode"] = mode;
    if (o.seed && !o.exhaustive) j["seed"] = *o.seed;
    j["spaces"] = corpus.size();
    j["discrepancies"] = failures;
    j["summary"] = std::to_string(corpus.size()) + " spaces, " + std::to_string(failures) + " discrepancies";
    j["discrepant"] = std::vector<std::string>(bad.begin(), bad.end());
    emit(j, o.out);
    return failures == 0 ? exit_ok : exit_discrepancy;
}

std::vector<Space> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::vector<Space> out;
    for (const ZooRecord& r : read_corpus(in)) out.push_back(r.space());
    return out;
}

int run_scan(const Options& o) {
    const int picked = int(o.implications) + int(o.theorems) + int(o.separations);
    if (picked != 1) throw UsageError("pick exactly one of --implications, --theorems, --separations");
    const Campaign c = o.implications ? Campaign::Implications
                       : o.theorems   ? Campaign::Theorems
                                      : Campaign::Separations;
    std::vector<Space> corpus;
    if (!o.corpus.empty()) {
        corpus = load_corpus(o.corpus);
    } else {
        if (o.n < 1) throw UsageError("--n must be at least 1 (or pass --corpus)");
        corpus = enumerate_up_to(o.n, EnumerationMode::Labeled);
    }
    const ScanReport r = scan(corpus, c);
    json j = scan_json(r);
    emit(j, o.out);
    for (const ArrowCheck& a : r.arrows) {
        if (a.violations > 0) {
            std::cerr << "ARROW VIOLATED: " << a.arrow.conclusion << " fails on " << a.witnesses.front() << '\n';
        }
    }
    return r.discrepancies() == 0 ? exit_ok : exit_discrepancy;
}

int run_zoo(const Options& o) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    const EnumerationMode mode = o.canonical ? EnumerationMode::Canonical : EnumerationMode::Labeled;
    const std::vector<Space> spaces = o.up_to ? enumerate_up_to(o.n, mode) : enumerate_topologies(o.n, mode);
    std::vector<ZooRecord> records(spaces.size());
    kernels::parallel_for(spaces.size(), [&](std::size_t i) { records[i] = make_record(spaces[i], o.with_properties); });
    if (o.canonical) {
        std::stable_sort(records.begin(), records.end(),
                         [](const ZooRecord& a, const ZooRecord& b) { return a.n != b.n ? a.n < b.n : a.canonical_id < b.canonical_id; });
    }
    if (o.out.empty()) {
        write_corpus(std::cout, records);
    } else {
        std::ofstream out(o.out);
        if (!out) throw UsageError("cannot write '" + o.out + "'");
        write_corpus(out, records);
    }
    return exit_ok;
}

int run_search(const Options& o) {
    if (o.question != "estar-not-estartheta") {
        throw UsageError("unknown question '" + o.question + "' (expected estar-not-estartheta)");
    }
    if (o.n < 1) throw UsageError("--n must be at least 1");
    emit(search_json(search_open_question(o.n)), o.out);
    return exit_ok;
}

void report_error(const TopologyError& e) {
    json j;
    j["error"] = error_code_name(e.code());
    j["message"] = e.what();
    if (e.first()) j["first"] = subset_json(*e.first());
    if (e.second()) j["second"] = subset_json(*e.second());
    std::cerr << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite topological space laboratory"};
    app.require_subcommand(1);
    Options o;

    auto* op = app.add_subcommand("op", "Apply a set operator");
    op->add_option("--space", o.space_path, "Space JSON file")->required();
    op->add_option("--op", o.op, "closure, interior, delta-closure, <kind>-closure, estar-theta-interior, ...")
        ->required();
    op->add_option("--set", o.set, "Comma-separated points (indices or labels)");
    op->add_option("--out", o.out);

    auto* family = app.add_subcommand("family", "List a family of subsets");
    family->add_option("--space", o.space_path)->required();
    family->add_option("--kind", o.kind, "open, semi, pre, b, beta, e, estar, delta-open, regular-open, "
                                         "estar-theta, beta-theta, estar-regular, ...")
        ->required();
    family->add_option("--out", o.out);

    auto* check = app.add_subcommand("check", "Decide space properties");
    check->add_option("--space", o.space_path)->required();
    check->add_option("--properties", o.properties, "all or comma-separated property ids");
    check->add_option("--out", o.out);

    auto* verify = app.add_subcommand("verify", "Cross-check a theorem over many spaces");
    verify->add_option("--theorem", o.theorem)->required();
    verify->add_option("--n", o.n, "Number of points (maps: largest space size)")->required();
    verify->add_flag("--exhaustive", o.exhaustive, "Every labeled topology on n points");
    verify->add_option("--seed", o.seed, "Seed for random spaces");
    verify->add_option("--samples", o.samples, "Random spaces to draw");
    verify->add_option("--out", o.out);

    auto* scan_cmd = app.add_subcommand("scan", "Run a corpus campaign");
    scan_cmd->add_flag("--implications", o.implications);
    scan_cmd->add_flag("--theorems", o.theorems);
    scan_cmd->add_flag("--separations", o.separations);
    scan_cmd->add_option("--n", o.n, "Corpus: every labeled topology with at most n points");
    scan_cmd->add_option("--corpus", o.corpus, "Corpus JSONL instead of enumeration");
    scan_cmd->add_option("--out", o.out);

    auto* zoo = app.add_subcommand("zoo", "Enumerate topologies as JSONL");
    zoo->add_option("--n", o.n)->required();
    zoo->add_flag("--canonical", o.canonical, "One space per homeomorphism class");
    zoo->add_flag("--up-to", o.up_to, "Include every size from 1 to n");
    zoo->add_flag("--properties", o.with_properties, "Evaluate every property id");
    zoo->add_option("--out", o.out);

    auto* search = app.add_subcommand("search", "Counterexample search");
    search->add_option("--question", o.question)->required();
    search->add_option("--n", o.n)->required();
    search->add_option("--out", o.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (op->parsed()) return run_op(o);
        if (family->parsed()) return run_family(o);
        if (check->parsed()) return run_check(o);
        if (verify->parsed()) return run_verify(o);
        if (scan_cmd->parsed()) return run_scan(o);
        if (zoo->parsed()) return run_zoo(o);
        if (search->parsed()) return run_search(o);
    } catch (const TopologyError& e) {
        report_error(e);
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
