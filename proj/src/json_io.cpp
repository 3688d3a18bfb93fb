#include "finitop/json_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

#include "finitop/error.hpp"

namespace finitop {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw TopologyError(ErrorCode::Malformed, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const json::exception& e) {
        malformed(std::string("field \"") + key + "\": " + e.what());
    }
}

// Every string appearing in a list of subsets, in sorted order.
std::vector<std::string> collect_labels(const json& opens) {
    std::set<std::string> names;
    for (const json& subset : opens) {
        if (!subset.is_array()) malformed("each open set must be a list");
        for (const json& p : subset) {
            if (p.is_string()) names.insert(p.get<std::string>());
        }
    }
    return {names.begin(), names.end()};
}

json clauses_array(const std::vector<bool>& v) {
    json a = json::array();
    for (bool b : v) a.push_back(b);
    return a;
}

template <typename Map>
json count_map(const Map& m) {
    json o = json::object();
    for (const auto& [k, v] : m) o[k] = v;
    return o;
}

Campaign parse_campaign(const std::string& s) {
    for (Campaign c : {Campaign::Theorems, Campaign::Implications, Campaign::Separations}) {
        if (s == campaign_name(c)) return c;
    }
    malformed("unknown campaign '" + s + "'");
}

}  // namespace

int PointLabels::index(const std::string& name) const {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) malformed("unknown point label '" + name + "'");
    return static_cast<int>(it - names.begin());
}

json PointLabels::point(int x) const {
    if (!names.empty()) return names.at(x);
    return x;
}

json PointLabels::subset(Mask m) const { return subset_json(m, *this); }

json subset_json(Mask m, const PointLabels& labels) {
    json a = json::array();
    for_each_point(m, [&](int x) { a.push_back(labels.point(x)); });
    return a;
}

Mask subset_from_json(const json& j, int n, const PointLabels& labels) {
    if (!j.is_array()) malformed("a subset must be a list of points");
    Mask m = 0;
    for (const json& p : j) {
        int x = -1;
        if (p.is_number_integer()) {
            x = p.get<int>();
        } else if (p.is_string()) {
            x = labels.index(p.get<std::string>());
        } else {
            malformed("points must be integers or labels, got " + p.dump());
        }
        if (x < 0 || x >= n) {
            throw TopologyError(ErrorCode::PointOutOfRange,
                                "point " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
        }
        m |= point_mask(x);
    }
    return m;
}

json space_json(const Space& s, const PointLabels& labels) {
    json j;
    j["schema"] = schema::space;
    j["n"] = s.size();
    if (!labels.empty()) j["points"] = labels.names;
    json opens = json::array();
    for (Mask u : s.opens()) opens.push_back(subset_json(u, labels));
    j["opens"] = std::move(opens);
    return j;
}

Space space_from_json(const json& j, PointLabels* labels_out) {
    const json& opens = field(j, "opens");
    if (!opens.is_array()) malformed("\"opens\" must be a list of subsets");
    PointLabels labels;
    if (j.contains("points")) {
        try {
            labels.names = j.at("points").get<std::vector<std::string>>();
        } catch (const json::exception&) {
            malformed("\"points\" must be a list of strings");
        }
    } else {
        labels.names = collect_labels(opens);
    }
    int n = 0;
    if (j.contains("n")) {
        n = get<int>(j, "n");
    } else if (!labels.empty()) {
        n = static_cast<int>(labels.names.size());
    } else {
        malformed("missing field \"n\"");
    }
    if (n < 1) malformed("n must be at least 1");
    if (n > max_points) {
        throw TopologyError(ErrorCode::TooManyPoints, std::to_string(n) + " points exceeds the cap of " +
                                                          std::to_string(max_points));
    }
    if (!labels.empty() && static_cast<int>(labels.names.size()) != n) {
        malformed(std::to_string(labels.names.size()) + " labels for " + std::to_string(n) + " points");
    }
    std::vector<Mask> masks;
    for (const json& u : opens) masks.push_back(subset_from_json(u, n, labels));
    Space s = Space::validate(n, std::move(masks));
    if (labels_out) *labels_out = std::move(labels);
    return s;
}

json family_json(const SetFamily& f, const PointLabels& labels) {
    json j;
    j["schema"] = schema::family;
    j["space"] = f.space_fingerprint;
    j["kind"] = f.kind;
    j["n"] = f.n;
    j["size"] = f.members.size();
    json members = json::array();
    for (Mask m : f.members) members.push_back(subset_json(m, labels));
    j["members"] = std::move(members);
    return j;
}

SetFamily family_from_json(const json& j, const PointLabels& labels) {
    SetFamily f;
    f.space_fingerprint = get<std::string>(j, "space");
    f.kind = get<std::string>(j, "kind");
    f.n = get<int>(j, "n");
    for (const json& m : field(j, "members")) f.members.push_back(subset_from_json(m, f.n, labels));
    std::sort(f.members.begin(), f.members.end());
    return f;
}

json map_json(const SpaceMap& f) {
    json j;
    j["schema"] = schema::map;
    j["dom"] = f.dom().fingerprint_hex();
    j["cod"] = f.cod().fingerprint_hex();
    j["image"] = f.image();
    return j;
}

SpaceMap map_from_json(const json& j, const Space& dom, const Space& cod) {
    if (get<std::string>(j, "dom") != dom.fingerprint_hex() || get<std::string>(j, "cod") != cod.fingerprint_hex()) {
        throw TopologyError(ErrorCode::FingerprintMismatch, "map endpoints do not match the supplied spaces");
    }
    return SpaceMap(dom, cod, get<std::vector<int>>(j, "image"));
}

json witness_json(const Witness& w, const PointLabels& labels) {
    json payload = json::array();
    for (const WitnessItem& item : w.payload) {
        json e;
        e["label"] = item.label;
        switch (item.type) {
            case WitnessItem::Type::Set: e["set"] = subset_json(item.set, labels); break;
            case WitnessItem::Type::Point: e["point"] = labels.point(item.point); break;
            case WitnessItem::Type::Text: e["text"] = item.text; break;
        }
        payload.push_back(std::move(e));
    }
    return json{{"role", w.role}, {"payload", std::move(payload)}};
}

Witness witness_from_json(const json& j, const PointLabels& labels) {
    Witness w;
    w.role = get<std::string>(j, "role");
    for (const json& e : field(j, "payload")) {
        const std::string label = get<std::string>(e, "label");
        if (e.contains("set")) {
            w.add_set(label, subset_from_json(e.at("set"), max_points, labels));
        } else if (e.contains("point")) {
            const json& p = e.at("point");
            w.add_point(label, p.is_string() ? labels.index(p.get<std::string>()) : p.get<int>());
        } else {
            w.add_text(label, get<std::string>(e, "text"));
        }
    }
    return w;
}

json verdict_json(const Verdict& v, const PointLabels& labels) {
    json j;
    j["property"] = v.property_id;
    j["holds"] = v.holds;
    j["vacuous"] = v.vacuous;
    if (v.witness) j["witness"] = witness_json(*v.witness, labels);
    return j;
}

Verdict verdict_from_json(const json& j, const PointLabels& labels) {
    Verdict v;
    v.property_id = get<std::string>(j, "property");
    v.holds = get<bool>(j, "holds");
    v.vacuous = j.contains("vacuous") && j.at("vacuous").get<bool>();
    if (j.contains("witness")) v.witness = witness_from_json(j.at("witness"), labels);
    return v;
}

json clauses_json(const ClauseVector& c, const PointLabels& labels) {
    json j;
    j["theorem"] = c.theorem_id;
    j["clauses"] = clauses_array(c.clauses);
    j["all_equal"] = c.all_equal;
    if (c.witness) j["witness"] = witness_json(*c.witness, labels);
    return j;
}

ClauseVector clauses_from_json(const json& j, const PointLabels& labels) {
    ClauseVector c;
    c.theorem_id = get<std::string>(j, "theorem");
    c.clauses = get<std::vector<bool>>(j, "clauses");
    c.all_equal = get<bool>(j, "all_equal");
    if (j.contains("witness")) c.witness = witness_from_json(j.at("witness"), labels);
    return c;
}

json map_class_json(const MapClassReport& r) {
    json j = json::object();
    for (const auto& [name, value] : r.flags()) j[name] = value;
    return j;
}

json map_campaign_json(const MapCampaignReport& r) {
    json j;
    j["schema"] = schema::maps;
    j["space_pairs"] = r.space_pairs;
    j["maps"] = r.maps;
    j["lemma_disagreements"] = count_map(r.lemma_disagreements);
    j["irresolute_disagreements"] = r.irresolute_disagreements;
    j["theorem_triggers"] = count_map(r.theorem_triggers);
    j["theorem_violations"] = count_map(r.theorem_violations);
    j["almost_irresolute_reading_differs"] = r.almost_irresolute_reading_differs;
    j["total_discrepancies"] = r.total_discrepancies();
    j["discrepancies"] = r.discrepancies;
    return j;
}

MapCampaignReport map_campaign_from_json(const json& j) {
    MapCampaignReport r;
    r.space_pairs = get<std::size_t>(j, "space_pairs");
    r.maps = get<std::size_t>(j, "maps");
    r.lemma_disagreements = get<std::map<std::string, std::size_t>>(j, "lemma_disagreements");
    r.irresolute_disagreements = get<std::size_t>(j, "irresolute_disagreements");
    r.theorem_triggers = get<std::map<std::string, std::size_t>>(j, "theorem_triggers");
    r.theorem_violations = get<std::map<std::string, std::size_t>>(j, "theorem_violations");
    r.almost_irresolute_reading_differs = get<std::size_t>(j, "almost_irresolute_reading_differs");
    r.discrepancies = get<std::vector<std::string>>(j, "discrepancies");
    return r;
}

json scan_json(const ScanReport& r) {
    json j;
    j["schema"] = schema::scan;
    j["campaign"] = campaign_name(r.campaign);
    j["corpus_size"] = r.corpus_size;
    j["discrepancies"] = r.discrepancies();
    json theorems = json::array();
    for (const TheoremTally& t : r.theorems) {
        theorems.push_back({{"theorem", t.theorem_id},
                            {"spaces", t.spaces},
                            {"agreements", t.agreements},
                            {"discrepancies", t.discrepancies}});
    }
    j["theorems"] = std::move(theorems);
    if (r.matrix) {
        json cells = json::array();
        for (const MatrixCell& c : r.matrix->cells) {
            json cell{{"premise", c.premise},
                      {"conclusion", c.conclusion},
                      {"status", entailment_name(c.status)},
                      {"refutations", c.refutations}};
            if (!c.witnesses.empty()) cell["witness"] = c.witnesses.front();
            cell["witnesses"] = c.witnesses;
            cells.push_back(std::move(cell));
        }
        j["matrix"] = {{"properties", r.matrix->properties}, {"cells", std::move(cells)}};
    }
    json arrows = json::array();
    for (const ArrowCheck& a : r.arrows) {
        arrows.push_back({{"premises", a.arrow.premises},
                          {"conclusion", a.arrow.conclusion},
                          {"anchor", a.arrow.anchor},
                          {"note", a.arrow.note},
                          {"triggered", a.triggered},
                          {"violations", a.violations},
                          {"witnesses", a.witnesses}});
    }
    j["arrows"] = std::move(arrows);
    json converses = json::array();
    for (const ConverseCheck& c : r.converses) {
        json e{{"premise", c.premise}, {"conclusion", c.conclusion}, {"refuted", c.refuted}};
        e["witness"] = c.witness ? json(*c.witness) : json(nullptr);
        converses.push_back(std::move(e));
    }
    j["converses"] = std::move(converses);
    return j;
}

ScanReport scan_from_json(const json& j) {
    ScanReport r;
    r.campaign = parse_campaign(get<std::string>(j, "campaign"));
    r.corpus_size = get<std::size_t>(j, "corpus_size");
    for (const json& t : field(j, "theorems")) {
        r.theorems.push_back({get<std::string>(t, "theorem"), get<std::size_t>(t, "spaces"),
                              get<std::size_t>(t, "agreements"), get<std::vector<std::string>>(t, "discrepancies")});
    }
    if (j.contains("matrix")) {
        ImplicationMatrix m;
        m.properties = get<std::vector<std::string>>(j.at("matrix"), "properties");
        for (const json& c : field(j.at("matrix"), "cells")) {
            m.cells.push_back({get<std::string>(c, "premise"), get<std::string>(c, "conclusion"),
                               get<std::string>(c, "status") == "REFUTED" ? Entailment::Refuted : Entailment::Implied,
                               get<std::size_t>(c, "refutations"), get<std::vector<std::string>>(c, "witnesses")});
        }
        r.matrix = std::move(m);
    }
    for (const json& a : field(j, "arrows")) {
        Arrow arrow{get<std::vector<std::string>>(a, "premises"), get<std::string>(a, "conclusion"),
                    get<std::string>(a, "anchor"), get<std::string>(a, "note")};
        r.arrows.push_back({std::move(arrow), get<std::size_t>(a, "triggered"), get<std::size_t>(a, "violations"),
                            get<std::vector<std::string>>(a, "witnesses")});
    }
    for (const json& c : field(j, "converses")) {
        ConverseCheck cc{get<std::string>(c, "premise"), get<std::string>(c, "conclusion"), get<bool>(c, "refuted"),
                         std::nullopt};
        if (!field(c, "witness").is_null()) cc.witness = get<std::string>(c, "witness");
        r.converses.push_back(std::move(cc));
    }
    return r;
}

json search_json(const OpenQuestionReport& r) {
    json j;
    j["schema"] = schema::search;
    j["question"] = r.question;
    j["n_max"] = r.n_max;
    j["corpus_size"] = r.corpus_size;
    j["property_version"] = r.property_version;
    j["found"] = r.found;
    if (r.found) {
        j["witness"] = {{"canonical_id", *r.canonical_id}, {"n", r.n}, {"opens", json::array()}};
        for (Mask u : r.opens) j["witness"]["opens"].push_back(subset_json(u));
        json evidence = json::array();
        for (const Verdict& v : r.evidence) evidence.push_back(verdict_json(v));
        j["witness"]["evidence"] = std::move(evidence);
    } else {
        j["result"] = "none found up to n=" + std::to_string(r.n_max) +
                      " (exhaustive search result over the enumerated spaces, not a proof)";
    }
    return j;
}

OpenQuestionReport search_from_json(const json& j) {
    OpenQuestionReport r;
    r.question = get<std::string>(j, "question");
    r.n_max = get<int>(j, "n_max");
    r.corpus_size = get<std::size_t>(j, "corpus_size");
    r.property_version = get<std::string>(j, "property_version");
    r.found = get<bool>(j, "found");
    if (r.found) {
        const json& w = field(j, "witness");
        r.canonical_id = get<std::string>(w, "canonical_id");
        r.n = get<int>(w, "n");
        for (const json& u : field(w, "opens")) r.opens.push_back(subset_from_json(u, r.n));
        for (const json& v : field(w, "evidence")) r.evidence.push_back(verdict_from_json(v));
    }
    return r;
}

json record_json(const ZooRecord& r) {
    json j;
    j["id"] = r.canonical_id;
    j["n"] = r.n;
    json hex = json::array();
    for (Mask u : r.opens) hex.push_back(mask_to_hex(u));
    j["opens_hex"] = std::move(hex);
    j["props"] = json::object();
    for (const auto& [k, v] : r.properties) j["props"][k] = v;
    return j;
}

ZooRecord record_from_json(const json& j) {
    ZooRecord r;
    r.canonical_id = get<std::string>(j, "id");
    r.n = get<int>(j, "n");
    for (const std::string& h : get<std::vector<std::string>>(j, "opens_hex")) {
        try {
            r.opens.push_back(mask_from_hex(h));
        } catch (const std::invalid_argument&) {
            malformed("bad hex subset '" + h + "'");
        }
    }
    if (j.contains("props")) r.properties = get<std::map<std::string, bool>>(j, "props");
    return r;
}

void write_corpus(std::ostream& out, const std::vector<ZooRecord>& records) {
    for (const ZooRecord& r : records) out << record_json(r).dump() << '\n';
}

std::vector<ZooRecord> read_corpus(std::istream& in) {
    std::vector<ZooRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(record_from_json(parse_json(line)));
    }
    return out;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace finitop
