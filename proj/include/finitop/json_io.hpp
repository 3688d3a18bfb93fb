#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "finitop/core.hpp"
#include "finitop/maps.hpp"
#include "finitop/verdict.hpp"
#include "finitop/zoo.hpp"

// JSON documents read and written by the command-line tool. Every top-level
// document carries a "schema" tag; readers accept documents without one.
// Subsets are lists of point indices, ascending. Parse failures throw
// TopologyError(Malformed).

namespace finitop {

using json = nlohmann::ordered_json;

namespace schema {
inline constexpr const char* space = "finitop.space/1";
inline constexpr const char* family = "finitop.family/1";
inline constexpr const char* map = "finitop.map/1";
inline constexpr const char* verdict = "finitop.verdict/1";
inline constexpr const char* clauses = "finitop.clauses/1";
inline constexpr const char* check = "finitop.check/1";
inline constexpr const char* scan = "finitop.scan/1";
inline constexpr const char* maps = "finitop.map-campaign/1";
inline constexpr const char* search = "finitop.search/1";
inline constexpr const char* verify = "finitop.verify/1";
}  // namespace schema

/// Names for points 0..n-1 when the input used strings instead of indices.
struct PointLabels {
    std::vector<std::string> names;

    bool empty() const { return names.empty(); }
    /// Throws Malformed for an unknown name.
    int index(const std::string& name) const;
    json point(int x) const;
    json subset(Mask m) const;
    bool operator==(const PointLabels&) const = default;
};

/// Subset as an ascending list of indices (or labels).
json subset_json(Mask m, const PointLabels& labels = {});
/// Accepts indices or labels; throws PointOutOfRange for indices >= n.
Mask subset_from_json(const json& j, int n, const PointLabels& labels = {});

/// {"schema", "n", "opens"} plus "points" when labelled.
json space_json(const Space& s, const PointLabels& labels = {});
/// Reads {"n", "opens"[, "points"]}. Without "points", string labels are
/// numbered in sorted order, so a..d map to 0..3. "n" may be omitted when
/// labels fix it. Topology violations propagate as TopologyError.
Space space_from_json(const json& j, PointLabels* labels_out = nullptr);

json family_json(const SetFamily& f, const PointLabels& labels = {});
SetFamily family_from_json(const json& j, const PointLabels& labels = {});

json map_json(const SpaceMap& f);
/// Throws FingerprintMismatch unless "dom"/"cod" match the given spaces.
SpaceMap map_from_json(const json& j, const Space& dom, const Space& cod);

json witness_json(const Witness& w, const PointLabels& labels = {});
Witness witness_from_json(const json& j, const PointLabels& labels = {});
json verdict_json(const Verdict& v, const PointLabels& labels = {});
Verdict verdict_from_json(const json& j, const PointLabels& labels = {});
json clauses_json(const ClauseVector& c, const PointLabels& labels = {});
ClauseVector clauses_from_json(const json& j, const PointLabels& labels = {});

json map_class_json(const MapClassReport& r);
json map_campaign_json(const MapCampaignReport& r);
MapCampaignReport map_campaign_from_json(const json& j);

json scan_json(const ScanReport& r);
ScanReport scan_from_json(const json& j);

json search_json(const OpenQuestionReport& r);
OpenQuestionReport search_from_json(const json& j);

/// {"id", "n", "opens_hex", "props"}.
json record_json(const ZooRecord& r);
ZooRecord record_from_json(const json& j);

/// One record per line; blank lines are skipped.
void write_corpus(std::ostream& out, const std::vector<ZooRecord>& records);
std::vector<ZooRecord> read_corpus(std::istream& in);

/// Throws Malformed with the parser's message.
json parse_json(const std::string& text);

}  // namespace finitop
