#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finitop/axioms.hpp"
#include "finitop/space.hpp"
#include "finitop/verdict.hpp"

namespace finitop {

/// Largest n for which exhaustive enumeration is offered.
inline constexpr int exhaustive_cap = 5;

enum class EnumerationMode { Labeled, Canonical };

/// Calls visit on every topology on n points, each exactly once, in a fixed
/// order. Throws CapExceeded for n > exhaustive_cap, Malformed for n < 1.
void for_each_topology(int n, const std::function<void(const Space&)>& visit);

/// Labeled: every topology. Canonical: the minimal representative of each
/// homeomorphism class, sorted by canonical id.
std::vector<Space> enumerate_topologies(int n, EnumerationMode mode);

/// All topologies with 1..n_max points, concatenated in size order.
std::vector<Space> enumerate_up_to(int n_max, EnumerationMode mode);

/// "n:hex,hex,..." of the lexicographically least sorted open list over all
/// point permutations.
std::string canonical_form(const Space& s);
/// The space whose open list realizes canonical_form(s).
Space canonical_representative(const Space& s);

/// Seeded: every proper nonempty subset is kept with probability density,
/// then the generated topology is returned.
Space random_space(int n, std::uint64_t seed, double density);

struct ZooRecord {
    std::string canonical_id;
    int n = 0;
    std::vector<Mask> opens;
    std::map<std::string, bool> properties;

    Space space() const { return Space::validate(n, opens); }
    bool operator==(const ZooRecord&) const = default;
};

/// Record of s under its own labelling; properties are filled when requested.
ZooRecord make_record(const Space& s, bool with_properties);
/// Re-evaluates every stored property; true iff all agree.
bool replay_record(const ZooRecord& r);

enum class Campaign { Theorems, Implications, Separations };
std::string_view campaign_name(Campaign c);  // "THEOREMS", ...

/// Agreement counts for one checked statement over a corpus.
struct TheoremTally {
    std::string theorem_id;
    std::size_t spaces = 0;
    std::size_t agreements = 0;
    /// Canonical ids of the spaces that disagreed, sorted, deduplicated.
    std::vector<std::string> discrepancies;

    bool operator==(const TheoremTally&) const = default;
};

enum class Entailment { Implied, Refuted };
std::string_view entailment_name(Entailment e);  // "IMPLIED" / "REFUTED"

/// Status of "premise ⇒ conclusion" on the corpus.
struct MatrixCell {
    std::string premise;
    std::string conclusion;
    Entailment status = Entailment::Implied;
    /// Number of corpus spaces where premise holds and conclusion fails.
    std::size_t refutations = 0;
    /// Distinct canonical ids of refuting spaces, sorted; front() is the
    /// reported witness.
    std::vector<std::string> witnesses;

    bool operator==(const MatrixCell&) const = default;
};

struct ImplicationMatrix {
    std::vector<std::string> properties;
    /// Row-major over (premise, conclusion), diagonal included.
    std::vector<MatrixCell> cells;

    const MatrixCell& at(const std::string& premise, const std::string& conclusion) const;
    bool operator==(const ImplicationMatrix&) const = default;
};

struct ArrowCheck {
    Arrow arrow;
    /// Spaces satisfying every premise.
    std::size_t triggered = 0;
    std::size_t violations = 0;
    std::vector<std::string> witnesses;

    bool operator==(const ArrowCheck& o) const {
        return arrow.premises == o.arrow.premises && arrow.conclusion == o.arrow.conclusion &&
               triggered == o.triggered && violations == o.violations && witnesses == o.witnesses;
    }
};

/// Whether the converse of a single-premise arrow fails somewhere.
struct ConverseCheck {
    std::string premise;
    std::string conclusion;
    bool refuted = false;
    std::optional<std::string> witness;

    bool operator==(const ConverseCheck&) const = default;
};

struct ScanReport {
    Campaign campaign = Campaign::Theorems;
    std::size_t corpus_size = 0;
    std::vector<TheoremTally> theorems;
    std::optional<ImplicationMatrix> matrix;
    std::vector<ArrowCheck> arrows;
    std::vector<ConverseCheck> converses;

    /// Theorem disagreements plus arrow violations.
    std::size_t discrepancies() const;
};

/// Throws Malformed on an empty corpus.
ScanReport scan(const std::vector<Space>& corpus, Campaign campaign);

/// Ids checked by the THEOREMS campaign, in report order.
const std::vector<std::string>& theorem_campaign_ids();

struct OpenQuestionReport {
    std::string question = "estar-not-estartheta";
    int n_max = 0;
    /// Canonical spaces examined.
    std::size_t corpus_size = 0;
    std::string property_version;
    bool found = false;
    /// Canonical id and opens of the first space found.
    std::optional<std::string> canonical_id;
    std::vector<Mask> opens;
    int n = 0;
    /// e*-regular verdict and the failing e*θ-regular verdict.
    std::vector<Verdict> evidence;

    bool operator==(const OpenQuestionReport&) const = default;
};

/// Hash of the property ids and the evaluator revision.
std::string property_version();

/// First canonical space (size, then canonical id order) that is e*-regular
/// but not e*θ-regular. Throws CapExceeded for n_max > exhaustive_cap.
OpenQuestionReport search_open_question(int n_max);

}  // namespace finitop
