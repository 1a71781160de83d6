#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cobord/ahss.hpp"
#include "cobord/charclass.hpp"

namespace cobord {

inline constexpr const char* kArtifactName = "cobord";
inline constexpr const char* kArtifactVersion = "0.1.0";

/// Closed degree window, written "LO..HI".
struct Window {
    int lo = 0;
    int hi = 0;
    /// Throws ConfigError on malformed text or lo > hi.
    static Window parse(const std::string& text);
    std::string str() const;
    friend bool operator==(const Window&, const Window&) = default;
};

/// Every knob a run depends on. Keys in items() order are the config-file keys.
struct RunConfig {
    int k = kDefaultGeneratorCount;
    int truncation = 16;  // N: integrality and formal-sum checks run to c1^N
    int n = 4;            // skeleta Y_2 .. Y_2n in the resolution and Tor checks
    int deg = 4;          // printed length of [2](c1)
    Window skeleton_window{-30, 10};
    Window tor_window{-20, 12};
    Window ahss_window{-8, 8};
    AxiomSet axioms;
    int epsilon = kOrientationSign;
    std::uint64_t seed = 1;
    int samples = 100;
    int h7_rank_max = 4;  // lemma64 sweeps the free rank of H^7 over 0..h7_rank_max
    std::string format = "text";

    std::vector<std::pair<std::string, std::string>> items() const;
    /// Throws ConfigError on an unknown key or a malformed value.
    void set(const std::string& key, const std::string& value);
    /// key=value lines; blank lines and lines starting with '#' are ignored.
    void load(std::istream& in, const std::string& source = "config");
    void load_file(const std::string& path);
    /// Range checks that need no computation. Throws ConfigError.
    void validate() const;
    nlohmann::ordered_json to_json() const;
    static RunConfig from_json(const nlohmann::ordered_json& j);
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

enum class ClaimStatus { Pass, Fail, Axiom, Skipped };
std::string claim_status_name(ClaimStatus s);
ClaimStatus parse_claim_status(const std::string& s);

struct ClaimRecord {
    std::string id;
    std::string anchor;  // fact id or axiom tag; its statement comes from the registries
    ClaimStatus status = ClaimStatus::Skipped;
    std::string witness;
    std::optional<std::string> verdict;  // decision status for the two nonvanishing claims
    std::string axiom;                   // AXIOM records only
    std::vector<TraceStep> trace;
    double seconds = 0;  // text output only
};

struct Report {
    std::string command;
    RunConfig config;
    std::vector<ClaimRecord> claims;

    std::size_t count(ClaimStatus s) const;
    bool any_failure() const;
    /// Nonzero iff some non-SKIPPED claim is FAIL.
    int exit_code() const { return any_failure() ? 1 : 0; }

    /// {artifact, command, config, claims, summary}; no timings, so equal configs give
    /// equal documents.
    nlohmann::ordered_json to_json() const;
    static Report from_json(const nlohmann::ordered_json& j);
    std::string text(bool timings = true) const;
};

/// What a subcommand asks for beyond the config.
struct Request {
    std::string command = "verify";  // verify, fgl, skeleton, tor, steenrod, charclass, lemma64
    std::optional<int> n;            // single skeleton (skeleton, tor) or H^7 rank (lemma64)
    bool oracle = false;             // tor: run the oracle matrix
    std::string check;               // steenrod or charclass subset; empty for all
};

/// Validates the config, then runs every check the request selects in dependency
/// order (fgl, gmod, steenrod, charclass, ahss, the nonvanishing chain, axioms). A
/// throwing check becomes a FAIL record and the rest still run.
Report run(const Request& req, const RunConfig& config);

/// The frozen claim ids in report order.
const std::vector<std::string>& claim_ids();

}  // namespace cobord
