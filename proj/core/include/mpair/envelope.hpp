#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "mpair/mod2.hpp"
#include "mpair/partition.hpp"
#include "mpair/rational.hpp"
#include "mpair/symfn.hpp"

namespace mpair {

using Json = nlohmann::ordered_json;

// JSON building blocks with the stable wire schema: partitions are
// arrays of descending integers, rationals are {"num": "...", "den":
// "..."} with decimal strings, never floating point.
Json json_rational(const Rational& r);
Json json_partition(const Partition& p);
Json json_symfn(const SymFn& f);
Json json_parity_row(const ParityTableRow& row);

// The machine-readable result of one CLI invocation.  Serializes with
// exactly the keys {command, params, result, version, ms}, in that
// order.
struct ResultEnvelope {
    std::string command;
    Json params;
    Json result;
    std::string version;
    long long ms = 0;

    Json to_json() const;
    std::string dump() const;  // single-line, deterministic
};

// Append-only JSON-lines cache keyed by (engine version, command,
// normalized params).  Identical invocations replay the stored result
// byte for byte; only the ms field differs.
class ResultCache {
  public:
    explicit ResultCache(std::string directory);

    // Directory resolution: explicit argument, else $MPAIR_CACHE_DIR,
    // else ~/.cache/mpair.
    static std::string default_directory();

    std::string path() const { return path_; }

    std::optional<Json> lookup(const std::string& key) const;
    void store(const std::string& key, const Json& result) const;

    static std::string make_key(const std::string& command, const Json& normalized_params);

  private:
    std::string path_;
};

// 64-bit FNV-1a; stable across runs and platforms (the content address
// of a cache key).
unsigned long long fnv1a64(const std::string& data);

// Rendering of a result payload for the text/csv output formats; the
// renderers consume the JSON payload so cache replays print identically.
std::string render_text(const std::string& command, const Json& result);
std::string render_csv(const std::string& command, const Json& result);

}  // namespace mpair
