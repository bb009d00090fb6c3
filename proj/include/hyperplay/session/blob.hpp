#pragma once

#include "hyperplay/session/session.hpp"

#include <json.hpp>

#include <functional>
#include <string>

namespace hyperplay::session {

inline constexpr int blob_version = 1;

// Hex SHA-256 of the problem's canonical JSON.
std::string problem_hash(const hyper_problem& problem);

// Self-contained session document: version, canonical problem and its hash,
// the snapshots with their move records, the status, and a digest over all
// of it. Contains nothing time-dependent, so equal sessions give equal blobs.
nlohmann::json to_blob(const game_session& s);

// Supplies the engine for a problem, e.g. from a cache keyed by hash.
using engine_provider = std::function<std::shared_ptr<const engine>(const hyper_problem&, const std::string& hash)>;

// Checks version, digest and problem hash, then replays the recorded moves
// and requires every snapshot and the status to match. Any mismatch throws
// hyperplay::error(bad_blob).
game_session from_blob(const nlohmann::json& blob, const engine_provider& provide);
game_session from_blob(const nlohmann::json& blob, const engine_options& options = {});

nlohmann::json to_json(const game_session& s, const snapshot& snap);

} // namespace hyperplay::session
