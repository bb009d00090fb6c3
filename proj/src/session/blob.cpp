#include "hyperplay/session/blob.hpp"

#include "hyperplay/core/error.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

namespace hyperplay::session {

namespace {

using nlohmann::json;

std::string sha256_hex(const std::string& data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::string out;
    out.reserve(2 * len);
    static constexpr char hex[] = "0123456789abcdef";
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

json move_json(const universal_move& m)
{
    return {{"successors", m.successors}, {"prophecies", m.prophecies}};
}

[[noreturn]] void reject(const std::string& why)
{
    throw error(errc::bad_blob, "invalid session blob: " + why);
}

} // namespace

std::string problem_hash(const hyper_problem& problem)
{
    return sha256_hex(hyperplay::to_json(problem).dump());
}

json to_json(const game_session& s, const snapshot& snap)
{
    const auto& n = s.eng().game.node(snap.node);
    json j = {{"step", snap.step}, {"states", n.states}, {"dpa_state", n.q}};
    j["monitor"] = snap.monitor ? json(*snap.monitor) : json(nullptr);
    if (snap.last) {
        j["move"] = move_json(snap.last->move);
        j["response"] = snap.last->response;
    }
    return j;
}

json to_blob(const game_session& s)
{
    json history = json::array();
    for (const auto& snap : s.history())
        history.push_back(to_json(s, snap));
    json blob = {
        {"version", blob_version},
        {"problem", hyperplay::to_json(s.eng().problem)},
        {"problem_hash", problem_hash(s.eng().problem)},
        {"history", std::move(history)},
        {"status", std::string(to_string(s.status()))},
    };
    blob["digest"] = sha256_hex(blob.dump());
    return blob;
}

game_session from_blob(const json& blob, const engine_provider& provide)
{
    if (!blob.is_object())
        reject("not an object");
    if (!blob.contains("version") || blob["version"] != blob_version)
        reject("unsupported version");
    if (!blob.contains("digest") || !blob["digest"].is_string())
        reject("missing digest");
    json body = blob;
    body.erase("digest");
    if (sha256_hex(body.dump()) != blob["digest"].get<std::string>())
        reject("digest mismatch");

    try {
        const hyper_problem problem = parse_problem(blob.at("problem"));
        const std::string hash = problem_hash(problem);
        if (blob.at("problem_hash") != hash)
            reject("problem hash mismatch");
        game_session s = start_session(provide(problem, hash));
        const json& history = blob.at("history");
        if (!history.is_array() || history.empty())
            reject("empty history");
        for (std::size_t i = 1; i < history.size(); ++i) {
            const json& m = history[i].at("move");
            universal_move move{m.at("successors").get<std::vector<state_id>>(), m.at("prophecies").get<std::vector<bool>>()};
            s = commit_move(s, move);
        }
        for (std::size_t i = 0; i < history.size(); ++i)
            if (to_json(s, s.history()[i]) != history[i])
                reject("snapshot " + std::to_string(i) + " does not match its replay");
        if (blob.at("status") != std::string(to_string(s.status())))
            reject("status does not match the replay");
        return s;
    } catch (const error& e) {
        if (e.code() == errc::bad_blob || e.code() == errc::budget_exceeded)
            throw;
        reject(e.what());
    } catch (const json::exception& e) {
        reject(e.what());
    }
}

game_session from_blob(const json& blob, const engine_options& options)
{
    return from_blob(blob, [&](const hyper_problem& p, const std::string&) { return build_engine(p, options); });
}

} // namespace hyperplay::session
