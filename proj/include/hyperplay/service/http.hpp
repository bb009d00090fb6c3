#pragma once

#include "hyperplay/service/service.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace httplib {
class Server;
}

namespace hyperplay::service {

struct http_options
{
    std::string host = "127.0.0.1";
    int port = 8080;  // 0 picks a free port
    std::optional<std::filesystem::path> static_dir;
};

// Serves POST /api/<endpoint> with JSON bodies, plus the UI bundle from
// `static_dir` when given. Envelopes with ok=false use status 400.
class http_server
{
public:
    http_server(const api& handler, http_options options);
    ~http_server();
    http_server(const http_server&) = delete;
    http_server& operator=(const http_server&) = delete;

    // Binds the socket; returns the bound port. Throws std::runtime_error.
    int bind();
    // Blocks until stop().
    void serve();
    void stop();

private:
    const api& api_;
    http_options options_;
    std::unique_ptr<httplib::Server> server_;
};

} // namespace hyperplay::service
