#include "hyperplay/service/http.hpp"

#include <httplib.h>

#include <stdexcept>

namespace hyperplay::service {

http_server::http_server(const api& handler, http_options options)
    : api_(handler), options_(std::move(options)), server_(std::make_unique<httplib::Server>())
{
    // Unknown endpoints also get an envelope, with status 404.
    server_->Post(R"(/api/([A-Za-z0-9_-]+))", [this](const httplib::Request& req, httplib::Response& res) {
        const auto reply = api_.handle_text(req.matches[1].str(), req.body);
        if (reply["ok"].get<bool>())
            res.status = 200;
        else
            res.status = reply["error"]["code"] == "unknown-endpoint" ? 404 : 400;
        res.set_content(reply.dump(), "application/json");
    });
    if (options_.static_dir && !server_->set_mount_point("/", options_.static_dir->string()))
        throw std::runtime_error("static directory " + options_.static_dir->string() + " does not exist");
}

http_server::~http_server() = default;

int http_server::bind()
{
    int port = options_.port;
    if (port == 0) {
        port = server_->bind_to_any_port(options_.host);
    } else if (!server_->bind_to_port(options_.host, port)) {
        port = -1;
    }
    if (port < 0)
        throw std::runtime_error("cannot listen on " + options_.host + ":" + std::to_string(options_.port));
    return port;
}

void http_server::serve()
{
    server_->listen_after_bind();
}

void http_server::stop()
{
    server_->stop();
}

} // namespace hyperplay::service
