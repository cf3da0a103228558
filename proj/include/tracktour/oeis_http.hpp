#pragma once

// Real HTTP transport for oeis.hpp's injectable HttpGet hook. Only the CLI
// includes this; the rest of the library and all tests stay socket-free.

#include <stdexcept>
#include <string>

#include <httplib.h>

#include "tracktour/oeis.hpp"

namespace tracktour {

inline HttpGet make_http_transport() {
    return [](const std::string& url) -> std::string {
        const auto scheme_end = url.find("://");
        if (scheme_end == std::string::npos) throw std::invalid_argument("url has no scheme: " + url);
        const auto path_start = url.find('/', scheme_end + 3);
        const std::string origin = path_start == std::string::npos ? url : url.substr(0, path_start);
        const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

        httplib::Client client(origin);
        client.set_follow_location(true);
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
        auto response = client.Get(path);
        if (!response) throw std::runtime_error("no response from " + origin);
        if (response->status != 200)
            throw std::runtime_error("HTTP " + std::to_string(response->status) + " from " + url);
        return response->body;
    };
}

}  // namespace tracktour
