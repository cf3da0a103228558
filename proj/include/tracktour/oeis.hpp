#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tracktour/counting.hpp"

namespace tracktour {

/// Malformed b-file line; carries the 1-based line number.
struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
};

/// Indices in a b-file must advance by exactly one.
struct GapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested sequence data is unreachable in the current mode.
struct FetchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Online retrieval failed and no cached copy exists.
struct NetworkError : FetchError {
    using FetchError::FetchError;
};

/// Compared ranges share no index.
struct NoOverlapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parsed "index value" listing of one sequence.
struct BFile {
    std::string sequence_id;
    std::vector<std::pair<long long, Bignum>> entries;

    bool operator==(const BFile&) const = default;

    std::string serialize() const {
        std::ostringstream os;
        for (const auto& [index, value] : entries) os << index << ' ' << value.str() << '\n';
        return os.str();
    }
};

inline bool is_valid_sequence_id(std::string_view id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

/// Parses b-file text: "index value" per line, '#' starts a comment line,
/// blank lines allowed, indices contiguous.
inline BFile parse_bfile(std::string_view text, std::string sequence_id = {}) {
    BFile bfile;
    bfile.sequence_id = std::move(sequence_id);

    std::istringstream is{std::string(text)};
    std::string line;
    int line_number = 0;
    while (std::getline(is, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string index_text, value_text, extra;
        if (!(fields >> index_text)) continue;  // blank line
        if (index_text.front() == '#') continue;
        if (!(fields >> value_text)) throw ParseError(line_number, "expected \"index value\"");
        if (fields >> extra) throw ParseError(line_number, "trailing content after the value");

        long long index = 0;
        try {
            std::size_t used = 0;
            index = std::stoll(index_text, &used);
            if (used != index_text.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(line_number, "bad index \"" + index_text + "\"");
        }

        Bignum value;
        try {
            value = Bignum(value_text);
        } catch (const std::exception&) {
            throw ParseError(line_number, "bad value \"" + value_text + "\"");
        }

        if (!bfile.entries.empty() && index != bfile.entries.back().first + 1)
            throw GapError("index " + std::to_string(index) + " follows " +
                           std::to_string(bfile.entries.back().first));
        bfile.entries.emplace_back(index, std::move(value));
    }
    return bfile;
}

/// Transport hook: maps a URL to a response body, throwing on failure. Kept
/// injectable so tests run without sockets and the library stays header-only.
using HttpGet = std::function<std::string(const std::string& url)>;

inline std::filesystem::path cache_file_path(const std::filesystem::path& cache_dir,
                                             const std::string& sequence_id) {
    return cache_dir / (sequence_id + ".bfile.txt");
}

inline std::string bfile_url(const std::string& sequence_id) {
    return "https://oeis.org/" + sequence_id + "/b" + sequence_id.substr(1) + ".txt";
}

/// Loads a sequence's b-file: cache first, then the bundled snapshot
/// (offline) or the network (online, caching the raw text on success).
inline BFile fetch_bfile(const std::string& sequence_id, const std::filesystem::path& cache_dir,
                         bool offline, const std::filesystem::path& snapshot_path = {},
                         const HttpGet& http = {}) {
    if (!is_valid_sequence_id(sequence_id))
        throw std::invalid_argument("sequence id must be A followed by six digits: " + sequence_id);

    auto read_file = [](const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    };

    if (!cache_dir.empty()) {
        const auto cached = cache_file_path(cache_dir, sequence_id);
        if (std::filesystem::exists(cached)) return parse_bfile(read_file(cached), sequence_id);
    }

    if (offline) {
        if (!snapshot_path.empty() && std::filesystem::exists(snapshot_path))
            return parse_bfile(read_file(snapshot_path), sequence_id);
        throw FetchError("offline and no cached copy or snapshot for " + sequence_id);
    }

    if (!http) throw NetworkError("no transport configured for online fetch");
    std::string body;
    try {
        body = http(bfile_url(sequence_id));
    } catch (const std::exception& e) {
        throw NetworkError("fetch of " + sequence_id + " failed: " + e.what());
    }

    BFile parsed = parse_bfile(body, sequence_id);  // never cache unparseable text
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        std::ofstream out(cache_file_path(cache_dir, sequence_id), std::ios::binary);
        out << body;
    }
    return parsed;
}

/// Index-aligned comparison of a local table against a b-file.
struct CompareReport {
    struct Row {
        long long index;
        Bignum local;
        Bignum remote;
        bool match;
    };

    long long overlap_begin = 0;
    long long overlap_end = 0;  // inclusive
    std::vector<Row> rows;
    std::optional<long long> first_mismatch;

    bool full_match() const { return !first_mismatch.has_value(); }

    long long matched() const {
        long long count = 0;
        for (const auto& row : rows) count += row.match ? 1 : 0;
        return count;
    }
};

inline CompareReport compare(const SequenceTable& local, const BFile& remote) {
    if (local.terms.empty() || remote.entries.empty())
        throw NoOverlapError("one side is empty");
    const long long local_first = local.offset;
    const long long local_last = local.offset + static_cast<long long>(local.terms.size()) - 1;
    const long long remote_first = remote.entries.front().first;
    const long long remote_last = remote.entries.back().first;

    CompareReport report;
    report.overlap_begin = std::max(local_first, remote_first);
    report.overlap_end = std::min(local_last, remote_last);
    if (report.overlap_begin > report.overlap_end)
        throw NoOverlapError("index ranges [" + std::to_string(local_first) + "," +
                             std::to_string(local_last) + "] and [" + std::to_string(remote_first) +
                             "," + std::to_string(remote_last) + "] are disjoint");

    for (long long index = report.overlap_begin; index <= report.overlap_end; ++index) {
        const Bignum& local_value = local.terms[static_cast<std::size_t>(index - local_first)];
        const Bignum& remote_value =
            remote.entries[static_cast<std::size_t>(index - remote_first)].second;
        const bool match = local_value == remote_value;
        report.rows.push_back({index, local_value, remote_value, match});
        if (!match && !report.first_mismatch) report.first_mismatch = index;
    }
    return report;
}

}  // namespace tracktour
