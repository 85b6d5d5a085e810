#include "tl/store.hpp"

#include "tl/errors.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace tl {

namespace {

std::atomic<std::uint64_t> g_tmp_counter{0};

void check_component(std::string_view value, const char* what) {
    if (value.empty()) throw ValidationError(std::string(what) + " must be non-empty");
    for (char c : value) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
        if (!ok)
            throw ValidationError(std::string(what) + " '" + std::string(value) +
                                  "' has characters outside [a-z0-9_-]");
    }
}

} // namespace

void atomic_write_file(const std::filesystem::path& path, std::string_view bytes) {
    const auto dir = path.parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir);
    const auto tmp = path.string() + ".tmp-" + std::to_string(g_tmp_counter.fetch_add(1)) + "-" +
                     std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoFailureError("cannot open " + tmp + " for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) throw IoFailureError("short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoFailureError("rename " + tmp + " -> " + path.string() + ": " + ec.message());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailureError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoFailureError("read failed: " + path.string());
    return buffer.str();
}

PipelineStore::PipelineStore(std::filesystem::path root) : root_(std::move(root)) {
    std::filesystem::create_directories(root_);
}

std::filesystem::path PipelineStore::path_for(std::string_view stage, std::string_view key) const {
    check_component(stage, "stage");
    check_component(key, "key");
    return root_ / stage / (std::string(key) + ".json");
}

std::filesystem::path PipelineStore::put(std::string_view stage, std::string_view key,
                                         std::string_view bytes) {
    const auto path = path_for(stage, key);
    if (std::filesystem::exists(path)) {
        if (read_file(path) == bytes) return path; // idempotent
        throw HashMismatchError("store entry " + path.string() +
                                " already holds different bytes for this key");
    }
    atomic_write_file(path, bytes);
    return path;
}

std::filesystem::path PipelineStore::put_replace(std::string_view stage, std::string_view key,
                                                 std::string_view bytes) {
    const auto path = path_for(stage, key);
    atomic_write_file(path, bytes);
    return path;
}

std::string PipelineStore::get(std::string_view stage, std::string_view key) const {
    return read_file(path_for(stage, key));
}

bool PipelineStore::contains(std::string_view stage, std::string_view key) const {
    return std::filesystem::exists(path_for(stage, key));
}

void PipelineStore::remove(std::string_view stage, std::string_view key) {
    std::filesystem::remove(path_for(stage, key));
}

} // namespace tl
