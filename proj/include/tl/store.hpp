#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace tl {

/// Atomic file write: temp file in the target directory, then rename.
void atomic_write_file(const std::filesystem::path& path, std::string_view bytes);

std::string read_file(const std::filesystem::path& path); // IoFailureError

// Content-addressed artifact store. Layout: <root>/<stage>/<key>.json.
// Keys are hex digests computed by the caller from the artifact's inputs,
// so identical inputs land on the same entry.
class PipelineStore {
public:
    explicit PipelineStore(std::filesystem::path root);

    /// Idempotent for identical bytes; HashMismatchError when the key already
    /// holds different bytes.
    std::filesystem::path put(std::string_view stage, std::string_view key,
                              std::string_view bytes);

    /// Unconditional atomic overwrite. Used when a stage is deliberately
    /// re-executed; plain put() keeps the integrity check.
    std::filesystem::path put_replace(std::string_view stage, std::string_view key,
                                      std::string_view bytes);

    std::string get(std::string_view stage, std::string_view key) const; // IoFailureError
    bool contains(std::string_view stage, std::string_view key) const;
    void remove(std::string_view stage, std::string_view key);

    std::filesystem::path path_for(std::string_view stage, std::string_view key) const;
    const std::filesystem::path& root() const { return root_; }

private:
    std::filesystem::path root_;
};

} // namespace tl
