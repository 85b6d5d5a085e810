#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <string_view>

namespace tl {

// Template body with named {placeholder} slots. Unknown braces are left
// literal; rendering only substitutes keys it is given.
struct PromptTemplate {
    std::string name;
    std::string body;

    std::string render(const std::map<std::string, std::string>& values) const;
    bool has_placeholder(std::string_view key) const;
    /// ValidationError when a placeholder the pipeline needs is missing.
    void require_placeholders(std::initializer_list<std::string_view> keys) const;
};

PromptTemplate default_summarize_template();
PromptTemplate default_label_template();

} // namespace tl
