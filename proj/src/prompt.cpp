#include "tl/prompt.hpp"

#include "tl/errors.hpp"

namespace tl {

std::string PromptTemplate::render(const std::map<std::string, std::string>& values) const {
    std::string out;
    out.reserve(body.size());
    std::size_t i = 0;
    while (i < body.size()) {
        if (body[i] == '{') {
            const auto close = body.find('}', i + 1);
            if (close != std::string::npos) {
                const std::string key = body.substr(i + 1, close - i - 1);
                auto it = values.find(key);
                if (it != values.end()) {
                    out += it->second;
                    i = close + 1;
                    continue;
                }
            }
        }
        out.push_back(body[i]);
        ++i;
    }
    return out;
}

bool PromptTemplate::has_placeholder(std::string_view key) const {
    return body.find("{" + std::string(key) + "}") != std::string::npos;
}

void PromptTemplate::require_placeholders(std::initializer_list<std::string_view> keys) const {
    for (auto key : keys) {
        if (!has_placeholder(key))
            throw ValidationError("prompt template '" + name + "' is missing the {" +
                                  std::string(key) + "} placeholder");
    }
}

PromptTemplate default_summarize_template() {
    return {"summarize",
            "You are an expert editor. Summarize the following document in 20 to 40 words, "
            "capturing its core points and main themes: {document}"};
}

PromptTemplate default_label_template() {
    return {"label",
            "You are an expert analyst naming topics. Given keywords: {keywords} and "
            "representative summaries: {summaries}, output only a topic name of two to "
            "five words."};
}

} // namespace tl
