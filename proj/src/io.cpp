#include "roommates/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace roommates {

namespace {

// An instance file for this tool never needs more; catches garbage like a
// billion-agent header before it turns into an allocation.
constexpr int kMaxFileN = 20000;

struct Token {
    int value;
    int line;
};

std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        while (ls >> word) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc() || ptr != word.data() + word.size())
                raise(Errc::ParseError,
                      "line " + std::to_string(lineno) + ": expected an integer, got '" + word +
                          "'");
            tokens.push_back({value, lineno});
        }
    }
    return tokens;
}

} // namespace

Instance parse_instance(std::istream& in) {
    auto tokens = tokenize(in);
    std::size_t pos = 0;
    int last_line = tokens.empty() ? 1 : tokens.back().line;
    auto next = [&]() -> int {
        if (pos >= tokens.size())
            raise(Errc::ParseError,
                  "line " + std::to_string(last_line) + ": unexpected end of input");
        return tokens[pos++].value;
    };

    int n = next();
    if (n > kMaxFileN)
        raise(Errc::ParseError, "line " + std::to_string(tokens[0].line) + ": n = " +
                                    std::to_string(n) + " exceeds the file limit of " +
                                    std::to_string(kMaxFileN));
    if (n < 0)
        raise(Errc::ParseError,
              "line " + std::to_string(tokens[0].line) + ": n must be positive");

    std::vector<std::vector<int>> rows(n > 0 ? n : 0);
    for (int i = 0; i < n; ++i) {
        rows[i].reserve(n);
        for (int j = 0; j < n; ++j)
            rows[i].push_back(next());
    }
    std::vector<int> partners;
    partners.reserve(n > 0 ? n : 0);
    for (int i = 0; i < n; ++i)
        partners.push_back(next());
    if (pos != tokens.size())
        raise(Errc::ParseError, "line " + std::to_string(tokens[pos].line) +
                                    ": trailing input after the matching line");

    return Instance(validate_profile(n, rows), validate_matching(n, partners));
}

Instance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(Errc::IoError, "cannot open '" + path + "'");
    return parse_instance(in);
}

std::string render_instance(const Instance& instance) {
    std::ostringstream os;
    const int n = instance.n();
    os << n << "\n";
    for (int i = 1; i <= n; ++i) {
        const auto& row = instance.profile.ranking(i);
        for (int j = 0; j < n; ++j)
            os << row[j] << (j + 1 == n ? "\n" : " ");
    }
    auto line = instance.matching.line();
    for (int i = 0; i < n; ++i)
        os << line[i] << (i + 1 == n ? "\n" : " ");
    return os.str();
}

} // namespace roommates
