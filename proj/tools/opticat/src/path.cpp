#include <opticat/path.hpp>

#include <cctype>
#include <limits>

namespace opticat {

namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected)
{
    std::string msg = "syntax error at offset " + std::to_string(offset) +
                      ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i)
            msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
    }
    return msg;
}

bool ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

bool is_ident(std::string_view s)
{
    if (s.empty() || !ident_start(s[0]))
        return false;
    for (char c : s)
        if (!ident_char(c))
            return false;
    return true;
}

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    PathExpr parse()
    {
        PathExpr path;
        path.push_back(step());
        while (pos_ < text_.size()) {
            expect(".", {"'.'", "end of path"});
            path.push_back(step());
        }
        return path;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        throw ParseError{pos_, std::move(expected)};
    }

    bool accept(std::string_view word)
    {
        if (text_.substr(pos_, word.size()) != word)
            return false;
        pos_ += word.size();
        return true;
    }

    void expect(std::string_view word, std::vector<std::string> expected)
    {
        if (!accept(word))
            fail(std::move(expected));
    }

    Step step()
    {
        // longest keywords first so `some` is not read as a prefix
        if (accept("fst"))
            return Step::of(Step::Kind::fst);
        if (accept("snd"))
            return Step::of(Step::Kind::snd);
        if (accept("some"))
            return Step::of(Step::Kind::some);
        if (accept("each"))
            return Step::of(Step::Kind::each);
        if (accept("key(")) {
            auto name = key_name();
            expect(")", {"')'"});
            return Step::key(std::move(name));
        }
        if (accept("idx(")) {
            auto n = nat();
            expect(")", {"')'"});
            return Step::idx(n);
        }
        fail({"'fst'", "'snd'", "'key('", "'idx('", "'some'", "'each'"});
    }

    std::string key_name()
    {
        if (pos_ < text_.size() && text_[pos_] == '"')
            return quoted();
        if (pos_ >= text_.size() || !ident_start(text_[pos_]))
            fail({"identifier", "string"});
        auto start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_]))
            ++pos_;
        return std::string{text_.substr(start, pos_ - start)};
    }

    std::string quoted()
    {
        ++pos_; // opening quote
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\') {
                ++pos_;
                if (pos_ >= text_.size() || (text_[pos_] != '"' && text_[pos_] != '\\'))
                    fail({"'\\\"'", "'\\\\'"});
            }
            out += text_[pos_++];
        }
        if (pos_ >= text_.size())
            fail({"'\"'"});
        ++pos_;
        return out;
    }

    std::size_t nat()
    {
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail({"natural number"});
        if (text_[pos_] == '0') {
            ++pos_;
            return 0;
        }
        std::size_t n = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            auto digit = static_cast<std::size_t>(text_[pos_] - '0');
            if (n > (std::numeric_limits<std::size_t>::max() - digit) / 10)
                fail({"smaller index"});
            n = n * 10 + digit;
            ++pos_;
        }
        return n;
    }
};

} // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected)
    : std::runtime_error(describe(offset, expected)),
      offset_(offset),
      expected_(std::move(expected))
{
}

PathExpr parse_path(std::string_view text)
{
    return Parser{text}.parse();
}

std::string to_string(Step::Kind kind)
{
    switch (kind) {
    case Step::Kind::fst: return "fst";
    case Step::Kind::snd: return "snd";
    case Step::Kind::key: return "key";
    case Step::Kind::idx: return "idx";
    case Step::Kind::some: return "some";
    case Step::Kind::each: return "each";
    }
    return "?";
}

std::string print_path(const PathExpr& path)
{
    std::string out;
    for (const auto& s : path) {
        if (!out.empty())
            out += '.';
        switch (s.kind) {
        case Step::Kind::key:
            out += "key(";
            if (is_ident(s.name)) {
                out += s.name;
            } else {
                out += '"';
                for (char c : s.name) {
                    if (c == '"' || c == '\\')
                        out += '\\';
                    out += c;
                }
                out += '"';
            }
            out += ')';
            break;
        case Step::Kind::idx:
            out += "idx(" + std::to_string(s.index) + ")";
            break;
        default:
            out += to_string(s.kind);
        }
    }
    return out;
}

} // namespace opticat
