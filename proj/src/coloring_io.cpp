#include "ramsey/coloring_io.hpp"

#include <algorithm>
#include <charconv>

#include "ramsey/errors.hpp"

namespace ramsey {

std::string serialize_coloring(const EdgeColoring& col) {
    const int n = col.vertex_count();
    std::string out = "RPC1 " + std::to_string(n) + ' ' +
                      std::to_string(col.color_count()) + '\n';
    for (int u = 0; u + 1 < n; ++u) {
        for (int v = u + 1; v < n; ++v)
            out += static_cast<char>('0' + col.color(u, v));
        out += '\n';
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    int line = 1;
    int col = 1;

    bool done() const { return i >= s.size(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line, col);
    }

    char peek() const {
        if (done())
            fail("unexpected end of input");
        return s[i];
    }

    char take() {
        const char c = peek();
        ++i;
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void expect(char c, const std::string& what) {
        if (done() || peek() != c)
            fail("expected " + what);
        take();
    }

    int integer(const std::string& what, int max_value) {
        if (done() || peek() < '0' || peek() > '9')
            fail("expected " + what);
        const int start_line = line, start_col = col;
        long value = 0;
        std::size_t digits = 0;
        const bool leading_zero = peek() == '0';
        while (!done() && peek() >= '0' && peek() <= '9') {
            value = std::min(value * 10 + (take() - '0'), 1000L);
            ++digits;
        }
        if ((digits > 1 && leading_zero) || value < 1 || value > max_value)
            throw ParseError(what + " out of range", start_line, start_col);
        return static_cast<int>(value);
    }
};

} // namespace

EdgeColoring parse_coloring(std::string_view text) {
    Cursor cur{text};
    for (char c : {'R', 'P', 'C', '1'})
        if (cur.done() || cur.peek() != c)
            cur.fail("expected RPC1 magic");
        else
            cur.take();
    cur.expect(' ', "a space after the magic");
    const int n = cur.integer("vertex count", kMaxVertices);
    cur.expect(' ', "a space before the color count");
    const int colors = cur.integer("color count", 9);
    cur.expect('\n', "a newline after the header");
    EdgeColoring col(n, colors);
    for (int u = 0; u + 1 < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (cur.done() || cur.peek() == '\n')
                cur.fail("row too short: expected " + std::to_string(n - 1 - u) +
                         " digits");
            const char c = cur.peek();
            if (c < '0' || c > '9')
                cur.fail("expected a color digit");
            if (c - '0' > colors)
                cur.fail("color digit " + std::string(1, c) + " exceeds color count " +
                         std::to_string(colors));
            cur.take();
            col.set_color(u, v, c - '0');
        }
        cur.expect('\n', "a newline after the row");
    }
    if (!cur.done())
        cur.fail("trailing content after the last row");
    return col;
}

Target parse_target(std::string_view token) {
    if (token.size() < 2 || (token[0] != 'P' && token[0] != 'C'))
        throw DomainError("bad target '" + std::string(token) +
                          "': expected P<k> or C<k>");
    int k = 0;
    const auto* begin = token.data() + 1;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, k);
    if (ec != std::errc{} || ptr != end)
        throw DomainError("bad target '" + std::string(token) +
                          "': expected P<k> or C<k>");
    return token[0] == 'P' ? Target::path(k) : Target::cycle(k);
}

std::vector<Target> parse_targets(std::string_view list, int expected_count) {
    std::vector<Target> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = list.find(',', pos);
        const std::string_view token =
            list.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        out.push_back(parse_target(token));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    if (expected_count > 0 && static_cast<int>(out.size()) != expected_count)
        throw DomainError("expected " + std::to_string(expected_count) +
                          " targets, got " + std::to_string(out.size()));
    return out;
}

std::string target_to_string(const Target& t) {
    return (t.kind == PatternKind::Path ? "P" : "C") + std::to_string(t.order);
}

} // namespace ramsey
