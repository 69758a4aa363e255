#include "lgcoh/expr.hpp"

#include <cctype>

namespace lgcoh {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    int n;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("expression error at position " + std::to_string(pos) + ": " +
                                    msg + " in \"" + text + "\"");
    }

    int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoi(text.substr(start, pos - start));
    }

    RepSum atom() {
        skip_ws();
        if (pos >= text.size()) fail("expected atom");
        if (text.compare(pos, 6, "wedge^") == 0) {
            pos += 6;
            int k = integer();
            if (eat('Q')) {
                // optional explicit Q suffix
            }
            if (k < 0 || k > n) fail("wedge power out of range");
            std::vector<int> e(static_cast<size_t>(n), 0);
            std::fill(e.begin(), e.begin() + k, 1);
            return RepSum::of(GLWeight(std::move(e)));
        }
        if (text[pos] == 'S' && pos + 1 < text.size() && text[pos + 1] == '(') {
            pos += 2;
            std::vector<int> entries;
            for (;;) {
                entries.push_back(integer());
                if (eat(',')) continue;
                if (eat(')')) break;
                fail("expected ',' or ')'");
            }
            if (static_cast<int>(entries.size()) > n) fail("too many rows for rank");
            entries.resize(static_cast<size_t>(n), 0);
            return RepSum::of(GLWeight(std::move(entries)));
        }
        if (text[pos] == 'O') {
            ++pos;
            int i = 0;
            skip_ws();
            if (pos < text.size() && text[pos] == '(') {
                ++pos;
                i = integer();
                if (!eat(')')) fail("expected ')'");
            }
            return RepSum::of(GLWeight(std::vector<int>(static_cast<size_t>(n), i)));
        }
        if (text[pos] == 'Q') {
            ++pos;
            std::vector<int> e(static_cast<size_t>(n), 0);
            e.front() = 1;
            return RepSum::of(GLWeight(std::move(e)));
        }
        fail("unrecognized atom");
    }

    RepSum term() {
        RepSum acc = atom();
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                acc = tensor(acc, atom());
            } else {
                break;
            }
        }
        return acc;
    }

    RepSum expr() {
        RepSum acc = term();
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '+') {
                ++pos;
                acc.add(term());
            } else {
                break;
            }
        }
        skip_ws();
        if (pos != text.size()) fail("trailing characters");
        return acc;
    }
};

}  // namespace

BundleExpr parse_bundle_expr(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    Parser p{text, 0, n};
    return BundleExpr(p.expr(), text);
}

}  // namespace lgcoh
