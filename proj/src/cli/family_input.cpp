#include "limifrob/cli/family_input.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "limifrob/errors.hpp"

namespace limifrob {

namespace {

struct Pos {
    int line = 1;
    int column = 1;
};

// A value with the source position of each character, so that errors deep
// inside a polynomial still point at the right place in the file.
struct Located {
    std::string text;
    std::vector<Pos> pos;
    Pos start;

    Pos at(std::size_t i) const {
        if (i < pos.size()) return pos[i];
        if (pos.empty()) return start;
        Pos q = pos.back();
        ++q.column;
        return q;
    }
};

class ExprParser {
public:
    ExprParser(const Located& src, const std::vector<std::string>& vars) : s_(src), vars_(vars) {}

    MPoly parse() {
        MPoly f = expr();
        skip();
        if (i_ < s_.text.size()) fail("unexpected '" + std::string(1, s_.text[i_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        Pos q = s_.at(i_);
        throw ParseError(q.line, q.column, msg);
    }
    void skip() {
        while (i_ < s_.text.size() && std::isspace(static_cast<unsigned char>(s_.text[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.text.size() && s_.text[i_] == c;
    }

    MPoly expr() {
        MPoly f;
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = s_.text[i_] == '-' ? -1 : 1;
                ++i_;
            } else if (!first) {
                break;
            }
            MPoly t = term();
            f = sign > 0 ? f + t : f - t;
            first = false;
            skip();
            if (!(peek('+') || peek('-'))) break;
        }
        return f;
    }

    MPoly term() {
        MPoly t = power();
        while (true) {
            if (peek('*')) {
                ++i_;
                t = t * power();
            } else if (starts_factor()) {
                t = t * power();  // juxtaposition, e.g. 3XY or 2(X+Y)
            } else {
                return t;
            }
        }
    }

    bool starts_factor() {
        skip();
        if (i_ >= s_.text.size()) return false;
        char c = s_.text[i_];
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    MPoly power() {
        MPoly b = atom();
        if (peek('^')) {
            ++i_;
            skip();
            std::size_t j = i_;
            while (i_ < s_.text.size() && std::isdigit(static_cast<unsigned char>(s_.text[i_]))) ++i_;
            if (j == i_) fail("expected a non-negative integer exponent");
            if (i_ - j > 4) fail("exponent too large");
            b = b.pow(static_cast<unsigned>(std::stoul(s_.text.substr(j, i_ - j))));
        }
        return b;
    }

    BigInt integer() {
        std::size_t j = i_;
        while (i_ < s_.text.size() && std::isdigit(static_cast<unsigned char>(s_.text[i_]))) ++i_;
        return BigInt(s_.text.substr(j, i_ - j));
    }

    MPoly atom() {
        skip();
        if (i_ >= s_.text.size()) fail("unexpected end of expression");
        const char c = s_.text[i_];
        const int m = static_cast<int>(vars_.size());
        if (c == '(') {
            ++i_;
            MPoly f = expr();
            if (!peek(')')) fail("expected ')'");
            ++i_;
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigRational q(integer());
            if (peek('/')) {
                ++i_;
                skip();
                if (i_ >= s_.text.size() || !std::isdigit(static_cast<unsigned char>(s_.text[i_])))
                    fail("expected a denominator");
                const std::size_t at = i_;
                BigInt den = integer();
                if (den == 0) {
                    i_ = at;
                    fail("zero denominator");
                }
                q /= den;
            }
            return MPoly::constant(m, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t j = i_;
            while (i_ < s_.text.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_.text[i_])) || s_.text[i_] == '_'))
                ++i_;
            // Longest declared name that is a prefix, so "XY" reads as X*Y.
            std::string word = s_.text.substr(j, i_ - j);
            for (std::size_t len = word.size(); len > 0; --len)
                for (int v = 0; v < m; ++v)
                    if (vars_[v] == word.substr(0, len)) {
                        i_ = j + len;
                        return MPoly::variable(m, v);
                    }
            i_ = j;
            fail("unknown variable '" + word + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const Located& s_;
    const std::vector<std::string>& vars_;
    std::size_t i_ = 0;
};

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

long parse_long(const Located& v, long lo, long hi, const char* what) {
    std::string t = trim(v.text);
    std::size_t used = 0;
    long x = 0;
    try {
        x = std::stol(t, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (t.empty() || used != t.size()) throw ParseError(v.start.line, v.start.column, std::string(what) + " must be an integer");
    if (x < lo || x > hi)
        throw ParseError(v.start.line, v.start.column,
                         std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return x;
}

bool parse_bool(const Located& v, const char* what) {
    std::string t = trim(v.text);
    if (t == "true" || t == "yes" || t == "1") return true;
    if (t == "false" || t == "no" || t == "0") return false;
    throw ParseError(v.start.line, v.start.column, std::string(what) + " must be true or false");
}

}  // namespace

std::vector<std::string> default_variable_names(int count) {
    static const char* small[] = {"X", "Y", "Z", "W"};
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) out.push_back(count <= 4 ? small[i] : "x" + std::to_string(i));
    return out;
}

MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
    Located v;
    v.text = std::string(text);
    for (std::size_t i = 0; i < text.size(); ++i) v.pos.push_back({1, static_cast<int>(i) + 1});
    return ExprParser(v, vars).parse();
}

Family FamilyInput::family() const {
    Family f;
    f.n = n;
    f.d = d;
    f.p = p;
    f.P0 = P0;
    f.P1 = P1;
    return f;
}

FamilyInput parse_family(std::string_view text) {
    std::map<std::string, Located> kv;
    std::optional<std::string> last;
    int line = 0;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t e = text.find('\n', i);
        if (e == std::string_view::npos) e = text.size();
        std::string raw(text.substr(i, e - i));
        ++line;
        i = e + 1;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        if (trim(raw).empty()) {
            if (e == text.size()) break;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(raw[0])) && last) {
            Located& v = kv[*last];
            v.text += ' ';
            v.pos.push_back({line, 1});
            for (std::size_t c = 0; c < raw.size(); ++c) {
                v.text += raw[c];
                v.pos.push_back({line, static_cast<int>(c) + 1});
            }
        } else {
            std::size_t eq = raw.find('=');
            if (eq == std::string::npos) throw ParseError(line, 1, "expected 'key = value'");
            std::string key = trim(raw.substr(0, eq));
            if (key.empty()) throw ParseError(line, 1, "missing key before '='");
            if (kv.count(key)) throw ParseError(line, 1, "duplicate key '" + key + "'");
            Located v;
            v.start = {line, static_cast<int>(eq) + 2};
            for (std::size_t c = eq + 1; c < raw.size(); ++c) {
                v.text += raw[c];
                v.pos.push_back({line, static_cast<int>(c) + 1});
            }
            kv[key] = std::move(v);
            last = key;
        }
        if (e == text.size()) break;
    }

    static const char* known[] = {"n", "d", "p", "N", "vars", "P0", "P1", "verify", "kmax", "escalation_cap", "confirm"};
    for (const auto& [k, v] : kv) {
        bool ok = false;
        for (const char* q : known) ok = ok || k == q;
        if (!ok) throw ParseError(v.start.line, 1, "unknown key '" + k + "'");
    }
    const Pos end{line, 1};
    auto require = [&](const char* key) -> const Located& {
        auto it = kv.find(key);
        if (it == kv.end()) throw ParseError(end.line, end.column, std::string("missing '") + key + " =' line");
        return it->second;
    };

    FamilyInput in;
    in.n = static_cast<int>(parse_long(require("n"), 1, 8, "n"));
    in.d = static_cast<int>(parse_long(require("d"), 2, 64, "d"));
    in.p = parse_long(require("p"), 2, 1L << 30, "p");
    const Located& P0 = require("P0");
    if (auto it = kv.find("N"); it != kv.end()) in.N = static_cast<int>(parse_long(it->second, 1, 10000, "N"));
    if (auto it = kv.find("verify"); it != kv.end()) in.verify = parse_bool(it->second, "verify");
    if (auto it = kv.find("confirm"); it != kv.end()) in.confirm = parse_bool(it->second, "confirm");
    if (auto it = kv.find("kmax"); it != kv.end()) in.kmax = static_cast<int>(parse_long(it->second, 1, 12, "kmax"));
    if (auto it = kv.find("escalation_cap"); it != kv.end())
        in.escalation_cap = static_cast<int>(parse_long(it->second, 0, 32, "escalation_cap"));

    const int m = in.n + 2;
    if (auto it = kv.find("vars"); it != kv.end()) {
        std::string list = it->second.text;
        std::size_t a = 0;
        while (a <= list.size()) {
            std::size_t b = list.find(',', a);
            if (b == std::string::npos) b = list.size();
            std::string name = trim(list.substr(a, b - a));
            bool good = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
            for (char c : name) good = good && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
            if (!good) throw ParseError(it->second.at(a).line, it->second.at(a).column, "bad variable name '" + name + "'");
            in.vars.push_back(name);
            a = b + 1;
        }
        if (static_cast<int>(in.vars.size()) != m)
            throw ParseError(it->second.start.line, it->second.start.column,
                             "vars must list " + std::to_string(m) + " names for n = " + std::to_string(in.n));
    } else {
        in.vars = default_variable_names(m);
    }

    in.P0 = ExprParser(P0, in.vars).parse();
    if (auto it = kv.find("P1"); it != kv.end())
        in.P1 = ExprParser(it->second, in.vars).parse();
    else
        in.P1 = Family::fermat(m, in.d);

    for (const MPoly* P : {&in.P0, &in.P1})
        if (P->is_zero() || !P->is_homogeneous() || P->total_degree() != in.d)
            throw HomogeneityError(std::string(P == &in.P0 ? "P0" : "P1") + " is not homogeneous of degree " +
                                   std::to_string(in.d));
    if (in.p < 3 || mpz_probab_prime_p(BigInt(in.p).get_mpz_t(), 30) == 0) throw InvalidFamily("p must be an odd prime");
    if ((in.p - 1) % in.d != 0)
        throw DegreeDividesError("d = " + std::to_string(in.d) + " does not divide p - 1 = " + std::to_string(in.p - 1));
    if (!(in.P1 == Family::fermat(m, in.d))) throw InvalidFamily("P1 must be the diagonal polynomial");
    return in;
}

std::string render_family(const FamilyInput& in) {
    std::string s;
    s += "n = " + std::to_string(in.n) + "\n";
    s += "d = " + std::to_string(in.d) + "\n";
    s += "p = " + std::to_string(in.p) + "\n";
    if (in.N > 0) s += "N = " + std::to_string(in.N) + "\n";
    s += "vars = ";
    for (std::size_t i = 0; i < in.vars.size(); ++i) s += (i ? "," : "") + in.vars[i];
    s += "\nP0 = " + in.P0.str(in.vars) + "\n";
    s += "P1 = " + in.P1.str(in.vars) + "\n";
    s += std::string("verify = ") + (in.verify ? "true" : "false") + "\n";
    s += "kmax = " + std::to_string(in.kmax) + "\n";
    s += "escalation_cap = " + std::to_string(in.escalation_cap) + "\n";
    s += std::string("confirm = ") + (in.confirm ? "true" : "false") + "\n";
    return s;
}

}  // namespace limifrob
