#include "crn/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace crn {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         std::move(message)),
      line_(line),
      column_(column) {}

ParseError::ParseError(Preformatted, std::string full_message, int line, int column)
    : std::runtime_error(std::move(full_message)), line_(line), column_(column) {}

namespace {

bool name_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool name_cont(unsigned char c) { return name_start(c) || std::isdigit(c) || c == '*' || c == '^'; }

struct LineScanner {
    const std::string& s;
    int line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, static_cast<int>(pos) + 1); }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool try_consume(const std::string& tok) {
        skip_ws();
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    std::string scan_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        if (pos < s.size() && (s[pos] == '/' || s[pos] == '.')) {
            ++pos;
            std::size_t frac = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (frac == pos) fail("malformed rational");
        }
        return s.substr(start, pos - start);
    }
    std::string scan_name() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= s.size() || !name_start(static_cast<unsigned char>(s[pos]))) fail("expected a species name");
        while (pos < s.size() && name_cont(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
};

struct Builder {
    std::vector<std::string> species;
    std::vector<Reaction> reactions;

    int species_id(const std::string& name) {
        for (std::size_t i = 0; i < species.size(); ++i)
            if (species[i] == name) return static_cast<int>(i);
        species.push_back(name);
        return static_cast<int>(species.size() - 1);
    }
};

Complex parse_complex(LineScanner& sc, Builder& b) {
    Complex c;
    bool first = true;
    while (true) {
        sc.skip_ws();
        std::int64_t coeff = 1;
        bool had_number = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            std::size_t at = sc.pos;
            std::string num = sc.scan_number();
            if (num.find('/') != std::string::npos || num.find('.') != std::string::npos) {
                sc.pos = at;
                sc.fail("stoichiometric coefficients must be integers");
            }
            had_number = true;
            try {
                coeff = std::stoll(num);
            } catch (const std::exception&) {
                sc.pos = at;
                sc.fail("coefficient out of range");
            }
        }
        sc.skip_ws();
        bool have_name = sc.pos < sc.s.size() && name_start(static_cast<unsigned char>(sc.s[sc.pos]));
        if (!have_name) {
            if (had_number && coeff == 0 && first && sc.peek() != '+') return c;  // the zero complex
            sc.fail(had_number ? "coefficient without species" : "expected a species or 0");
        }
        if (had_number && coeff == 0) sc.fail("zero coefficient");
        std::string name = sc.scan_name();
        int id = b.species_id(name);
        if (c.coeff(id) != 0) sc.fail("species repeated within a complex: " + name);
        c.set(id, coeff);
        first = false;
        if (!sc.try_consume("+")) return c;
    }
}

}  // namespace

ReactionNetwork parse_network(const std::string& text) {
    Builder b;
    std::vector<std::pair<Complex, Complex>> seen;
    auto record = [&](const Complex& src, const Complex& dst, int line) {
        if (src == dst) throw ParseError("trivial reaction (source equals target)", line, 1);
        for (const auto& [a, t] : seen)
            if (a == src && t == dst) throw ParseError("duplicate reaction", line, 1);
        seen.emplace_back(src, dst);
    };

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        LineScanner sc{raw, line_no};
        if (sc.at_end()) continue;

        Complex lhs = parse_complex(sc, b);
        bool reversible = false;
        if (sc.try_consume("<->"))
            reversible = true;
        else if (!sc.try_consume("->"))
            sc.fail("expected '->' or '<->'");
        Complex rhs = parse_complex(sc, b);

        std::optional<Rational> k_fwd, k_rev;
        if (sc.try_consume(";")) {
            auto rate = [&]() {
                if (!sc.try_consume("k")) sc.fail("expected 'k='");
                if (!sc.try_consume("=")) sc.fail("expected '=' after 'k'");
                std::size_t at = sc.pos;
                Rational k = parse_rational(sc.scan_number());
                if (k <= 0) {
                    sc.pos = at;
                    sc.fail("rate constant must be positive");
                }
                return k;
            };
            k_fwd = rate();
            if (sc.try_consume(",")) {
                if (!reversible) sc.fail("second rate given for an irreversible reaction");
                k_rev = rate();
            }
        }
        if (!sc.at_end()) sc.fail("unexpected trailing text");

        record(lhs, rhs, line_no);
        b.reactions.push_back({lhs, rhs, k_fwd});
        if (reversible) {
            record(rhs, lhs, line_no);
            b.reactions.push_back({rhs, lhs, k_rev});
        }
    }
    return ReactionNetwork(std::move(b.species), std::move(b.reactions));
}

namespace {

std::string format_complex(const ReactionNetwork& net, const Complex& c) {
    if (c.empty()) return "0";
    std::string out;
    for (const auto& [s, coeff] : c.terms()) {
        if (!out.empty()) out += " + ";
        if (coeff != 1) out += std::to_string(coeff) + " ";
        out += net.species_name(s);
    }
    return out;
}

}  // namespace

std::string format_reaction(const ReactionNetwork& net, const Reaction& r) {
    std::string out = format_complex(net, r.source) + " -> " + format_complex(net, r.target);
    if (r.rate) out += " ; k=" + format_rational(*r.rate);
    return out;
}

std::string format_network(const ReactionNetwork& net) {
    std::string out;
    for (const auto& r : net.reactions()) {
        out += format_reaction(net, r);
        out += '\n';
    }
    return out;
}

ReactionNetwork load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open network file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_network(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(ParseError::Preformatted{}, path + ": " + e.what(), e.line(), e.column());
    }
}

}  // namespace crn
