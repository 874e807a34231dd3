#include "hseal/wire.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "hseal/errors.hpp"

namespace hseal {

namespace {

constexpr std::string_view kMagic = "HSEAL v1";

void append_envelope(std::string& out, const Envelope& env) {
    for (std::size_t i = 0; i < env.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += env[i].get_str();
    }
}

// Non-negative decimal in canonical form: "0" or no leading zero.
mpz_class parse_decimal(std::string_view token, std::size_t line_no) {
    if (token.empty()) {
        throw ParseError(line_no, "empty decimal value");
    }
    if (token.size() > 1 && token.front() == '0') {
        throw ParseError(line_no, "decimal value has a leading zero");
    }
    for (char c : token) {
        if (c < '0' || c > '9') {
            throw ParseError(line_no, "malformed decimal value '" +
                                          std::string(token) + "'");
        }
    }
    return mpz_class(std::string(token), 10);
}

std::vector<std::string_view> split_csv(std::string_view body) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(body.substr(start));
            return fields;
        }
        fields.push_back(body.substr(start, comma - start));
        start = comma + 1;
    }
}

class LineReader {
public:
    explicit LineReader(std::string_view data) : rest_(data) {}

    bool done() const { return rest_.empty(); }
    std::size_t line_no() const { return line_no_; }

    std::string_view next() {
        ++line_no_;
        std::size_t eol = rest_.find('\n');
        if (eol == std::string_view::npos) {
            throw ParseError(line_no_, "missing trailing newline");
        }
        std::string_view line = rest_.substr(0, eol);
        rest_.remove_prefix(eol + 1);
        return line;
    }

    // Consume "<prefix>rest" or fail naming the line.
    std::string_view expect(std::string_view prefix) {
        std::string_view line = next();
        if (line.size() < prefix.size() ||
            line.substr(0, prefix.size()) != prefix) {
            throw ParseError(line_no_, "expected '" + std::string(prefix) +
                                           "...', got '" + std::string(line) +
                                           "'");
        }
        return line.substr(prefix.size());
    }

private:
    std::string_view rest_;
    std::size_t line_no_ = 0;
};

}  // namespace

std::string write_bundle(const std::vector<CipherBundle>& bundles) {
    if (bundles.empty()) {
        throw std::invalid_argument("write_bundle: empty bundle sequence");
    }
    const CipherBundle& head = bundles.front();
    if (head.n_env.size() != 1 || head.m_env.size() != 1) {
        throw std::invalid_argument(
            "write_bundle: header envelopes must be single-element");
    }
    const bool auth = head.k_env.has_value();
    for (const CipherBundle& b : bundles) {
        if (b.n_env != head.n_env || b.m_env != head.m_env) {
            throw std::invalid_argument(
                "write_bundle: bundles do not share a session header");
        }
        if (b.k_env.has_value() != auth) {
            throw std::invalid_argument(
                "write_bundle: bundles mix plain and authenticated modes");
        }
        if (b.y.empty() || (auth && b.k_env->empty())) {
            throw std::invalid_argument("write_bundle: empty block payload");
        }
    }

    std::string out;
    out += kMagic;
    out += "\nmode: ";
    out += auth ? "auth" : "plain";
    out += "\nn': " + head.n_env.front().get_str();
    out += "\nm': " + head.m_env.front().get_str();
    out += '\n';
    for (const CipherBundle& b : bundles) {
        out += "Y: ";
        for (std::size_t i = 0; i < b.y.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += b.y[i].str();
        }
        out += '\n';
        if (auth) {
            out += "K': ";
            append_envelope(out, *b.k_env);
            out += '\n';
        }
    }
    return out;
}

std::vector<CipherBundle> read_bundle(std::string_view data) {
    LineReader reader(data);

    if (reader.next() != kMagic) {
        throw ParseError(1, "bad magic; expected '" + std::string(kMagic) +
                                "'");
    }
    std::string_view mode = reader.expect("mode: ");
    bool auth;
    if (mode == "plain") {
        auth = false;
    } else if (mode == "auth") {
        auth = true;
    } else {
        throw ParseError(reader.line_no(),
                         "unknown mode '" + std::string(mode) + "'");
    }
    Envelope n_env = {parse_decimal(reader.expect("n': "), reader.line_no())};
    Envelope m_env = {parse_decimal(reader.expect("m': "), reader.line_no())};

    std::vector<CipherBundle> bundles;
    while (!reader.done()) {
        std::string_view y_body = reader.expect("Y: ");
        CipherBundle bundle;
        bundle.n_env = n_env;
        bundle.m_env = m_env;
        for (std::string_view field : split_csv(y_body)) {
            try {
                bundle.y.push_back(Rational::parse(field));
            } catch (const std::invalid_argument& e) {
                throw ParseError(reader.line_no(), e.what());
            }
        }
        if (auth) {
            std::string_view k_body = reader.expect("K': ");
            Envelope k_env;
            for (std::string_view field : split_csv(k_body)) {
                k_env.push_back(parse_decimal(field, reader.line_no()));
            }
            bundle.k_env = std::move(k_env);
        }
        bundles.push_back(std::move(bundle));
    }
    if (bundles.empty()) {
        throw ParseError(reader.line_no() + 1, "no blocks in bundle");
    }
    return bundles;
}

}  // namespace hseal
