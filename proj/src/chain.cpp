#include "sl2optics/chain.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sl2optics/errors.hpp"
#include "sl2optics/format.hpp"
#include "sl2optics/lens.hpp"

namespace sl2optics {

const char* element_name(ElementKind kind) {
    switch (kind) {
        case ElementKind::Phase: return "phase";
        case ElementKind::Rot: return "rot";
        case ElementKind::Atten: return "atten";
        case ElementKind::XBoost: return "xboost";
        case ElementKind::Lens: return "lens";
        case ElementKind::Dist: return "dist";
        case ElementKind::Mat: return "mat";
    }
    return "?";
}

std::size_t element_arity(ElementKind kind) {
    return kind == ElementKind::Mat ? 8 : 1;
}

SL2CMatrix ChainElement::matrix(bool degrees) const {
    const double to_rad = std::numbers::pi / 180.0;
    switch (kind) {
        case ElementKind::Phase:
            return phase_shift(degrees ? args[0] * to_rad : args[0]);
        case ElementKind::Rot:
            return rotation(degrees ? args[0] * to_rad : args[0]);
        case ElementKind::Atten:
            return attenuation(args[0]);
        case ElementKind::XBoost:
            return x_boost(args[0]);
        case ElementKind::Lens:
            return lens(args[0]).to_sl2c();
        case ElementKind::Dist:
            return translation(args[0]).to_sl2c();
        case ElementKind::Mat:
            return {{args[0], args[1]}, {args[2], args[3]},
                    {args[4], args[5]}, {args[6], args[7]}};
    }
    throw std::logic_error("unreachable element kind");
}

std::vector<SL2CMatrix> ChainSpec::matrices(bool degrees) const {
    std::vector<SL2CMatrix> out;
    out.reserve(elements.size());
    for (const ChainElement& e : elements) out.push_back(e.matrix(degrees));
    return out;
}

namespace {

constexpr std::pair<std::string_view, ElementKind> kVocabulary[] = {
    {"phase", ElementKind::Phase}, {"rot", ElementKind::Rot},
    {"atten", ElementKind::Atten}, {"xboost", ElementKind::XBoost},
    {"lens", ElementKind::Lens},   {"dist", ElementKind::Dist},
    {"mat", ElementKind::Mat},
};

[[noreturn]] void fail(const std::string& msg, std::size_t pos0) {
    throw ParseError(msg, pos0 + 1);  // positions are reported 1-based
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    double parse_number() {
        const std::size_t start = pos;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        if (first != last && *first == '+') ++first;  // from_chars rejects '+'
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ptr == first || ec == std::errc::invalid_argument) {
            fail("expected number", start);
        }
        if (ec == std::errc::result_out_of_range) {
            fail("numeric literal out of range", start);
        }
        if (!std::isfinite(value)) {
            fail("non-finite numeric literal", start);
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    }

    ChainElement parse_element() {
        const std::size_t name_start = pos;
        while (!done() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == name_start) {
            fail("expected element name", name_start);
        }
        const std::string_view name = text.substr(name_start, pos - name_start);
        const ElementKind* kind = nullptr;
        for (const auto& [known, k] : kVocabulary) {
            if (name == known) {
                kind = &k;
                break;
            }
        }
        if (!kind) {
            fail("unknown element '" + std::string(name) + "'", name_start);
        }

        skip_space();
        if (done() || text[pos] != '(') {
            fail("expected '(' after element name", pos);
        }
        ++pos;

        ChainElement element{*kind, {}};
        skip_space();
        if (!done() && text[pos] != ')') {
            while (true) {
                element.args.push_back(parse_number());
                skip_space();
                if (done()) fail("unterminated argument list", pos);
                if (text[pos] == ',') {
                    ++pos;
                    skip_space();
                    continue;
                }
                if (text[pos] == ')') break;
                fail("expected ',' or ')'", pos);
            }
        }
        if (done() || text[pos] != ')') {
            fail("unterminated argument list", pos);
        }
        const std::size_t rparen = pos;
        ++pos;

        const std::size_t want = element_arity(*kind);
        if (element.args.size() != want) {
            fail("element '" + std::string(name) + "' takes " + std::to_string(want) +
                     (want == 1 ? " argument, got " : " arguments, got ") +
                     std::to_string(element.args.size()),
                 rparen);
        }
        if (*kind == ElementKind::Mat) {
            const SL2CMatrix m = element.matrix();
            if (std::abs(m.det() - Complex{1.0, 0.0}) > 1e-6) {
                fail("mat determinant differs from 1 by more than 1e-6", name_start);
            }
        }
        return element;
    }
};

} // namespace

ChainSpec parse_chain(std::string_view text) {
    Parser p{text};
    ChainSpec spec;
    p.skip_space();
    if (p.done()) {
        fail("empty chain", 0);
    }
    while (!p.done()) {
        spec.elements.push_back(p.parse_element());
        if (p.done()) break;
        if (!std::isspace(static_cast<unsigned char>(text[p.pos]))) {
            fail("expected whitespace between elements", p.pos);
        }
        p.skip_space();
    }
    return spec;
}

std::string render(const ChainElement& element) {
    std::string out = element_name(element.kind);
    out += '(';
    for (std::size_t i = 0; i < element.args.size(); ++i) {
        if (i) out += ',';
        out += format_double(element.args[i]);
    }
    out += ')';
    return out;
}

std::string render(const ChainSpec& spec) {
    std::string out;
    for (std::size_t i = 0; i < spec.elements.size(); ++i) {
        if (i) out += ' ';
        out += render(spec.elements[i]);
    }
    return out;
}

} // namespace sl2optics
