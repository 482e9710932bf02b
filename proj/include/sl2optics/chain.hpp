#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sl2c.hpp"

namespace sl2optics {

/// Element vocabulary of the chain mini-language.
///
///   phase(phi) rot(theta) atten(eta) xboost(chi)   generator elements
///   lens(f) dist(z)                                 ray elements
///   mat(a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im)    general element
enum class ElementKind { Phase, Rot, Atten, XBoost, Lens, Dist, Mat };

const char* element_name(ElementKind kind);
std::size_t element_arity(ElementKind kind);

struct ChainElement {
    ElementKind kind;
    std::vector<double> args;

    /// The 2x2 matrix this element denotes. With degrees set, phase and
    /// rot arguments are taken in degrees; rapidities and lengths are
    /// never converted. lens(0) is a domain error.
    SL2CMatrix matrix(bool degrees = false) const;
};

struct ChainSpec {
    std::vector<ChainElement> elements;

    std::vector<SL2CMatrix> matrices(bool degrees = false) const;
};

/// Grammar:
///   chain   := element (whitespace element)*
///   element := name '(' number (',' number)* ')'
/// Numbers are decimal with optional sign and exponent. Unknown names,
/// arity mismatches, non-finite literals, and mat(...) blocks whose
/// determinant strays from 1 by more than 1e-6 are all rejected via
/// ParseError with a 1-based character position.
ChainSpec parse_chain(std::string_view text);

/// Canonical rendering: "name(a1,a2)" joined with single spaces,
/// numbers via format_double. parse_chain(render(s)) reproduces s
/// exactly.
std::string render(const ChainElement& element);
std::string render(const ChainSpec& spec);

} // namespace sl2optics
