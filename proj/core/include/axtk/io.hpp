#ifndef AXTK_IO_HPP
#define AXTK_IO_HPP

#include <string>

#include "axtk/algebra.hpp"
#include "axtk/axet.hpp"
#include "axtk/catalog.hpp"

namespace axtk::io {

/// Parses one scalar expression into the given field. Grammar (ASCII):
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' INT)*            (non-negative integer exponents)
///   atom   := INT | IDENT | 'sqrt' '(' expr ')' | '(' expr ')'
///
/// Standard precedence, left association. IDENT must be a variable of the
/// field; sqrt(x) requires a quadratic field whose radicand equals x.
/// Errors: SyntaxError (with position), UnknownVariable, DivisionByZero.
Scalar parse_scalar(const std::string& text, const FieldPtr& field);

/// Canonical print; parse_scalar(print_scalar(x), x.field()) == x.
std::string print_scalar(const Scalar& x);

/// Field descriptors as JSON text (embedded in the document formats below).
std::string serialize_field(const FieldPtr& f);
FieldPtr parse_field(const std::string& json_text);

/// An algebra document (.axalg): field block, basis names, fusion parameters,
/// designated axes and the upper-triangular product table, every scalar as an
/// expression string. Diagonal products of listed axes may be omitted (the
/// idempotent rule fills them in); all other products are required.
struct AlgebraBundle {
    std::string name;
    AlgebraPtr algebra;
    std::vector<std::size_t> axes;
    FusionLaw law;
};

std::string serialize_algebra(const AlgebraBundle& bundle);
AlgebraBundle parse_algebra(const std::string& json_text);
AlgebraBundle load_algebra(const std::string& path);
void save_algebra(const AlgebraBundle& bundle, const std::string& path);

AlgebraBundle bundle_of(const catalog::CatalogEntry& entry);

/// An axet document (.axet): size, kind and the explicit tau table. Parsing
/// validates the axet axioms.
std::string serialize_axet(const axet::C2Axet& x);
axet::C2Axet parse_axet(const std::string& json_text);
axet::C2Axet load_axet(const std::string& path);
void save_axet(const axet::C2Axet& x, const std::string& path);

}  // namespace axtk::io

#endif
