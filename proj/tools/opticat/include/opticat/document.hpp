#pragma once

#include <opticat/path.hpp>

#include <optics/families.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

/// Path expressions compiled to optics over JSON documents.
///
/// Pairs are two-element arrays, `Just x` is `{"some": x}` and `Nothing` is
/// null. Steps map to families as
///
///   fst, snd   LENS
///   some       PRISM
///   key, idx   OPTIONAL (the key or index may be absent)
///   each       SETTER   (every array element or object value)
///
/// and a path's family is the join of its steps' families.
namespace opticat {

using Document = nlohmann::json;

using DocLens = optics::BasicLens<Document>;
using DocPrism = optics::BasicPrism<Document>;
using DocOptional = optics::BasicOptional<Document>;
using DocSetter = optics::BasicSetter<Document>;
using DocFn = optics::Fun<Document>;

/// A step met a document node of the wrong kind (exit status 3).
class TypeMismatch : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// The path's family has no such operator (exit status 2).
class Unsupported : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct CompiledPath
{
    optics::FamilyTag tag;
    std::variant<DocLens, DocPrism, DocOptional, DocSetter> optic;
};

optics::FamilyTag step_family(Step::Kind kind) noexcept;

/// Left-to-right composition, embedding into the join family at each step.
/// Throws std::invalid_argument on an empty path.
CompiledPath compile(const PathExpr& path);

Document get(const CompiledPath& p, const Document& d);
/// Right carries the focus, Left the unchanged document.
optics::Either<Document> match(const CompiledPath& p, const Document& d);
Document build(const CompiledPath& p, const Document& value);
/// The action on functions: every focus replaced by `h(focus)`.
Document over(const CompiledPath& p, const DocFn& h, const Document& d);

/// True when the path can report a miss and misses on `d`.
bool misses(const CompiledPath& p, const Document& d);

/// One of incr, negate, upper, lower; throws std::invalid_argument otherwise.
DocFn named_function(const std::string& name);

/// Canonical text: sorted keys, no whitespace.
std::string canonical(const Document& d);

} // namespace opticat
