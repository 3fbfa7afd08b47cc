#include <opticat/document.hpp>

#include <algorithm>
#include <cctype>

namespace opticat {

using optics::Either;
using optics::FamilyTag;

namespace {

std::string kind_of(const Document& d)
{
    return d.type_name();
}

const Document& pair_part(const Document& d, std::size_t i, const char* step)
{
    if (!d.is_array() || d.size() != 2)
        throw TypeMismatch{std::string{step} + " expects a 2-element array, got " +
                           (d.is_array() ? "an array of " + std::to_string(d.size())
                                         : kind_of(d))};
    return d[i];
}

DocLens pair_lens(std::size_t i, const char* step)
{
    return {[i, step](const Document& d) { return pair_part(d, i, step); },
            [i, step](const Document& b, const Document& d) {
                pair_part(d, i, step);
                auto t = d;
                t[i] = b;
                return t;
            }};
}

DocPrism some_prism()
{
    auto check = [](const Document& d) {
        if (d.is_null())
            return false;
        if (d.is_object() && d.size() == 1 && d.contains("some"))
            return true;
        throw TypeMismatch{"some expects null or {\"some\": ...}, got " +
                           d.dump()};
    };
    return {[check](const Document& d) {
                return check(d) ? Either<Document>::right(d.at("some"))
                                : Either<Document>::left(d);
            },
            [](const Document& b) { return Document{{"some", b}}; }};
}

DocOptional key_optional(std::string name)
{
    auto object = [](const Document& d) {
        if (!d.is_object())
            throw TypeMismatch{"key expects an object, got " + kind_of(d)};
    };
    return {[name, object](const Document& d) {
                object(d);
                auto it = d.find(name);
                return it == d.end() ? Either<Document>::left(d)
                                     : Either<Document>::right(*it);
            },
            [name, object](const Document& b, const Document& d) {
                object(d);
                if (!d.contains(name))
                    return d;
                auto t = d;
                t[name] = b;
                return t;
            }};
}

DocOptional idx_optional(std::size_t i)
{
    auto array = [](const Document& d) {
        if (!d.is_array())
            throw TypeMismatch{"idx expects an array, got " + kind_of(d)};
    };
    return {[i, array](const Document& d) {
                array(d);
                return i < d.size() ? Either<Document>::right(d[i])
                                    : Either<Document>::left(d);
            },
            [i, array](const Document& b, const Document& d) {
                array(d);
                if (i >= d.size())
                    return d;
                auto t = d;
                t[i] = b;
                return t;
            }};
}

DocSetter each_setter()
{
    return {[](const DocFn& h) -> DocFn {
        return [h](const Document& d) {
            if (!d.is_array() && !d.is_object())
                throw TypeMismatch{"each expects an array or object, got " +
                                   kind_of(d)};
            auto t = d;
            for (auto& x : t)
                x = h(x);
            return t;
        };
    }};
}

using AnyOptic = decltype(CompiledPath::optic);

AnyOptic step_optic(const Step& s)
{
    switch (s.kind) {
    case Step::Kind::fst: return pair_lens(0, "fst");
    case Step::Kind::snd: return pair_lens(1, "snd");
    case Step::Kind::some: return some_prism();
    case Step::Kind::key: return key_optional(s.name);
    case Step::Kind::idx: return idx_optional(s.index);
    case Step::Kind::each: return each_setter();
    }
    throw std::logic_error{"unknown step"};
}

/// Embeds `o` into `target`, which is above its family in the lattice.
AnyOptic promote(const AnyOptic& o, FamilyTag target)
{
    if (target == FamilyTag::setter)
        return std::visit([](const auto& x) -> AnyOptic { return optics::as_setter(x); },
                          o);
    if (target == FamilyTag::optional) {
        if (const auto* l = std::get_if<DocLens>(&o))
            return optics::as_optional(*l);
        if (const auto* p = std::get_if<DocPrism>(&o))
            return optics::as_optional(*p);
    }
    return o;
}

template <class O>
const O& require(const CompiledPath& p, const char* op)
{
    const auto* o = std::get_if<O>(&p.optic);
    if (!o)
        throw Unsupported{std::string{op} + " is not supported by " +
                          std::string{optics::to_string(p.tag)} + " paths"};
    return *o;
}

} // namespace

FamilyTag step_family(Step::Kind kind) noexcept
{
    switch (kind) {
    case Step::Kind::fst:
    case Step::Kind::snd: return FamilyTag::lens;
    case Step::Kind::some: return FamilyTag::prism;
    case Step::Kind::key:
    case Step::Kind::idx: return FamilyTag::optional;
    case Step::Kind::each: return FamilyTag::setter;
    }
    return FamilyTag::setter;
}

CompiledPath compile(const PathExpr& path)
{
    if (path.empty())
        throw std::invalid_argument{"empty path"};
    CompiledPath out{step_family(path[0].kind), step_optic(path[0])};
    for (std::size_t i = 1; i < path.size(); ++i) {
        auto tag = optics::join(out.tag, step_family(path[i].kind));
        auto outer = promote(out.optic, tag);
        auto inner = promote(step_optic(path[i]), tag);
        out.tag = tag;
        out.optic = std::visit(
            [](const auto& a, const auto& b) -> AnyOptic {
                using A = std::decay_t<decltype(a)>;
                using B = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<A, B>)
                    return optics::compose(a, b);
                else
                    throw std::logic_error{"promotion left mixed families"};
            },
            outer, inner);
    }
    return out;
}

Document get(const CompiledPath& p, const Document& d)
{
    return require<DocLens>(p, "get").get(d);
}

Either<Document> match(const CompiledPath& p, const Document& d)
{
    if (const auto* l = std::get_if<DocLens>(&p.optic))
        return Either<Document>::right(l->get(d));
    if (const auto* r = std::get_if<DocPrism>(&p.optic))
        return r->match(d);
    return require<DocOptional>(p, "match").match(d);
}

Document build(const CompiledPath& p, const Document& value)
{
    return require<DocPrism>(p, "build").build(value);
}

Document over(const CompiledPath& p, const DocFn& h, const Document& d)
{
    return std::visit([&](const auto& o) { return optics::map_optic(o, h)(d); },
                      p.optic);
}

bool misses(const CompiledPath& p, const Document& d)
{
    if (std::holds_alternative<DocPrism>(p.optic) ||
        std::holds_alternative<DocOptional>(p.optic))
        return !match(p, d).is_right;
    return false;
}

DocFn named_function(const std::string& name)
{
    auto number = [](const char* fn, const Document& x) {
        if (!x.is_number())
            throw TypeMismatch{std::string{fn} + " expects a number, got " +
                               kind_of(x)};
    };
    auto text = [](const char* fn, const Document& x) {
        if (!x.is_string())
            throw TypeMismatch{std::string{fn} + " expects a string, got " +
                               kind_of(x)};
    };
    if (name == "incr")
        return [number](const Document& x) -> Document {
            number("incr", x);
            if (x.is_number_float())
                return x.get<double>() + 1.0;
            return x.get<std::int64_t>() + 1;
        };
    if (name == "negate")
        return [number](const Document& x) -> Document {
            number("negate", x);
            if (x.is_number_float())
                return -x.get<double>();
            return -x.get<std::int64_t>();
        };
    auto casing = [text](const char* fn, int (*f)(int)) {
        return [text, fn, f](const Document& x) -> Document {
            text(fn, x);
            auto s = x.get<std::string>();
            std::transform(s.begin(), s.end(), s.begin(), [f](unsigned char c) {
                return static_cast<char>(f(c));
            });
            return s;
        };
    };
    if (name == "upper")
        return casing("upper", [](int c) { return std::toupper(c); });
    if (name == "lower")
        return casing("lower", [](int c) { return std::tolower(c); });
    throw std::invalid_argument{"unknown function '" + name +
                                "' (expected incr, negate, upper or lower)"};
}

std::string canonical(const Document& d)
{
    return d.dump(-1, ' ', false, Document::error_handler_t::strict);
}

} // namespace opticat
