#include <optics/value.hpp>

#include <sstream>

namespace optics {

Value Value::boolean(bool b) { return {Kind::boolean, b}; }

Value Value::integer(std::int64_t i) { return {Kind::integer, i}; }

Value Value::string(std::string s) { return {Kind::string, std::move(s)}; }

Value Value::pair(Value a, Value b)
{
    return {Kind::pair,
            std::make_shared<const PairNode>(std::move(a), std::move(b))};
}

Value Value::left(Value v)
{
    return {Kind::left, std::make_shared<const Value>(std::move(v))};
}

Value Value::right(Value v)
{
    return {Kind::right, std::make_shared<const Value>(std::move(v))};
}

Value Value::nothing() { return {Kind::nothing, std::monostate{}}; }

Value Value::just(Value v)
{
    return {Kind::just, std::make_shared<const Value>(std::move(v))};
}

Value Value::id(Value v)
{
    return {Kind::id, std::make_shared<const Value>(std::move(v))};
}

Value Value::compose(Value v)
{
    return {Kind::compose, std::make_shared<const Value>(std::move(v))};
}

Value Value::function(Fn f)
{
    if (!f)
        throw std::invalid_argument{"Value::function: empty callable"};
    return {Kind::function, std::make_shared<const Fn>(std::move(f))};
}

void Value::mismatch(const char* wanted) const
{
    throw bad_value_access{std::string{"expected "} + wanted + ", got " +
                           kind_name(kind_) + " " + to_string()};
}

bool Value::as_bool() const
{
    if (kind_ != Kind::boolean)
        mismatch("boolean");
    return std::get<bool>(data_);
}

std::int64_t Value::as_int() const
{
    if (kind_ != Kind::integer)
        mismatch("integer");
    return std::get<std::int64_t>(data_);
}

const std::string& Value::as_string() const
{
    if (kind_ != Kind::string)
        mismatch("string");
    return std::get<std::string>(data_);
}

const Value& Value::first() const
{
    if (kind_ != Kind::pair)
        mismatch("pair");
    return std::get<std::shared_ptr<const PairNode>>(data_)->first;
}

const Value& Value::second() const
{
    if (kind_ != Kind::pair)
        mismatch("pair");
    return std::get<std::shared_ptr<const PairNode>>(data_)->second;
}

const Value& Value::inner() const
{
    switch (kind_) {
    case Kind::left:
    case Kind::right:
    case Kind::just:
    case Kind::id:
    case Kind::compose:
        return *std::get<std::shared_ptr<const Value>>(data_);
    default:
        mismatch("left/right/just/id/compose");
    }
}

const Fn& Value::as_function() const
{
    if (kind_ != Kind::function)
        mismatch("function");
    return *std::get<std::shared_ptr<const Fn>>(data_);
}

Value Value::operator()(const Value& arg) const { return as_function()(arg); }

namespace {

void quote(std::ostream& os, const std::string& s)
{
    os << '"';
    for (char c : s) {
        if (c == '"' || c == '\\')
            os << '\\';
        os << c;
    }
    os << '"';
}

void print(std::ostream& os, const Value& v, bool nested)
{
    using K = Value::Kind;
    auto wrapped = [&](const char* ctor) {
        if (nested)
            os << '(';
        os << ctor << ' ';
        print(os, v.inner(), true);
        if (nested)
            os << ')';
    };
    switch (v.kind()) {
    case K::unit: os << "()"; break;
    case K::boolean: os << (v.as_bool() ? "True" : "False"); break;
    case K::integer: os << v.as_int(); break;
    case K::string: quote(os, v.as_string()); break;
    case K::pair:
        os << '(';
        print(os, v.first(), false);
        os << ',';
        print(os, v.second(), false);
        os << ')';
        break;
    case K::left: wrapped("Left"); break;
    case K::right: wrapped("Right"); break;
    case K::nothing: os << "Nothing"; break;
    case K::just: wrapped("Just"); break;
    case K::id: wrapped("Id"); break;
    case K::compose: wrapped("Compose"); break;
    case K::function: os << "<fn>"; break;
    }
}

} // namespace

std::string Value::to_string() const
{
    std::ostringstream os;
    print(os, *this, false);
    return os.str();
}

std::strong_ordering operator<=>(const Value& a, const Value& b)
{
    using K = Value::Kind;
    if (a.kind_ != b.kind_)
        return a.kind_ <=> b.kind_;
    switch (a.kind_) {
    case K::unit:
    case K::nothing: return std::strong_ordering::equal;
    case K::boolean: return a.as_bool() <=> b.as_bool();
    case K::integer: return a.as_int() <=> b.as_int();
    case K::string: return a.as_string().compare(b.as_string()) <=> 0;
    case K::pair: {
        if (auto c = a.first() <=> b.first(); c != 0)
            return c;
        return a.second() <=> b.second();
    }
    case K::function: {
        auto pa = std::get<std::shared_ptr<const Fn>>(a.data_).get();
        auto pb = std::get<std::shared_ptr<const Fn>>(b.data_).get();
        return std::compare_three_way{}(pa, pb);
    }
    default: return a.inner() <=> b.inner();
    }
}

bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

const char* kind_name(Value::Kind k) noexcept
{
    using K = Value::Kind;
    switch (k) {
    case K::unit: return "unit";
    case K::boolean: return "boolean";
    case K::integer: return "integer";
    case K::string: return "string";
    case K::pair: return "pair";
    case K::left: return "left";
    case K::right: return "right";
    case K::nothing: return "nothing";
    case K::just: return "just";
    case K::id: return "id";
    case K::compose: return "compose";
    case K::function: return "function";
    }
    return "?";
}

Fn identity_fn()
{
    return [](const Value& v) { return v; };
}

Fn constant_fn(Value c)
{
    return [c = std::move(c)](const Value&) { return c; };
}

Fn compose_fn(Fn f, Fn g)
{
    return [f = std::move(f), g = std::move(g)](const Value& v) {
        return f(g(v));
    };
}

Fn either_fn(Fn on_left, Fn on_right)
{
    return [l = std::move(on_left), r = std::move(on_right)](const Value& v) {
        if (v.is(Value::Kind::left))
            return l(v.inner());
        if (v.is(Value::Kind::right))
            return r(v.inner());
        throw bad_value_access{"either: expected left/right, got " +
                               v.to_string()};
    };
}

Fn left_fn()
{
    return [](const Value& v) { return Value::left(v); };
}

Fn right_fn()
{
    return [](const Value& v) { return Value::right(v); };
}

Fn first_fn()
{
    return [](const Value& v) { return v.first(); };
}

Fn second_fn()
{
    return [](const Value& v) { return v.second(); };
}

Fn swap_fn()
{
    return [](const Value& v) { return Value::pair(v.second(), v.first()); };
}

} // namespace optics
