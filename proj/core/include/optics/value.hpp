#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace optics {

class Value;

/// Total function over the value universe.
using Fn = std::function<Value(const Value&)>;

class bad_value_access : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Immutable dynamically-shaped value.
///
/// Every optic in the core library works over this universe. It covers the
/// data the optics are written against (pairs, sums, Maybe) as well as the
/// payloads of container shapes (`Id`, `Compose`, continuation functions), so
/// that a shape can be an ordinary runtime record instead of a type
/// constructor.
///
/// Values compare structurally. Function values compare by identity of the
/// wrapped callable, so two separately built but extensionally equal
/// functions are distinct; use extensional checks for those.
class Value
{
public:
    enum class Kind : std::uint8_t
    {
        unit,
        boolean,
        integer,
        string,
        pair,
        left,
        right,
        nothing,
        just,
        id,
        compose,
        function,
    };

    Value() = default;

    static Value unit() { return {}; }
    static Value boolean(bool b);
    static Value integer(std::int64_t i);
    static Value string(std::string s);
    static Value pair(Value a, Value b);
    static Value left(Value v);
    static Value right(Value v);
    static Value nothing();
    static Value just(Value v);
    static Value id(Value v);
    static Value compose(Value v);
    static Value function(Fn f);

    Kind kind() const noexcept { return kind_; }
    bool is(Kind k) const noexcept { return kind_ == k; }

    bool as_bool() const;
    std::int64_t as_int() const;
    const std::string& as_string() const;
    const Value& first() const;
    const Value& second() const;
    /// Payload of a left/right/just/id/compose node.
    const Value& inner() const;
    const Fn& as_function() const;

    /// Applies a function value.
    Value operator()(const Value& arg) const;

    std::string to_string() const;

    friend bool operator==(const Value& a, const Value& b);
    friend std::strong_ordering operator<=>(const Value& a, const Value& b);

private:
    using PairNode = std::pair<Value, Value>;
    using Payload = std::variant<std::monostate,
                                 bool,
                                 std::int64_t,
                                 std::string,
                                 std::shared_ptr<const PairNode>,
                                 std::shared_ptr<const Value>,
                                 std::shared_ptr<const Fn>>;

    Value(Kind k, Payload p)
        : kind_{k}
        , data_{std::move(p)}
    {}

    [[noreturn]] void mismatch(const char* wanted) const;

    Kind kind_ = Kind::unit;
    Payload data_;
};

const char* kind_name(Value::Kind k) noexcept;

inline Value operator""_i(unsigned long long i)
{
    return Value::integer(static_cast<std::int64_t>(i));
}

inline Value str(std::string s) { return Value::string(std::move(s)); }

inline Value pair(Value a, Value b)
{
    return Value::pair(std::move(a), std::move(b));
}

// Small function combinators used throughout the library.

Fn identity_fn();
Fn constant_fn(Value v);
/// `compose_fn(f, g)` is f after g.
Fn compose_fn(Fn f, Fn g);
/// Case analysis on a left/right value.
Fn either_fn(Fn on_left, Fn on_right);
Fn left_fn();
Fn right_fn();
Fn first_fn();
Fn second_fn();
Fn swap_fn();

} // namespace optics
